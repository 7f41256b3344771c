//! Brute-force reference values built from finite sums.
//!
//! Nothing here touches the series engine or the operator algebra: every
//! value is assembled from [`Rational`] and [`MultiPoly`] alone.

use alloc::vec::Vec;

use crate::poly::{Monomial, MultiPoly};
use crate::rational::Rational;

/// A polynomial family given by an explicit finite sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExplicitFamily {
    /// `n! sum_k y^k x^(n-rk) / (k! (n-rk)!)`
    GouldHopper { r: u32 },
    /// `n! sum_s x^s y^(n-2s) / ((s!)^2 (n-2s)!)`
    LegendreType,
    /// `n! sum_k y^k x^(n-mk) / (k! ((n-mk)!)^2)`
    GenLaguerre { m: u32 },
    /// `sum_k (n-k)! y^k x^(n-mk) / (k! (n-mk)!)`
    Chebyshev { m: u32 },
    /// `n! sum_s (-x)^s y^(n-s) / ((s!)^2 (n-s)!)`
    Laguerre2V,
    /// `(n!)^2 sum_s y^s (-x)^(n-s) / ((s!)^2 ((n-s)!)^2)`
    Legendre2V,
    /// `n! sum_k x^(n-rk) y^k / (n-rk)!`
    TruncatedExp { r: u32 },
    /// `n! sum_k x^(n-2k) y^k / (k! (n-2k)!)`
    HermiteKdF,
    /// `n! sum_k y^k x^(n-2k) / (k! ((n-2k)!)^2)`
    HermiteType,
    /// `n! sum_k (x^2-1)^k x^(n-2k) / (4^k (k!)^2 (n-2k)!)`
    LegendreP,
    /// `n! sum_k sum_s y^k z^s x^(n-3k-2s) / (k! s! (n-3k-2s)!)`
    BellType,
}

impl ExplicitFamily {
    pub const NAMES: [&'static str; 11] = [
        "gould-hopper",
        "legendre-type",
        "gen-laguerre",
        "chebyshev",
        "laguerre-2v",
        "legendre-2v",
        "truncated-exp",
        "hermite-kdf",
        "hermite-type",
        "legendre-p",
        "bell-type",
    ];

    /// Family by name; `param` supplies `r` or `m` where the family has one.
    pub fn from_name(name: &str, param: u32) -> Option<ExplicitFamily> {
        Some(match name {
            "gould-hopper" => ExplicitFamily::GouldHopper { r: param },
            "legendre-type" => ExplicitFamily::LegendreType,
            "gen-laguerre" => ExplicitFamily::GenLaguerre { m: param },
            "chebyshev" => ExplicitFamily::Chebyshev { m: param },
            "laguerre-2v" => ExplicitFamily::Laguerre2V,
            "legendre-2v" => ExplicitFamily::Legendre2V,
            "truncated-exp" => ExplicitFamily::TruncatedExp { r: param },
            "hermite-kdf" => ExplicitFamily::HermiteKdF,
            "hermite-type" => ExplicitFamily::HermiteType,
            "legendre-p" => ExplicitFamily::LegendreP,
            "bell-type" => ExplicitFamily::BellType,
            _ => return None,
        })
    }
}

fn fact(n: usize) -> Rational {
    Rational::factorial(n)
}

fn mono(ex: usize, ey: usize, ez: usize, c: Rational) -> MultiPoly {
    MultiPoly::term(Monomial::new(ex as u32, ey as u32, ez as u32), c)
}

fn signed(negative: bool) -> Rational {
    Rational::from_integer(if negative { -1 } else { 1 })
}

/// Evaluates the family's explicit sum at index `n`.
pub fn explicit_sum(family: ExplicitFamily, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    let nf = fact(n);
    match family {
        ExplicitFamily::GouldHopper { r } | ExplicitFamily::TruncatedExp { r } => {
            let r = r as usize;
            let mut k = 0;
            while r * k <= n {
                let rest = n - r * k;
                let mut denom = fact(rest);
                if matches!(family, ExplicitFamily::GouldHopper { .. }) {
                    denom = denom * fact(k);
                }
                out += &mono(rest, k, 0, &nf / denom);
                k += 1;
                if r == 0 {
                    break;
                }
            }
        }
        ExplicitFamily::LegendreType => {
            for s in 0..=n / 2 {
                let denom = fact(s) * fact(s) * fact(n - 2 * s);
                out += &mono(s, n - 2 * s, 0, &nf / denom);
            }
        }
        ExplicitFamily::GenLaguerre { m } | ExplicitFamily::Chebyshev { m } => {
            let m = m as usize;
            let mut k = 0;
            while m * k <= n {
                let rest = n - m * k;
                let c = if matches!(family, ExplicitFamily::GenLaguerre { .. }) {
                    &nf / (fact(k) * fact(rest) * fact(rest))
                } else {
                    fact(n - k) / (fact(k) * fact(rest))
                };
                out += &mono(rest, k, 0, c);
                k += 1;
                if m == 0 {
                    break;
                }
            }
        }
        ExplicitFamily::Laguerre2V => {
            for s in 0..=n {
                let c = signed(s % 2 == 1) * &nf / (fact(s) * fact(s) * fact(n - s));
                out += &mono(s, n - s, 0, c);
            }
        }
        ExplicitFamily::Legendre2V => {
            for s in 0..=n {
                let d = fact(s) * fact(n - s);
                let c = signed((n - s) % 2 == 1) * &nf * &nf / (&d * &d);
                out += &mono(n - s, s, 0, c);
            }
        }
        ExplicitFamily::HermiteKdF | ExplicitFamily::HermiteType => {
            for k in 0..=n / 2 {
                let rest = n - 2 * k;
                let mut denom = fact(k) * fact(rest);
                if family == ExplicitFamily::HermiteType {
                    denom = denom * fact(rest);
                }
                out += &mono(rest, k, 0, &nf / denom);
            }
        }
        ExplicitFamily::LegendreP => {
            let x2m1 = &mono(2, 0, 0, Rational::one()) - &MultiPoly::one();
            let mut power = MultiPoly::one();
            for k in 0..=n / 2 {
                if k > 0 {
                    power = &power * &x2m1;
                }
                let rest = n - 2 * k;
                let denom = Rational::from_integer(4).pow(k as i32) * fact(k) * fact(k) * fact(rest);
                out += &(&power * &mono(rest, 0, 0, &nf / denom));
            }
        }
        ExplicitFamily::BellType => {
            for k in 0..=n / 3 {
                for s in 0..=(n - 3 * k) / 2 {
                    let rest = n - 3 * k - 2 * s;
                    let denom = fact(k) * fact(s) * fact(rest);
                    out += &mono(rest, k, s, &nf / denom);
                }
            }
        }
    }
    out
}

/// Coefficient rule of one factor: `k -> [t^k]`.
pub type TermRule<'a> = &'a dyn Fn(usize) -> MultiPoly;

/// Naive Cauchy product of the given factors through `t^order`.
pub fn series_product(factors: &[TermRule<'_>], order: usize) -> Vec<MultiPoly> {
    let mut acc: Vec<MultiPoly> = (0..=order)
        .map(|k| if k == 0 { MultiPoly::one() } else { MultiPoly::zero() })
        .collect();
    for rule in factors {
        let terms: Vec<MultiPoly> = (0..=order).map(rule).collect();
        let mut next = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = MultiPoly::zero();
            for k in 0..=n {
                c += &(&acc[k] * &terms[n - k]);
            }
            next.push(c);
        }
        acc = next;
    }
    acc
}

/// `[t^k] exp(c t^p) = c^(k/p) / (k/p)!` when `p | k`.
pub fn exp_rule(c: &MultiPoly, p: usize, k: usize) -> MultiPoly {
    if !k.is_multiple_of(p) {
        return MultiPoly::zero();
    }
    let j = k / p;
    c.pow(j as u32).scale(&fact(j).recip())
}

/// `[t^k] C_0(c t^p) = (-c)^(k/p) / ((k/p)!)^2` when `p | k`.
pub fn c0_rule(c: &MultiPoly, p: usize, k: usize) -> MultiPoly {
    if !k.is_multiple_of(p) {
        return MultiPoly::zero();
    }
    let j = k / p;
    let f = fact(j);
    (-c).pow(j as u32).scale(&(&f * &f).recip())
}

/// Naive composition `outer(inner(t))` through `t^order` for rational
/// coefficient lists, with `inner[0] = 0`.
pub fn compose_scalar(outer: &[Rational], inner: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); order + 1];
    let mut power = alloc::vec![Rational::zero(); order + 1];
    power[0] = Rational::one();
    for (k, ok) in outer.iter().enumerate().take(order + 1) {
        if k > 0 {
            let mut next = alloc::vec![Rational::zero(); order + 1];
            for (i, pi) in power.iter().enumerate() {
                if pi.is_zero() {
                    continue;
                }
                for (j, ij) in inner.iter().enumerate().take(order + 1 - i) {
                    next[i + j] += pi * ij;
                }
            }
            power = next;
        }
        for (slot, p) in out.iter_mut().zip(&power) {
            *slot += ok * p;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn small_sums() {
        let gh = explicit_sum(ExplicitFamily::GouldHopper { r: 2 }, 3);
        assert_eq!(gh, &x().pow(3) + &(&x() * &y()).scale(&q(6)));
        let h2 = explicit_sum(ExplicitFamily::HermiteKdF, 2);
        assert_eq!(h2, &x().pow(2) + &y().scale(&q(2)));
        for fam in ExplicitFamily::NAMES {
            let f = ExplicitFamily::from_name(fam, 2).unwrap();
            assert_eq!(explicit_sum(f, 0), MultiPoly::one(), "{}", fam);
        }
    }

    #[test]
    fn legendre_p_classical() {
        // P_2 = (3x^2 - 1)/2
        let p2 = explicit_sum(ExplicitFamily::LegendreP, 2);
        assert_eq!(
            p2,
            &x().pow(2).scale(&Rational::new(3, 2)) - &MultiPoly::constant(Rational::new(1, 2))
        );
    }

    #[test]
    fn naive_products() {
        let y = y();
        let z = MultiPoly::var(Var::Z);
        let ey = |k: usize| exp_rule(&y, 1, k);
        let ez = |k: usize| exp_rule(&z, 2, k);
        let prod = series_product(&[&ey, &ez], 2);
        assert_eq!(prod[0], MultiPoly::one());
        assert_eq!(prod[1], y);
        assert_eq!(prod[2], &y.pow(2).scale(&Rational::new(1, 2)) + &z);
        let single = series_product(&[&ey], 3);
        for (k, c) in single.iter().enumerate() {
            assert_eq!(c, &ey(k));
        }
    }

    #[test]
    fn naive_composition() {
        // exp(ln(1+t)) = 1 + t
        let exp: Vec<Rational> = (0..5).map(|k| Rational::factorial(k).recip()).collect();
        let ln: Vec<Rational> = (0..5)
            .map(|k| match k {
                0 => Rational::zero(),
                _ => Rational::new(if k % 2 == 1 { 1 } else { -1 }, k as i64),
            })
            .collect();
        let c = compose_scalar(&exp, &ln, 4);
        assert_eq!(c, [q(1), q(1), q(0), q(0), q(0)]);
    }
}

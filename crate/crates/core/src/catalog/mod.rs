//! Base polynomial families and the registry of Sheffer pairs.
//!
//! Every family here is defined by a generating function in `t`; a member is
//! read off as a scaled coefficient of that series.

mod pairs;
mod reduction;

pub use pairs::{
    catalog, catalog_with, lookup, lookup_with, sheffer_poly, umbral_pairing, Normalization,
    PairParams, ShefferPair, PAIR_NAMES,
};
pub use reduction::{Image, MemberScale, Reduction, REDUCTION_IDS};

use crate::error::{check_order, Error};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::rational::Rational;
use crate::series::{PolySeries, ScalarSeries};

/// Which Legendre–Gould Hopper base a mixed family is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Generated by `C_0(-x t^2) exp(y t + z t^r)` with weight `t^n / n!`.
    S { r: u32 },
    /// Generated by `C_0(x t) C_0(-y t) exp(z t^r)` with weight `t^n / (n!)^2`.
    R { r: u32 },
}

impl FamilyKind {
    pub fn new(r_type: bool, r: u32) -> Result<FamilyKind, Error> {
        check_r(r)?;
        Ok(if r_type { FamilyKind::R { r } } else { FamilyKind::S { r } })
    }

    pub fn r(self) -> u32 {
        match self {
            FamilyKind::S { r } | FamilyKind::R { r } => r,
        }
    }

    pub fn is_r_type(self) -> bool {
        matches!(self, FamilyKind::R { .. })
    }

    pub fn letter(self) -> char {
        if self.is_r_type() {
            'R'
        } else {
            'S'
        }
    }

    /// The base generating function through `t^order`.
    pub fn base_series(self, order: usize) -> PolySeries {
        match self {
            FamilyKind::S { r } => leghp_s_series(r, order),
            FamilyKind::R { r } => leghp_r_series(r, order),
        }
    }

    /// Coefficient weight `n!` or `(n!)^2` that turns `[t^n]` into a member.
    pub fn weight(self, n: usize) -> Rational {
        let f = Rational::factorial(n);
        if self.is_r_type() {
            &f * &f
        } else {
            f
        }
    }
}

impl core::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}(r={})", self.letter(), self.r())
    }
}

/// The Bessel–Tricomi function `C_n(u) = sum_k (-1)^k u^k / (k! (n+k)!)`.
pub fn tricomi_c(n: usize, order: usize) -> ScalarSeries {
    ScalarSeries::from_fn(order, |k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        Rational::from_integer(sign) / (Rational::factorial(k) * Rational::factorial(n + k))
    })
}

/// `C_0(c · t^p)` with a polynomial coefficient `c`.
pub fn c0_scaled(c: &MultiPoly, p: usize, order: usize) -> PolySeries {
    let c0 = tricomi_c(0, order);
    let mut coeffs = alloc::vec![MultiPoly::zero(); order + 1];
    let mut power = MultiPoly::one();
    for k in 0..=order / p {
        if k > 0 {
            power = &power * c;
        }
        coeffs[k * p] = power.scale(c0.coeff(k));
    }
    PolySeries::new(coeffs)
}

/// `exp(sum_i c_i t^{p_i})` for polynomial coefficients.
pub(crate) fn exp_of_terms(terms: &[(MultiPoly, usize)], order: usize) -> PolySeries {
    let mut arg = PolySeries::zero(order);
    for (c, p) in terms {
        arg = arg.add(&PolySeries::monomial(c.clone(), *p, order));
    }
    arg.exp().expect("exponent terms have positive powers")
}

fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

fn check_r(r: u32) -> Result<(), Error> {
    if r == 0 {
        return Err(Error::param("r", "must be at least 1"));
    }
    Ok(())
}

/// `exp(x t + y t^s)`.
pub fn gould_hopper_series(s: u32, order: usize) -> PolySeries {
    exp_of_terms(&[(var(Var::X), 1), (var(Var::Y), s as usize)], order)
}

/// `C_0(-x t^2) exp(y t + z t^r)`.
pub fn leghp_s_series(r: u32, order: usize) -> PolySeries {
    let c0 = c0_scaled(&-var(Var::X), 2, order);
    c0.mul(&exp_of_terms(
        &[(var(Var::Y), 1), (var(Var::Z), r as usize)],
        order,
    ))
}

/// `C_0(x t) C_0(-y t) exp(z t^r)`.
pub fn leghp_r_series(r: u32, order: usize) -> PolySeries {
    let cx = c0_scaled(&var(Var::X), 1, order);
    let cy = c0_scaled(&-var(Var::Y), 1, order);
    cx.mul(&cy)
        .mul(&exp_of_terms(&[(var(Var::Z), r as usize)], order))
}

fn egf_coeff(series: &PolySeries, n: usize) -> MultiPoly {
    series.coeff(n).scale(&Rational::factorial(n))
}

fn double_egf_coeff(series: &PolySeries, n: usize) -> MultiPoly {
    let f = Rational::factorial(n);
    series.coeff(n).scale(&(&f * &f))
}

/// Gould-Hopper polynomial `H_n^{(s)}(x, y)`.
pub fn gould_hopper(n: usize, s: u32) -> Result<MultiPoly, Error> {
    check_r(s)?;
    Ok(egf_coeff(&gould_hopper_series(s, n), n))
}

/// Legendre polynomial `S_n(x, y)`: `n! [t^n] exp(y t) C_0(-x t^2)`.
pub fn legendre_s(n: usize, order: usize) -> Result<MultiPoly, Error> {
    check_order(n, order)?;
    let c0 = c0_scaled(&-var(Var::X), 2, n);
    let series = c0.mul(&exp_of_terms(&[(var(Var::Y), 1)], n));
    Ok(egf_coeff(&series, n))
}

/// Legendre polynomial `R_n(x, y)`: `(n!)^2 [t^n] C_0(x t) C_0(-y t)`.
pub fn legendre_r(n: usize, order: usize) -> Result<MultiPoly, Error> {
    check_order(n, order)?;
    let series = c0_scaled(&var(Var::X), 1, n).mul(&c0_scaled(&-var(Var::Y), 1, n));
    Ok(double_egf_coeff(&series, n))
}

/// S-type Legendre–Gould Hopper polynomial `n! [t^n] C_0(-x t^2) exp(y t + z t^r)`.
pub fn leghp_s(n: usize, r: u32, order: usize) -> Result<MultiPoly, Error> {
    check_order(n, order)?;
    check_r(r)?;
    Ok(egf_coeff(&leghp_s_series(r, n), n))
}

/// R-type Legendre–Gould Hopper polynomial, stored as
/// `(n!)^2 [t^n] C_0(x t) C_0(-y t) exp(z t^r)`.
pub fn leghp_r(n: usize, r: u32, order: usize) -> Result<MultiPoly, Error> {
    check_order(n, order)?;
    check_r(r)?;
    Ok(double_egf_coeff(&leghp_r_series(r, n), n))
}

/// Degree under the S-type weighting
/// (`x` weighs 2, `y` weighs 1, `z` weighs `r`).
pub fn weighted_degree(p: &MultiPoly, r: u32) -> Option<u32> {
    p.terms()
        .map(|(m, _): (&Monomial, _)| 2 * m.exp(Var::X) + m.exp(Var::Y) + r * m.exp(Var::Z))
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        var(Var::X)
    }
    fn y() -> MultiPoly {
        var(Var::Y)
    }
    fn z() -> MultiPoly {
        var(Var::Z)
    }
    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn gould_hopper_small() {
        assert_eq!(gould_hopper(0, 2).unwrap(), MultiPoly::one());
        assert_eq!(gould_hopper(2, 2).unwrap(), &x().pow(2) + &y().scale(&q(2)));
        assert_eq!(
            gould_hopper(3, 2).unwrap(),
            &x().pow(3) + &(&x() * &y()).scale(&q(6))
        );
    }

    #[test]
    fn tricomi_first_terms() {
        let c0 = tricomi_c(0, 3);
        assert_eq!(c0.coeffs(), &[q(1), q(-1), Rational::new(1, 4), Rational::new(-1, 36)]);
        let c1 = tricomi_c(1, 2);
        assert_eq!(c1.coeffs(), &[q(1), Rational::new(-1, 2), Rational::new(1, 12)]);
        assert_eq!(tricomi_c(3, 0).coeff(0), &Rational::new(1, 6));
    }

    #[test]
    fn legendre_members() {
        assert_eq!(legendre_s(0, 4).unwrap(), MultiPoly::one());
        assert_eq!(legendre_s(1, 4).unwrap(), y());
        assert_eq!(legendre_s(2, 4).unwrap(), &y().pow(2) + &x().scale(&q(2)));
        assert_eq!(legendre_r(0, 4).unwrap(), MultiPoly::one());
        assert_eq!(legendre_r(1, 4).unwrap(), &y() - &x());
        assert_eq!(
            legendre_s(5, 4),
            Err(Error::OrderTooSmall { n: 5, order: 4 })
        );
    }

    #[test]
    fn leghp_members() {
        assert_eq!(leghp_s(0, 2, 5).unwrap(), MultiPoly::one());
        assert_eq!(
            leghp_s(2, 2, 5).unwrap(),
            &(&y().pow(2) + &x().scale(&q(2))) + &z().scale(&q(2))
        );
        assert_eq!(leghp_r(1, 1, 5).unwrap(), &(&z() + &y()) - &x());
        for n in 0..=6 {
            let r3 = leghp_r(n, 3, 6).unwrap();
            assert_eq!(r3.substitute(Var::Z, &MultiPoly::zero()), legendre_r(n, 6).unwrap());
            let s3 = leghp_s(n, 3, 6).unwrap();
            let gh = gould_hopper(n, 3)
                .unwrap()
                .substitute(Var::Y, &z())
                .substitute(Var::X, &y());
            assert_eq!(s3.substitute(Var::X, &MultiPoly::zero()), gh);
            assert!(weighted_degree(&s3, 3).unwrap() <= n as u32);
        }
        assert!(leghp_s(1, 0, 3).is_err());
    }
}

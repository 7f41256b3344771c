//! Truncated formal power series in `t`.
//!
//! A [`Series`] of order `N` stores the coefficients of `t^0 ..= t^N`. Binary
//! operations truncate to the smaller of the two orders, so every coefficient
//! a result reports is exact.

pub mod elementary;

use alloc::vec::Vec;
use core::fmt;

use crate::poly::MultiPoly;
use crate::rational::Rational;

/// Ring of series coefficients. Every ring used here contains the rationals.
pub trait Coefficient: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn from_rational(r: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// Whether the rendered value needs parentheses in front of `*t^k`.
    fn is_compound(&self) -> bool {
        false
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Coefficient for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn from_rational(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        MultiPoly::scale(self, c)
    }
    fn is_compound(&self) -> bool {
        self.num_terms() > 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series constant term is not 1")]
    ConstantTermNotOne,
    #[error("series has a zero constant term and is not invertible")]
    ZeroConstantTerm,
    #[error("not a delta series (need zero constant term and nonzero linear term)")]
    NotDeltaSeries,
}

/// Power series truncated at `t^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

pub type ScalarSeries = Series<Rational>;
pub type PolySeries = Series<MultiPoly>;

impl<C: Coefficient> Series<C> {
    /// Series from `coeffs[0] ..= coeffs[order]`. Panics on an empty vector.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the t^0 coefficient");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| C::zero())
    }

    pub fn one(order: usize) -> Self {
        Series::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^k` (zero if `k > order`).
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Series::monomial(C::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drop coefficients above `t^order` (no-op when `order >= self.order()`).
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Series::new(self.coeffs[..=keep].to_vec())
    }

    /// Raise the order by padding with zero coefficients. Only sound when the
    /// caller knows the padded coefficients are never read.
    pub(crate) fn pad_to(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() < order + 1 {
            coeffs.push(C::zero());
        }
        Series { coeffs }
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> Series<D> {
        Series::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series::from_fn(n, |k| self.coeffs[k].add(&rhs.coeffs[k]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series::from_fn(n, |k| self.coeffs[k].sub(&rhs.coeffs[k]))
    }

    pub fn neg(&self) -> Self {
        self.map(C::neg)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Multiply every coefficient by the ring element `c`.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out: Vec<C> = (0..=n).map(|_| C::zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Series::new(out)
    }

    /// Product with a series of rational coefficients.
    pub fn mul_scalar_series(&self, rhs: &ScalarSeries) -> Self {
        let n = self.order().min(rhs.order());
        let mut out: Vec<C> = (0..=n).map(|_| C::zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs().iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.scale(b));
            }
        }
        Series::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Series::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal derivative; the result has order `N - 1` (order 0 stays order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series::from_fn(self.order() - 1, |k| {
            self.coeffs[k + 1].scale(&Rational::from_integer(k as i64 + 1))
        })
    }

    /// Antiderivative with zero constant term; the result has order `N + 1`.
    pub fn integral(&self) -> Self {
        Series::from_fn(self.order() + 1, |k| {
            if k == 0 {
                C::zero()
            } else {
                self.coeffs[k - 1].scale(&Rational::new(1, k as i64))
            }
        })
    }

    /// `self / t`, defined when the constant term vanishes; order drops by one.
    pub fn div_t(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        if self.order() == 0 {
            return Ok(Series::zero(0));
        }
        Ok(Series::new(self.coeffs[1..].to_vec()))
    }

    /// `self * t^k`, keeping the order.
    pub fn mul_t_pow(&self, k: usize) -> Self {
        Series::from_fn(self.order(), |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                C::zero()
            }
        })
    }

    /// `exp(self)` for a series without constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        // b' = a' b  =>  m b_m = sum_{k=1..m} k a_k b_{m-k}
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(C::one());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k]
                    .mul(&b[m - k])
                    .scale(&Rational::from_integer(k as i64));
                acc = acc.add(&term);
            }
            b.push(acc.scale(&Rational::new(1, m as i64)));
        }
        Ok(Series::new(b))
    }

    /// `self(inner(t))` for an inner series without constant term.
    pub fn compose(&self, inner: &ScalarSeries) -> Result<Self, SeriesError> {
        if !inner.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul_scalar_series(&inner);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }
}

impl ScalarSeries {
    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += &self.coeffs[k] * &b[m - k];
            }
            b.push(-(acc * &inv0));
        }
        Ok(Series::new(b))
    }

    /// `ln(self)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        if self.order() == 0 {
            return Ok(Series::zero(0));
        }
        let q = self.derivative().mul(&self.reciprocal()?);
        Ok(q.integral())
    }

    /// `self^alpha` for a series with constant term 1 and rational `alpha`.
    pub fn pow_rational(&self, alpha: &Rational) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let n = self.order();
        let alpha1 = alpha + Rational::one();
        // m b_m = sum_{k=1..m} ((alpha+1) k - m) a_k b_{m-k}
        let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
        b.push(Rational::one());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = &alpha1 * Rational::from_integer(k as i64) - Rational::from_integer(m as i64);
                acc += w * &self.coeffs[k] * &b[m - k];
            }
            b.push(acc / Rational::from_integer(m as i64));
        }
        Ok(Series::new(b))
    }

    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        self.pow_rational(&Rational::new(1, 2))
    }

    fn check_delta(&self) -> Result<(), SeriesError> {
        if !self.coeffs[0].is_zero() || self.order() < 1 || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotDeltaSeries);
        }
        Ok(())
    }

    /// Compositional inverse of a delta series, by Newton iteration with
    /// precision doubling: `g <- g - (f(g) - t) / f'(g)`.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        self.check_delta()?;
        let n = self.order();
        let fprime = self.derivative();
        let mut g = Series::monomial(self.coeffs[1].recip(), 1, 1);
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let gp = g.pad_to(prec);
            let residual = self.truncate(prec).compose(&gp)?.sub(&Series::t(prec));
            let slope = fprime
                .truncate(prec - 1)
                .compose(&gp.truncate(prec - 1))?
                .reciprocal()?;
            // residual has no constant term, so the padded top coefficient of
            // `slope` never enters the product.
            let correction = residual.mul(&slope.pad_to(prec));
            g = gp.sub(&correction);
        }
        Ok(g.truncate(n))
    }

    /// Compositional inverse by Lagrange inversion,
    /// `[t^n] g = (1/n) [u^(n-1)] (u / f(u))^n`. Quadratic work per
    /// coefficient; kept as an independent cross-check of [`Self::comp_inverse`].
    pub fn lagrange_inverse(&self) -> Result<Self, SeriesError> {
        self.check_delta()?;
        let n = self.order();
        let phi = self.div_t()?.reciprocal()?;
        let mut out = alloc::vec![Rational::zero(); n + 1];
        let mut power = Series::one(phi.order());
        for (m, slot) in out.iter_mut().enumerate().skip(1) {
            power = power.mul(&phi);
            *slot = power.coeff(m - 1) / Rational::from_integer(m as i64);
        }
        Ok(Series::new(out))
    }
}

fn write_t_pow(f: &mut fmt::Formatter<'_>, k: usize) -> fmt::Result {
    match k {
        0 => Ok(()),
        1 => f.write_str("t"),
        _ => write!(f, "t^{}", k),
    }
}

/// `c0 + c1*t + c2*t^2 + ...`, skipping zero coefficients.
impl fmt::Display for ScalarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if k == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                write_t_pow(f, k)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Display for PolySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", c)?;
            } else if *c == MultiPoly::one() {
                write_t_pow(f, k)?;
            } else if Coefficient::is_compound(c) || c.constant_term().is_negative() {
                write!(f, "({})*", c)?;
                write_t_pow(f, k)?;
            } else {
                write!(f, "{}*", c)?;
                write_t_pow(f, k)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Series[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use alloc::string::ToString;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }
    fn s(cs: &[(i64, i64)]) -> ScalarSeries {
        Series::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn difference_of_squares() {
        let a = s(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        let b = s(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        assert_eq!(a.mul(&b), s(&[(1, 1), (0, 1), (-1, 1), (0, 1)]));
    }

    #[test]
    fn geometric_square_by_hand() {
        // (1 + t + t^2 + t^3)^2 = 1 + 2t + 3t^2 + 4t^3 mod t^4
        let g = s(&[(1, 1); 4]);
        assert_eq!(g.mul(&g), s(&[(1, 1), (2, 1), (3, 1), (4, 1)]));
    }

    #[test]
    fn mixed_orders_take_minimum() {
        let a = ScalarSeries::one(5);
        let b = ScalarSeries::one(2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).order(), 2);
    }

    #[test]
    fn exp_of_hermite_exponent() {
        // exp(y t + z t^2) = 1 + y t + (y^2/2 + z) t^2
        let y = MultiPoly::var(Var::Y);
        let z = MultiPoly::var(Var::Z);
        let a = PolySeries::new(vec![MultiPoly::zero(), y.clone(), z.clone()]);
        let e = a.exp().unwrap();
        assert_eq!(e.coeff(0), &MultiPoly::one());
        assert_eq!(e.coeff(1), &y);
        assert_eq!(e.coeff(2), &(&y.pow(2).scale(&q(1, 2)) + &z));
        assert_eq!(PolySeries::zero(4).exp().unwrap(), PolySeries::one(4));
        assert_eq!(
            PolySeries::one(2).exp(),
            Err(SeriesError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn log_of_one_plus_t() {
        let a = s(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(a.log().unwrap(), s(&[(0, 1), (1, 1), (-1, 2), (1, 3)]));
        assert!(ScalarSeries::one(5).log().unwrap().is_zero());
        assert_eq!(
            ScalarSeries::zero(3).log(),
            Err(SeriesError::ConstantTermNotOne)
        );
        let t = ScalarSeries::t(6);
        assert_eq!(t.exp().unwrap().log().unwrap(), t);
    }

    #[test]
    fn reciprocal_geometric() {
        let a = s(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        assert_eq!(a.reciprocal().unwrap(), s(&[(1, 1); 4]));
        assert_eq!(
            ScalarSeries::t(3).reciprocal(),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn derivative_pow_basics() {
        let t2 = ScalarSeries::monomial(Rational::one(), 2, 4);
        assert_eq!(t2.derivative(), ScalarSeries::monomial(q(2, 1), 1, 3));
        let one_plus_t = s(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(one_plus_t.pow(2), s(&[(1, 1), (2, 1), (1, 1), (0, 1)]));
    }

    #[test]
    fn compose_identity_and_exp_log() {
        let a = s(&[(3, 1), (1, 2), (-2, 1), (5, 7), (1, 1)]);
        assert_eq!(a.compose(&ScalarSeries::t(4)).unwrap(), a);
        let exp = ScalarSeries::from_fn(4, |k| Rational::factorial(k).recip());
        let ln1p = s(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4)]);
        assert_eq!(
            exp.compose(&ln1p).unwrap(),
            s(&[(1, 1), (1, 1), (0, 1), (0, 1), (0, 1)])
        );
        assert_eq!(
            a.compose(&ScalarSeries::one(4)),
            Err(SeriesError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn inverse_of_exp_minus_one_is_log() {
        let f = ScalarSeries::from_fn(8, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                Rational::factorial(k).recip()
            }
        });
        let expected = ScalarSeries::from_fn(8, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                q(sign, k as i64)
            }
        });
        assert_eq!(f.comp_inverse().unwrap(), expected);
        assert_eq!(f.lagrange_inverse().unwrap(), expected);
    }

    #[test]
    fn self_inverse_t_over_t_minus_one() {
        // t/(t-1) = -t - t^2 - t^3 - ...
        let f = ScalarSeries::from_fn(9, |k| if k == 0 { q(0, 1) } else { q(-1, 1) });
        assert_eq!(f.compose(&f).unwrap(), ScalarSeries::t(9));
        assert_eq!(f.comp_inverse().unwrap(), f);
    }

    #[test]
    fn inverse_rejects_non_delta() {
        assert_eq!(
            ScalarSeries::one(3).comp_inverse(),
            Err(SeriesError::NotDeltaSeries)
        );
        let t2 = ScalarSeries::monomial(Rational::one(), 2, 3);
        assert_eq!(t2.comp_inverse(), Err(SeriesError::NotDeltaSeries));
        assert_eq!(t2.lagrange_inverse(), Err(SeriesError::NotDeltaSeries));
    }

    #[test]
    fn rational_power_squares_back() {
        let a = s(&[(1, 1), (-4, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        let r = a.sqrt().unwrap();
        assert_eq!(r.mul(&r), a);
        let cube = a.pow_rational(&q(1, 3)).unwrap();
        assert_eq!(cube.pow(3), a);
    }

    #[test]
    fn rendering() {
        assert_eq!(s(&[(1, 1), (0, 1), (-1, 2), (1, 3)]).to_string(), "1 - 1/2*t^2 + 1/3*t^3");
        assert_eq!(ScalarSeries::zero(3).to_string(), "0");
        let y = MultiPoly::var(Var::Y);
        let z = MultiPoly::var(Var::Z);
        let p = PolySeries::new(vec![MultiPoly::one(), y.clone(), &y.pow(2).scale(&q(1, 2)) + &z]);
        assert_eq!(p.to_string(), "1 + y*t + (1/2*y^2 + z)*t^2");
    }
}

//! Taylor expansions of the elementary functions used by the pair registry,
//! all with exact rational coefficients.

use super::ScalarSeries;
use crate::rational::Rational;

/// `exp(c t)`.
pub fn exp_lin(c: &Rational, order: usize) -> ScalarSeries {
    let mut term = Rational::one();
    ScalarSeries::from_fn(order, |k| {
        if k > 0 {
            term = &term * c / Rational::from_integer(k as i64);
        }
        term.clone()
    })
}

/// `exp(c t) - 1`.
pub fn expm1_lin(c: &Rational, order: usize) -> ScalarSeries {
    exp_lin(c, order).sub(&ScalarSeries::one(order))
}

/// `ln(1 + c t)`.
pub fn ln1p_lin(c: &Rational, order: usize) -> ScalarSeries {
    ScalarSeries::from_fn(order, |k| {
        if k == 0 {
            Rational::zero()
        } else {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            Rational::from_integer(sign) * c.pow(k as i32) / Rational::from_integer(k as i64)
        }
    })
}

/// `(1 + c t)^alpha` for rational `alpha`, by the generalized binomial theorem.
pub fn binomial(c: &Rational, alpha: &Rational, order: usize) -> ScalarSeries {
    let mut term = Rational::one();
    ScalarSeries::from_fn(order, |k| {
        if k > 0 {
            let j = Rational::from_integer(k as i64 - 1);
            term = &term * (alpha - j) * c / Rational::from_integer(k as i64);
        }
        term.clone()
    })
}

pub fn sin(order: usize) -> ScalarSeries {
    ScalarSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::zero()
        } else {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            Rational::from_integer(sign) / Rational::factorial(k)
        }
    })
}

pub fn cos(order: usize) -> ScalarSeries {
    ScalarSeries::from_fn(order, |k| {
        if k % 2 == 1 {
            Rational::zero()
        } else {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            Rational::from_integer(sign) / Rational::factorial(k)
        }
    })
}

pub fn sec(order: usize) -> ScalarSeries {
    cos(order).reciprocal().expect("cos has constant term 1")
}

pub fn tan(order: usize) -> ScalarSeries {
    sin(order).mul(&sec(order))
}

pub fn arctan(order: usize) -> ScalarSeries {
    ScalarSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::zero()
        } else {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            Rational::new(sign, k as i64)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_and_log_are_inverse() {
        let e = expm1_lin(&Rational::one(), 9);
        assert_eq!(e.comp_inverse().unwrap(), ln1p_lin(&Rational::one(), 9));
        let two = Rational::from_integer(2);
        assert_eq!(exp_lin(&two, 9).log().unwrap(), ScalarSeries::t(9).scale(&two));
    }

    #[test]
    fn binomial_matches_rational_power() {
        let alpha = Rational::new(-3, 2);
        let c = Rational::new(-4, 1);
        let direct = binomial(&c, &alpha, 10);
        let via_power = ScalarSeries::one(10)
            .add(&ScalarSeries::t(10).scale(&c))
            .pow_rational(&alpha)
            .unwrap();
        assert_eq!(direct, via_power);
    }

    #[test]
    fn trig_identities() {
        let n = 12;
        let s = sin(n);
        let c = cos(n);
        assert_eq!(s.mul(&s).add(&c.mul(&c)), ScalarSeries::one(n));
        assert_eq!(tan(n).comp_inverse().unwrap(), arctan(n));
        assert_eq!(tan(5).coeff(3), &Rational::new(1, 3));
        assert_eq!(tan(5).coeff(5), &Rational::new(2, 15));
    }
}

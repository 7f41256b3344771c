//! Formal linear operators on [`MultiPoly`].
//!
//! Operators are expression trees over five primitives (identity, rational
//! scaling, multiplication by a variable, partial derivative and inverse
//! derivative) closed under sums, composition and power series `h(B)`.
//! Operator identities are checked extensionally, monomial by monomial.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::{Monomial, MultiPoly, Var};
use crate::rational::Rational;
use crate::series::ScalarSeries;
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    #[error("operator series base does not lower degree; an explicit cutoff is required")]
    CutoffRequired,
    #[error("operator series needs {needed} terms but only {available} are available")]
    SeriesTooShort { needed: usize, available: usize },
    #[error("exponent generator is not nilpotent in any variable")]
    NonNilpotentGenerator,
    #[error("coefficient must not depend on {0}")]
    CoefficientDependsOn(Var),
}

/// `h(B) = sum_k h_k B^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpSeries {
    pub h: ScalarSeries,
    pub base: Box<LinOp>,
    /// Highest power of `base` to use when `base` is not nilpotent.
    pub cutoff: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinOp {
    Identity,
    Scale(Rational),
    MulVar(Var),
    Deriv(Var),
    InvDeriv(Var),
    Sum(Vec<LinOp>),
    /// `Compose([a, b, c]) = a ∘ b ∘ c`; `c` acts first.
    Compose(Vec<LinOp>),
    Series(OpSeries),
}

impl LinOp {
    pub fn zero() -> LinOp {
        LinOp::Scale(Rational::zero())
    }

    pub fn scale(c: Rational) -> LinOp {
        LinOp::Scale(c)
    }

    /// `∂_v^k` (identity for `k = 0`).
    pub fn deriv_pow(v: Var, k: u32) -> LinOp {
        match k {
            0 => LinOp::Identity,
            1 => LinOp::Deriv(v),
            _ => LinOp::Compose((0..k).map(|_| LinOp::Deriv(v)).collect()),
        }
    }

    /// Multiplication by a fixed polynomial, spelled out in primitives.
    pub fn mul_poly(p: &MultiPoly) -> LinOp {
        let terms: Vec<LinOp> = p
            .terms()
            .rev()
            .map(|(m, c)| {
                let mut factors = Vec::new();
                if !c.is_one() {
                    factors.push(LinOp::Scale(c.clone()));
                }
                for v in Var::ALL {
                    for _ in 0..m.exp(v) {
                        factors.push(LinOp::MulVar(v));
                    }
                }
                match factors.len() {
                    0 => LinOp::Identity,
                    1 => factors.pop().unwrap(),
                    _ => LinOp::Compose(factors),
                }
            })
            .collect();
        match terms.len() {
            0 => LinOp::zero(),
            1 => terms.into_iter().next().unwrap(),
            _ => LinOp::Sum(terms),
        }
    }

    pub fn sum(ops: Vec<LinOp>) -> LinOp {
        LinOp::Sum(ops)
    }

    pub fn compose(ops: Vec<LinOp>) -> LinOp {
        LinOp::Compose(ops)
    }

    /// `c · self`.
    pub fn scaled(self, c: Rational) -> LinOp {
        LinOp::Compose(alloc::vec![LinOp::Scale(c), self])
    }

    /// `h(base)`, evaluated through nilpotency of `base`.
    pub fn series(h: ScalarSeries, base: LinOp) -> LinOp {
        LinOp::Series(OpSeries {
            h,
            base: Box::new(base),
            cutoff: None,
        })
    }

    /// `h(base)` truncated after `base^cutoff`.
    pub fn series_with_cutoff(h: ScalarSeries, base: LinOp, cutoff: usize) -> LinOp {
        LinOp::Series(OpSeries {
            h,
            base: Box::new(base),
            cutoff: Some(cutoff),
        })
    }

    /// Upper bound on the change of the degree in `v` (or total degree when
    /// `v` is `None`) of any monomial under this operator.
    pub fn degree_shift(&self, v: Option<Var>) -> i64 {
        let own = |w: Var, d: i64| if v.is_none() || v == Some(w) { d } else { 0 };
        match self {
            LinOp::Identity | LinOp::Scale(_) => 0,
            LinOp::MulVar(w) | LinOp::InvDeriv(w) => own(*w, 1),
            LinOp::Deriv(w) => own(*w, -1),
            LinOp::Sum(ops) => ops.iter().map(|o| o.degree_shift(v)).max().unwrap_or(0),
            LinOp::Compose(ops) => ops.iter().map(|o| o.degree_shift(v)).sum(),
            LinOp::Series(s) => {
                let b = s.base.degree_shift(v);
                let last = s.cutoff.map_or(s.h.order(), |c| c.min(s.h.order()));
                (0..=last)
                    .filter(|&k| !s.h.coeff(k).is_zero())
                    .map(|k| k as i64 * b)
                    .max()
                    .unwrap_or(0)
            }
        }
    }

    /// A variable (or the total degree, as `Some(None)`) that this operator
    /// strictly lowers, proving nilpotency on polynomials.
    pub fn lowered_degree(&self) -> Option<Option<Var>> {
        if self.degree_shift(None) <= -1 {
            return Some(None);
        }
        Var::ALL
            .into_iter()
            .find(|&v| self.degree_shift(Some(v)) <= -1)
            .map(Some)
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly, OpError> {
        if p.is_zero() {
            return Ok(MultiPoly::zero());
        }
        Ok(match self {
            LinOp::Identity => p.clone(),
            LinOp::Scale(c) => p.scale(c),
            LinOp::MulVar(v) => p.mul_var(*v),
            LinOp::Deriv(v) => p.derivative(*v),
            LinOp::InvDeriv(v) => p.integral(*v),
            LinOp::Sum(ops) => {
                let mut acc = MultiPoly::zero();
                for op in ops {
                    acc += &op.apply(p)?;
                }
                acc
            }
            LinOp::Compose(ops) => {
                let mut acc = p.clone();
                for op in ops.iter().rev() {
                    acc = op.apply(&acc)?;
                }
                acc
            }
            LinOp::Series(s) => s.apply(p)?,
        })
    }

    /// Apply `self` `k` times.
    pub fn apply_pow(&self, k: usize, p: &MultiPoly) -> Result<MultiPoly, OpError> {
        let mut acc = p.clone();
        for _ in 0..k {
            acc = self.apply(&acc)?;
        }
        Ok(acc)
    }

    /// `self ∘ other`.
    pub fn then_after(self, other: LinOp) -> LinOp {
        LinOp::Compose(alloc::vec![self, other])
    }
}

impl OpSeries {
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly, OpError> {
        let degree_bound = |w: Option<Var>| -> usize {
            match w {
                None => p.degree().unwrap_or(0) as usize,
                Some(v) => p.degree_in(v).unwrap_or(0) as usize,
            }
        };
        let last = match (self.cutoff, self.base.lowered_degree()) {
            (Some(c), _) => c.min(self.h.order()),
            (None, Some(w)) => {
                let needed = degree_bound(w);
                if needed > self.h.order() {
                    // The missing coefficients only matter if the power survives.
                    let tail = self.base.apply_pow(self.h.order() + 1, p)?;
                    if !tail.is_zero() {
                        return Err(OpError::SeriesTooShort {
                            needed: needed + 1,
                            available: self.h.order() + 1,
                        });
                    }
                }
                needed.min(self.h.order())
            }
            (None, None) => return Err(OpError::CutoffRequired),
        };
        let mut acc = MultiPoly::zero();
        let mut power = p.clone();
        for k in 0..=last {
            if power.is_zero() {
                break;
            }
            let c = self.h.coeff(k);
            if !c.is_zero() {
                acc += &power.scale(c);
            }
            if k < last {
                power = self.base.apply(&power)?;
            }
        }
        Ok(acc)
    }
}

/// `exp(sum_i c_i · op_i)` applied to `p`.
///
/// Without a cutoff, some variable `v` must satisfy
/// `shift_v(op_i) + deg_v(c_i) <= -1` for every generator, so that the
/// exponential series terminates on `p`.
pub fn exp_operator(
    pairs: &[(MultiPoly, LinOp)],
    p: &MultiPoly,
    cutoff: Option<usize>,
) -> Result<MultiPoly, OpError> {
    let generator = LinOp::Sum(
        pairs
            .iter()
            .map(|(c, op)| LinOp::mul_poly(c).then_after(op.clone()))
            .collect(),
    );
    let last = match cutoff {
        Some(k) => k,
        None => {
            let witness = Var::ALL.into_iter().find(|&v| {
                pairs.iter().all(|(c, op)| {
                    let dc = c.degree_in(v).unwrap_or(0) as i64;
                    op.degree_shift(Some(v)) + dc <= -1
                })
            });
            match witness {
                Some(v) => p.degree_in(v).unwrap_or(0) as usize,
                None => return Err(OpError::NonNilpotentGenerator),
            }
        }
    };
    let mut acc = MultiPoly::zero();
    let mut term = p.clone();
    for k in 0..=last {
        if term.is_zero() {
            break;
        }
        acc += &term;
        if k < last {
            term = generator
                .apply(&term)?
                .scale(&Rational::new(1, k as i64 + 1));
        }
    }
    Ok(acc)
}

/// Checks `(a∘b − b∘a)(m) = m` on every monomial of total degree `<= degree`.
pub fn commutator(a: &LinOp, b: &LinOp, degree: u32) -> Result<Verdict, OpError> {
    for m in Monomial::all_up_to(degree) {
        let p = MultiPoly::term(m, Rational::one());
        let ab = a.apply(&b.apply(&p)?)?;
        let ba = b.apply(&a.apply(&p)?)?;
        let v = Verdict::compare(&p, p.clone(), &ab - &ba);
        if !v.is_pass() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

/// Checks `a(m) = b(m)` on every monomial of total degree `<= degree`.
pub fn agree_up_to(a: &LinOp, b: &LinOp, degree: u32) -> Result<Verdict, OpError> {
    for m in Monomial::all_up_to(degree) {
        let p = MultiPoly::term(m, Rational::one());
        let v = Verdict::compare(&p, a.apply(&p)?, b.apply(&p)?);
        if !v.is_pass() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

/// Both sides of the Crofton identity
/// `f(y + m λ ∂_y^(m-1)){1} = exp(λ ∂_y^m){f(y)}` for `λ` free of `y`.
pub fn crofton_sides(
    m: u32,
    lambda: &MultiPoly,
    f: &MultiPoly,
) -> Result<(MultiPoly, MultiPoly), OpError> {
    if lambda.degree_in(Var::Y).unwrap_or(0) > 0 {
        return Err(OpError::CoefficientDependsOn(Var::Y));
    }
    let shifted = LinOp::Sum(alloc::vec![
        LinOp::MulVar(Var::Y),
        LinOp::mul_poly(&lambda.scale(&Rational::from_integer(m as i64)))
            .then_after(LinOp::deriv_pow(Var::Y, m - 1)),
    ]);
    let mut lhs = MultiPoly::zero();
    let mut power = MultiPoly::one();
    for (k, c) in f.coefficients_in(Var::Y).iter().enumerate() {
        if k > 0 {
            power = shifted.apply(&power)?;
        }
        lhs += &(c * &power);
    }
    let rhs = exp_operator(&[(lambda.clone(), LinOp::deriv_pow(Var::Y, m))], f, None)?;
    Ok((lhs, rhs))
}

pub fn crofton_check(m: u32, lambda: &MultiPoly, f: &MultiPoly) -> Result<Verdict, OpError> {
    let (lhs, rhs) = crofton_sides(m, lambda, f)?;
    Ok(Verdict::compare(f, lhs, rhs))
}

/// Crofton identity for every `f = y^k`, `k <= max_degree`.
pub fn crofton_sweep(m: u32, lambda: &MultiPoly, max_degree: u32) -> Result<Verdict, OpError> {
    for k in 0..=max_degree {
        let v = crofton_check(m, lambda, &MultiPoly::var(Var::Y).pow(k))?;
        if !v.is_pass() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

impl fmt::Display for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinOp::Identity => f.write_str("1"),
            LinOp::Scale(c) => write!(f, "({})", c),
            LinOp::MulVar(v) => write!(f, "{}", v),
            LinOp::Deriv(v) => write!(f, "D[{}]", v),
            LinOp::InvDeriv(v) => write!(f, "Dinv[{}]", v),
            LinOp::Sum(ops) => {
                f.write_str("(")?;
                for (i, op) in ops.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{}", op)?;
                }
                f.write_str(")")
            }
            LinOp::Compose(ops) => {
                for (i, op) in ops.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{}", op)?;
                }
                Ok(())
            }
            LinOp::Series(s) => {
                write!(f, "[{}](t = {})", s.h, s.base)?;
                if let Some(c) = s.cutoff {
                    write!(f, "{{<= {}}}", c)?;
                }
                Ok(())
            }
        }
    }
}

use alloc::string::ToString;
use alloc::vec::Vec;

use super::MixedFamily;
use crate::catalog::{sheffer_poly, MemberScale, Reduction};
use crate::error::{check_order, Error};
use crate::operator::{exp_operator, LinOp, OpError};
use crate::oracle::explicit_sum;
use crate::poly::{MultiPoly, Var};
use crate::rational::Rational;
use crate::series::ScalarSeries;
use crate::verdict::Verdict;

/// Verdicts of the two operational representations of a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationalReport {
    pub n: usize,
    /// The member as an exponential operator applied to the plain Sheffer
    /// polynomial.
    pub exponential: Verdict,
    /// The member as `exp(z ∂_y^r)` applied to its `z = 0` specialization.
    pub z_shift: Verdict,
}

impl OperationalReport {
    pub fn all_pass(&self) -> bool {
        self.exponential.is_pass() && self.z_shift.is_pass()
    }
}

/// A specialized member next to the classical family member it should equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub id: &'static str,
    pub n: usize,
    pub specialized: MultiPoly,
    pub target: MultiPoly,
    pub verdict: Verdict,
}

fn z_power_op(r: u32) -> (MultiPoly, LinOp) {
    (MultiPoly::var(Var::Z), LinOp::deriv_pow(Var::Y, r))
}

impl MixedFamily {
    pub fn operational_rep_check(&self, n: usize) -> Result<OperationalReport, Error> {
        check_order(n, self.order)?;
        let member = self.member(n)?;
        let r = self.kind.r();
        let sn = sheffer_poly(&self.pair, n, self.order)?;
        let (exponential, z_shift) = if self.kind.is_r_type() {
            let generators = [
                (
                    MultiPoly::one(),
                    LinOp::compose(alloc::vec![
                        LinOp::Scale(-Rational::one()),
                        LinOp::InvDeriv(Var::X),
                        LinOp::Deriv(Var::Y),
                    ]),
                ),
                (
                    MultiPoly::one(),
                    LinOp::compose(alloc::vec![LinOp::InvDeriv(Var::Y), LinOp::Deriv(Var::Y)]),
                ),
                z_power_op(r),
            ];
            let at_zero = sn.eval_var(Var::X, &Rational::zero());
            let exponential = match exp_operator(&generators, &at_zero, None) {
                Ok(lhs) => Verdict::compare(&at_zero, member.clone(), lhs),
                Err(OpError::NonNilpotentGenerator) => Verdict::NotEvaluable(
                    "exponent has no nilpotent variable; the series does not terminate".to_string(),
                ),
                Err(e) => return Err(e.into()),
            };
            let z_shift = Verdict::NotEvaluable(
                "z-shift representation is stated for the S-type family only".to_string(),
            );
            (exponential, z_shift)
        } else {
            let s_y = sn.substitute(Var::X, &MultiPoly::var(Var::Y));
            let generators = [
                (
                    MultiPoly::one(),
                    LinOp::InvDeriv(Var::X).then_after(LinOp::deriv_pow(Var::Y, 2)),
                ),
                z_power_op(r),
            ];
            let lhs = exp_operator(&generators, &s_y, None)?;
            let exponential = Verdict::compare(&s_y, member.clone(), lhs);
            let base = member.substitute(Var::Z, &MultiPoly::zero());
            let shifted = exp_operator(&[z_power_op(r)], &base, None)?;
            (exponential, Verdict::compare(&base, member, shifted))
        };
        Ok(OperationalReport {
            n,
            exponential,
            z_shift,
        })
    }

    /// The member with `z` replaced by `s D_z^{-1}` acting on the vacuum,
    /// as a polynomial in `s`: entry `k` is the coefficient of `s^k`.
    pub fn integral_integrand(&self, n: usize) -> Result<Vec<MultiPoly>, Error> {
        let member = self.member(n)?;
        let inv = LinOp::InvDeriv(Var::Z);
        member
            .coefficients_in(Var::Z)
            .iter()
            .enumerate()
            .map(|(k, c)| Ok(c * &inv.apply_pow(k, &MultiPoly::one())?))
            .collect()
    }

    /// Integral representation under the moment rule `∫ e^{-s} s^k ds = k!`.
    pub fn integral_rep_check(&self, n: usize) -> Result<Verdict, Error> {
        let integrand = self.integral_integrand(n)?;
        let mut value = MultiPoly::zero();
        for (k, c) in integrand.iter().enumerate() {
            value += &c.scale(&Rational::factorial(k));
        }
        let member = self.member(n)?;
        Ok(Verdict::compare(&member, member.clone(), value))
    }

    /// Specializes member `n` by the named reduction and compares it with
    /// the classical family, transported through the same `(A, H)`.
    pub fn reduce(&self, id: &str, n: usize) -> Result<ReductionOutcome, Error> {
        check_order(n, self.order)?;
        let red = Reduction::lookup(id)?;
        red.check_kind(self.kind)?;
        let r = self.kind.r();
        let mut specialized = red.specialize(&self.member(n)?)?;
        let stored = self.kind.is_r_type() && red.scale == MemberScale::Stored;
        if self.kind.is_r_type() && red.scale == MemberScale::Egf {
            specialized = specialized.scale(&Rational::factorial(n).recip());
        }
        let weight = |k: usize| {
            let f = Rational::factorial(k);
            if stored {
                &f * &f
            } else {
                f
            }
        };
        let target_family = red.target(r);
        let h = self.h.truncate(n);
        let a = self.a.truncate(n);
        let mut hk = ScalarSeries::one(n);
        let mut target = MultiPoly::zero();
        for k in 0..=n {
            if k > 0 {
                hk = hk.mul(&h);
            }
            let c = a.mul(&hk).coeff(n) * weight(n) / weight(k);
            if !c.is_zero() {
                target += &explicit_sum(target_family, k).scale(&c);
            }
        }
        let verdict = Verdict::compare(&MultiPoly::one(), target.clone(), specialized.clone());
        Ok(ReductionOutcome {
            id: red.id,
            n,
            specialized,
            target,
            verdict,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{lookup, FamilyKind};

    fn fam(name: &str, kind: FamilyKind, order: usize) -> MixedFamily {
        MixedFamily::new(lookup(name).unwrap(), kind, order).unwrap()
    }

    #[test]
    fn operational_identity_pair() {
        let f = fam("identity", FamilyKind::S { r: 2 }, 4);
        let rep = f.operational_rep_check(2).unwrap();
        assert!(rep.all_pass());
        assert!(f.operational_rep_check(0).unwrap().all_pass());
        let f = fam("lower-factorial", FamilyKind::S { r: 3 }, 4);
        assert!(f.operational_rep_check(4).unwrap().all_pass());
    }

    #[test]
    fn r_type_literal_form_is_flagged() {
        let f = fam("identity", FamilyKind::R { r: 2 }, 4);
        let rep = f.operational_rep_check(3).unwrap();
        assert!(matches!(rep.exponential, Verdict::NotEvaluable(_)));
    }

    #[test]
    fn integral_identity_pair() {
        let f = fam("identity", FamilyKind::S { r: 2 }, 4);
        let integrand = f.integral_integrand(2).unwrap();
        // y^2 + 2x + 2 s z
        assert_eq!(integrand.len(), 2);
        assert_eq!(integrand[1], MultiPoly::var(Var::Z).scale(&Rational::from_integer(2)));
        assert!(f.integral_rep_check(2).unwrap().is_pass());
        let f = fam("lower-factorial", FamilyKind::S { r: 2 }, 4);
        assert!(f.integral_rep_check(3).unwrap().is_pass());
    }

    #[test]
    fn hermite_reduction() {
        let f = fam("identity", FamilyKind::S { r: 2 }, 4);
        let out = f.reduce("hermite-kdf", 3).unwrap();
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        assert_eq!(out.target, &x.pow(3) + &(&x * &y).scale(&Rational::from_integer(6)));
        assert!(out.verdict.is_pass());
        let out = f.reduce("legendre-type", 0).unwrap();
        assert_eq!(out.specialized, MultiPoly::one());
        assert!(matches!(f.reduce("nope", 1), Err(Error::UnknownReduction(_))));
        assert!(f.reduce("legendre-2v", 1).is_err());
    }

    #[test]
    fn legendre_p_reduction_identity_pair() {
        let f = fam("identity", FamilyKind::S { r: 2 }, 4);
        let out = f.reduce("legendre-p-s", 2).unwrap();
        assert!(out.verdict.is_pass());
        assert_eq!(out.target, explicit_sum(crate::oracle::ExplicitFamily::LegendreP, 2));
    }
}

use alloc::string::String;
use alloc::vec::Vec;

use super::MixedFamily;
use crate::catalog::{FamilyKind, MemberScale};
use crate::error::Error;
use crate::operator::{commutator, LinOp};
use crate::poly::{MultiPoly, Var};
use crate::rational::Rational;
use crate::verdict::Verdict;

/// Degree bound of the monomials used in commutator checks.
pub const COMMUTATOR_DEGREE: u32 = 8;

/// Base operator `B` of a lowering candidate `f(B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lowering {
    /// `∂_y`
    Y,
    /// `-∂_x x ∂_y`
    Mixed,
    /// `-∂_x x ∂_x`
    XOnly,
}

impl Lowering {
    pub fn name(self) -> &'static str {
        match self {
            Lowering::Y => "dy",
            Lowering::Mixed => "mixed",
            Lowering::XOnly => "x-only",
        }
    }

    pub fn base(self) -> LinOp {
        let minus_dx_x = || {
            alloc::vec![
                LinOp::Scale(-Rational::one()),
                LinOp::Deriv(Var::X),
                LinOp::MulVar(Var::X),
            ]
        };
        match self {
            Lowering::Y => LinOp::Deriv(Var::Y),
            Lowering::Mixed => {
                let mut ops = minus_dx_x();
                ops.push(LinOp::Deriv(Var::Y));
                LinOp::compose(ops)
            }
            Lowering::XOnly => {
                let mut ops = minus_dx_x();
                ops.push(LinOp::Deriv(Var::X));
                LinOp::compose(ops)
            }
        }
    }
}

/// Raising, lowering, differential-equation and commutator checks for one
/// normalization of the members and one lowering operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialitySection {
    pub normalization: MemberScale,
    pub lowering_op: Lowering,
    /// `M p_n = p_{n+1}`, indexed by `n`.
    pub raising: Vec<Verdict>,
    /// `P p_n = n p_{n-1}`, indexed by `n`.
    pub lowering: Vec<Verdict>,
    /// `(M P - n) p_n`, indexed by `n`.
    pub residuals: Vec<MultiPoly>,
    pub commutator: Verdict,
}

impl MonomialitySection {
    pub fn raising_holds(&self) -> bool {
        self.raising.iter().all(Verdict::is_pass)
    }

    pub fn lowering_holds(&self) -> bool {
        self.lowering.iter().all(Verdict::is_pass)
    }

    pub fn residuals_vanish(&self) -> bool {
        self.residuals.iter().all(MultiPoly::is_zero)
    }

    pub fn all_pass(&self) -> bool {
        self.raising_holds()
            && self.lowering_holds()
            && self.residuals_vanish()
            && self.commutator.is_pass()
    }

    /// First index at which raising fails.
    pub fn first_raising_failure(&self) -> Option<usize> {
        self.raising.iter().position(|v| !v.is_pass())
    }

    pub fn first_lowering_failure(&self) -> Option<usize> {
        self.lowering.iter().position(|v| !v.is_pass())
    }

    pub fn label(&self) -> String {
        alloc::format!("{}/{}", self.normalization.name(), self.lowering_op.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialityReport {
    pub family: String,
    pub kind: FamilyKind,
    pub max_n: usize,
    /// A single section for S-type families; one per normalization and
    /// lowering candidate for R-type families.
    pub sections: Vec<MonomialitySection>,
}

impl MonomialityReport {
    pub fn all_pass(&self) -> bool {
        self.sections.iter().all(MonomialitySection::all_pass)
    }

    /// Sections in which every identity holds.
    pub fn passing(&self) -> impl Iterator<Item = &MonomialitySection> {
        self.sections.iter().filter(|s| s.all_pass())
    }
}

impl MixedFamily {
    pub fn verify_monomiality(&self, max_n: usize) -> Result<MonomialityReport, Error> {
        self.verify_monomiality_with(max_n, COMMUTATOR_DEGREE)
    }

    pub fn verify_monomiality_with(
        &self,
        max_n: usize,
        commutator_degree: u32,
    ) -> Result<MonomialityReport, Error> {
        crate::error::check_order(max_n + 1, self.order)?;
        let raise = self.multiplicative_op()?;
        let plan: Vec<(MemberScale, Lowering)> = if self.kind.is_r_type() {
            let mut plan = Vec::new();
            for scale in [MemberScale::Stored, MemberScale::Egf] {
                for low in [Lowering::Mixed, Lowering::XOnly] {
                    plan.push((scale, low));
                }
            }
            plan
        } else {
            alloc::vec![(MemberScale::Egf, Lowering::Y)]
        };
        let mut commutators: Vec<(Lowering, Verdict)> = Vec::new();
        let mut sections = Vec::new();
        for (scale, low) in plan {
            let lower = self.lowering_op(low);
            let members: Vec<MultiPoly> = (0..=max_n + 1)
                .map(|n| self.member_scaled(n, scale))
                .collect::<Result<_, _>>()?;
            let mut raising = Vec::new();
            let mut lowering = Vec::new();
            let mut residuals = Vec::new();
            for n in 0..=max_n {
                let p = &members[n];
                raising.push(Verdict::compare(p, members[n + 1].clone(), raise.apply(p)?));
                let lowered = lower.apply(p)?;
                let expected = if n == 0 {
                    MultiPoly::zero()
                } else {
                    members[n - 1].scale(&Rational::from_integer(n as i64))
                };
                lowering.push(Verdict::compare(p, expected, lowered.clone()));
                let nn = Rational::from_integer(n as i64);
                residuals.push(&raise.apply(&lowered)? - &p.scale(&nn));
            }
            let commutator = match commutators.iter().find(|(l, _)| *l == low) {
                Some((_, v)) => v.clone(),
                None => {
                    let v = commutator(&lower, &raise, commutator_degree)?;
                    commutators.push((low, v.clone()));
                    v
                }
            };
            sections.push(MonomialitySection {
                normalization: scale,
                lowering_op: low,
                raising,
                lowering,
                residuals,
                commutator,
            });
        }
        Ok(MonomialityReport {
            family: self.id(),
            kind: self.kind,
            max_n,
            sections,
        })
    }
}

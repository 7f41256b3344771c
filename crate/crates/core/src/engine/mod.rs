//! Legendre–Gould Hopper based Sheffer families.
//!
//! A [`MixedFamily`] composes a Sheffer pair's `H = f^{-1}` into one of the two
//! Legendre–Gould Hopper generating functions and weights the result by
//! `A = 1/g(H)`. Members are read off the resulting series; every identity
//! about them is then checked extensionally against that series.

mod monomiality;
mod representations;

pub use monomiality::{Lowering, MonomialityReport, MonomialitySection, COMMUTATOR_DEGREE};
pub use representations::{OperationalReport, ReductionOutcome};

use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::{c0_scaled, FamilyKind, MemberScale, ShefferPair};
use crate::error::{check_order, Error};
use crate::operator::LinOp;
use crate::poly::{MultiPoly, Var};
use crate::rational::Rational;
use crate::series::{PolySeries, ScalarSeries};
use crate::verdict::Verdict;

#[derive(Debug, Clone)]
pub struct MixedFamily {
    pair: ShefferPair,
    kind: FamilyKind,
    order: usize,
    a: ScalarSeries,
    h: ScalarSeries,
    gf: PolySeries,
}

impl MixedFamily {
    pub fn new(pair: ShefferPair, kind: FamilyKind, order: usize) -> Result<MixedFamily, Error> {
        if kind.r() == 0 {
            return Err(Error::param("r", "must be at least 1"));
        }
        let (a, h) = pair.a_h(order.max(1))?;
        let gf = kind
            .base_series(order.max(1))
            .compose(&h)?
            .mul_scalar_series(&a)
            .truncate(order);
        Ok(MixedFamily {
            pair,
            kind,
            order,
            a,
            h,
            gf,
        })
    }

    pub fn pair(&self) -> &ShefferPair {
        &self.pair
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `A(t) = 1/g(f^{-1}(t))`.
    pub fn a(&self) -> &ScalarSeries {
        &self.a
    }

    /// `H(t) = f^{-1}(t)`.
    pub fn h(&self) -> &ScalarSeries {
        &self.h
    }

    pub fn generating_function(&self) -> &PolySeries {
        &self.gf
    }

    /// Short label such as `laguerre/S(r=2)`.
    pub fn id(&self) -> String {
        alloc::format!("{}/{}", self.pair.name, self.kind)
    }

    /// Member `n`: `n! [t^n]` for S-type, `(n!)^2 [t^n]` for R-type.
    pub fn member(&self, n: usize) -> Result<MultiPoly, Error> {
        check_order(n, self.order)?;
        Ok(self.gf.coeff(n).scale(&self.kind.weight(n)))
    }

    /// Member `n` in the requested normalization. S-type members have a
    /// single normalization; R-type `Egf` divides the stored member by `n!`.
    pub fn member_scaled(&self, n: usize, scale: MemberScale) -> Result<MultiPoly, Error> {
        let m = self.member(n)?;
        Ok(match (self.kind.is_r_type(), scale) {
            (true, MemberScale::Egf) => m.scale(&Rational::factorial(n).recip()),
            _ => m,
        })
    }

    pub fn members(&self, max_n: usize) -> Result<Vec<MultiPoly>, Error> {
        (0..=max_n).map(|n| self.member(n)).collect()
    }

    /// Series factors of the operators are built long enough to act on
    /// polynomials up to the working degree.
    fn op_order(&self) -> usize {
        self.order.max(COMMUTATOR_DEGREE as usize) + 1
    }

    fn reciprocal_f_prime(&self) -> Result<ScalarSeries, Error> {
        let order = self.op_order() + 1;
        Ok(self.pair.f(order).derivative().reciprocal()?)
    }

    fn log_derivative_g(&self) -> Result<ScalarSeries, Error> {
        let order = self.op_order() + 1;
        let g = self.pair.g(order);
        Ok(g.derivative().mul(&g.reciprocal()?))
    }

    /// The raising operator.
    ///
    /// S-type: `(y + 2 D_x^{-1} ∂_y + r z ∂_y^{r-1} - g'/g(∂_y)) ∘ 1/f'(∂_y)`.
    /// R-type: `(-D_x^{-1} + D_y^{-1} + r z ∂_y^{r-1} - g'/g(∂_y)) ∘ 1/f'(∂_y)`.
    pub fn multiplicative_op(&self) -> Result<LinOp, Error> {
        let r = self.kind.r();
        let dy = || LinOp::Deriv(Var::Y);
        let mut core = if self.kind.is_r_type() {
            alloc::vec![
                LinOp::InvDeriv(Var::X).scaled(-Rational::one()),
                LinOp::InvDeriv(Var::Y),
            ]
        } else {
            alloc::vec![
                LinOp::MulVar(Var::Y),
                LinOp::compose(alloc::vec![
                    LinOp::Scale(Rational::from_integer(2)),
                    LinOp::InvDeriv(Var::X),
                    dy(),
                ]),
            ]
        };
        let rz = MultiPoly::var(Var::Z).scale(&Rational::from_integer(r as i64));
        core.push(LinOp::mul_poly(&rz).then_after(LinOp::deriv_pow(Var::Y, r - 1)));
        let gl = self.log_derivative_g()?;
        if !gl.is_zero() {
            core.push(LinOp::series(gl.neg(), dy()));
        }
        let core = LinOp::sum(core);
        let inv_fp = self.reciprocal_f_prime()?;
        if inv_fp == ScalarSeries::one(inv_fp.order()) {
            Ok(core)
        } else {
            Ok(core.then_after(LinOp::series(inv_fp, dy())))
        }
    }

    /// The lowering operator: `f(∂_y)` for S-type and `f(-∂_x x ∂_x)` for
    /// R-type.
    pub fn derivative_op(&self) -> LinOp {
        let candidate = if self.kind.is_r_type() {
            Lowering::XOnly
        } else {
            Lowering::Y
        };
        self.lowering_op(candidate)
    }

    /// `f(B)` for the given lowering base `B`.
    pub fn lowering_op(&self, candidate: Lowering) -> LinOp {
        let f = self.pair.f(self.op_order());
        if f == ScalarSeries::t(f.order()) {
            return candidate.base();
        }
        LinOp::series(f, candidate.base())
    }

    /// `M^n {1}`.
    pub fn explicit_rep(&self, n: usize) -> Result<MultiPoly, Error> {
        check_order(n, self.order)?;
        Ok(self.multiplicative_op()?.apply_pow(n, &MultiPoly::one())?)
    }

    /// Compares `A(0) · M^n {1}` with member `n` (the `n!`-normalized member
    /// for R-type).
    pub fn explicit_rep_check(&self, n: usize) -> Result<Verdict, Error> {
        let rep = self.explicit_rep(n)?.scale(self.a.constant_term());
        let member = self.member_scaled(n, MemberScale::Egf)?;
        Ok(Verdict::compare(&MultiPoly::one(), member, rep))
    }

    /// The generating function assembled factor by factor:
    /// `A · C_0(-x H^2) · exp(y H + z H^r)` or `A · C_0(x H) C_0(-y H) · exp(z H^r)`.
    pub fn direct_generating_function(&self) -> Result<PolySeries, Error> {
        let order = self.order;
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let z = MultiPoly::var(Var::Z);
        let h_poly = |c: &MultiPoly, p: u32| self.h.pow(p).map(|q| c.scale(q));
        let r = self.kind.r();
        let (c0s, exponent) = if self.kind.is_r_type() {
            (
                alloc::vec![c0_scaled(&x, 1, order), c0_scaled(&-&y, 1, order)],
                h_poly(&z, r),
            )
        } else {
            (
                alloc::vec![c0_scaled(&-&x, 1, order)],
                h_poly(&y, 1).add(&h_poly(&z, r)),
            )
        };
        let inner = if self.kind.is_r_type() {
            self.h.clone()
        } else {
            self.h.pow(2)
        };
        let mut acc = exponent.exp()?.mul_scalar_series(&self.a);
        for c0 in c0s {
            acc = acc.mul(&c0.compose(&inner)?);
        }
        Ok(acc)
    }

    /// Members reassembled into a series agree with the factor-by-factor
    /// product through the working order.
    pub fn generating_function_check(&self) -> Result<Verdict, Error> {
        let direct = self.direct_generating_function()?;
        for n in 0..=self.order {
            let reassembled = self.member(n)?.scale(&self.kind.weight(n).recip());
            let v = Verdict::compare(&MultiPoly::one(), direct.coeff(n).clone(), reassembled);
            if !v.is_pass() {
                return Ok(v);
            }
        }
        Ok(Verdict::Pass)
    }

    /// With `g = 1`, member `n` equals `w_n [t^n] G(H(t))` where `H` comes
    /// from `f` by Lagrange inversion.
    pub fn associated_check(&self, n: usize) -> Result<Verdict, Error> {
        check_order(n, self.order)?;
        let assoc = MixedFamily::new(self.pair.associated(), self.kind, n)?;
        let h = self.pair.f(n.max(1)).lagrange_inverse()?;
        let expected = self
            .kind
            .base_series(n.max(1))
            .compose(&h)?
            .coeff(n)
            .scale(&self.kind.weight(n));
        Ok(Verdict::compare(&MultiPoly::one(), expected, assoc.member(n)?))
    }

    /// With `f = t`, member `n` is the `A`-weighted binomial convolution of
    /// the base polynomials.
    pub fn appell_check(&self, n: usize) -> Result<Verdict, Error> {
        check_order(n, self.order)?;
        let appell = MixedFamily::new(self.pair.appell(), self.kind, n)?;
        let a = appell.a();
        let mut expected = MultiPoly::zero();
        for k in 0..=n {
            let base = match self.kind {
                FamilyKind::S { r } => crate::catalog::leghp_s(k, r, n)?,
                FamilyKind::R { r } => crate::catalog::leghp_r(k, r, n)?,
            };
            let c = a.coeff(n - k) * self.kind.weight(n) / self.kind.weight(k);
            expected += &base.scale(&c);
        }
        Ok(Verdict::compare(&MultiPoly::one(), expected, appell.member(n)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn z() -> MultiPoly {
        MultiPoly::var(Var::Z)
    }
    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn family(name: &str, kind: FamilyKind, order: usize) -> MixedFamily {
        MixedFamily::new(lookup(name).unwrap(), kind, order).unwrap()
    }

    #[test]
    fn identity_pair_gives_base_members() {
        let fam = family("identity", FamilyKind::S { r: 2 }, 8);
        for n in 0..=8 {
            assert_eq!(
                fam.member(n).unwrap(),
                crate::catalog::leghp_s(n, 2, 8).unwrap()
            );
        }
        let two_var = fam.member(2).unwrap().substitute(Var::X, &MultiPoly::zero());
        assert_eq!(two_var, &y().pow(2) + &z().scale(&q(2)));
        assert!(matches!(fam.member(9), Err(Error::OrderTooSmall { .. })));
    }

    #[test]
    fn lower_factorial_first_member() {
        let fam = family("lower-factorial", FamilyKind::S { r: 2 }, 6);
        assert_eq!(fam.member(1).unwrap(), y());
        assert_eq!(fam.member(0).unwrap(), MultiPoly::one());
    }

    #[test]
    fn identity_raising_operator() {
        let fam = family("identity", FamilyKind::S { r: 2 }, 6);
        let m = fam.multiplicative_op().unwrap();
        assert!(alloc::format!("{}", m).contains("Dinv[x]"));
        let two = m.apply_pow(2, &MultiPoly::one()).unwrap();
        assert_eq!(two, &(&y().pow(2) + &x().scale(&q(2))) + &z().scale(&q(2)));
        let hermite = m.apply(&y()).unwrap().substitute(Var::X, &MultiPoly::zero());
        assert_eq!(hermite, &y().pow(2) + &z().scale(&q(2)));
        let p = fam.derivative_op();
        assert_eq!(p, LinOp::Deriv(Var::Y));
    }

    #[test]
    fn lower_factorial_raising_and_lowering() {
        let fam = family("lower-factorial", FamilyKind::S { r: 2 }, 7);
        let m = fam.multiplicative_op().unwrap();
        let p = fam.derivative_op();
        for n in 0..=6 {
            let member = fam.member(n).unwrap();
            assert_eq!(m.apply(&member).unwrap(), fam.member(n + 1).unwrap());
            let lowered = p.apply(&member).unwrap();
            let expected = if n == 0 {
                MultiPoly::zero()
            } else {
                fam.member(n - 1).unwrap().scale(&q(n as i64))
            };
            assert_eq!(lowered, expected);
        }
    }

    #[test]
    fn generating_function_routes_agree() {
        for name in ["identity", "laguerre", "hahn", "bessel"] {
            for kind in [FamilyKind::S { r: 3 }, FamilyKind::R { r: 2 }] {
                let fam = family(name, kind, 7);
                assert!(fam.generating_function_check().unwrap().is_pass(), "{name} {kind}");
            }
        }
    }

    #[test]
    fn associated_and_appell() {
        for name in ["pidduck", "actuarial", "shively"] {
            for kind in [FamilyKind::S { r: 2 }, FamilyKind::R { r: 3 }] {
                let fam = family(name, kind, 6);
                for n in 0..=6 {
                    assert!(fam.associated_check(n).unwrap().is_pass());
                    assert!(fam.appell_check(n).unwrap().is_pass());
                }
            }
        }
    }

    #[test]
    fn explicit_representation() {
        let fam = family("identity", FamilyKind::S { r: 2 }, 4);
        assert_eq!(fam.explicit_rep(0).unwrap(), MultiPoly::one());
        for name in ["lower-factorial", "pidduck"] {
            let fam = family(name, FamilyKind::S { r: 3 }, 6);
            for n in 0..=6 {
                assert!(fam.explicit_rep_check(n).unwrap().is_pass(), "{name} {n}");
            }
        }
    }
}

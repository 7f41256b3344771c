//! Variable specializations that turn a Legendre–Gould Hopper member into a
//! classical two-variable family.

use alloc::vec::Vec;

use super::FamilyKind;
use crate::error::Error;
use crate::operator::{LinOp, OpError};
use crate::oracle::ExplicitFamily;
use crate::poly::{MultiPoly, Var};
use crate::rational::Rational;

/// Where a single variable is sent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Image {
    Keep,
    Zero,
    Var(Var),
    Poly(MultiPoly),
    /// `v^k ↦ op^k {1}`.
    Vacuum(LinOp),
}

impl Image {
    /// Image of `v^e`.
    pub fn power(&self, v: Var, e: u32) -> Result<MultiPoly, OpError> {
        Ok(match self {
            Image::Keep => MultiPoly::var(v).pow(e),
            Image::Zero if e > 0 => MultiPoly::zero(),
            Image::Zero => MultiPoly::one(),
            Image::Var(w) => MultiPoly::var(*w).pow(e),
            Image::Poly(p) => p.pow(e),
            Image::Vacuum(op) => op.apply_pow(e as usize, &MultiPoly::one())?,
        })
    }
}

/// Which normalization of an R-type member the target family matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemberScale {
    /// `(n!)^2 [t^n]`, the stored form.
    Stored,
    /// `n! [t^n]`, the stored form divided by `n!`.
    Egf,
}

impl MemberScale {
    pub fn name(self) -> &'static str {
        match self {
            MemberScale::Stored => "stored",
            MemberScale::Egf => "egf",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    GouldHopper,
    LegendreType,
    GenLaguerre,
    Chebyshev,
    Laguerre2V,
    Legendre2V,
    TruncatedExp,
    HermiteKdF,
    HermiteType,
    LegendreP,
    BellType,
}

/// A named specialization of the base family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub id: &'static str,
    /// Family the specialization applies to; `r` is fixed only when the
    /// specialization demands a particular value.
    pub r_type: bool,
    pub fixed_r: Option<u32>,
    /// Images of `x`, `y`, `z`.
    pub images: [Image; 3],
    pub scale: MemberScale,
    target: Target,
}

pub const REDUCTION_IDS: [&str; 15] = [
    "gould-hopper",
    "legendre-type",
    "gen-laguerre-s",
    "gen-laguerre-r",
    "chebyshev",
    "laguerre-2v-s",
    "laguerre-2v-r",
    "legendre-2v",
    "truncated-exp",
    "hermite-kdf",
    "hermite-type-s",
    "hermite-type-r",
    "legendre-p-s",
    "legendre-p-r",
    "bell-type",
];

fn to(v: Var) -> Image {
    Image::Var(v)
}

impl Reduction {
    pub fn lookup(id: &str) -> Result<Reduction, Error> {
        use Image::{Keep, Zero};
        use Target as T;
        use Var::{X, Y, Z};
        let half = Rational::new(1, 2);
        let inv = |sign: i64| {
            Image::Vacuum(LinOp::InvDeriv(X).scaled(Rational::from_integer(sign)))
        };
        let vtv = |v: Var| {
            Image::Vacuum(LinOp::compose(alloc::vec![
                LinOp::MulVar(v),
                LinOp::Deriv(v),
                LinOp::MulVar(v),
            ]))
        };
        let (r_type, fixed_r, images, scale, target) = match id {
            "gould-hopper" => (false, None, [Zero, to(X), to(Y)], MemberScale::Egf, T::GouldHopper),
            "legendre-type" => (false, None, [Keep, Keep, Zero], MemberScale::Egf, T::LegendreType),
            "gen-laguerre-s" => (false, None, [Zero, inv(1), to(Y)], MemberScale::Egf, T::GenLaguerre),
            "gen-laguerre-r" => (true, None, [Zero, to(X), to(Y)], MemberScale::Egf, T::GenLaguerre),
            "chebyshev" => (false, None, [Zero, to(X), to(Y)], MemberScale::Egf, T::Chebyshev),
            "laguerre-2v-s" => (false, Some(1), [Zero, Keep, inv(-1)], MemberScale::Egf, T::Laguerre2V),
            "laguerre-2v-r" => (true, Some(1), [Keep, Zero, to(Y)], MemberScale::Egf, T::Laguerre2V),
            "legendre-2v" => (true, None, [Keep, Keep, Zero], MemberScale::Stored, T::Legendre2V),
            "truncated-exp" => (false, None, [Zero, to(X), vtv(Y)], MemberScale::Egf, T::TruncatedExp),
            "hermite-kdf" => (false, Some(2), [Zero, to(X), to(Y)], MemberScale::Egf, T::HermiteKdF),
            "hermite-type-s" => (false, Some(2), [Zero, inv(1), to(Y)], MemberScale::Egf, T::HermiteType),
            "hermite-type-r" => (true, Some(2), [Zero, to(X), to(Y)], MemberScale::Egf, T::HermiteType),
            "legendre-p-s" => {
                let x2 = MultiPoly::var(X).pow(2);
                let p = (&x2 - &MultiPoly::one()).scale(&Rational::new(1, 4));
                (false, None, [Image::Poly(p), to(X), Zero], MemberScale::Egf, T::LegendreP)
            }
            "legendre-p-r" => {
                let x = MultiPoly::var(X);
                let one = MultiPoly::one();
                let images = [
                    Image::Poly((&one - &x).scale(&half)),
                    Image::Poly((&one + &x).scale(&half)),
                    Zero,
                ];
                (true, Some(1), images, MemberScale::Stored, T::LegendreP)
            }
            "bell-type" => (false, Some(3), [vtv(Z), to(X), to(Y)], MemberScale::Egf, T::BellType),
            _ => return Err(Error::UnknownReduction(id.into())),
        };
        let id = REDUCTION_IDS.iter().find(|&&s| s == id).copied().unwrap_or("");
        Ok(Reduction { id, r_type, fixed_r, images, scale, target })
    }

    pub fn all() -> Vec<Reduction> {
        REDUCTION_IDS
            .iter()
            .map(|id| Reduction::lookup(id).expect("registered id"))
            .collect()
    }

    /// Reductions applicable to `kind`.
    pub fn for_kind(kind: FamilyKind) -> Vec<Reduction> {
        Reduction::all()
            .into_iter()
            .filter(|red| red.check_kind(kind).is_ok())
            .collect()
    }

    /// The `r` this reduction is exercised with when the caller does not
    /// pin one down.
    pub fn default_r(&self) -> u32 {
        self.fixed_r.unwrap_or(2)
    }

    pub fn kind(&self) -> FamilyKind {
        let r = self.default_r();
        if self.r_type {
            FamilyKind::R { r }
        } else {
            FamilyKind::S { r }
        }
    }

    pub fn check_kind(&self, kind: FamilyKind) -> Result<(), Error> {
        if kind.is_r_type() != self.r_type {
            return Err(Error::param("kind", "reduction belongs to the other family type"));
        }
        if let Some(r) = self.fixed_r {
            if kind.r() != r {
                return Err(Error::param("r", "reduction requires a specific r"));
            }
        }
        Ok(())
    }

    /// The classical family reached for base parameter `r`.
    pub fn target(&self, r: u32) -> ExplicitFamily {
        match self.target {
            Target::GouldHopper => ExplicitFamily::GouldHopper { r },
            Target::LegendreType => ExplicitFamily::LegendreType,
            Target::GenLaguerre => ExplicitFamily::GenLaguerre { m: r },
            Target::Chebyshev => ExplicitFamily::Chebyshev { m: r + 1 },
            Target::Laguerre2V => ExplicitFamily::Laguerre2V,
            Target::Legendre2V => ExplicitFamily::Legendre2V,
            Target::TruncatedExp => ExplicitFamily::TruncatedExp { r },
            Target::HermiteKdF => ExplicitFamily::HermiteKdF,
            Target::HermiteType => ExplicitFamily::HermiteType,
            Target::LegendreP => ExplicitFamily::LegendreP,
            Target::BellType => ExplicitFamily::BellType,
        }
    }

    /// Sends every monomial `x^a y^b z^c` to the product of the images of
    /// its three powers.
    pub fn specialize(&self, p: &MultiPoly) -> Result<MultiPoly, OpError> {
        let mut out = MultiPoly::zero();
        for (m, c) in p.terms() {
            let mut image = MultiPoly::constant(c.clone());
            for (v, img) in Var::ALL.into_iter().zip(&self.images) {
                if image.is_zero() {
                    break;
                }
                image = &image * &img.power(v, m.exp(v))?;
            }
            out += &image;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{leghp_r, leghp_s};
    use crate::oracle::explicit_sum;

    #[test]
    fn registry_is_complete() {
        assert_eq!(Reduction::all().len(), REDUCTION_IDS.len());
        assert!(matches!(
            Reduction::lookup("nope"),
            Err(Error::UnknownReduction(_))
        ));
    }

    #[test]
    fn vacuum_images() {
        let red = Reduction::lookup("bell-type").unwrap();
        // x^2 -> (z D_z z)^2 {1} = 2 z^2
        let img = red.images[0].power(Var::X, 2).unwrap();
        assert_eq!(img, MultiPoly::var(Var::Z).pow(2).scale(&Rational::from_integer(2)));
        let red = Reduction::lookup("laguerre-2v-s").unwrap();
        let img = red.images[2].power(Var::Z, 2).unwrap();
        assert_eq!(img, MultiPoly::var(Var::X).pow(2).scale(&Rational::new(1, 2)));
    }

    #[test]
    fn base_family_reductions() {
        for red in Reduction::all() {
            if red.id == "chebyshev" {
                continue;
            }
            let r = red.default_r();
            for n in 0..=6usize {
                let (member, divisor) = if red.r_type {
                    let d = match red.scale {
                        MemberScale::Stored => Rational::one(),
                        MemberScale::Egf => Rational::factorial(n),
                    };
                    (leghp_r(n, r, n).unwrap(), d)
                } else {
                    (leghp_s(n, r, n).unwrap(), Rational::one())
                };
                let lhs = red.specialize(&member).unwrap().scale(&divisor.recip());
                let rhs = explicit_sum(red.target(r), n);
                assert_eq!(lhs, rhs, "{} n={}", red.id, n);
            }
        }
    }
}

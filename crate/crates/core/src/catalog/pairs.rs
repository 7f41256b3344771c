//! Named Sheffer pairs `(g, f)` with closed-form series builders.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{check_order, Error};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::rational::Rational;
use crate::series::{elementary as el, ScalarSeries};

type Builder = Arc<dyn Fn(usize) -> ScalarSeries + Send + Sync>;

/// How a pair's Sheffer sequence relates to the classical polynomials it
/// names: `s_n = scale(n) · classical_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Unit,
    Factorial,
}

impl Normalization {
    pub fn scale(self, n: usize) -> Rational {
        match self {
            Normalization::Unit => Rational::one(),
            Normalization::Factorial => Rational::factorial(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Normalization::Unit => "1",
            Normalization::Factorial => "n!",
        }
    }
}

/// Rational parameters shared by the registry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairParams {
    pub nu: Rational,
    pub k: Rational,
    pub alpha: Rational,
    pub beta: Rational,
    pub a: Rational,
    pub lambda: Rational,
    pub mu: Rational,
}

impl Default for PairParams {
    fn default() -> Self {
        PairParams {
            nu: Rational::one(),
            k: Rational::from_integer(2),
            alpha: Rational::zero(),
            beta: Rational::one(),
            a: Rational::one(),
            lambda: Rational::one(),
            mu: Rational::one(),
        }
    }
}

impl PairParams {
    pub const NAMES: [&'static str; 7] = ["nu", "k", "alpha", "beta", "a", "lambda", "mu"];

    pub fn set(&mut self, name: &str, value: Rational) -> Result<(), Error> {
        let slot = match name {
            "nu" => &mut self.nu,
            "k" => &mut self.k,
            "alpha" => &mut self.alpha,
            "beta" => &mut self.beta,
            "a" => &mut self.a,
            "lambda" => &mut self.lambda,
            "mu" => &mut self.mu,
            _ => return Err(Error::param(name, "unknown parameter")),
        };
        *slot = value;
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        Some(match name {
            "nu" => &self.nu,
            "k" => &self.k,
            "alpha" => &self.alpha,
            "beta" => &self.beta,
            "a" => &self.a,
            "lambda" => &self.lambda,
            "mu" => &self.mu,
            _ => return None,
        })
    }
}

#[derive(Clone)]
pub struct ShefferPair {
    pub name: &'static str,
    pub title: &'static str,
    /// Parameters this pair depends on, with their values.
    pub params: Vec<(&'static str, Rational)>,
    pub normalization: Normalization,
    g: Builder,
    f: Builder,
    claimed_a: Option<Builder>,
    claimed_h: Option<Builder>,
    /// Closed forms for display.
    pub g_text: &'static str,
    pub f_text: &'static str,
}

impl fmt::Debug for ShefferPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ShefferPair")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("normalization", &self.normalization)
            .finish()
    }
}

impl ShefferPair {
    pub fn new(
        name: &'static str,
        g: impl Fn(usize) -> ScalarSeries + Send + Sync + 'static,
        f: impl Fn(usize) -> ScalarSeries + Send + Sync + 'static,
    ) -> Self {
        ShefferPair {
            name,
            title: name,
            params: Vec::new(),
            normalization: Normalization::Unit,
            g: Arc::new(g),
            f: Arc::new(f),
            claimed_a: None,
            claimed_h: None,
            g_text: "",
            f_text: "",
        }
    }

    fn claims(
        mut self,
        a: Option<Builder>,
        h: impl Fn(usize) -> ScalarSeries + Send + Sync + 'static,
    ) -> Self {
        self.claimed_a = a;
        self.claimed_h = Some(Arc::new(h));
        self
    }

    fn describe(mut self, title: &'static str, g_text: &'static str, f_text: &'static str) -> Self {
        self.title = title;
        self.g_text = g_text;
        self.f_text = f_text;
        self
    }

    fn with_params(mut self, params: &[(&'static str, &Rational)]) -> Self {
        self.params = params.iter().map(|(n, v)| (*n, (*v).clone())).collect();
        self
    }

    fn normalized(mut self, norm: Normalization) -> Self {
        self.normalization = norm;
        self
    }

    /// Replace `g` by 1, giving the associated pair.
    pub fn associated(&self) -> ShefferPair {
        let mut p = self.clone();
        p.g = Arc::new(ScalarSeries::one);
        p.claimed_a = None;
        p.g_text = "1";
        p
    }

    /// Replace `f` by `t`, giving the Appell pair.
    pub fn appell(&self) -> ShefferPair {
        let mut p = self.clone();
        p.f = Arc::new(ScalarSeries::t);
        p.claimed_h = None;
        p.f_text = "t";
        p
    }

    pub fn g(&self, order: usize) -> ScalarSeries {
        (self.g)(order)
    }

    pub fn f(&self, order: usize) -> ScalarSeries {
        (self.f)(order)
    }

    pub fn claimed_a(&self, order: usize) -> Option<ScalarSeries> {
        self.claimed_a.as_ref().map(|b| b(order))
    }

    pub fn claimed_h(&self, order: usize) -> Option<ScalarSeries> {
        self.claimed_h.as_ref().map(|b| b(order))
    }

    pub fn has_claimed_a(&self) -> bool {
        self.claimed_a.is_some()
    }

    pub fn has_claimed_h(&self) -> bool {
        self.claimed_h.is_some()
    }

    pub fn is_associated(&self) -> bool {
        self.g(4) == ScalarSeries::one(4)
    }

    /// `H = f^{-1}`.
    pub fn h(&self, order: usize) -> Result<ScalarSeries, Error> {
        Ok(self.f(order).comp_inverse()?)
    }

    /// `A = 1 / g(f^{-1}(t))`.
    pub fn a(&self, order: usize) -> Result<ScalarSeries, Error> {
        let h = self.h(order)?;
        Ok(self.g(order).compose(&h)?.reciprocal()?)
    }

    /// `(A, H)` computed from `(g, f)`.
    pub fn a_h(&self, order: usize) -> Result<(ScalarSeries, ScalarSeries), Error> {
        let h = self.h(order)?;
        let a = self.g(order).compose(&h)?.reciprocal()?;
        Ok((a, h))
    }
}

fn t_coeff(c: Rational, order: usize) -> ScalarSeries {
    ScalarSeries::monomial(c, 1, order)
}

fn integer_param(name: &str, v: &Rational) -> Result<i64, Error> {
    v.to_i64()
        .ok_or_else(|| Error::param(name, "must be an integer"))
}

fn nonzero(name: &str, v: &Rational) -> Result<(), Error> {
    if v.is_zero() {
        return Err(Error::param(name, "must be nonzero"));
    }
    Ok(())
}

/// Integer power of a unit series, allowing negative exponents.
fn int_pow(s: &ScalarSeries, e: i64) -> ScalarSeries {
    let p = s.pow(e.unsigned_abs() as u32);
    if e < 0 {
        p.reciprocal().expect("unit series")
    } else {
        p
    }
}

/// `(1 + t)/(1 - t)` expanded.
fn mobius(order: usize) -> ScalarSeries {
    ScalarSeries::from_fn(order, |k| {
        Rational::from_integer(if k == 0 { 1 } else { 2 })
    })
}

/// `2 / (1 + sqrt(1 - 4t))`, the Catalan generating function.
fn catalan(order: usize) -> ScalarSeries {
    let root = el::binomial(&Rational::from_integer(-4), &Rational::new(1, 2), order);
    root.add(&ScalarSeries::one(order))
        .scale(&Rational::new(1, 2))
        .reciprocal()
        .expect("constant term 1")
}

fn one() -> Rational {
    Rational::one()
}

fn ln1p(order: usize) -> ScalarSeries {
    el::ln1p_lin(&one(), order)
}

fn expm1(order: usize) -> ScalarSeries {
    el::expm1_lin(&one(), order)
}

/// `(e^t - 1)/(e^t + 1)`.
fn tanh_half(order: usize) -> ScalarSeries {
    let plus = el::exp_lin(&one(), order).add(&ScalarSeries::constant(one(), order));
    expm1(order).mul(&plus.reciprocal().expect("constant term 2"))
}

/// `ln((1 + t)/(1 - t))`.
fn log_mobius(order: usize) -> ScalarSeries {
    ScalarSeries::from_fn(order, |k| {
        if k % 2 == 1 {
            Rational::new(2, k as i64)
        } else {
            Rational::zero()
        }
    })
}

fn gen_hermite(p: &PairParams) -> Result<ShefferPair, Error> {
    nonzero("nu", &p.nu)?;
    let k = integer_param("k", &p.k)?;
    if k < 1 {
        return Err(Error::param("k", "must be at least 1"));
    }
    let k = k as usize;
    let nu = p.nu.clone();
    let inv_nu = nu.recip();
    let (nu2, inv2) = (nu.clone(), inv_nu.clone());
    Ok(ShefferPair::new(
        "gen-hermite",
        move |n| {
            ScalarSeries::monomial(inv_nu.pow(k as i32), k, n)
                .exp()
                .expect("zero constant term")
        },
        move |n| t_coeff(inv2.clone(), n),
    )
    .claims(
        Some(Arc::new(move |n| {
            ScalarSeries::monomial(-one(), k, n)
                .exp()
                .expect("zero constant term")
        })),
        move |n| t_coeff(nu2.clone(), n),
    )
    .describe("Generalized Hermite", "exp((t/nu)^k)", "t/nu")
    .with_params(&[("nu", &p.nu), ("k", &p.k)]))
}

fn laguerre(p: &PairParams) -> ShefferPair {
    let e = -(&p.alpha) - one();
    let e2 = e.clone();
    let f = |n: usize| ScalarSeries::from_fn(n, |k| if k == 0 { Rational::zero() } else { -one() });
    ShefferPair::new(
        "laguerre",
        move |n| el::binomial(&-one(), &e, n),
        f,
    )
    .claims(Some(Arc::new(move |n| el::binomial(&-one(), &e2, n))), f)
    .describe("Generalized Laguerre", "(1-t)^(-alpha-1)", "t/(t-1)")
    .with_params(&[("alpha", &p.alpha)])
    .normalized(Normalization::Factorial)
}

fn pidduck() -> ShefferPair {
    ShefferPair::new(
        "pidduck",
        |n| {
            el::exp_lin(&one(), n)
                .add(&ScalarSeries::one(n))
                .reciprocal()
                .expect("constant term 2")
                .scale(&Rational::from_integer(2))
        },
        tanh_half,
    )
    .claims(
        Some(Arc::new(|n| {
            ScalarSeries::from_fn(n, |_| one())
        })),
        log_mobius,
    )
    .describe("Pidduck", "2/(e^t+1)", "(e^t-1)/(e^t+1)")
}

fn actuarial(p: &PairParams) -> ShefferPair {
    let b = p.beta.clone();
    let b2 = b.clone();
    ShefferPair::new(
        "actuarial",
        move |n| el::binomial(&-one(), &-&b, n),
        |n| el::ln1p_lin(&-one(), n),
    )
    .claims(
        Some(Arc::new(move |n| el::exp_lin(&b2, n))),
        |n| expm1(n).neg(),
    )
    .describe("Actuarial", "(1-t)^(-beta)", "ln(1-t)")
    .with_params(&[("beta", &p.beta)])
}

fn poisson_charlier(p: &PairParams) -> Result<ShefferPair, Error> {
    nonzero("a", &p.a)?;
    let a = p.a.clone();
    let (a2, a3) = (a.clone(), a.recip());
    Ok(ShefferPair::new(
        "poisson-charlier",
        move |n| expm1(n).scale(&a).exp().expect("zero constant term"),
        move |n| expm1(n).scale(&a2),
    )
    .claims(
        Some(Arc::new(|n| el::exp_lin(&-one(), n))),
        move |n| el::ln1p_lin(&a3, n),
    )
    .describe("Poisson-Charlier", "exp(a(e^t-1))", "a(e^t-1)")
    .with_params(&[("a", &p.a)]))
}

fn peters(p: &PairParams) -> Result<ShefferPair, Error> {
    let mu = integer_param("mu", &p.mu)?;
    let lambda = p.lambda.clone();
    let l2 = lambda.clone();
    Ok(ShefferPair::new(
        "peters",
        move |n| {
            let base = el::exp_lin(&lambda, n).add(&ScalarSeries::one(n));
            int_pow(&base, mu)
        },
        expm1,
    )
    .claims(
        Some(Arc::new(move |n| {
            let base = el::binomial(&one(), &l2, n).add(&ScalarSeries::one(n));
            int_pow(&base, -mu)
        })),
        ln1p,
    )
    .describe("Peters", "(1+e^(lambda t))^mu", "e^t-1")
    .with_params(&[("lambda", &p.lambda), ("mu", &p.mu)]))
}

fn bernoulli2() -> ShefferPair {
    ShefferPair::new(
        "bernoulli2",
        |n| {
            expm1(n + 1)
                .div_t()
                .and_then(|s| s.reciprocal())
                .expect("(e^t-1)/t is a unit")
        },
        expm1,
    )
    .claims(
        Some(Arc::new(|n| {
            ln1p(n + 1)
                .div_t()
                .and_then(|s| s.reciprocal())
                .expect("ln(1+t)/t is a unit")
        })),
        ln1p,
    )
    .describe("Bernoulli of the second kind", "t/(e^t-1)", "e^t-1")
}

fn related() -> ShefferPair {
    ShefferPair::new(
        "related",
        |n| {
            el::exp_lin(&one(), n)
                .add(&ScalarSeries::one(n))
                .scale(&Rational::new(1, 2))
        },
        expm1,
    )
    .claims(
        Some(Arc::new(|n| {
            ScalarSeries::one(n)
                .add(&t_coeff(Rational::new(1, 2), n))
                .reciprocal()
                .expect("unit")
        })),
        ln1p,
    )
    .describe("Related", "(1+e^t)/2", "e^t-1")
}

fn hahn() -> ShefferPair {
    ShefferPair::new("hahn", el::sec, el::tan)
        .claims(
            Some(Arc::new(|n| {
                ScalarSeries::one(n)
                    .add(&ScalarSeries::monomial(one(), 2, n))
                    .pow_rational(&Rational::new(-1, 2))
                    .expect("constant term 1")
            })),
            el::arctan,
        )
        .describe("Hahn", "sec t", "tan t")
}

fn shively(p: &PairParams) -> ShefferPair {
    let a = p.a.clone();
    let a2 = &a - one();
    ShefferPair::new(
        "shively",
        move |n| {
            ScalarSeries::one(n)
                .add(&ScalarSeries::t(n))
                .mul(&el::binomial(&-one(), &-&a, n))
        },
        |n| {
            let m = mobius(n);
            ScalarSeries::one(n)
                .sub(&m.mul(&m))
                .scale(&Rational::new(1, 4))
        },
    )
    .claims(
        Some(Arc::new(move |n| {
            let root = el::binomial(&Rational::from_integer(-4), &Rational::new(-1, 2), n);
            root.mul(&catalan(n).pow_rational(&a2).expect("constant term 1"))
        })),
        |n| {
            let c = catalan(n);
            c.mul(&c).mul_t_pow(1).neg()
        },
    )
    .describe("Shively pseudo-Laguerre", "(1+t)/(1-t)^a", "1/4 - 1/4((1+t)/(1-t))^2")
    .with_params(&[("a", &p.a)])
    .normalized(Normalization::Factorial)
}

fn mittag_leffler() -> ShefferPair {
    ShefferPair::new("mittag-leffler", ScalarSeries::one, tanh_half)
        .claims(None, log_mobius)
        .describe("Mittag-Leffler", "1", "(e^t-1)/(e^t+1)")
}

fn exponential() -> ShefferPair {
    ShefferPair::new("exponential", ScalarSeries::one, ln1p)
        .claims(None, expm1)
        .describe("Exponential", "1", "ln(1+t)")
}

fn lower_factorial() -> ShefferPair {
    ShefferPair::new("lower-factorial", ScalarSeries::one, expm1)
        .claims(None, ln1p)
        .describe("Lower factorial", "1", "e^t-1")
}

fn bessel() -> ShefferPair {
    ShefferPair::new("bessel", ScalarSeries::one, |n| {
        ScalarSeries::t(n).add(&ScalarSeries::monomial(Rational::new(-1, 2), 2, n))
    })
    .claims(None, |n| {
        ScalarSeries::one(n).sub(&el::binomial(&Rational::from_integer(-2), &Rational::new(1, 2), n))
    })
    .describe("Bessel", "1", "t - t^2/2")
}

fn identity() -> ShefferPair {
    ShefferPair::new("identity", ScalarSeries::one, ScalarSeries::t)
        .describe("Legendre-Gould Hopper base", "1", "t")
}

/// Registry names, in catalog order.
pub const PAIR_NAMES: [&str; 14] = [
    "gen-hermite",
    "laguerre",
    "pidduck",
    "actuarial",
    "poisson-charlier",
    "peters",
    "bernoulli2",
    "related",
    "hahn",
    "shively",
    "mittag-leffler",
    "exponential",
    "lower-factorial",
    "bessel",
];

/// All fourteen registered pairs with default parameters.
pub fn catalog() -> Vec<ShefferPair> {
    catalog_with(&PairParams::default()).expect("default parameters are valid")
}

pub fn catalog_with(params: &PairParams) -> Result<Vec<ShefferPair>, Error> {
    PAIR_NAMES.iter().map(|n| lookup_with(n, params)).collect()
}

/// Registered pair by name; `identity` is the base pair `(1, t)`.
pub fn lookup(name: &str) -> Result<ShefferPair, Error> {
    lookup_with(name, &PairParams::default())
}

pub fn lookup_with(name: &str, params: &PairParams) -> Result<ShefferPair, Error> {
    Ok(match name {
        "gen-hermite" => gen_hermite(params)?,
        "laguerre" => laguerre(params),
        "pidduck" => pidduck(),
        "actuarial" => actuarial(params),
        "poisson-charlier" => poisson_charlier(params)?,
        "peters" => peters(params)?,
        "bernoulli2" => bernoulli2(),
        "related" => related(),
        "hahn" => hahn(),
        "shively" => shively(params),
        "mittag-leffler" => mittag_leffler(),
        "exponential" => exponential(),
        "lower-factorial" => lower_factorial(),
        "bessel" => bessel(),
        "identity" => identity(),
        _ => return Err(Error::UnknownPair(String::from(name))),
    })
}

/// The Sheffer polynomial `s_n(x) = n! [t^n] A(t) exp(x H(t))`.
pub fn sheffer_poly(pair: &ShefferPair, n: usize, order: usize) -> Result<MultiPoly, Error> {
    check_order(n, order)?;
    let (a, h) = pair.a_h(n.max(1))?;
    // exp(x H) coefficient-wise: [t^n] sum_k x^k H^k / k!
    let mut out = MultiPoly::zero();
    let mut hk = ScalarSeries::one(n.max(1));
    for k in 0..=n {
        if k > 0 {
            hk = hk.mul(&h);
        }
        let c = a.mul(&hk).coeff(n) / Rational::factorial(k);
        out.add_term(Monomial::ONE.with_exp(Var::X, k as u32), c);
    }
    Ok(out.scale(&Rational::factorial(n)))
}

/// The umbral pairing `<h(t) | p(x)> = sum_k h_k k! [x^k] p`.
pub fn umbral_pairing(h: &ScalarSeries, p: &MultiPoly) -> Rational {
    h.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let m = Monomial::ONE.with_exp(Var::X, k as u32);
            c * Rational::factorial(k) * p.coeff(&m)
        })
        .sum()
}

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::naive::{c0_rule, exp_rule, explicit_sum, series_product};
use crate::catalog::{
    gould_hopper, gould_hopper_series, leghp_r, leghp_r_series, leghp_s, leghp_s_series,
    legendre_s, MemberScale, Reduction,
};
use crate::error::Error;
use crate::poly::{MultiPoly, Var};
use crate::rational::Rational;
use crate::series::PolySeries;

/// One engine-versus-oracle comparison; `lhs` comes from the engine and
/// `rhs` from the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub description: String,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub equal: bool,
}

impl OracleResult {
    pub fn new(description: String, lhs: MultiPoly, rhs: MultiPoly) -> OracleResult {
        let equal = (&lhs - &rhs).is_zero();
        OracleResult {
            description,
            lhs,
            rhs,
            equal,
        }
    }
}

pub const SUITE_NAMES: [&str; 4] = [
    "ghp-vs-explicit",
    "leghpS-vs-table1",
    "leghpR-vs-table1",
    "series-vs-naive-convolution",
];

/// Runs a registered suite for every index `n <= max_n`.
pub fn cross_validate(suite: &str, max_n: usize) -> Result<Vec<OracleResult>, Error> {
    match suite {
        "ghp-vs-explicit" => ghp_vs_explicit(max_n),
        "leghpS-vs-table1" => base_vs_table(false, max_n),
        "leghpR-vs-table1" => base_vs_table(true, max_n),
        "series-vs-naive-convolution" => Ok(series_vs_naive(max_n)),
        _ => Err(Error::UnknownSuite(suite.into())),
    }
}

fn ghp_vs_explicit(max_n: usize) -> Result<Vec<OracleResult>, Error> {
    let mut out = Vec::new();
    for s in 2..=4u32 {
        for n in 0..=max_n {
            out.push(OracleResult::new(
                format!("H_{n}^({s}) generating function vs finite sum"),
                gould_hopper(n, s)?,
                explicit_sum(super::ExplicitFamily::GouldHopper { r: s }, n),
            ));
        }
    }
    Ok(out)
}

fn base_vs_table(r_type: bool, max_n: usize) -> Result<Vec<OracleResult>, Error> {
    let mut out = Vec::new();
    for red in Reduction::all().into_iter().filter(|r| r.r_type == r_type) {
        let rs: Vec<u32> = match red.fixed_r {
            Some(r) => alloc::vec![r],
            None => alloc::vec![2, 3],
        };
        for r in rs {
            for n in 0..=max_n {
                let member = if r_type {
                    let m = leghp_r(n, r, n)?;
                    match red.scale {
                        MemberScale::Stored => m,
                        MemberScale::Egf => m.scale(&Rational::factorial(n).recip()),
                    }
                } else {
                    leghp_s(n, r, n)?
                };
                out.push(OracleResult::new(
                    format!("{} r={r} n={n}", red.id),
                    red.specialize(&member)?,
                    explicit_sum(red.target(r), n),
                ));
            }
        }
    }
    Ok(out)
}

fn compare_series(
    out: &mut Vec<OracleResult>,
    label: &str,
    engine: &PolySeries,
    naive: &[MultiPoly],
) {
    for (n, c) in naive.iter().enumerate() {
        out.push(OracleResult::new(
            format!("{label} [t^{n}]"),
            engine.coeff(n).clone(),
            c.clone(),
        ));
    }
}

fn series_vs_naive(max_n: usize) -> Vec<OracleResult> {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let z = MultiPoly::var(Var::Z);
    let neg_y = -&y;
    let ey = |k: usize| exp_rule(&y, 1, k);
    let c0_s = |k: usize| c0_rule(&-&x, 2, k);
    let c0_x = |k: usize| c0_rule(&x, 1, k);
    let c0_y = |k: usize| c0_rule(&neg_y, 1, k);
    let mut out = Vec::new();

    let naive = series_product(&[&ey, &c0_s], max_n);
    let scaled: Vec<MultiPoly> = naive
        .iter()
        .enumerate()
        .map(|(n, c)| c.scale(&Rational::factorial(n)))
        .collect();
    for (n, c) in scaled.iter().enumerate() {
        let engine = legendre_s(n, max_n).expect("n within order");
        out.push(OracleResult::new(
            format!("S_{n} vs naive exp(yt) C_0(-x t^2)"),
            engine,
            c.clone(),
        ));
    }
    for r in 2..=3u32 {
        let ez = |k: usize| exp_rule(&z, r as usize, k);
        let ex = |k: usize| exp_rule(&x, 1, k);
        let eyr = |k: usize| exp_rule(&y, r as usize, k);
        compare_series(
            &mut out,
            &format!("Gould-Hopper r={r}"),
            &gould_hopper_series(r, max_n),
            &series_product(&[&ex, &eyr], max_n),
        );
        compare_series(
            &mut out,
            &format!("S-type base r={r}"),
            &leghp_s_series(r, max_n),
            &series_product(&[&c0_s, &ey, &ez], max_n),
        );
        compare_series(
            &mut out,
            &format!("R-type base r={r}"),
            &leghp_r_series(r, max_n),
            &series_product(&[&c0_x, &c0_y, &ez], max_n),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(
            cross_validate("bogus", 2),
            Err(Error::UnknownSuite("bogus".into()))
        );
    }

    #[test]
    fn agreeing_suites() {
        for suite in ["ghp-vs-explicit", "leghpR-vs-table1", "series-vs-naive-convolution"] {
            let results = cross_validate(suite, 6).unwrap();
            assert!(!results.is_empty());
            for r in results {
                assert!(r.equal, "{}: {} vs {}", r.description, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn s_type_table_disagrees_only_on_chebyshev() {
        let results = cross_validate("leghpS-vs-table1", 6).unwrap();
        for r in &results {
            if !r.equal {
                assert!(r.description.starts_with("chebyshev"), "{}", r.description);
            }
        }
        assert!(results.iter().any(|r| !r.equal));
    }
}

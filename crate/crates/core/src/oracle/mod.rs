//! Independent reference computations and engine-versus-oracle suites.

mod naive;
mod suites;

pub use naive::{
    c0_rule, compose_scalar, exp_rule, explicit_sum, series_product, ExplicitFamily, TermRule,
};
pub use suites::{cross_validate, OracleResult, SUITE_NAMES};

use crate::error::Error;
use crate::poly::MultiPoly;

/// Explicit sum of a family looked up by name.
pub fn explicit_sum_named(name: &str, n: usize, param: u32) -> Result<MultiPoly, Error> {
    ExplicitFamily::from_name(name, param)
        .map(|f| explicit_sum(f, n))
        .ok_or_else(|| Error::UnknownRow(name.into()))
}

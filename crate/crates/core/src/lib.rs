#![no_std]
//! Exact computer algebra for Legendre–Gould Hopper based Sheffer polynomials.

extern crate alloc;

pub mod catalog;
pub mod engine;
pub mod error;
pub mod operator;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod series;
pub mod verdict;

pub use poly::{Monomial, MultiPoly, Var};
pub use rational::Rational;
pub use series::{PolySeries, ScalarSeries, Series, SeriesError};
pub use operator::{LinOp, OpError, OpSeries};
pub use verdict::{Verdict, Witness};
pub use catalog::{FamilyKind, ShefferPair};
pub use error::Error;
pub use engine::{MixedFamily, MonomialityReport};

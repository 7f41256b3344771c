//! Outcomes of extensional identity checks.

use alloc::string::String;
use core::fmt;

use crate::poly::MultiPoly;

/// A failed comparison: on `input`, the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub input: MultiPoly,
    pub expected: MultiPoly,
    pub actual: MultiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
    /// The identity could not be evaluated as stated (for example an
    /// exponential of a non-nilpotent operator).
    NotEvaluable(String),
}

impl Verdict {
    /// `Pass` when `expected == actual`, otherwise a failure carrying both.
    pub fn compare(input: &MultiPoly, expected: MultiPoly, actual: MultiPoly) -> Verdict {
        if expected == actual {
            Verdict::Pass
        } else {
            Verdict::Fail(Witness {
                input: input.clone(),
                expected,
                actual,
            })
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail(_) => "FAIL",
            Verdict::NotEvaluable(_) => "N/A",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail(w) => write!(
                f,
                "FAIL on {}: expected {}, got {}",
                w.input, w.expected, w.actual
            ),
            Verdict::NotEvaluable(why) => write!(f, "N/A ({})", why),
        }
    }
}

use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use sheffer_core::catalog::{FamilyKind, MemberScale, PairParams};
use sheffer_core::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "sheffer",
    version,
    about = "Exact Legendre–Gould Hopper based Sheffer polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print family members as a table.
    Expand(ExpandArgs),
    /// Run verification suites; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// List the registered Sheffer pairs.
    List(ListArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    S,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Stored,
    Egf,
}

impl From<Scale> for MemberScale {
    fn from(s: Scale) -> MemberScale {
        match s {
            Scale::Stored => MemberScale::Stored,
            Scale::Egf => MemberScale::Egf,
        }
    }
}

/// `name=p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamOverride {
    pub name: String,
    pub value: Rational,
}

impl FromStr for ParamOverride {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, value) = s
            .split_once('=')
            .ok_or_else(|| format!("expected name=p/q, got `{s}`"))?;
        let value = value
            .trim()
            .parse::<Rational>()
            .map_err(|_| format!("`{value}` is not an exact rational"))?;
        Ok(ParamOverride {
            name: name.trim().to_string(),
            value,
        })
    }
}

/// A single index `n` or an inclusive range `a..b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexRange(pub RangeInclusive<usize>);

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let (a, b) = (parse(a)?, parse(b)?);
                if a > b {
                    return Err(format!("empty range `{s}`"));
                }
                Ok(IndexRange(a..=b))
            }
            None => {
                let n = parse(s)?;
                Ok(IndexRange(n..=n))
            }
        }
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.0.start(), self.0.end())
    }
}

#[derive(Debug, clap::Args)]
pub struct FamilyArgs {
    /// Pair name from `list`, `identity`, or `all`.
    #[arg(long, default_value = "identity")]
    pub pair: String,
    #[arg(long, value_enum, default_value_t = Kind::S)]
    pub kind: Kind,
    #[arg(long, default_value_t = 2)]
    pub r: u32,
    /// Truncation order N.
    #[arg(long, default_value_t = 12)]
    pub order: usize,
    /// Parameter override such as `alpha=1/2`; repeatable.
    #[arg(long = "param", value_name = "NAME=P/Q")]
    pub params: Vec<ParamOverride>,
}

#[derive(Debug, clap::Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Index or inclusive range, e.g. `3` or `0..5`.
    #[arg(long, default_value = "0..4")]
    pub n: IndexRange,
    /// Normalization of R-type members.
    #[arg(long, value_enum, default_value_t = Scale::Stored)]
    pub scale: Scale,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// One of: all, monomiality, explicit, generating, operational,
    /// integral, reductions, associated, appell, inverse, biorthogonality,
    /// oracle, or a single oracle suite name.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, clap::Args)]
pub struct ListArgs {
    /// Show a single pair.
    #[arg(long)]
    pub pair: Option<String>,
    #[arg(long = "param", value_name = "NAME=P/Q")]
    pub params: Vec<ParamOverride>,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn pair_params(overrides: &[ParamOverride]) -> Result<PairParams, sheffer_core::Error> {
    let mut params = PairParams::default();
    for o in overrides {
        params.set(&o.name, o.value.clone())?;
    }
    Ok(params)
}

impl FamilyArgs {
    pub fn kind(&self) -> Result<FamilyKind, sheffer_core::Error> {
        FamilyKind::new(self.kind == Kind::R, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("3".parse::<IndexRange>().unwrap().0, 3..=3);
        assert_eq!("0..2".parse::<IndexRange>().unwrap().0, 0..=2);
        assert_eq!("1..=4".parse::<IndexRange>().unwrap().0, 1..=4);
        assert!("4..1".parse::<IndexRange>().is_err());
        assert!("x".parse::<IndexRange>().is_err());
    }

    #[test]
    fn overrides() {
        let p: ParamOverride = "alpha=1/2".parse().unwrap();
        assert_eq!(p.name, "alpha");
        assert_eq!(p.value, Rational::new(1, 2));
        assert!("alpha".parse::<ParamOverride>().is_err());
        assert!("alpha=0.5".parse::<ParamOverride>().is_err());
    }
}

use std::fmt::Write;

use serde::Serialize;
use serde_json::json;
use sheffer_core::catalog::{sheffer_poly, umbral_pairing, Reduction, ShefferPair};
use sheffer_core::engine::MixedFamily;
use sheffer_core::oracle::{cross_validate, SUITE_NAMES};
use sheffer_core::{Error, Monomial, MultiPoly, Rational, ScalarSeries, Var, Verdict};

use crate::commands::selected_pairs;
use crate::config::{Format, VerifyArgs};
use crate::render::{csv_line, latex_text};
use crate::CliError;

pub const FAMILY_SUITES: [&str; 10] = [
    "monomiality",
    "explicit",
    "generating",
    "operational",
    "integral",
    "reductions",
    "associated",
    "appell",
    "inverse",
    "biorthogonality",
];

/// One line of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub suite: String,
    pub family: String,
    pub check: String,
    pub n: Option<usize>,
    pub verdict: &'static str,
    /// Witness or reason for anything other than PASS.
    pub detail: Option<String>,
}

impl CheckRow {
    fn new(suite: &str, family: &str, check: impl Into<String>, n: Option<usize>, v: &Verdict) -> Self {
        CheckRow {
            suite: suite.to_string(),
            family: family.to_string(),
            check: check.into(),
            n,
            verdict: v.label(),
            detail: (!v.is_pass()).then(|| v.to_string()),
        }
    }

    pub fn failed(&self) -> bool {
        self.verdict == "FAIL"
    }
}

pub struct Report {
    pub rows: Vec<CheckRow>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.failed()).count()
    }

    fn count(&self, label: &str) -> usize {
        self.rows.iter().filter(|r| r.verdict == label).count()
    }
}

pub fn run(args: &VerifyArgs) -> Result<Report, CliError> {
    let suite = args.suite.as_str();
    let max_n = args.max_n;
    let mut rows = Vec::new();
    let family_suites: Vec<&str> = match suite {
        "all" => FAMILY_SUITES.to_vec(),
        s if FAMILY_SUITES.contains(&s) => vec![s],
        "oracle" => Vec::new(),
        s if SUITE_NAMES.contains(&s) => Vec::new(),
        s => return Err(Error::UnknownSuite(s.to_string()).into()),
    };
    if !family_suites.is_empty() {
        let kind = args.family.kind()?;
        if max_n + 1 > args.family.order {
            return Err(Error::OrderTooSmall {
                n: max_n + 1,
                order: args.family.order,
            }
            .into());
        }
        for pair in selected_pairs(&args.family)? {
            let fam = MixedFamily::new(pair, kind, args.family.order)?;
            for s in &family_suites {
                family_suite(&fam, s, max_n, &mut rows)?;
            }
        }
    }
    let oracle: Vec<&str> = match suite {
        "all" | "oracle" => SUITE_NAMES.to_vec(),
        s if SUITE_NAMES.contains(&s) => vec![s],
        _ => Vec::new(),
    };
    for name in oracle {
        for r in cross_validate(name, max_n)? {
            let v = if r.equal {
                Verdict::Pass
            } else {
                Verdict::compare(&MultiPoly::one(), r.rhs.clone(), r.lhs.clone())
            };
            rows.push(CheckRow::new(name, "-", r.description, None, &v));
        }
    }
    Ok(Report { rows })
}

fn family_suite(
    fam: &MixedFamily,
    suite: &str,
    max_n: usize,
    rows: &mut Vec<CheckRow>,
) -> Result<(), Error> {
    let id = fam.id();
    let id = id.as_str();
    let mut push = |check: String, n: Option<usize>, v: &Verdict| {
        rows.push(CheckRow::new(suite, id, check, n, v))
    };
    match suite {
        "monomiality" => {
            let report = fam.verify_monomiality(max_n)?;
            for sec in &report.sections {
                let label = sec.label();
                for (n, v) in sec.raising.iter().enumerate() {
                    push(format!("raising {label}"), Some(n), v);
                }
                for (n, v) in sec.lowering.iter().enumerate() {
                    push(format!("lowering {label}"), Some(n), v);
                }
                for (n, res) in sec.residuals.iter().enumerate() {
                    let v = Verdict::compare(
                        &MultiPoly::one(),
                        MultiPoly::zero(),
                        res.clone(),
                    );
                    push(format!("differential equation {label}"), Some(n), &v);
                }
                push(format!("commutator {label}"), None, &sec.commutator);
            }
        }
        "explicit" => {
            for n in 0..=max_n {
                push("M^n{1}".into(), Some(n), &fam.explicit_rep_check(n)?);
            }
        }
        "generating" => {
            push(
                "closed form vs coefficient extraction".into(),
                None,
                &fam.generating_function_check()?,
            );
        }
        "operational" => {
            for n in 0..=max_n {
                let rep = fam.operational_rep_check(n)?;
                push("exponential form".into(), Some(n), &rep.exponential);
                push("z-shift form".into(), Some(n), &rep.z_shift);
            }
        }
        "integral" => {
            for n in 0..=max_n {
                push("moment integral".into(), Some(n), &fam.integral_rep_check(n)?);
            }
        }
        "reductions" => {
            for red in Reduction::for_kind(fam.kind()) {
                for n in 0..=max_n {
                    let out = fam.reduce(red.id, n)?;
                    push(red.id.to_string(), Some(n), &out.verdict);
                }
            }
        }
        "associated" => {
            for n in 0..=max_n {
                push("H = f^(-1)".into(), Some(n), &fam.associated_check(n)?);
            }
        }
        "appell" => {
            for n in 0..=max_n {
                push("A-weighted convolution".into(), Some(n), &fam.appell_check(n)?);
            }
        }
        "inverse" => {
            let pair = fam.pair();
            let order = fam.order();
            let t = MultiPoly::var(Var::X);
            let v = match pair.claimed_h(order) {
                Some(claimed) => {
                    let h = pair.f(order).comp_inverse()?;
                    Verdict::compare(&t, series_poly(&claimed), series_poly(&h))
                }
                None => Verdict::NotEvaluable("no closed form for H is registered".into()),
            };
            push("claimed H vs compositional inverse".into(), None, &v);
            if let Some(claimed) = pair.claimed_a(order) {
                let v = Verdict::compare(&t, series_poly(&claimed), series_poly(&pair.a(order)?));
                push("claimed A vs 1/g(H)".into(), None, &v);
            }
        }
        "biorthogonality" => {
            for (n, k, v) in biorthogonality(fam.pair(), max_n, fam.order())? {
                push(format!("<g f^{k} | s_n>"), Some(n), &v);
            }
        }
        _ => unreachable!("suite names are validated by the caller"),
    }
    Ok(())
}

fn biorthogonality(
    pair: &ShefferPair,
    max_n: usize,
    order: usize,
) -> Result<Vec<(usize, usize, Verdict)>, Error> {
    let g = pair.g(max_n);
    let f = pair.f(max_n);
    let members = (0..=max_n)
        .map(|n| sheffer_poly(pair, n, order))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::new();
    let mut fk = ScalarSeries::one(max_n);
    for k in 0..=max_n {
        if k > 0 {
            fk = fk.mul(&f);
        }
        let h = g.mul(&fk);
        for (n, s) in members.iter().enumerate() {
            let expected = if n == k {
                Rational::factorial(n)
            } else {
                Rational::zero()
            };
            let got = umbral_pairing(&h, s);
            let v = Verdict::compare(s, MultiPoly::constant(expected), MultiPoly::constant(got));
            out.push((n, k, v));
        }
    }
    Ok(out)
}

/// A truncated series written as a polynomial in `x`, for witnesses.
fn series_poly(s: &ScalarSeries) -> MultiPoly {
    MultiPoly::from_terms(
        s.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (Monomial::new(k as u32, 0, 0), c.clone())),
    )
}

pub fn render(report: &Report, format: Format) -> Result<String, CliError> {
    let n_text = |n: Option<usize>| n.map(|n| n.to_string()).unwrap_or_else(|| "-".into());
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            for r in &report.rows {
                let _ = write!(s, "{:<4} {:<15} {:<26} {:<34} n={}", r.verdict, r.suite, r.family, r.check, n_text(r.n));
                if r.failed() || r.verdict == "N/A" {
                    if let Some(d) = &r.detail {
                        let _ = write!(s, "  {d}");
                    }
                }
                s.push('\n');
            }
            let _ = writeln!(
                s,
                "summary: {} checks, {} passed, {} failed, {} not evaluable",
                report.rows.len(),
                report.count("PASS"),
                report.count("FAIL"),
                report.count("N/A")
            );
            s
        }
        Format::Json => {
            let value = json!({
                "checks": report.rows,
                "summary": {
                    "total": report.rows.len(),
                    "passed": report.count("PASS"),
                    "failed": report.count("FAIL"),
                    "not_evaluable": report.count("N/A"),
                },
            });
            let mut s = serde_json::to_string_pretty(&value).map_err(CliError::io)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = csv_line(&["suite", "family", "check", "n", "verdict", "detail"]);
            for r in &report.rows {
                s.push_str(&csv_line(&[
                    &r.suite,
                    &r.family,
                    &r.check,
                    &r.n.map(|n| n.to_string()).unwrap_or_default(),
                    r.verdict,
                    r.detail.as_deref().unwrap_or(""),
                ]));
            }
            s
        }
        Format::Latex => {
            let mut s = String::from(
                "\\begin{tabular}{lllll}\n\\hline\nsuite & family & check & $n$ & verdict \\\\\n\\hline\n",
            );
            for r in &report.rows {
                let _ = writeln!(
                    s,
                    "{} & {} & {} & {} & {} \\\\",
                    latex_text(&r.suite),
                    latex_text(&r.family),
                    latex_text(&r.check),
                    n_text(r.n),
                    r.verdict
                );
            }
            s.push_str("\\hline\n\\end{tabular}\n");
            s
        }
    })
}

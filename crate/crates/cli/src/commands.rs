use std::fmt::Write;

use serde::Serialize;
use serde_json::json;
use sheffer_core::catalog::{lookup_with, MemberScale, ShefferPair, PAIR_NAMES};
use sheffer_core::engine::MixedFamily;
use sheffer_core::MultiPoly;

use crate::config::{pair_params, ExpandArgs, FamilyArgs, Format, ListArgs};
use crate::render::{csv_line, latex_poly, latex_text, terms, TermRecord};
use crate::CliError;

/// Pairs named by `--pair`: one name, or the whole catalog for `all`.
pub fn selected_pairs(args: &FamilyArgs) -> Result<Vec<ShefferPair>, CliError> {
    let params = pair_params(&args.params)?;
    let names: Vec<&str> = if args.pair == "all" {
        PAIR_NAMES.to_vec()
    } else {
        vec![args.pair.as_str()]
    };
    names
        .into_iter()
        .map(|n| lookup_with(n, &params).map_err(CliError::from))
        .collect()
}

#[derive(Serialize)]
struct MemberRecord {
    n: usize,
    text: String,
    terms: Vec<TermRecord>,
    #[serde(skip)]
    poly: MultiPoly,
}

#[derive(Serialize)]
struct FamilyRecord {
    pair: String,
    kind: char,
    r: u32,
    order: usize,
    normalization: &'static str,
    params: Vec<(String, String)>,
    members: Vec<MemberRecord>,
}

pub fn expand(args: &ExpandArgs) -> Result<String, CliError> {
    let kind = args.family.kind()?;
    let scale: MemberScale = args.scale.into();
    let normalization = match (kind.is_r_type(), scale) {
        (false, _) => "egf",
        (true, s) => s.name(),
    };
    let mut families = Vec::new();
    for pair in selected_pairs(&args.family)? {
        let fam = MixedFamily::new(pair, kind, args.family.order)?;
        let members = args
            .n
            .0
            .clone()
            .map(|n| {
                let p = fam.member_scaled(n, scale)?;
                Ok(MemberRecord {
                    n,
                    text: p.to_string(),
                    terms: terms(&p),
                    poly: p,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        families.push(FamilyRecord {
            pair: fam.pair().name.to_string(),
            kind: kind.letter(),
            r: kind.r(),
            order: fam.order(),
            normalization,
            params: fam
                .pair()
                .params
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            members,
        });
    }
    Ok(match args.output.format {
        Format::Text => {
            let mut s = String::new();
            for fam in &families {
                if families.len() > 1 {
                    let _ = writeln!(s, "# {} {}(r={})", fam.pair, fam.kind, fam.r);
                }
                for m in &fam.members {
                    let _ = writeln!(s, "{}\t{}", m.n, m.text);
                }
            }
            s
        }
        Format::Json => {
            let value = json!({ "families": families });
            let mut s = serde_json::to_string_pretty(&value).map_err(CliError::io)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = csv_line(&["pair", "kind", "r", "n", "x", "y", "z", "coeff"]);
            for fam in &families {
                for m in &fam.members {
                    for t in &m.terms {
                        s.push_str(&csv_line(&[
                            &fam.pair,
                            &fam.kind.to_string(),
                            &fam.r.to_string(),
                            &m.n.to_string(),
                            &t.x.to_string(),
                            &t.y.to_string(),
                            &t.z.to_string(),
                            &t.coeff,
                        ]));
                    }
                }
            }
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{ll}\n\\hline\n$n$ & member \\\\\n\\hline\n");
            for fam in &families {
                let sub = fam.kind.to_ascii_lowercase();
                for m in &fam.members {
                    let _ = writeln!(
                        s,
                        "{} & ${{}}_{{{sub}}}s_{{{}}}(x,y,z) = {}$ \\\\",
                        m.n,
                        m.n,
                        latex_poly(&m.poly)
                    );
                }
            }
            s.push_str("\\hline\n\\end{tabular}\n");
            s
        }
    })
}

#[derive(Serialize)]
struct PairRecord {
    name: &'static str,
    title: &'static str,
    g: &'static str,
    f: &'static str,
    params: Vec<(String, String)>,
    normalization: &'static str,
    claimed_a: bool,
    claimed_h: bool,
}

pub fn list(args: &ListArgs) -> Result<String, CliError> {
    let params = pair_params(&args.params)?;
    let names: Vec<&str> = match &args.pair {
        Some(p) => vec![p.as_str()],
        None => PAIR_NAMES.to_vec(),
    };
    let records = names
        .into_iter()
        .map(|n| {
            let p = lookup_with(n, &params)?;
            Ok(PairRecord {
                name: p.name,
                title: p.title,
                g: p.g_text,
                f: p.f_text,
                params: p
                    .params
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .collect(),
                normalization: p.normalization.name(),
                claimed_a: p.has_claimed_a(),
                claimed_h: p.has_claimed_h(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let params_text = |r: &PairRecord| {
        r.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    Ok(match args.output.format {
        Format::Text => {
            let mut s = String::new();
            for r in &records {
                let _ = writeln!(
                    s,
                    "{:<17} g = {:<28} f = {:<24} norm {:<3} A {:<3} H {:<3} {}",
                    r.name,
                    r.g,
                    r.f,
                    r.normalization,
                    yes_no(r.claimed_a),
                    yes_no(r.claimed_h),
                    params_text(r)
                );
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({ "pairs": records }))
                .map_err(CliError::io)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = csv_line(&[
                "name", "title", "g", "f", "params", "normalization", "claimed_a", "claimed_h",
            ]);
            for r in &records {
                s.push_str(&csv_line(&[
                    r.name,
                    r.title,
                    r.g,
                    r.f,
                    &params_text(r),
                    r.normalization,
                    yes_no(r.claimed_a),
                    yes_no(r.claimed_h),
                ]));
            }
            s
        }
        Format::Latex => {
            let mut s = String::from(
                "\\begin{tabular}{llll}\n\\hline\nname & polynomials & $g(t)$ & $f(t)$ \\\\\n\\hline\n",
            );
            for r in &records {
                let _ = writeln!(
                    s,
                    "{} & {} & ${}$ & ${}$ \\\\",
                    latex_text(r.name),
                    latex_text(r.title),
                    r.g,
                    r.f
                );
            }
            s.push_str("\\hline\n\\end{tabular}\n");
            s
        }
    })
}

//! Text, JSON, CSV and LaTeX renderings of polynomials and tables.

use std::fmt::Write;

use serde::Serialize;
use sheffer_core::{Monomial, MultiPoly, Rational, Var};

/// One term of a polynomial in machine-readable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub coeff: String,
}

pub fn terms(p: &MultiPoly) -> Vec<TermRecord> {
    p.terms()
        .map(|(m, c)| TermRecord {
            x: m.exp(Var::X),
            y: m.exp(Var::Y),
            z: m.exp(Var::Z),
            coeff: c.to_string(),
        })
        .collect()
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => s.push_str(v.name()),
            e => {
                let _ = write!(s, "{}^{{{}}}", v.name(), e);
            }
        }
    }
    s
}

/// LaTeX source for a polynomial, e.g. `y^{2} + 2x + \frac{1}{2}z`.
pub fn latex_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        s.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let mag = c.abs();
        if *m == Monomial::ONE {
            s.push_str(&latex_rational(&mag));
        } else {
            if !mag.is_one() {
                s.push_str(&latex_rational(&mag));
            }
            s.push_str(&latex_monomial(m));
        }
    }
    s
}

/// Quotes a CSV field when it needs it.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line(fields: &[&str]) -> String {
    let mut line = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

/// Escapes text for use inside a LaTeX table cell.
pub fn latex_text(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}")
        .replace('_', "\\_")
        .replace('&', "\\&")
        .replace('%', "\\%")
        .replace('#', "\\#")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_rendering() {
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let p = &(&y.pow(2) + &x.scale(&Rational::from_integer(2)))
            - &MultiPoly::constant(Rational::new(1, 2));
        assert_eq!(latex_poly(&p), "y^{2} + 2x - \\frac{1}{2}");
        assert_eq!(latex_poly(&(&x * &y).scale(&Rational::from_integer(-3))), "-3xy");
        assert_eq!(latex_poly(&MultiPoly::zero()), "0");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("1/2"), "1/2");
        assert_eq!(csv_line(&["n", "x y"]), "n,x y\n");
    }

    #[test]
    fn term_records() {
        let p = MultiPoly::var(Var::Z).scale(&Rational::new(-1, 3));
        let t = terms(&p);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].coeff, "-1/3");
        assert_eq!((t[0].x, t[0].y, t[0].z), (0, 0, 1));
    }
}

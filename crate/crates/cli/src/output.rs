//! Rendering of command results in the four output formats.
//!
//! Identical inputs must produce byte-identical output, so everything here
//! is built from deterministic iteration orders; the JSON documents follow
//! the versioned schemas in `docs/schemas.md`.

use eulerbasis::{render_polynomial, IdentityReport, Polynomial, Rational, RenderFormat};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Latex,
    Json,
}

#[derive(Serialize)]
struct PolynomialDoc<'a> {
    schema: &'static str,
    family: &'a str,
    n: usize,
    order: usize,
    coeffs: &'a [Rational],
}

#[derive(Serialize)]
struct ExpansionDoc<'a> {
    schema: &'static str,
    input: String,
    order: usize,
    coeffs: &'a [Rational],
}

#[derive(Serialize)]
struct TableDoc<'a> {
    schema: &'static str,
    family: &'a str,
    n_max: usize,
    order_max: usize,
    rows: &'a [Vec<TableCell>],
}

#[derive(Serialize)]
struct ReportListDoc<'a> {
    schema: &'static str,
    ok: bool,
    reports: &'a [IdentityReport],
}

/// One table entry: a whole polynomial or a single number.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum TableCell {
    Poly(Polynomial),
    Number(Rational),
}

impl TableCell {
    fn plain(&self) -> String {
        match self {
            TableCell::Poly(p) => render_polynomial(p, RenderFormat::Plain),
            TableCell::Number(r) => r.to_string(),
        }
    }

    fn latex(&self) -> String {
        match self {
            TableCell::Poly(p) => render_polynomial(p, RenderFormat::Latex),
            TableCell::Number(r) if r.is_integer() => r.to_string(),
            TableCell::Number(r) => format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom()),
        }
    }
}

fn coeff_list(coeffs: &[Rational]) -> String {
    coeffs
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render_poly_output(family: &str, n: usize, order: usize, p: &Polynomial, format: Format) -> String {
    match format {
        Format::Plain => render_polynomial(p, RenderFormat::Plain),
        Format::Latex => render_polynomial(p, RenderFormat::Latex),
        Format::Csv => coeff_list(p.coeffs()),
        Format::Json => serde_json::to_string(&PolynomialDoc {
            schema: "eulerbasis.polynomial.v1",
            family,
            n,
            order,
            coeffs: p.coeffs(),
        })
        .expect("polynomial document serializes"),
    }
}

pub fn render_expansion_output(
    input: &Polynomial,
    order: usize,
    coeffs: &[Rational],
    format: Format,
) -> String {
    match format {
        Format::Plain | Format::Csv => coeff_list(coeffs),
        Format::Latex => coeffs
            .iter()
            .map(|c| TableCell::Number(c.clone()).latex())
            .collect::<Vec<_>>()
            .join(" & "),
        Format::Json => serde_json::to_string(&ExpansionDoc {
            schema: "eulerbasis.expansion.v1",
            input: render_polynomial(input, RenderFormat::Plain),
            order,
            coeffs,
        })
        .expect("expansion document serializes"),
    }
}

pub fn render_table_output(
    family: &str,
    n_max: usize,
    order_max: usize,
    rows: &[Vec<TableCell>],
    format: Format,
) -> String {
    match format {
        Format::Plain => rows
            .iter()
            .map(|row| row.iter().map(TableCell::plain).collect::<Vec<_>>().join("\t"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => rows
            .iter()
            .map(|row| row.iter().map(TableCell::plain).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => rows
            .iter()
            .map(|row| {
                let cells = row.iter().map(TableCell::latex).collect::<Vec<_>>();
                format!("{} \\\\", cells.join(" & "))
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => serde_json::to_string(&TableDoc {
            schema: "eulerbasis.table.v1",
            family,
            n_max,
            order_max,
            rows,
        })
        .expect("table document serializes"),
    }
}

/// Parameters in the identity's canonical order, e.g. `n=4 m=2 r=1`.
fn param_text(report: &IdentityReport, sep: &str) -> String {
    report
        .identity
        .param_names()
        .iter()
        .map(|name| format!("{name}={}", report.params[*name]))
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn render_verify_output(reports: &[IdentityReport], ok: bool, format: Format) -> String {
    match format {
        Format::Plain => reports
            .iter()
            .map(|r| {
                let status = if r.pass { "pass" } else { "FAIL" };
                let mut line = format!("{} {} {status}", r.identity, param_text(r, " "));
                if !r.pass {
                    line.push_str(&format!(
                        " discrepancy={}",
                        render_polynomial(&r.discrepancy, RenderFormat::Plain)
                    ));
                }
                line
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            let mut lines = vec!["identity,params,pass,discrepancy".to_string()];
            lines.extend(reports.iter().map(|r| {
                format!(
                    "{},{},{},{}",
                    r.identity,
                    param_text(r, ";"),
                    r.pass,
                    render_polynomial(&r.discrepancy, RenderFormat::Plain)
                )
            }));
            lines.join("\n")
        }
        Format::Latex => reports
            .iter()
            .map(|r| {
                format!(
                    "\\texttt{{{}}} & ${}$ & {} & ${}$ \\\\",
                    r.identity,
                    param_text(r, ", "),
                    if r.pass { "pass" } else { "fail" },
                    render_polynomial(&r.discrepancy, RenderFormat::Latex)
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => serde_json::to_string(&ReportListDoc {
            schema: "eulerbasis.report-list.v1",
            ok,
            reports,
        })
        .expect("report list serializes"),
    }
}

//! JSON report documents and the aligned presentation table.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::DecisionMatrix;
use crate::model::StageResult;
use crate::pipeline::{AssessmentReport, StageTwo};

/// Identifier written into every report document.
pub const REPORT_SCHEMA: &str = "ordvga-report/1";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported report schema {0}")]
    Schema(String),
}

/// On-disk form of a report: full-precision data plus a 3-decimal table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub report: AssessmentReport,
    pub presentation: Vec<String>,
}

impl ReportDocument {
    pub fn new(report: AssessmentReport, matrix: &DecisionMatrix) -> Self {
        let presentation = presentation_table(&report, matrix);
        ReportDocument { schema: REPORT_SCHEMA.to_string(), report, presentation }
    }
}

/// Floats are written in shortest round-trip form, so reloading is bit-exact.
pub fn report_to_json(report: &AssessmentReport, matrix: &DecisionMatrix) -> Result<String, ReportError> {
    Ok(serde_json::to_string_pretty(&ReportDocument::new(report.clone(), matrix))?)
}

pub fn report_from_json(text: &str) -> Result<AssessmentReport, ReportError> {
    let doc: ReportDocument = serde_json::from_str(text)?;
    if doc.schema != REPORT_SCHEMA {
        return Err(ReportError::Schema(doc.schema));
    }
    Ok(doc.report)
}

pub fn emit_report(report: &AssessmentReport, matrix: &DecisionMatrix, path: impl AsRef<Path>) -> Result<(), ReportError> {
    let mut text = report_to_json(report, matrix)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn load_report(path: impl AsRef<Path>) -> Result<AssessmentReport, ReportError> {
    report_from_json(&std::fs::read_to_string(path)?)
}

/// One table column: a DMU assessed in one stage.
struct Column<'a> {
    head: String,
    res: &'a StageResult,
}

fn cell(v: Option<f64>) -> String {
    match v {
        Some(x) => {
            let s = format!("{x:.3}");
            if s == "-0.000" {
                "0.000".to_string()
            } else {
                s
            }
        }
        None => String::new(),
    }
}

/// Table of both stages with row groups R1..R8, values at 3 decimals.
///
/// R1 goal price and gap; R2 unit prices; R3 ratios and intensities;
/// R4 metric virtual prices; R5 benchmark and targets; R6/R7 virtual
/// input/output of every DMU; R8 virtual gap of every DMU. The first block
/// of columns is Stage I, the second Stage II (marked `*`).
pub fn presentation_table(report: &AssessmentReport, mx: &DecisionMatrix) -> Vec<String> {
    let mut cols: Vec<Column> = report.stage1.iter().map(|r| Column { head: r.dmu.clone(), res: r }).collect();
    if let StageTwo::Ranked { results } = &report.stage2 {
        cols.extend(results.iter().map(|r| Column { head: format!("{}*", r.dmu), res: r }));
    }
    let inputs = mx.inputs();
    let outputs = mx.outputs();
    let mut rows: Vec<(String, String, Vec<String>)> = Vec::new();
    let mut add = |tag: &str, sym: String, f: &dyn Fn(&StageResult) -> Option<f64>| {
        rows.push((tag.to_string(), sym, cols.iter().map(|c| cell(f(c.res))).collect()));
    };

    add("R1", "tau".into(), &|r| Some(r.tau_star));
    add("", "gap".into(), &|r| Some(r.gap_star));
    for (k, &i) in inputs.iter().enumerate() {
        add("R2", format!("v {}", mx.metrics()[i].name), &move |r| Some(r.prices.v[k]));
    }
    for (k, &o) in outputs.iter().enumerate() {
        add("", format!("u {}", mx.metrics()[o].name), &move |r| Some(r.prices.u[k]));
    }
    for (k, &i) in inputs.iter().enumerate().filter(|(_, &i)| mx.metrics()[i].is_ordinal()) {
        add("", format!("dx {}", mx.metrics()[i].name), &move |r| Some(r.prices.dx[k]));
    }
    for (k, &o) in outputs.iter().enumerate().filter(|(_, &o)| mx.metrics()[o].is_ordinal()) {
        add("", format!("dy {}", mx.metrics()[o].name), &move |r| Some(r.prices.dy[k]));
    }
    for (k, &i) in inputs.iter().enumerate() {
        add("R3", format!("q {}", mx.metrics()[i].name), &move |r| Some(r.adjustments.q[k]));
    }
    for (k, &o) in outputs.iter().enumerate() {
        add("", format!("p {}", mx.metrics()[o].name), &move |r| Some(r.adjustments.p[k]));
    }
    for d in mx.dmu_names() {
        add("", format!("pi {d}"), &move |r| r.intensity(d));
    }
    for (i, spec) in mx.metrics().iter().enumerate() {
        add("R4", format!("e {}", spec.name), &move |r| Some(r.metric_prices[i]));
    }
    add("R5", "benchmark".into(), &|r| Some(r.benchmark_alpha));
    for (k, &i) in inputs.iter().enumerate() {
        add("", format!("target {}", mx.metrics()[i].name), &move |r| Some(r.targets_x[k]));
    }
    for (k, &o) in outputs.iter().enumerate() {
        add("", format!("target {}", mx.metrics()[o].name), &move |r| Some(r.targets_y[k]));
    }
    let coord = |r: &StageResult, d: &str, alpha: bool| -> Option<f64> {
        if r.dmu == d {
            Some(if alpha { r.alpha_star } else { r.beta_star })
        } else {
            r.pair(d).map(|p| if alpha { p.alpha } else { p.beta })
        }
    };
    for (n, d) in mx.dmu_names().iter().enumerate() {
        add(if n == 0 { "R6" } else { "" }, format!("alpha {d}"), &move |r| coord(r, d, true));
    }
    for (n, d) in mx.dmu_names().iter().enumerate() {
        add(if n == 0 { "R7" } else { "" }, format!("beta {d}"), &move |r| coord(r, d, false));
    }
    for (n, d) in mx.dmu_names().iter().enumerate() {
        add(if n == 0 { "R8" } else { "" }, format!("gap {d}"), &move |r| Some(coord(r, d, true)? - coord(r, d, false)?));
    }

    let mut last = String::new();
    for row in &mut rows {
        if row.0.is_empty() || row.0 == last {
            row.0.clear();
        } else {
            last = row.0.clone();
        }
    }

    let tag_w = 3;
    let sym_w = rows.iter().map(|r| r.1.len()).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols.len()).map(|c| rows.iter().map(|r| r.2[c].len()).chain([cols[c].head.len()]).max().unwrap_or(0)).collect();
    let mut out = Vec::with_capacity(rows.len() + 1);
    let mut head = format!("{:tag_w$} {:sym_w$}", "", "");
    for (c, w) in cols.iter().zip(&widths) {
        let _ = write!(head, "  {:>w$}", c.head);
    }
    out.push(head.trim_end().to_string());
    for (tag, sym, cells) in &rows {
        let mut line = format!("{tag:tag_w$} {sym:sym_w$}");
        for (v, w) in cells.iter().zip(&widths) {
            let _ = write!(line, "  {v:>w$}");
        }
        out.push(line.trim_end().to_string());
    }
    out.extend(likert_notes(report, mx));
    out
}

/// Continuous Stage II targets of ordinal metrics with their nearest Likert point.
fn likert_notes(report: &AssessmentReport, mx: &DecisionMatrix) -> Vec<String> {
    let StageTwo::Ranked { results } = &report.stage2 else { return Vec::new() };
    let mut notes = Vec::new();
    let inputs = mx.inputs();
    let outputs = mx.outputs();
    for r in results {
        let ord = inputs.iter().zip(&r.targets_x).chain(outputs.iter().zip(&r.targets_y)).filter(|(&m, _)| mx.metrics()[m].is_ordinal());
        for (&m, &t) in ord {
            notes.push(format!("note: {}* target {} = {t:.3} (nearest Likert point {})", r.dmu, mx.metrics()[m].name, t.round()));
        }
    }
    notes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests::laptops;
    use crate::pipeline::assess;

    #[test]
    fn table_shows_super_gaps() {
        let m = laptops();
        let r = assess(&m).unwrap();
        let t = presentation_table(&r, &m);
        let gap: Vec<&str> = t[2].split_whitespace().collect();
        assert_eq!(gap[0], "gap");
        assert_eq!(gap[7..], ["-0.103", "-0.526", "-0.563"]);
        assert!(t[0].contains("H*"));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let m = laptops();
        let r = assess(&m).unwrap();
        let text = report_to_json(&r, &m).unwrap();
        assert!(!text.contains("\"ranking\""));
        assert_eq!(report_from_json(&text).unwrap(), r);
    }

    #[test]
    fn rejects_foreign_schema() {
        let m = laptops();
        let text = report_to_json(&assess(&m).unwrap(), &m).unwrap().replace(REPORT_SCHEMA, "other/9");
        assert!(matches!(report_from_json(&text), Err(ReportError::Schema(_))));
    }
}

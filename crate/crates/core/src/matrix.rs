//! Decision matrix: metrics (rows) by DMUs (columns) of strictly positive values.
//!
//! File layout (UTF-8 CSV, one row per metric):
//!
//! ```text
//! metric,direction,scale,lower,upper,unit,<dmu1>,<dmu2>,...
//! X2,input,ordinal,1,6,pt.,4,3,6,5,3,1
//! ```
//!
//! `lower`/`upper` are the Likert bounds and stay empty for cardinal metrics.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::MatrixError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Input,
    Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scale {
    Cardinal,
    /// Integer Likert scale `lower..=upper`.
    Ordinal {
        lower: u32,
        upper: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricSpec {
    pub name: String,
    pub direction: Direction,
    pub scale: Scale,
    pub unit: String,
}

impl MetricSpec {
    pub fn new(name: &str, direction: Direction, scale: Scale, unit: &str) -> Self {
        MetricSpec { name: name.to_string(), direction, scale, unit: unit.to_string() }
    }

    pub fn is_ordinal(&self) -> bool {
        matches!(self.scale, Scale::Ordinal { .. })
    }

    /// `(lower, upper)` Likert bounds, if ordinal.
    pub fn likert(&self) -> Option<(f64, f64)> {
        match self.scale {
            Scale::Ordinal { lower, upper } => Some((lower as f64, upper as f64)),
            Scale::Cardinal => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecisionMatrix {
    metrics: Vec<MetricSpec>,
    dmu_names: Vec<String>,
    /// `values[metric][dmu]`
    values: Vec<Vec<f64>>,
}

impl DecisionMatrix {
    /// Builds and validates a matrix.
    pub fn new(metrics: Vec<MetricSpec>, dmu_names: Vec<String>, values: Vec<Vec<f64>>) -> Result<Self, MatrixError> {
        validate_matrix(Self::new_unchecked(metrics, dmu_names, values))
    }

    /// Builds a matrix without checking any invariant.
    pub fn new_unchecked(metrics: Vec<MetricSpec>, dmu_names: Vec<String>, values: Vec<Vec<f64>>) -> Self {
        DecisionMatrix { metrics, dmu_names, values }
    }

    pub fn metrics(&self) -> &[MetricSpec] {
        &self.metrics
    }

    pub fn dmu_names(&self) -> &[String] {
        &self.dmu_names
    }

    pub fn n_dmus(&self) -> usize {
        self.dmu_names.len()
    }

    pub fn n_metrics(&self) -> usize {
        self.metrics.len()
    }

    pub fn value(&self, metric: usize, dmu: usize) -> f64 {
        self.values[metric][dmu]
    }

    pub fn row(&self, metric: usize) -> &[f64] {
        &self.values[metric]
    }

    pub fn dmu_index(&self, name: &str) -> Option<usize> {
        self.dmu_names.iter().position(|d| d == name)
    }

    pub fn metric_index(&self, name: &str) -> Option<usize> {
        self.metrics.iter().position(|m| m.name == name)
    }

    /// Metric indices of the inputs, in matrix order.
    pub fn inputs(&self) -> Vec<usize> {
        self.indices_of(Direction::Input)
    }

    /// Metric indices of the outputs, in matrix order.
    pub fn outputs(&self) -> Vec<usize> {
        self.indices_of(Direction::Output)
    }

    fn indices_of(&self, d: Direction) -> Vec<usize> {
        (0..self.metrics.len()).filter(|&i| self.metrics[i].direction == d).collect()
    }

    /// Matrix restricted to the given DMU columns, in the given order.
    pub fn select_dmus(&self, cols: &[usize]) -> DecisionMatrix {
        DecisionMatrix {
            metrics: self.metrics.clone(),
            dmu_names: cols.iter().map(|&j| self.dmu_names[j].clone()).collect(),
            values: self.values.iter().map(|row| cols.iter().map(|&j| row[j]).collect()).collect(),
        }
    }

    /// Multiplies every value of a metric by `factor` (a change of unit).
    ///
    /// Only meaningful for cardinal metrics; Likert points carry no unit.
    pub fn rescale_metric(&self, metric: usize, factor: f64) -> DecisionMatrix {
        let mut out = self.clone();
        for v in &mut out.values[metric] {
            *v *= factor;
        }
        out
    }

    /// SHA-256 of the canonical CSV serialization, hex encoded.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.to_csv_string().as_bytes());
        hash.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }

    /// Canonical CSV text. Values use the shortest representation that
    /// parses back to the identical `f64`.
    pub fn to_csv_string(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
        let mut header: Vec<String> = ["metric", "direction", "scale", "lower", "upper", "unit"].iter().map(|s| s.to_string()).collect();
        header.extend(self.dmu_names.iter().cloned());
        w.write_record(&header).expect("in-memory write");
        for (m, row) in self.metrics.iter().zip(&self.values) {
            let (scale, lo, hi) = match m.scale {
                Scale::Cardinal => ("cardinal", String::new(), String::new()),
                Scale::Ordinal { lower, upper } => ("ordinal", lower.to_string(), upper.to_string()),
            };
            let dir = match m.direction {
                Direction::Input => "input",
                Direction::Output => "output",
            };
            let mut rec = vec![m.name.clone(), dir.to_string(), scale.to_string(), lo, hi, m.unit.clone()];
            rec.extend(row.iter().map(|v| format!("{v:?}")));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), MatrixError> {
        std::fs::write(path.as_ref(), self.to_csv_string()).map_err(|e| MatrixError::Io(format!("{}: {e}", path.as_ref().display())))
    }
}

/// Checks every matrix invariant and hands the matrix back unchanged.
pub fn validate_matrix(raw: DecisionMatrix) -> Result<DecisionMatrix, MatrixError> {
    if raw.dmu_names.is_empty() {
        return Err(MatrixError::EmptyAxis("DMUs"));
    }
    if !raw.metrics.iter().any(|m| m.direction == Direction::Input) {
        return Err(MatrixError::EmptyAxis("input metrics"));
    }
    if !raw.metrics.iter().any(|m| m.direction == Direction::Output) {
        return Err(MatrixError::EmptyAxis("output metrics"));
    }
    let mut seen = HashSet::new();
    for m in &raw.metrics {
        if !seen.insert(m.name.as_str()) {
            return Err(MatrixError::DuplicateName(m.name.clone()));
        }
    }
    let mut seen = HashSet::new();
    for d in &raw.dmu_names {
        if !seen.insert(d.as_str()) {
            return Err(MatrixError::DuplicateName(d.clone()));
        }
    }
    if raw.values.len() != raw.metrics.len() {
        return Err(MatrixError::ShapeMismatch {
            metric: format!("<{} rows>", raw.values.len()),
            found: raw.values.len(),
            expected: raw.metrics.len(),
        });
    }
    for (m, row) in raw.metrics.iter().zip(&raw.values) {
        if row.len() != raw.dmu_names.len() {
            return Err(MatrixError::ShapeMismatch { metric: m.name.clone(), found: row.len(), expected: raw.dmu_names.len() });
        }
        if let Scale::Ordinal { lower, upper } = m.scale {
            if lower < 1 || lower >= upper {
                return Err(MatrixError::InvalidLikertBounds { metric: m.name.clone() });
            }
        }
        for (v, d) in row.iter().zip(&raw.dmu_names) {
            let at = || (m.name.clone(), d.clone());
            if !v.is_finite() {
                let (metric, dmu) = at();
                return Err(MatrixError::NonFiniteValue { metric, dmu });
            }
            if *v <= 0.0 {
                let (metric, dmu) = at();
                return Err(MatrixError::NonPositiveValue { metric, dmu });
            }
            if let Scale::Ordinal { lower, upper } = m.scale {
                if v.fract() != 0.0 {
                    let (metric, dmu) = at();
                    return Err(MatrixError::OrdinalNotInteger { metric, dmu });
                }
                if *v < lower as f64 || *v > upper as f64 {
                    let (metric, dmu) = at();
                    return Err(MatrixError::OrdinalOutOfBounds { metric, dmu });
                }
            }
        }
    }
    Ok(raw)
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<DecisionMatrix, MatrixError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| MatrixError::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

/// Parses the CSV layout and validates the result.
pub fn parse_matrix(text: &str) -> Result<DecisionMatrix, MatrixError> {
    const FIXED: [&str; 6] = ["metric", "direction", "scale", "lower", "upper", "unit"];
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).flexible(true).from_reader(text.as_bytes());
    let mut records = rdr.records();
    let parse_err = |line: u64, reason: String| MatrixError::Parse { line, reason };

    let header = match records.next() {
        Some(r) => r.map_err(|e| parse_err(1, e.to_string()))?,
        None => return Err(parse_err(1, "empty file".into())),
    };
    for (k, want) in FIXED.iter().enumerate() {
        if header.get(k).map(|s| s.to_ascii_lowercase()) != Some(want.to_string()) {
            return Err(parse_err(1, format!("header column {} must be `{want}`", k + 1)));
        }
    }
    let dmu_names: Vec<String> = header.iter().skip(FIXED.len()).map(str::to_string).collect();

    let mut metrics = Vec::new();
    let mut values = Vec::new();
    for rec in records {
        let rec = rec.map_err(|e| parse_err(e.position().map_or(0, |p| p.line()), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.iter().all(str::is_empty) {
            continue;
        }
        if rec.len() != FIXED.len() + dmu_names.len() {
            return Err(parse_err(line, format!("expected {} fields, found {}", FIXED.len() + dmu_names.len(), rec.len())));
        }
        let name = rec[0].to_string();
        let direction = match rec[1].to_ascii_lowercase().as_str() {
            "input" => Direction::Input,
            "output" => Direction::Output,
            other => return Err(parse_err(line, format!("unknown direction `{other}`"))),
        };
        let bound = |s: &str, which: &str| -> Result<u32, MatrixError> {
            s.parse::<u32>().map_err(|_| parse_err(line, format!("{which} Likert bound `{s}` is not a positive integer")))
        };
        let scale = match rec[2].to_ascii_lowercase().as_str() {
            "cardinal" => {
                if !rec[3].is_empty() || !rec[4].is_empty() {
                    return Err(parse_err(line, "cardinal metric must leave lower/upper empty".into()));
                }
                Scale::Cardinal
            }
            "ordinal" => Scale::Ordinal { lower: bound(&rec[3], "lower")?, upper: bound(&rec[4], "upper")? },
            other => return Err(parse_err(line, format!("unknown scale `{other}`"))),
        };
        let mut row = Vec::with_capacity(dmu_names.len());
        for (k, cell) in rec.iter().skip(FIXED.len()).enumerate() {
            let v: f64 = cell.parse().map_err(|_| parse_err(line, format!("value `{cell}` for DMU {} is not a number", dmu_names[k])))?;
            row.push(v);
        }
        metrics.push(MetricSpec { name, direction, scale, unit: rec[5].to_string() });
        values.push(row);
    }
    DecisionMatrix::new(metrics, dmu_names, values)
}

/// Matrix without the named DMUs; remaining columns keep their order.
pub fn remove_dmus<S: AsRef<str>>(matrix: &DecisionMatrix, names: &[S]) -> Result<DecisionMatrix, MatrixError> {
    let mut drop = HashSet::new();
    for n in names {
        let n = n.as_ref();
        let j = matrix.dmu_index(n).ok_or_else(|| MatrixError::UnknownDmu(n.to_string()))?;
        drop.insert(j);
    }
    let keep: Vec<usize> = (0..matrix.n_dmus()).filter(|j| !drop.contains(j)).collect();
    Ok(matrix.select_dmus(&keep))
}

//! Result types shared by the best-practice and super-gap stages.

use serde::{Deserialize, Serialize};

use crate::matrix::DecisionMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stage {
    /// Stage I: every DMU against all DMUs.
    BestPractice,
    /// Stage II: a top-tier DMU against the rest of the top tier.
    Super,
}

/// Virtual unit prices of one assessment.
///
/// `v`/`dx` follow the input metrics and `u`/`dy` the output metrics in
/// matrix order. Likert adjustments of cardinal metrics are always zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PriceVector {
    /// Unified goal price ($).
    pub tau: f64,
    /// $ per input unit.
    pub v: Vec<f64>,
    /// $ per output unit.
    pub u: Vec<f64>,
    /// $ per Likert point of each input.
    pub dx: Vec<f64>,
    /// $ per Likert point of each output.
    pub dy: Vec<f64>,
}

impl PriceVector {
    pub fn scaled(&self, t: f64) -> PriceVector {
        let s = |v: &[f64]| v.iter().map(|x| x * t).collect();
        PriceVector { tau: self.tau * t, v: s(&self.v), u: s(&self.u), dx: s(&self.dx), dy: s(&self.dy) }
    }

    /// Plain virtual input `V x_j` of a DMU column.
    pub fn virtual_input(&self, m: &DecisionMatrix, j: usize) -> f64 {
        m.inputs().iter().zip(&self.v).map(|(&i, v)| v * m.value(i, j)).sum()
    }

    /// Plain virtual output `U y_j` of a DMU column.
    pub fn virtual_output(&self, m: &DecisionMatrix, j: usize) -> f64 {
        m.outputs().iter().zip(&self.u).map(|(&r, u)| u * m.value(r, j)).sum()
    }
}

/// Adjustment ratios and intensities (dimensionless).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdjustmentVector {
    /// Input ratios, matrix input order.
    pub q: Vec<f64>,
    /// Output ratios, matrix output order.
    pub p: Vec<f64>,
    /// Intensity per comparison DMU (`StageResult::comparison`).
    pub pi: Vec<f64>,
}

/// Virtual input/output coordinates of one DMU under the assessed DMU's prices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VirtualPair {
    pub dmu: String,
    pub alpha: f64,
    pub beta: f64,
}

impl VirtualPair {
    pub fn gap(&self) -> f64 {
        self.alpha - self.beta
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScscKind {
    /// Input row of the adjustment program against the input price.
    InputBalance,
    /// Output row against the output price.
    OutputBalance,
    /// Likert bound on an adjusted ordinal input against its adjustment price.
    LikertInput,
    /// Likert bound on an adjusted ordinal output against its adjustment price.
    LikertOutput,
    /// Virtual gap of a comparison DMU against its intensity.
    DmuGap,
    /// Virtual price of a metric above/below the goal price against its ratio.
    GoalPrice,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScscEntry {
    pub kind: ScscKind,
    /// Metric or DMU the condition refers to.
    pub subject: String,
    pub left: f64,
    pub right: f64,
    pub product: f64,
    /// `false` when both factors vanish (complementarity holds only weakly).
    pub strict: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ScscReport {
    pub entries: Vec<ScscEntry>,
    pub max_abs_product: f64,
}

impl ScscReport {
    pub(crate) fn push(&mut self, kind: ScscKind, subject: &str, left: f64, right: f64, left_zero: f64, right_zero: f64) {
        let product = left * right;
        self.max_abs_product = self.max_abs_product.max(product.abs());
        self.entries.push(ScscEntry {
            kind,
            subject: subject.to_string(),
            left,
            right,
            product,
            strict: !(left.abs() <= left_zero && right.abs() <= right_zero),
        });
    }

    pub fn non_strict(&self) -> impl Iterator<Item = &ScscEntry> {
        self.entries.iter().filter(|e| !e.strict)
    }

    pub fn find(&self, kind: ScscKind, subject: &str) -> Option<&ScscEntry> {
        self.entries.iter().find(|e| e.kind == kind && e.subject == subject)
    }
}

/// Normalized outcome of assessing one DMU in one stage.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageResult {
    pub dmu: String,
    pub stage: Stage,
    /// Optimum of the adjustment program at a goal price of $1.
    pub step1_objective: f64,
    /// Normalization factor `1/alpha#` (Stage I) or `1/beta#` (Stage II).
    pub t_bar: f64,
    pub tau_star: f64,
    /// Normalized total adjustment price, always `>= 0`.
    pub internal_objective: f64,
    /// Reported gap `alpha* - beta*`: in `[0, 1)` for Stage I, `(-1, 0]` for Stage II.
    pub gap_star: f64,
    pub prices: PriceVector,
    pub adjustments: AdjustmentVector,
    /// DMUs the assessed DMU was compared against (column order of `pi`).
    pub comparison: Vec<String>,
    /// Virtual input of the assessed DMU, Likert penalties included.
    pub alpha_star: f64,
    /// Virtual output of the assessed DMU, Likert penalties included.
    pub beta_star: f64,
    /// Plain `(V x_j, U y_j)` for every comparison DMU.
    pub pairs: Vec<VirtualPair>,
    /// Target per input metric (matrix input order).
    pub targets_x: Vec<f64>,
    /// Target per output metric (matrix output order).
    pub targets_y: Vec<f64>,
    pub benchmark_alpha: f64,
    pub benchmark_beta: f64,
    /// `gap/alpha*` in Stage I; `alpha*/beta*` in Stage II.
    pub inefficiency: f64,
    /// `beta*/alpha*`.
    pub efficiency: f64,
    pub peers: Vec<String>,
    pub scsc: ScscReport,
    /// Virtual cost of each metric in matrix order.
    pub metric_prices: Vec<f64>,
    /// True when prices came from the selection program rather than the raw row duals.
    pub prices_selected: bool,
}

impl StageResult {
    pub fn pair(&self, dmu: &str) -> Option<&VirtualPair> {
        self.pairs.iter().find(|p| p.dmu == dmu)
    }

    pub fn intensity(&self, dmu: &str) -> Option<f64> {
        self.comparison.iter().position(|d| d == dmu).map(|k| self.adjustments.pi[k])
    }
}

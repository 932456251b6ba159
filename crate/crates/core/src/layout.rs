use crate::error::{AssessError, MatrixError};
use crate::matrix::DecisionMatrix;

/// Metric positions needed to lay out the assessment programs.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
    /// `(position among inputs, lower, upper)` of each ordinal input.
    pub ord_inputs: Vec<(usize, f64, f64)>,
    /// `(position among outputs, lower, upper)` of each ordinal output.
    pub ord_outputs: Vec<(usize, f64, f64)>,
}

impl Layout {
    pub fn new(m: &DecisionMatrix) -> Self {
        let inputs = m.inputs();
        let outputs = m.outputs();
        let ord = |idx: &[usize]| -> Vec<(usize, f64, f64)> {
            idx.iter().enumerate().filter_map(|(k, &i)| m.metrics()[i].likert().map(|(lo, hi)| (k, lo, hi))).collect()
        };
        let ord_inputs = ord(&inputs);
        let ord_outputs = ord(&outputs);
        Layout { inputs, outputs, ord_inputs, ord_outputs }
    }

    pub fn m(&self) -> usize {
        self.inputs.len()
    }

    pub fn s(&self) -> usize {
        self.outputs.len()
    }

    /// Number of price variables `(v, u, dx, dy)`.
    pub fn n_price_vars(&self) -> usize {
        self.m() + self.s() + self.ord_inputs.len() + self.ord_outputs.len()
    }
}

pub(crate) fn dmu_index(m: &DecisionMatrix, name: &str) -> Result<usize, AssessError> {
    m.dmu_index(name).ok_or_else(|| MatrixError::UnknownDmu(name.to_string()).into())
}

//! Dense two-phase tableau simplex.
//!
//! The kernel is sized for the per-DMU programs of the assessment models
//! (a few dozen rows, at most a few hundred columns). It returns the primal
//! point together with row duals and reduced costs, so a single solve of a
//! program yields the variables of its dual as well.
//!
//! Dual sign convention: row duals `y` always satisfy
//! `objective_value = sum_i y_i * rhs_i` at optimality, in the sense of the
//! original problem. For a maximization, duals of `<=` rows are nonnegative
//! and duals of `>=` rows are nonpositive; for a minimization it is the
//! other way round. Duals of equality rows are free.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VarBound {
    NonNegative,
    Free,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// A linear program `opt c'x  s.t.  rows, bounds`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LpProblem {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub rows: Vec<Row>,
    pub var_bounds: Vec<VarBound>,
    pub var_labels: Vec<String>,
    pub row_labels: Vec<String>,
}

impl LpProblem {
    /// New problem with all variables nonnegative and no rows.
    pub fn new(sense: Sense, objective: Vec<f64>) -> Self {
        let n = objective.len();
        LpProblem {
            sense,
            objective,
            rows: Vec::new(),
            var_bounds: vec![VarBound::NonNegative; n],
            var_labels: (0..n).map(|j| format!("x{j}")).collect(),
            row_labels: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn add_row(&mut self, label: impl Into<String>, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.rows.push(Row { coeffs, relation, rhs });
        self.row_labels.push(label.into());
    }

    pub fn set_free(&mut self, var: usize) {
        self.var_bounds[var] = VarBound::Free;
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        debug_assert_eq!(labels.len(), self.num_vars());
        self.var_labels = labels;
    }

    fn validate(&self) -> Result<(), SimplexError> {
        let n = self.num_vars();
        if self.var_bounds.len() != n {
            return Err(SimplexError::Malformed(format!("{} bounds for {} variables", self.var_bounds.len(), n)));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.coeffs.len() != n {
                return Err(SimplexError::Malformed(format!("row {i} has {} coefficients, expected {n}", row.coeffs.len())));
            }
            if !row.rhs.is_finite() || row.coeffs.iter().any(|a| !a.is_finite()) {
                return Err(SimplexError::Malformed(format!("row {i} has a non-finite entry")));
            }
        }
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(SimplexError::Malformed("non-finite objective coefficient".into()));
        }
        Ok(())
    }

    /// Activity `a_i' x` of every row.
    pub fn row_activities(&self, x: &[f64]) -> Vec<f64> {
        self.rows.iter().map(|r| dot(&r.coeffs, x)).collect()
    }

    /// Largest violation of any row or bound at `x`.
    pub fn primal_residual(&self, x: &[f64]) -> f64 {
        let mut worst = 0.0_f64;
        for (row, act) in self.rows.iter().zip(self.row_activities(x)) {
            let viol = match row.relation {
                Relation::Le => act - row.rhs,
                Relation::Ge => row.rhs - act,
                Relation::Eq => (act - row.rhs).abs(),
            };
            worst = worst.max(viol);
        }
        for (xj, b) in x.iter().zip(&self.var_bounds) {
            if *b == VarBound::NonNegative {
                worst = worst.max(-xj);
            }
        }
        worst
    }

    pub fn objective_at(&self, x: &[f64]) -> f64 {
        dot(&self.objective, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LpSolution {
    pub status: LpStatus,
    pub objective_value: f64,
    /// Optimal point, or an improving ray when `Unbounded`.
    pub primal: Vec<f64>,
    /// Row duals, or a Farkas certificate when `Infeasible`.
    pub row_duals: Vec<f64>,
    pub reduced_costs: Vec<f64>,
    pub iterations: usize,
}

impl LpSolution {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    /// `sum_i y_i b_i`.
    pub fn dual_objective(&self, problem: &LpProblem) -> f64 {
        self.row_duals.iter().zip(&problem.rows).map(|(y, r)| y * r.rhs).sum()
    }

    /// Complementary pairs whose members are both (numerically) zero.
    ///
    /// A vertex returned by the simplex method satisfies complementary
    /// slackness but not necessarily strict complementarity; this lists the
    /// rows and variables where strictness fails.
    pub fn non_strict_pairs(&self, problem: &LpProblem, tol: f64) -> Vec<String> {
        let mut out = Vec::new();
        for (i, (row, act)) in problem.rows.iter().zip(problem.row_activities(&self.primal)).enumerate() {
            if row.relation == Relation::Eq {
                continue;
            }
            let slack = (row.rhs - act).abs();
            if slack <= tol * (1.0 + row.rhs.abs()) && self.row_duals[i].abs() <= tol {
                out.push(problem.row_labels.get(i).cloned().unwrap_or_else(|| format!("row{i}")));
            }
        }
        for (j, b) in problem.var_bounds.iter().enumerate() {
            if *b == VarBound::NonNegative && self.primal[j].abs() <= tol && self.reduced_costs[j].abs() <= tol {
                out.push(problem.var_labels[j].clone());
            }
        }
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimplexError {
    #[error("malformed problem: {0}")]
    Malformed(String),
    #[error("numerical breakdown: no admissible pivot above {pivot_tol:e} (iteration {iteration})")]
    NumericalBreakdown { iteration: usize, pivot_tol: f64 },
    #[error("iteration limit {0} reached")]
    IterationLimit(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimplexOptions {
    pub feas_tol: f64,
    pub pivot_tol: f64,
    pub gap_tol: f64,
    /// Reduced-cost threshold for optimality.
    pub opt_tol: f64,
    pub max_iterations: usize,
    /// Dump every tableau to stderr.
    pub trace: bool,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        SimplexOptions { feas_tol: 1e-8, pivot_tol: 1e-10, gap_tol: 1e-7, opt_tol: 1e-10, max_iterations: 50_000, trace: false }
    }
}

impl SimplexOptions {
    /// Multiply every tolerance by `factor`.
    pub fn scaled(mut self, factor: f64) -> Self {
        self.feas_tol *= factor;
        self.pivot_tol *= factor;
        self.gap_tol *= factor;
        self.opt_tol *= factor;
        self
    }
}

pub fn solve(problem: &LpProblem) -> Result<LpSolution, SimplexError> {
    solve_with(problem, &SimplexOptions::default())
}

pub fn solve_with(problem: &LpProblem, opts: &SimplexOptions) -> Result<LpSolution, SimplexError> {
    problem.validate()?;
    let mut tab = Tableau::build(problem, opts);
    tab.run(problem)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Nearest power of two, so scaling introduces no rounding.
fn pow2(v: f64) -> f64 {
    if !v.is_finite() || v <= 0.0 {
        return 1.0;
    }
    2f64.powi(v.log2().round() as i32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ColKind {
    Structural,
    Slack,
    Artificial,
}

struct Tableau<'o> {
    opts: &'o SimplexOptions,
    m: usize,
    n: usize,
    ncols: usize,
    /// Row-major `m x (ncols + 1)`; the last column is the right-hand side.
    t: Vec<f64>,
    basis: Vec<usize>,
    kind: Vec<ColKind>,
    free: Vec<bool>,
    /// Structural columns currently stored negated (free variables only).
    flipped: Vec<bool>,
    /// Column whose initial content was the unit vector of each row.
    identity_col: Vec<usize>,
    row_negated: Vec<bool>,
    row_scale: Vec<f64>,
    col_scale: Vec<f64>,
    /// Scaled minimization cost of structural columns.
    cost: Vec<f64>,
    iterations: usize,
}

impl<'o> Tableau<'o> {
    fn build(p: &LpProblem, opts: &'o SimplexOptions) -> Self {
        let m = p.num_rows();
        let n = p.num_vars();
        let (row_scale, col_scale) = equilibrate(p);

        let sign = match p.sense {
            Sense::Minimize => 1.0,
            Sense::Maximize => -1.0,
        };
        let cost: Vec<f64> = (0..n).map(|j| sign * p.objective[j] * col_scale[j]).collect();

        let mut rel = Vec::with_capacity(m);
        let mut row_negated = vec![false; m];
        for (i, row) in p.rows.iter().enumerate() {
            let mut r = row.relation;
            if row.rhs * row_scale[i] < 0.0 {
                row_negated[i] = true;
                r = match r {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
            }
            rel.push(r);
        }
        let n_slack = rel.iter().filter(|r| **r != Relation::Eq).count();
        let n_art = rel.iter().filter(|r| **r != Relation::Le).count();
        let ncols = n + n_slack + n_art;
        let width = ncols + 1;

        let mut t = vec![0.0; m * width];
        let mut kind = vec![ColKind::Structural; n];
        kind.extend(std::iter::repeat_n(ColKind::Slack, n_slack));
        kind.extend(std::iter::repeat_n(ColKind::Artificial, n_art));
        let mut basis = vec![0; m];
        let mut identity_col = vec![0; m];
        let mut next_slack = n;
        let mut next_art = n + n_slack;
        for i in 0..m {
            let s = if row_negated[i] { -row_scale[i] } else { row_scale[i] };
            for j in 0..n {
                t[i * width + j] = s * p.rows[i].coeffs[j] * col_scale[j];
            }
            t[i * width + ncols] = s * p.rows[i].rhs;
            match rel[i] {
                Relation::Le => {
                    t[i * width + next_slack] = 1.0;
                    basis[i] = next_slack;
                    identity_col[i] = next_slack;
                    next_slack += 1;
                }
                Relation::Ge => {
                    t[i * width + next_slack] = -1.0;
                    next_slack += 1;
                    t[i * width + next_art] = 1.0;
                    basis[i] = next_art;
                    identity_col[i] = next_art;
                    next_art += 1;
                }
                Relation::Eq => {
                    t[i * width + next_art] = 1.0;
                    basis[i] = next_art;
                    identity_col[i] = next_art;
                    next_art += 1;
                }
            }
        }
        let mut free = vec![false; ncols];
        for j in 0..n {
            free[j] = p.var_bounds[j] == VarBound::Free;
        }
        Tableau {
            opts,
            m,
            n,
            ncols,
            t,
            basis,
            kind,
            free,
            flipped: vec![false; n],
            identity_col,
            row_negated,
            row_scale,
            col_scale,
            cost,
            iterations: 0,
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.t[i * (self.ncols + 1) + j]
    }

    #[inline]
    fn rhs(&self, i: usize) -> f64 {
        self.t[i * (self.ncols + 1) + self.ncols]
    }

    fn phase_cost(&self, phase: u8, col: usize) -> f64 {
        match (phase, self.kind[col]) {
            (1, ColKind::Artificial) => 1.0,
            (1, _) => 0.0,
            (_, ColKind::Structural) => {
                if self.flipped[col] {
                    -self.cost[col]
                } else {
                    self.cost[col]
                }
            }
            _ => 0.0,
        }
    }

    /// Reduced costs and objective for the given phase.
    fn pricing(&self, phase: u8) -> (Vec<f64>, f64) {
        let cb: Vec<f64> = self.basis.iter().map(|&b| self.phase_cost(phase, b)).collect();
        let mut d: Vec<f64> = (0..self.ncols).map(|j| self.phase_cost(phase, j)).collect();
        let mut z = 0.0;
        for i in 0..self.m {
            if cb[i] == 0.0 {
                continue;
            }
            let row = &self.t[i * (self.ncols + 1)..(i + 1) * (self.ncols + 1)];
            for j in 0..self.ncols {
                d[j] -= cb[i] * row[j];
            }
            z += cb[i] * row[self.ncols];
        }
        (d, z)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let width = self.ncols + 1;
        let piv = self.t[r * width + c];
        for j in 0..width {
            self.t[r * width + j] /= piv;
        }
        self.t[r * width + c] = 1.0;
        let prow: Vec<f64> = self.t[r * width..(r + 1) * width].to_vec();
        for i in 0..self.m {
            if i == r {
                continue;
            }
            let f = self.t[i * width + c];
            if f == 0.0 {
                continue;
            }
            let row = &mut self.t[i * width..(i + 1) * width];
            for j in 0..width {
                row[j] -= f * prow[j];
            }
            row[c] = 0.0;
        }
        self.basis[r] = c;
        self.iterations += 1;
    }

    fn flip_column(&mut self, c: usize) {
        let width = self.ncols + 1;
        for i in 0..self.m {
            self.t[i * width + c] = -self.t[i * width + c];
        }
        self.flipped[c] = !self.flipped[c];
    }

    fn dump(&self, phase: u8, d: &[f64], z: f64) {
        eprintln!("-- phase {phase} iteration {} objective {z:.12e}", self.iterations);
        eprintln!("   basis {:?}", self.basis);
        eprintln!("   d {:?}", d);
        for i in 0..self.m {
            let row = &self.t[i * (self.ncols + 1)..(i + 1) * (self.ncols + 1)];
            eprintln!("   {:?}", row);
        }
    }

    /// True when reduced cost `dj` of column `j` is round-off left over from
    /// cancelling terms rather than a real improving direction.
    fn cancelled(&self, phase: u8, j: usize, dj: f64) -> bool {
        let terms: f64 = (0..self.m).map(|i| (self.phase_cost(phase, self.basis[i]) * self.at(i, j)).abs()).sum();
        dj.abs() <= 1e-9 * (self.phase_cost(phase, j).abs() + terms)
    }

    /// Runs simplex iterations for one phase.
    fn iterate(&mut self, phase: u8) -> Result<PhaseEnd, SimplexError> {
        let mut is_basic = vec![false; self.ncols];
        for &b in &self.basis {
            is_basic[b] = true;
        }
        let stall_limit = 5 * (self.m + self.ncols);
        let mut stall = 0usize;
        let mut bland = false;
        let (_, mut last_z) = self.pricing(phase);
        loop {
            if self.iterations >= self.opts.max_iterations {
                return Err(SimplexError::IterationLimit(self.opts.max_iterations));
            }
            let (d, z) = self.pricing(phase);
            if self.opts.trace {
                self.dump(phase, &d, z);
            }
            if z < last_z - 1e-12 * (1.0 + last_z.abs()) {
                stall = 0;
            } else if self.iterations > 0 {
                stall += 1;
                if stall > stall_limit {
                    bland = true;
                }
            }
            last_z = z;

            // Candidate entering columns, ordered by the active rule.
            let mut cands: Vec<(usize, f64, bool)> = Vec::new();
            for j in 0..self.ncols {
                if is_basic[j] || (phase == 2 && self.kind[j] == ColKind::Artificial) {
                    continue;
                }
                if d[j] < -self.opts.opt_tol {
                    cands.push((j, -d[j], false));
                } else if self.free[j] && d[j] > self.opts.opt_tol {
                    cands.push((j, d[j], true));
                }
            }
            if cands.is_empty() {
                return Ok(PhaseEnd::Optimal);
            }
            if !bland {
                cands.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
            }

            let mut chosen = None;
            let mut saw_tiny = false;
            for &(e, _, flip) in &cands {
                let s = if flip { -1.0 } else { 1.0 };
                let noise = 1e-12 * (0..self.m).map(|i| self.at(i, e).abs()).fold(0.0, f64::max);
                let mut best: Option<(usize, f64, f64)> = None;
                let mut any_tiny = false;
                for i in 0..self.m {
                    if self.free[self.basis[i]] {
                        continue;
                    }
                    let a = s * self.at(i, e);
                    if a > self.opts.pivot_tol {
                        let ratio = self.rhs(i).max(0.0) / a;
                        best = match best {
                            None => Some((i, ratio, a)),
                            Some((bi, br, ba)) => {
                                let tie = (ratio - br).abs() <= 1e-12 * (1.0 + br.abs());
                                let better = if tie {
                                    if bland {
                                        self.basis[i] < self.basis[bi]
                                    } else {
                                        a > ba
                                    }
                                } else {
                                    ratio < br
                                };
                                if better {
                                    Some((i, ratio, a))
                                } else {
                                    Some((bi, br, ba))
                                }
                            }
                        };
                    } else if a > noise {
                        any_tiny = true;
                    }
                }
                match best {
                    Some((r, _, _)) => {
                        chosen = Some((e, r, flip));
                        break;
                    }
                    None if any_tiny => {
                        saw_tiny = true;
                        continue;
                    }
                    None => {
                        if phase == 2 {
                            if self.cancelled(phase, e, d[e]) {
                                continue;
                            }
                            return Ok(PhaseEnd::Unbounded { entering: e, flip });
                        }
                        // Phase 1 objective is bounded below; treat as breakdown.
                        saw_tiny = true;
                        continue;
                    }
                }
            }
            let Some((e, r, flip)) = chosen else {
                if !saw_tiny {
                    return Ok(PhaseEnd::Optimal);
                }
                return Err(SimplexError::NumericalBreakdown { iteration: self.iterations, pivot_tol: self.opts.pivot_tol });
            };
            if flip {
                self.flip_column(e);
            }
            is_basic[self.basis[r]] = false;
            is_basic[e] = true;
            self.pivot(r, e);
        }
    }

    /// Pivots zero-valued artificials out of the basis after phase 1.
    fn expel_artificials(&mut self) {
        for i in 0..self.m {
            if self.kind[self.basis[i]] != ColKind::Artificial {
                continue;
            }
            let mut best: Option<(usize, f64)> = None;
            for j in 0..self.ncols {
                if self.kind[j] == ColKind::Artificial || self.basis.contains(&j) {
                    continue;
                }
                let a = self.at(i, j).abs();
                if a > self.opts.pivot_tol && best.is_none_or(|(_, ba)| a > ba) {
                    best = Some((j, a));
                }
            }
            if let Some((j, _)) = best {
                let width = self.ncols + 1;
                self.t[i * width + self.ncols] = 0.0;
                self.pivot(i, j);
            }
        }
    }

    fn structural_values(&self) -> Vec<f64> {
        let mut x = vec![0.0; self.n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                x[b] = self.rhs(i);
            }
        }
        for j in 0..self.n {
            if self.flipped[j] {
                x[j] = -x[j];
            }
            if !self.free[j] && x[j] < 0.0 {
                x[j] = 0.0;
            }
            x[j] *= self.col_scale[j];
        }
        x
    }

    /// Row duals of the scaled minimization, mapped back to the original rows.
    fn duals(&self, phase: u8, sense_sign: f64) -> Vec<f64> {
        let cb: Vec<f64> = self.basis.iter().map(|&b| self.phase_cost(phase, b)).collect();
        (0..self.m)
            .map(|i| {
                let col = self.identity_col[i];
                let y: f64 = (0..self.m).map(|k| cb[k] * self.at(k, col)).sum();
                let y = if self.row_negated[i] { -y } else { y };
                sense_sign * y * self.row_scale[i]
            })
            .collect()
    }

    fn run(&mut self, p: &LpProblem) -> Result<LpSolution, SimplexError> {
        let sense_sign = match p.sense {
            Sense::Minimize => 1.0,
            Sense::Maximize => -1.0,
        };
        let has_art = self.kind.contains(&ColKind::Artificial);
        if has_art {
            self.iterate(1)?;
            let (_, z) = self.pricing(1);
            let bscale = (0..self.m).map(|i| self.rhs(i).abs()).fold(1.0_f64, f64::max);
            if z > self.opts.feas_tol * bscale {
                let farkas = self.duals(1, 1.0);
                return Ok(LpSolution {
                    status: LpStatus::Infeasible,
                    objective_value: f64::NAN,
                    primal: vec![0.0; self.n],
                    row_duals: farkas,
                    reduced_costs: vec![0.0; self.n],
                    iterations: self.iterations,
                });
            }
            self.expel_artificials();
        }
        match self.iterate(2)? {
            PhaseEnd::Optimal => {
                let x = self.structural_values();
                let y = self.duals(2, sense_sign);
                let reduced_costs =
                    (0..self.n).map(|j| p.objective[j] - p.rows.iter().zip(&y).map(|(r, yi)| yi * r.coeffs[j]).sum::<f64>()).collect();
                Ok(LpSolution {
                    status: LpStatus::Optimal,
                    objective_value: p.objective_at(&x),
                    primal: x,
                    row_duals: y,
                    reduced_costs,
                    iterations: self.iterations,
                })
            }
            PhaseEnd::Unbounded { entering, flip } => {
                let s = if flip { -1.0 } else { 1.0 };
                let mut ray = vec![0.0; self.n];
                if entering < self.n {
                    ray[entering] = s * if self.flipped[entering] { -1.0 } else { 1.0 };
                }
                for (i, &b) in self.basis.iter().enumerate() {
                    if b < self.n {
                        let dir = -s * self.at(i, entering);
                        ray[b] = if self.flipped[b] { -dir } else { dir };
                    }
                }
                for j in 0..self.n {
                    ray[j] *= self.col_scale[j];
                }
                Ok(LpSolution {
                    status: LpStatus::Unbounded,
                    objective_value: match p.sense {
                        Sense::Minimize => f64::NEG_INFINITY,
                        Sense::Maximize => f64::INFINITY,
                    },
                    primal: ray,
                    row_duals: vec![0.0; self.m],
                    reduced_costs: vec![0.0; self.n],
                    iterations: self.iterations,
                })
            }
        }
    }
}

enum PhaseEnd {
    Optimal,
    Unbounded { entering: usize, flip: bool },
}

/// Geometric-mean row/column equilibration rounded to powers of two.
fn equilibrate(p: &LpProblem) -> (Vec<f64>, Vec<f64>) {
    let m = p.num_rows();
    let n = p.num_vars();
    let mut rs = vec![1.0; m];
    let mut cs = vec![1.0; n];
    for _ in 0..4 {
        for i in 0..m {
            let (mut lo, mut hi) = (f64::INFINITY, 0.0_f64);
            for j in 0..n {
                let a = (p.rows[i].coeffs[j] * cs[j]).abs();
                if a > 0.0 {
                    lo = lo.min(a);
                    hi = hi.max(a);
                }
            }
            if hi > 0.0 {
                rs[i] = pow2(1.0 / (lo * hi).sqrt());
            }
        }
        for j in 0..n {
            let (mut lo, mut hi) = (f64::INFINITY, 0.0_f64);
            for i in 0..m {
                let a = (p.rows[i].coeffs[j] * rs[i]).abs();
                if a > 0.0 {
                    lo = lo.min(a);
                    hi = hi.max(a);
                }
            }
            if hi > 0.0 {
                cs[j] = pow2(1.0 / (lo * hi).sqrt());
            }
        }
    }
    (rs, cs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_variable_max() {
        let mut p = LpProblem::new(Sense::Maximize, vec![1.0]);
        p.add_row("cap", vec![1.0], Relation::Le, 1.0);
        let s = solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective_value - 1.0).abs() < 1e-12);
        assert!((s.row_duals[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_feasible_set() {
        let mut p = LpProblem::new(Sense::Minimize, vec![0.0]);
        p.add_row("lo", vec![1.0], Relation::Ge, 1.0);
        p.add_row("hi", vec![1.0], Relation::Le, 0.0);
        assert_eq!(solve(&p).unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_ray_improves() {
        let mut p = LpProblem::new(Sense::Maximize, vec![1.0, 1.0]);
        p.add_row("r", vec![1.0, -1.0], Relation::Le, 1.0);
        let s = solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Unbounded);
        let d = &s.primal;
        assert!(d.iter().all(|v| *v >= -1e-12));
        assert!(d[0] - d[1] <= 1e-12);
        assert!(d[0] + d[1] > 0.0);
    }

    #[test]
    fn free_variable_goes_negative() {
        // min x  s.t. x >= -3, x free
        let mut p = LpProblem::new(Sense::Minimize, vec![1.0]);
        p.set_free(0);
        p.add_row("lb", vec![1.0], Relation::Ge, -3.0);
        let s = solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.primal[0] + 3.0).abs() < 1e-12);
        assert!((s.row_duals[0] - 1.0).abs() < 1e-12);
        assert!((s.dual_objective(&p) - s.objective_value).abs() < 1e-12);
    }

    #[test]
    fn equality_duals_and_gap() {
        // max 3x + 2y  s.t. x + y = 4, x + 3y <= 6, x <= 3
        let mut p = LpProblem::new(Sense::Maximize, vec![3.0, 2.0]);
        p.add_row("sum", vec![1.0, 1.0], Relation::Eq, 4.0);
        p.add_row("mix", vec![1.0, 3.0], Relation::Le, 6.0);
        p.add_row("capx", vec![1.0, 0.0], Relation::Le, 3.0);
        let s = solve(&p).unwrap();
        assert!((s.objective_value - 11.0).abs() < 1e-10);
        assert!((s.dual_objective(&p) - 11.0).abs() < 1e-10);
        assert!(s.reduced_costs.iter().all(|d| d.abs() < 1e-10 || *d < 0.0));
    }

    #[test]
    fn beale_cycling_example_terminates() {
        // Beale (1955): cycles under the textbook Dantzig rule without anti-cycling.
        let mut p = LpProblem::new(Sense::Minimize, vec![-0.75, 150.0, -0.02, 6.0]);
        p.add_row("r1", vec![0.25, -60.0, -0.04, 9.0], Relation::Le, 0.0);
        p.add_row("r2", vec![0.5, -90.0, -0.02, 3.0], Relation::Le, 0.0);
        p.add_row("r3", vec![0.0, 0.0, 1.0, 0.0], Relation::Le, 1.0);
        let s = solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective_value + 0.05).abs() < 1e-9);
    }

    #[test]
    fn deterministic() {
        let mut p = LpProblem::new(Sense::Maximize, vec![1.0, 1.0, 1.0]);
        p.add_row("a", vec![1.0, 1.0, 0.0], Relation::Le, 1.0);
        p.add_row("b", vec![0.0, 1.0, 1.0], Relation::Le, 1.0);
        p.add_row("c", vec![1.0, 0.0, 1.0], Relation::Le, 1.0);
        assert_eq!(solve(&p).unwrap(), solve(&p).unwrap());
    }

    #[test]
    fn malformed_row_rejected() {
        let mut p = LpProblem::new(Sense::Minimize, vec![1.0, 1.0]);
        p.add_row("bad", vec![1.0], Relation::Le, 1.0);
        assert!(matches!(solve(&p), Err(SimplexError::Malformed(_))));
    }
}

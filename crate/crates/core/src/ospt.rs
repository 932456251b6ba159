//! Stage II: super virtual gap of a top-tier DMU against the rest of the tier.
//!
//! The adjustment program now lets the assessed DMU worsen (raise inputs by
//! `q`, lower outputs by `p`) until a combination of the other top-tier DMUs
//! matches it. The smaller the total adjustment, the less the DMU stands out;
//! the reported gap is the negated normalized optimum, so the most
//! outstanding DMU has the most negative gap.

use crate::error::{AssessError, MatrixError};
use crate::layout::{dmu_index, Layout};
use crate::matrix::DecisionMatrix;
use crate::model::{AdjustmentVector, PriceVector, ScscKind, ScscReport, Stage, StageResult, VirtualPair};
use crate::simplex::{self, LpProblem, Relation, Sense};
use crate::tolerance::Tolerances;

/// Column indices of `top_tier \ {o}` in matrix order, after checking membership.
fn comparison_set<S: AsRef<str>>(mx: &DecisionMatrix, top_tier: &[S], o: &str) -> Result<(usize, Vec<usize>), AssessError> {
    let oi = dmu_index(mx, o)?;
    let mut members = Vec::with_capacity(top_tier.len());
    for name in top_tier {
        let j = dmu_index(mx, name.as_ref())?;
        if members.contains(&j) {
            return Err(MatrixError::DuplicateName(name.as_ref().to_string()).into());
        }
        members.push(j);
    }
    if !members.contains(&oi) {
        return Err(AssessError::NotInTopTier(o.to_string()));
    }
    if members.len() == 1 {
        return Err(AssessError::SoleEfficient(o.to_string()));
    }
    members.sort_unstable();
    members.retain(|&j| j != oi);
    Ok((oi, members))
}

/// Adjustment-price program of top-tier DMU `o` at goal price `tau`.
///
/// Variables are `(pi_j for j in top_tier \ {o}, q_1..q_m, p_1..p_s)`, all
/// nonnegative. Rows (all `>=`): one per input, one per output, then one
/// Likert row per ordinal input and per ordinal output.
pub fn build_ospt_tap<S: AsRef<str>>(matrix: &DecisionMatrix, top_tier: &[S], o: &str, tau: f64) -> Result<LpProblem, AssessError> {
    let (oi, cols) = comparison_set(matrix, top_tier, o)?;
    Ok(tap(matrix, &Layout::new(matrix), oi, &cols, tau))
}

/// Total-virtual-gap program of top-tier DMU `o` at goal price `tau`.
///
/// Variables are `(v, u, dx, dy)`, all nonnegative. Rows (all `<=`): one
/// per comparison DMU, then one goal-price row per input and per output.
pub fn build_ospt_tvg<S: AsRef<str>>(matrix: &DecisionMatrix, top_tier: &[S], o: &str, tau: f64) -> Result<LpProblem, AssessError> {
    let (oi, cols) = comparison_set(matrix, top_tier, o)?;
    Ok(tvg(matrix, &Layout::new(matrix), oi, &cols, tau))
}

fn tap(mx: &DecisionMatrix, lay: &Layout, o: usize, cols: &[usize], tau: f64) -> LpProblem {
    let n = cols.len();
    let (m, s) = (lay.m(), lay.s());
    let nv = n + m + s;
    let mut obj = vec![0.0; nv];
    obj[n..].iter_mut().for_each(|c| *c = tau);
    let mut lp = LpProblem::new(Sense::Minimize, obj);

    let mut labels: Vec<String> = cols.iter().map(|&j| format!("pi[{}]", mx.dmu_names()[j])).collect();
    labels.extend(lay.inputs.iter().map(|&i| format!("q[{}]", mx.metrics()[i].name)));
    labels.extend(lay.outputs.iter().map(|&r| format!("p[{}]", mx.metrics()[r].name)));
    lp.set_labels(labels);

    for (k, &i) in lay.inputs.iter().enumerate() {
        let mut row = vec![0.0; nv];
        for (t, &j) in cols.iter().enumerate() {
            row[t] = -mx.value(i, j);
        }
        row[n + k] = mx.value(i, o);
        lp.add_row(format!("input[{}]", mx.metrics()[i].name), row, Relation::Ge, -mx.value(i, o));
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let mut row = vec![0.0; nv];
        for (t, &j) in cols.iter().enumerate() {
            row[t] = mx.value(r, j);
        }
        row[n + m + k] = mx.value(r, o);
        lp.add_row(format!("output[{}]", mx.metrics()[r].name), row, Relation::Ge, mx.value(r, o));
    }
    for &(k, _, upper) in &lay.ord_inputs {
        let i = lay.inputs[k];
        let x = mx.value(i, o);
        let mut row = vec![0.0; nv];
        row[n + k] = -x;
        lp.add_row(format!("likert-ceiling[{}]", mx.metrics()[i].name), row, Relation::Ge, x - upper);
    }
    for &(k, lower, _) in &lay.ord_outputs {
        let r = lay.outputs[k];
        let y = mx.value(r, o);
        let mut row = vec![0.0; nv];
        row[n + m + k] = -y;
        lp.add_row(format!("likert-floor[{}]", mx.metrics()[r].name), row, Relation::Ge, lower - y);
    }
    lp
}

/// Coefficients of the penalized virtual input `V x_o + Dx (U - x_o)`.
fn alpha_coeffs(mx: &DecisionMatrix, lay: &Layout, o: usize) -> Vec<f64> {
    let (m, s) = (lay.m(), lay.s());
    let mut c = vec![0.0; lay.n_price_vars()];
    for (k, &i) in lay.inputs.iter().enumerate() {
        c[k] = mx.value(i, o);
    }
    for (t, &(k, _, upper)) in lay.ord_inputs.iter().enumerate() {
        c[m + s + t] = upper - mx.value(lay.inputs[k], o);
    }
    c
}

/// Coefficients of the penalized virtual output `U y_o + Dy (L - y_o)`.
fn beta_coeffs(mx: &DecisionMatrix, lay: &Layout, o: usize) -> Vec<f64> {
    let (m, s) = (lay.m(), lay.s());
    let kx = lay.ord_inputs.len();
    let mut c = vec![0.0; lay.n_price_vars()];
    for (k, &r) in lay.outputs.iter().enumerate() {
        c[m + k] = mx.value(r, o);
    }
    for (t, &(k, lower, _)) in lay.ord_outputs.iter().enumerate() {
        c[m + s + kx + t] = lower - mx.value(lay.outputs[k], o);
    }
    c
}

fn tvg(mx: &DecisionMatrix, lay: &Layout, o: usize, cols: &[usize], tau: f64) -> LpProblem {
    let (m, s) = (lay.m(), lay.s());
    let kx = lay.ord_inputs.len();
    let nv = lay.n_price_vars();
    let a = alpha_coeffs(mx, lay, o);
    let b = beta_coeffs(mx, lay, o);
    let obj: Vec<f64> = b.iter().zip(&a).map(|(y, x)| y - x).collect();
    let mut lp = LpProblem::new(Sense::Maximize, obj);
    let mut labels: Vec<String> = lay.inputs.iter().map(|&i| format!("v[{}]", mx.metrics()[i].name)).collect();
    labels.extend(lay.outputs.iter().map(|&r| format!("u[{}]", mx.metrics()[r].name)));
    labels.extend(lay.ord_inputs.iter().map(|&(k, _, _)| format!("dx[{}]", mx.metrics()[lay.inputs[k]].name)));
    labels.extend(lay.ord_outputs.iter().map(|&(k, _, _)| format!("dy[{}]", mx.metrics()[lay.outputs[k]].name)));
    lp.set_labels(labels);

    for &j in cols {
        let mut row = vec![0.0; nv];
        for (k, &i) in lay.inputs.iter().enumerate() {
            row[k] = -mx.value(i, j);
        }
        for (k, &r) in lay.outputs.iter().enumerate() {
            row[m + k] = mx.value(r, j);
        }
        lp.add_row(format!("gap[{}]", mx.dmu_names()[j]), row, Relation::Le, 0.0);
    }
    for (k, &i) in lay.inputs.iter().enumerate() {
        let x = mx.value(i, o);
        let mut row = vec![0.0; nv];
        row[k] = x;
        if let Some(t) = lay.ord_inputs.iter().position(|e| e.0 == k) {
            row[m + s + t] = -x;
        }
        lp.add_row(format!("goal[{}]", mx.metrics()[i].name), row, Relation::Le, tau);
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let y = mx.value(r, o);
        let mut row = vec![0.0; nv];
        row[m + k] = y;
        if let Some(t) = lay.ord_outputs.iter().position(|e| e.0 == k) {
            row[m + s + kx + t] = -y;
        }
        lp.add_row(format!("goal[{}]", mx.metrics()[r].name), row, Relation::Le, tau);
    }
    lp
}

fn prices_from_vars(lay: &Layout, x: &[f64], tau: f64) -> PriceVector {
    let (m, s) = (lay.m(), lay.s());
    let kx = lay.ord_inputs.len();
    let mut dx = vec![0.0; m];
    let mut dy = vec![0.0; s];
    for (t, &(k, _, _)) in lay.ord_inputs.iter().enumerate() {
        dx[k] = x[m + s + t];
    }
    for (t, &(k, _, _)) in lay.ord_outputs.iter().enumerate() {
        dy[k] = x[m + s + kx + t];
    }
    PriceVector { tau, v: x[..m].to_vec(), u: x[m..m + s].to_vec(), dx, dy }
}

fn pack_prices(lay: &Layout, p: &PriceVector) -> Vec<f64> {
    let mut x = Vec::with_capacity(lay.n_price_vars());
    x.extend_from_slice(&p.v);
    x.extend_from_slice(&p.u);
    x.extend(lay.ord_inputs.iter().map(|&(k, _, _)| p.dx[k]));
    x.extend(lay.ord_outputs.iter().map(|&(k, _, _)| p.dy[k]));
    x
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Among the optimal price vectors, the one with the largest virtual output
/// (ordinal outputs held to nonnegative penalized prices when possible).
fn select_prices(
    mx: &DecisionMatrix,
    lay: &Layout,
    o: usize,
    cols: &[usize],
    optimum: f64,
    tol: &Tolerances,
) -> Result<Option<PriceVector>, AssessError> {
    let mut lp = tvg(mx, lay, o, cols, 1.0);
    let gap = lp.objective.clone();
    lp.add_row("optimal-face", gap, Relation::Ge, optimum - 1e-10 * (1.0 + optimum.abs()));
    lp.objective = beta_coeffs(mx, lay, o);
    let plain = lp.clone();
    let (m, s) = (lay.m(), lay.s());
    let kx = lay.ord_inputs.len();
    for (t, &(k, lower, _)) in lay.ord_outputs.iter().enumerate() {
        let r = lay.outputs[k];
        let mut row = vec![0.0; lay.n_price_vars()];
        row[m + k] = mx.value(r, o);
        row[m + s + kx + t] = lower - mx.value(r, o);
        lp.add_row(format!("metric-price[{}]", mx.metrics()[r].name), row, Relation::Ge, 0.0);
    }
    for candidate in [lp, plain] {
        let sol = simplex::solve_with(&candidate, &tol.simplex).map_err(|e| AssessError::solver(&mx.dmu_names()[o], e))?;
        if sol.is_optimal() {
            return Ok(Some(prices_from_vars(lay, &sol.primal, 1.0)));
        }
    }
    Ok(None)
}

/// Stage II assessment of `o` against the rest of `top_tier`, default tolerances.
pub fn assess_ospt<S: AsRef<str>>(matrix: &DecisionMatrix, top_tier: &[S], o: &str) -> Result<StageResult, AssessError> {
    assess_ospt_with(matrix, top_tier, o, &Tolerances::from_env())
}

pub fn assess_ospt_with<S: AsRef<str>>(
    matrix: &DecisionMatrix,
    top_tier: &[S],
    o: &str,
    tol: &Tolerances,
) -> Result<StageResult, AssessError> {
    let (oi, cols) = comparison_set(matrix, top_tier, o)?;
    let lay = Layout::new(matrix);
    let n = cols.len();
    let (m, s) = (lay.m(), lay.s());

    let program = tap(matrix, &lay, oi, &cols, 1.0);
    let sol = simplex::solve_with(&program, &tol.simplex).map_err(|e| AssessError::solver(o, e))?;
    if !sol.is_optimal() {
        return Err(AssessError::UnexpectedStatus { dmu: o.to_string(), status: sol.status });
    }
    let step1 = sol.objective_value.max(0.0);
    let (raw, selected) = match select_prices(matrix, &lay, oi, &cols, step1, tol)? {
        Some(p) => (p, true),
        None => (prices_from_vars(&lay, &sol.row_duals, 1.0), false),
    };
    let beta1 = dot(&beta_coeffs(matrix, &lay, oi), &pack_prices(&lay, &raw));
    if !(beta1.is_finite() && beta1 > tol.normalizer) {
        return Err(AssessError::NumericalBreakdown {
            dmu: o.to_string(),
            reason: format!("Step I virtual output {beta1:e} is too small to rescale by; no nonzero optimal prices"),
        });
    }

    let t_bar = 1.0 / beta1;
    let prices = raw.scaled(t_bar);
    let packed = pack_prices(&lay, &prices);
    let pi = sol.primal[..n].to_vec();
    let q = sol.primal[n..n + m].to_vec();
    let p = sol.primal[n + m..n + m + s].to_vec();
    let internal = t_bar * step1;
    let alpha_star = dot(&alpha_coeffs(matrix, &lay, oi), &packed);
    let beta_star = dot(&beta_coeffs(matrix, &lay, oi), &packed);

    let targets_x: Vec<f64> = lay.inputs.iter().zip(&q).map(|(&i, qi)| matrix.value(i, oi) * (1.0 + qi)).collect();
    let targets_y: Vec<f64> = lay.outputs.iter().zip(&p).map(|(&r, pr)| matrix.value(r, oi) * (1.0 - pr)).collect();
    let benchmark_alpha = dot(&targets_x, &prices.v);
    let benchmark_beta = dot(&targets_y, &prices.u);

    let pairs = cols
        .iter()
        .map(|&j| VirtualPair {
            dmu: matrix.dmu_names()[j].clone(),
            alpha: prices.virtual_input(matrix, j),
            beta: prices.virtual_output(matrix, j),
        })
        .collect();
    let peers = cols.iter().zip(&pi).filter(|(_, &w)| w > tol.peer).map(|(&j, _)| matrix.dmu_names()[j].clone()).collect();
    let metric_prices = metric_prices(matrix, &lay, oi, &prices);

    let mut result = StageResult {
        dmu: o.to_string(),
        stage: Stage::Super,
        step1_objective: step1,
        t_bar,
        tau_star: prices.tau,
        internal_objective: internal,
        gap_star: -internal,
        prices,
        adjustments: AdjustmentVector { q, p, pi },
        comparison: cols.iter().map(|&j| matrix.dmu_names()[j].clone()).collect(),
        alpha_star,
        beta_star,
        pairs,
        targets_x,
        targets_y,
        benchmark_alpha,
        benchmark_beta,
        inefficiency: alpha_star / beta_star,
        efficiency: beta_star / alpha_star,
        peers,
        scsc: ScscReport::default(),
        metric_prices,
        prices_selected: selected,
    };
    result.scsc = verify_scsc_ospt_with(matrix, &result, tol);
    if result.scsc.max_abs_product > tol.scsc {
        return Err(AssessError::ScscViolation { dmu: o.to_string(), max_product: result.scsc.max_abs_product });
    }
    Ok(result)
}

fn metric_prices(mx: &DecisionMatrix, lay: &Layout, o: usize, pr: &PriceVector) -> Vec<f64> {
    let mut e = vec![0.0; mx.n_metrics()];
    for (k, &i) in lay.inputs.iter().enumerate() {
        let x = mx.value(i, o);
        e[i] = match mx.metrics()[i].likert() {
            Some((_, upper)) => x * (pr.v[k] - pr.dx[k]) + upper * pr.dx[k],
            None => x * pr.v[k],
        };
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let y = mx.value(r, o);
        e[r] = match mx.metrics()[r].likert() {
            Some((lower, _)) => y * (pr.u[k] - pr.dy[k]) + lower * pr.dy[k],
            None => y * pr.u[k],
        };
    }
    e
}

pub fn verify_scsc_ospt(matrix: &DecisionMatrix, result: &StageResult) -> ScscReport {
    verify_scsc_ospt_with(matrix, result, &Tolerances::from_env())
}

/// Recomputes every complementary-slackness product of a Stage II result.
pub fn verify_scsc_ospt_with(mx: &DecisionMatrix, res: &StageResult, tol: &Tolerances) -> ScscReport {
    let lay = Layout::new(mx);
    let o = mx.dmu_index(&res.dmu).expect("result belongs to this matrix");
    let cols: Vec<usize> = res.comparison.iter().map(|d| mx.dmu_index(d).expect("comparison DMU")).collect();
    let adj = &res.adjustments;
    let pr = &res.prices;
    let z = tol.zero;
    let tau = pr.tau;
    let mut rep = ScscReport::default();
    let combo = |metric: usize| -> f64 { cols.iter().zip(&adj.pi).map(|(&j, w)| mx.value(metric, j) * w).sum() };

    for (k, &i) in lay.inputs.iter().enumerate() {
        let x = mx.value(i, o);
        let left = x * (1.0 + adj.q[k]) - combo(i);
        rep.push(ScscKind::InputBalance, &mx.metrics()[i].name, left, pr.v[k], z * (1.0 + x), z * (1.0 + tau) / x);
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let y = mx.value(r, o);
        let left = combo(r) - y * (1.0 - adj.p[k]);
        rep.push(ScscKind::OutputBalance, &mx.metrics()[r].name, left, pr.u[k], z * (1.0 + y), z * (1.0 + tau) / y);
    }
    for &(k, _, upper) in &lay.ord_inputs {
        let i = lay.inputs[k];
        let x = mx.value(i, o);
        let left = upper - x * (1.0 + adj.q[k]);
        rep.push(ScscKind::LikertInput, &mx.metrics()[i].name, left, pr.dx[k], z * (1.0 + x), z * (1.0 + tau) / x);
    }
    for &(k, lower, _) in &lay.ord_outputs {
        let r = lay.outputs[k];
        let y = mx.value(r, o);
        let left = y * (1.0 - adj.p[k]) - lower;
        rep.push(ScscKind::LikertOutput, &mx.metrics()[r].name, left, pr.dy[k], z * (1.0 + y), z * (1.0 + tau) / y);
    }
    for (t, &j) in cols.iter().enumerate() {
        let gap = pr.virtual_input(mx, j) - pr.virtual_output(mx, j);
        rep.push(ScscKind::DmuGap, &mx.dmu_names()[j], gap, adj.pi[t], z * (1.0 + tau), z);
    }
    for (k, &i) in lay.inputs.iter().enumerate() {
        let left = tau - mx.value(i, o) * (pr.v[k] - pr.dx[k]);
        rep.push(ScscKind::GoalPrice, &mx.metrics()[i].name, left, adj.q[k], z * (1.0 + tau), z);
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let left = tau - mx.value(r, o) * (pr.u[k] - pr.dy[k]);
        rep.push(ScscKind::GoalPrice, &mx.metrics()[r].name, left, adj.p[k], z * (1.0 + tau), z);
    }
    rep
}

//! Stage I: best-practice virtual gap of every DMU against all DMUs.
//!
//! Each DMU is assessed through a pair of programs. The adjustment-price
//! program (TAP) chooses input reductions `q`, output expansions `p` and
//! intensities `pi`; its dual, the total-virtual-gap program (TVG), chooses
//! virtual unit prices and Likert adjustments. Step I runs at a goal price
//! of $1; Step II rescales by `t = 1/alpha#` so the assessed DMU's virtual
//! input is $1 and the gap lies in `[0, 1)`.

use crate::error::AssessError;
use crate::layout::{dmu_index, Layout};
use crate::matrix::DecisionMatrix;
use crate::model::{AdjustmentVector, PriceVector, ScscKind, ScscReport, Stage, StageResult, VirtualPair};
use crate::simplex::{self, LpProblem, LpSolution, Relation, Sense};
use crate::tolerance::Tolerances;

/// Adjustment-price program of DMU `o` at goal price `tau`.
///
/// Variables are `(pi_1..pi_n, q_1..q_m, p_1..p_s)`, all nonnegative. Rows:
/// one equality per input and per output, then one `<=` Likert row per
/// ordinal input and per ordinal output.
pub fn build_obpt_tap(matrix: &DecisionMatrix, o: &str, tau: f64) -> Result<LpProblem, AssessError> {
    let o = dmu_index(matrix, o)?;
    Ok(tap(matrix, &Layout::new(matrix), o, tau))
}

/// Total-virtual-gap program of DMU `o` at goal price `tau`.
///
/// Variables are `(v_1..v_m, u_1..u_s)` (free) followed by the Likert
/// adjustments of the ordinal inputs and outputs (nonnegative). Rows: one
/// `>=` row per DMU, then one goal-price row per input and per output.
pub fn build_obpt_tvg(matrix: &DecisionMatrix, o: &str, tau: f64) -> Result<LpProblem, AssessError> {
    let o = dmu_index(matrix, o)?;
    Ok(tvg(matrix, &Layout::new(matrix), o, tau))
}

fn tap(mx: &DecisionMatrix, lay: &Layout, o: usize, tau: f64) -> LpProblem {
    let n = mx.n_dmus();
    let (m, s) = (lay.m(), lay.s());
    let nv = n + m + s;
    let mut obj = vec![0.0; nv];
    obj[n..].iter_mut().for_each(|c| *c = tau);
    let mut lp = LpProblem::new(Sense::Maximize, obj);

    let mut labels: Vec<String> = mx.dmu_names().iter().map(|d| format!("pi[{d}]")).collect();
    labels.extend(lay.inputs.iter().map(|&i| format!("q[{}]", mx.metrics()[i].name)));
    labels.extend(lay.outputs.iter().map(|&r| format!("p[{}]", mx.metrics()[r].name)));
    lp.set_labels(labels);

    for (k, &i) in lay.inputs.iter().enumerate() {
        let mut row = vec![0.0; nv];
        row[..n].copy_from_slice(mx.row(i));
        row[n + k] = mx.value(i, o);
        lp.add_row(format!("input[{}]", mx.metrics()[i].name), row, Relation::Eq, mx.value(i, o));
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let mut row = vec![0.0; nv];
        for j in 0..n {
            row[j] = -mx.value(r, j);
        }
        row[n + m + k] = mx.value(r, o);
        lp.add_row(format!("output[{}]", mx.metrics()[r].name), row, Relation::Eq, -mx.value(r, o));
    }
    for &(k, lower, _) in &lay.ord_inputs {
        let i = lay.inputs[k];
        let x = mx.value(i, o);
        let mut row = vec![0.0; nv];
        row[n + k] = x;
        lp.add_row(format!("likert-floor[{}]", mx.metrics()[i].name), row, Relation::Le, x - lower);
    }
    for &(k, _, upper) in &lay.ord_outputs {
        let r = lay.outputs[k];
        let y = mx.value(r, o);
        let mut row = vec![0.0; nv];
        row[n + m + k] = y;
        lp.add_row(format!("likert-ceiling[{}]", mx.metrics()[r].name), row, Relation::Le, upper - y);
    }
    lp
}

/// Objective coefficients of the virtual input, penalties included.
fn alpha_coeffs(mx: &DecisionMatrix, lay: &Layout, o: usize) -> Vec<f64> {
    let (m, s) = (lay.m(), lay.s());
    let mut c = vec![0.0; lay.n_price_vars()];
    for (k, &i) in lay.inputs.iter().enumerate() {
        c[k] = mx.value(i, o);
    }
    for (t, &(k, lower, _)) in lay.ord_inputs.iter().enumerate() {
        c[m + s + t] = mx.value(lay.inputs[k], o) - lower;
    }
    c
}

/// Objective coefficients of the virtual output, penalties included.
fn beta_coeffs(mx: &DecisionMatrix, lay: &Layout, o: usize) -> Vec<f64> {
    let (m, s) = (lay.m(), lay.s());
    let kx = lay.ord_inputs.len();
    let mut c = vec![0.0; lay.n_price_vars()];
    for (k, &r) in lay.outputs.iter().enumerate() {
        c[m + k] = mx.value(r, o);
    }
    for (t, &(k, _, upper)) in lay.ord_outputs.iter().enumerate() {
        c[m + s + kx + t] = mx.value(lay.outputs[k], o) - upper;
    }
    c
}

fn tvg(mx: &DecisionMatrix, lay: &Layout, o: usize, tau: f64) -> LpProblem {
    let n = mx.n_dmus();
    let (m, s) = (lay.m(), lay.s());
    let kx = lay.ord_inputs.len();
    let nv = lay.n_price_vars();
    let a = alpha_coeffs(mx, lay, o);
    let b = beta_coeffs(mx, lay, o);
    let obj: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    let mut lp = LpProblem::new(Sense::Minimize, obj);
    for k in 0..m + s {
        lp.set_free(k);
    }
    let mut labels: Vec<String> = lay.inputs.iter().map(|&i| format!("v[{}]", mx.metrics()[i].name)).collect();
    labels.extend(lay.outputs.iter().map(|&r| format!("u[{}]", mx.metrics()[r].name)));
    labels.extend(lay.ord_inputs.iter().map(|&(k, _, _)| format!("dx[{}]", mx.metrics()[lay.inputs[k]].name)));
    labels.extend(lay.ord_outputs.iter().map(|&(k, _, _)| format!("dy[{}]", mx.metrics()[lay.outputs[k]].name)));
    lp.set_labels(labels);

    for j in 0..n {
        let mut row = vec![0.0; nv];
        for (k, &i) in lay.inputs.iter().enumerate() {
            row[k] = mx.value(i, j);
        }
        for (k, &r) in lay.outputs.iter().enumerate() {
            row[m + k] = -mx.value(r, j);
        }
        lp.add_row(format!("gap[{}]", mx.dmu_names()[j]), row, Relation::Ge, 0.0);
    }
    for (k, &i) in lay.inputs.iter().enumerate() {
        let x = mx.value(i, o);
        let mut row = vec![0.0; nv];
        row[k] = x;
        if let Some(t) = lay.ord_inputs.iter().position(|e| e.0 == k) {
            row[m + s + t] = x;
        }
        lp.add_row(format!("goal[{}]", mx.metrics()[i].name), row, Relation::Ge, tau);
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let y = mx.value(r, o);
        let mut row = vec![0.0; nv];
        row[m + k] = y;
        if let Some(t) = lay.ord_outputs.iter().position(|e| e.0 == k) {
            row[m + s + kx + t] = y;
        }
        lp.add_row(format!("goal[{}]", mx.metrics()[r].name), row, Relation::Ge, tau);
    }
    lp
}

/// Unpacks TVG variables into a price vector (Likert entries expanded per metric).
fn prices_from_tvg(lay: &Layout, x: &[f64], tau: f64) -> PriceVector {
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

/// Row duals of the TAP program are the TVG variables in the same layout.
fn prices_from_tap_duals(lay: &Layout, sol: &LpSolution, tau: f64) -> PriceVector {
    prices_from_tvg(lay, &sol.row_duals, tau)
}

fn pack_prices(lay: &Layout, p: &PriceVector) -> Vec<f64> {
    let mut x = Vec::with_capacity(lay.n_price_vars());
    x.extend_from_slice(&p.v);
    x.extend_from_slice(&p.u);
    x.extend(lay.ord_inputs.iter().map(|&(k, _, _)| p.dx[k]));
    x.extend(lay.ord_outputs.iter().map(|&(k, _, _)| p.dy[k]));
    x
}

/// Among the optimal price vectors, the one with the smallest virtual input.
///
/// The Step I optimum of an efficient DMU usually has a whole face of
/// optimal prices, so `alpha#` (and with it the goal price) is not fixed by
/// the gap program alone. Minimizing `alpha#` over the optimal face gives a
/// unique normalization: the largest goal price, and for an inefficient DMU
/// with several optimal price vectors the largest normalized gap. Ordinal
/// metrics are held to nonnegative penalized prices when the face allows it.
/// A choice whose virtual output is not positive would put the normalized
/// gap at or above $1; the face is then searched for the largest virtual
/// output instead.
fn select_prices(mx: &DecisionMatrix, lay: &Layout, o: usize, optimum: f64, tol: &Tolerances) -> Result<Option<PriceVector>, AssessError> {
    let mut lp = tvg(mx, lay, o, 1.0);
    let gap = lp.objective.clone();
    lp.add_row("optimal-face", gap, Relation::Le, optimum + 1e-10 * (1.0 + optimum.abs()));
    lp.objective = alpha_coeffs(mx, lay, o);
    let plain = lp.clone();
    let mut widest = lp.clone();
    widest.sense = Sense::Maximize;
    widest.objective = beta_coeffs(mx, lay, o);
    for (label, row) in ordinal_price_rows(mx, lay, o) {
        lp.add_row(label, row, Relation::Ge, 0.0);
    }
    for candidate in [lp, plain, widest] {
        let sol = simplex::solve_with(&candidate, &tol.simplex).map_err(|e| AssessError::solver(&mx.dmu_names()[o], e))?;
        if sol.is_optimal() {
            let prices = prices_from_tvg(lay, &sol.primal, 1.0);
            if penalized_beta(mx, lay, o, &prices) > tol.normalizer {
                return Ok(Some(prices));
            }
        }
    }
    Ok(None)
}

/// Coefficients of the penalized virtual price of each ordinal metric.
fn ordinal_price_rows(mx: &DecisionMatrix, lay: &Layout, o: usize) -> Vec<(String, Vec<f64>)> {
    let (m, s) = (lay.m(), lay.s());
    let kx = lay.ord_inputs.len();
    let mut rows = Vec::new();
    for (t, &(k, lower, _)) in lay.ord_inputs.iter().enumerate() {
        let i = lay.inputs[k];
        let mut row = vec![0.0; lay.n_price_vars()];
        row[k] = mx.value(i, o);
        row[m + s + t] = mx.value(i, o) - lower;
        rows.push((format!("metric-price[{}]", mx.metrics()[i].name), row));
    }
    for (t, &(k, _, upper)) in lay.ord_outputs.iter().enumerate() {
        let r = lay.outputs[k];
        let mut row = vec![0.0; lay.n_price_vars()];
        row[m + k] = mx.value(r, o);
        row[m + s + kx + t] = mx.value(r, o) - upper;
        rows.push((format!("metric-price[{}]", mx.metrics()[r].name), row));
    }
    rows
}

fn penalized_alpha(mx: &DecisionMatrix, lay: &Layout, o: usize, p: &PriceVector) -> f64 {
    alpha_coeffs(mx, lay, o).iter().zip(pack_prices(lay, p)).map(|(c, x)| c * x).sum()
}

fn penalized_beta(mx: &DecisionMatrix, lay: &Layout, o: usize, p: &PriceVector) -> f64 {
    beta_coeffs(mx, lay, o).iter().zip(pack_prices(lay, p)).map(|(c, x)| c * x).sum()
}

/// Stage I assessment of DMU `o` with default tolerances.
pub fn assess_obpt(matrix: &DecisionMatrix, o: &str) -> Result<StageResult, AssessError> {
    assess_obpt_with(matrix, o, &Tolerances::from_env())
}

pub fn assess_obpt_with(matrix: &DecisionMatrix, o: &str, tol: &Tolerances) -> Result<StageResult, AssessError> {
    let oi = dmu_index(matrix, o)?;
    let lay = Layout::new(matrix);
    let n = matrix.n_dmus();
    let (m, s) = (lay.m(), lay.s());

    // Step I at a goal price of $1.
    let program = tap(matrix, &lay, oi, 1.0);
    let sol = simplex::solve_with(&program, &tol.simplex).map_err(|e| AssessError::solver(o, e))?;
    if !sol.is_optimal() {
        return Err(AssessError::UnexpectedStatus { dmu: o.to_string(), status: sol.status });
    }
    let step1 = sol.objective_value.max(0.0);
    let (raw, selected) = match select_prices(matrix, &lay, oi, step1, tol)? {
        Some(p) => (p, true),
        None => (prices_from_tap_duals(&lay, &sol, 1.0), false),
    };
    let alpha1 = penalized_alpha(matrix, &lay, oi, &raw);
    if !(alpha1.is_finite() && alpha1 > tol.normalizer) {
        return Err(AssessError::NumericalBreakdown {
            dmu: o.to_string(),
            reason: format!("Step I virtual input {alpha1:e} is too small to rescale by"),
        });
    }

    // Step II: rescale prices, goal price and gap; ratios and intensities carry over.
    let t_bar = 1.0 / alpha1;
    let prices = raw.scaled(t_bar);
    let pi = sol.primal[..n].to_vec();
    let q = sol.primal[n..n + m].to_vec();
    let p = sol.primal[n + m..n + m + s].to_vec();
    let internal = t_bar * step1;
    let alpha_star = penalized_alpha(matrix, &lay, oi, &prices);
    let beta_star = penalized_beta(matrix, &lay, oi, &prices);

    let targets_x: Vec<f64> = lay.inputs.iter().zip(&q).map(|(&i, qi)| matrix.value(i, oi) * (1.0 - qi)).collect();
    let targets_y: Vec<f64> = lay.outputs.iter().zip(&p).map(|(&r, pr)| matrix.value(r, oi) * (1.0 + pr)).collect();
    let benchmark_alpha = targets_x.iter().zip(&prices.v).map(|(x, v)| x * v).sum();
    let benchmark_beta = targets_y.iter().zip(&prices.u).map(|(y, u)| y * u).sum();

    let pairs: Vec<VirtualPair> = (0..n)
        .map(|j| VirtualPair {
            dmu: matrix.dmu_names()[j].clone(),
            alpha: prices.virtual_input(matrix, j),
            beta: prices.virtual_output(matrix, j),
        })
        .collect();
    let peers = (0..n).filter(|&j| pi[j] > tol.peer).map(|j| matrix.dmu_names()[j].clone()).collect();
    let metric_prices = metric_prices(matrix, &lay, oi, &prices);

    let mut result = StageResult {
        dmu: o.to_string(),
        stage: Stage::BestPractice,
        step1_objective: step1,
        t_bar,
        tau_star: prices.tau,
        internal_objective: internal,
        gap_star: internal,
        prices,
        adjustments: AdjustmentVector { q, p, pi },
        comparison: matrix.dmu_names().to_vec(),
        alpha_star,
        beta_star,
        pairs,
        targets_x,
        targets_y,
        benchmark_alpha,
        benchmark_beta,
        inefficiency: internal / alpha_star,
        efficiency: beta_star / alpha_star,
        peers,
        scsc: ScscReport::default(),
        metric_prices,
        prices_selected: selected,
    };
    result.scsc = verify_scsc_obpt_with(matrix, &result, tol);
    if result.scsc.max_abs_product > tol.scsc {
        return Err(AssessError::ScscViolation { dmu: o.to_string(), max_product: result.scsc.max_abs_product });
    }
    Ok(result)
}

/// Per-metric virtual cost, Likert penalties included (matrix metric order).
fn metric_prices(mx: &DecisionMatrix, lay: &Layout, o: usize, pr: &PriceVector) -> Vec<f64> {
    let mut e = vec![0.0; mx.n_metrics()];
    for (k, &i) in lay.inputs.iter().enumerate() {
        let x = mx.value(i, o);
        e[i] = match mx.metrics()[i].likert() {
            Some((lower, _)) => x * (pr.v[k] + pr.dx[k]) - lower * pr.dx[k],
            None => x * pr.v[k],
        };
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let y = mx.value(r, o);
        e[r] = match mx.metrics()[r].likert() {
            Some((_, upper)) => y * (pr.u[k] + pr.dy[k]) - upper * pr.dy[k],
            None => y * pr.u[k],
        };
    }
    e
}

pub fn verify_scsc_obpt(matrix: &DecisionMatrix, result: &StageResult) -> ScscReport {
    verify_scsc_obpt_with(matrix, result, &Tolerances::from_env())
}

/// Recomputes every complementary-slackness product of a Stage I result.
pub fn verify_scsc_obpt_with(mx: &DecisionMatrix, res: &StageResult, tol: &Tolerances) -> ScscReport {
    let lay = Layout::new(mx);
    let o = mx.dmu_index(&res.dmu).expect("result belongs to this matrix");
    let cols: Vec<usize> = res.comparison.iter().map(|d| mx.dmu_index(d).expect("comparison DMU")).collect();
    let adj = &res.adjustments;
    let pr = &res.prices;
    let z = tol.zero;
    let tau = pr.tau;
    let mut rep = ScscReport::default();
    let combo = |metric: usize| -> f64 { cols.iter().zip(&adj.pi).map(|(&j, pij)| mx.value(metric, j) * pij).sum() };

    for (k, &i) in lay.inputs.iter().enumerate() {
        let x = mx.value(i, o);
        let left = combo(i) - x * (1.0 - adj.q[k]);
        rep.push(ScscKind::InputBalance, &mx.metrics()[i].name, left, pr.v[k], z * (1.0 + x), z * (1.0 + tau) / x);
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let y = mx.value(r, o);
        let left = combo(r) - y * (1.0 + adj.p[k]);
        rep.push(ScscKind::OutputBalance, &mx.metrics()[r].name, left, pr.u[k], z * (1.0 + y), z * (1.0 + tau) / y);
    }
    for &(k, lower, _) in &lay.ord_inputs {
        let i = lay.inputs[k];
        let x = mx.value(i, o);
        let left = (1.0 - adj.q[k]) * x - lower;
        rep.push(ScscKind::LikertInput, &mx.metrics()[i].name, left, pr.dx[k], z * (1.0 + x), z * (1.0 + tau) / x);
    }
    for &(k, _, upper) in &lay.ord_outputs {
        let r = lay.outputs[k];
        let y = mx.value(r, o);
        let left = upper - (1.0 + adj.p[k]) * y;
        rep.push(ScscKind::LikertOutput, &mx.metrics()[r].name, left, pr.dy[k], z * (1.0 + y), z * (1.0 + tau) / y);
    }
    for (t, &j) in cols.iter().enumerate() {
        let gap = pr.virtual_input(mx, j) - pr.virtual_output(mx, j);
        rep.push(ScscKind::DmuGap, &mx.dmu_names()[j], gap, adj.pi[t], z * (1.0 + tau), z);
    }
    for (k, &i) in lay.inputs.iter().enumerate() {
        let left = mx.value(i, o) * (pr.v[k] + pr.dx[k]) - tau;
        rep.push(ScscKind::GoalPrice, &mx.metrics()[i].name, left, adj.q[k], z * (1.0 + tau), z);
    }
    for (k, &r) in lay.outputs.iter().enumerate() {
        let left = mx.value(r, o) * (pr.u[k] + pr.dy[k]) - tau;
        rep.push(ScscKind::GoalPrice, &mx.metrics()[r].name, left, adj.p[k], z * (1.0 + tau), z);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests::laptops;
    use crate::matrix::{Direction, MetricSpec, Scale};

    fn single() -> DecisionMatrix {
        DecisionMatrix::new(
            vec![
                MetricSpec::new("X", Direction::Input, Scale::Cardinal, "kg"),
                MetricSpec::new("Y", Direction::Output, Scale::Ordinal { lower: 1, upper: 5 }, "lvl."),
            ],
            vec!["only".into()],
            vec![vec![2.0], vec![3.0]],
        )
        .unwrap()
    }

    #[test]
    fn tap_shape_for_k() {
        let lp = build_obpt_tap(&laptops(), "K", 1.0).unwrap();
        assert_eq!(lp.num_vars(), 10);
        assert_eq!(lp.num_rows(), 6);
        let eq = lp.rows.iter().filter(|r| r.relation == Relation::Eq).count();
        let le = lp.rows.iter().filter(|r| r.relation == Relation::Le).count();
        assert_eq!((eq, le), (4, 2));
    }

    #[test]
    fn tvg_shape_for_k() {
        let lp = build_obpt_tvg(&laptops(), "K", 1.0).unwrap();
        assert_eq!(lp.num_vars(), 6);
        assert_eq!(lp.num_rows(), 6 + 4);
        let s = simplex::solve(&lp).unwrap();
        assert!(s.is_optimal());
        assert!(s.objective_value >= -1e-9);
    }

    #[test]
    fn single_dmu_is_self_efficient() {
        let m = single();
        let lp = build_obpt_tap(&m, "only", 1.0).unwrap();
        let s = simplex::solve(&lp).unwrap();
        assert!(s.objective_value.abs() < 1e-12);
        assert!((s.primal[0] - 1.0).abs() < 1e-12);
        let r = assess_obpt(&m, "only").unwrap();
        assert_eq!(r.gap_star, 0.0);
        assert_eq!(r.peers, vec!["only".to_string()]);
        assert!((r.t_bar * r.step1_objective - r.gap_star).abs() < 1e-15);
        assert!((r.alpha_star - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tap_and_tvg_optima_agree_for_k() {
        let m = laptops();
        let a = simplex::solve(&build_obpt_tap(&m, "K", 1.0).unwrap()).unwrap();
        let b = simplex::solve(&build_obpt_tvg(&m, "K", 1.0).unwrap()).unwrap();
        assert!((a.objective_value - b.objective_value).abs() < 1e-7);
    }

    #[test]
    fn tvg_duals_recover_tap_primal_for_k() {
        let m = laptops();
        let a = simplex::solve(&build_obpt_tap(&m, "K", 1.0).unwrap()).unwrap();
        let b = simplex::solve(&build_obpt_tvg(&m, "K", 1.0).unwrap()).unwrap();
        // TVG rows: one per DMU (-> pi), then one per metric (-> q, p).
        for (dual, primal) in b.row_duals.iter().zip(&a.primal) {
            assert!((dual - primal).abs() < 1e-6, "{dual} vs {primal}");
        }
    }

    #[test]
    fn efficient_dmu_a_has_zero_tvg() {
        let b = simplex::solve(&build_obpt_tvg(&laptops(), "A", 1.0).unwrap()).unwrap();
        assert!(b.objective_value.abs() < 1e-9);
    }

    #[test]
    fn k_matches_reference_values() {
        let r = assess_obpt(&laptops(), "K").unwrap();
        assert!((r.tau_star - 0.319).abs() < 5e-3);
        assert!((r.gap_star - 0.321).abs() < 5e-3);
        assert_eq!(r.peers, ["A", "B", "H"]);
        assert!((r.targets_y[0] - 2.509).abs() < 5e-3);
        assert!((r.targets_x[1] - 1.0).abs() < 5e-3);
        assert!((r.benchmark_alpha - 0.760).abs() < 5e-3);
        assert!((r.benchmark_alpha - r.benchmark_beta).abs() < 1e-7);
        // Likert output target stays strictly below the ceiling, so its adjustment price is zero.
        let e = r.scsc.find(ScscKind::LikertOutput, "Y1").unwrap();
        assert!(e.left > 0.5 && e.right.abs() < 1e-12);
        // The ordinal input reaches its goal price while being reduced.
        let g = r.scsc.find(ScscKind::GoalPrice, "X2").unwrap();
        assert!(g.left.abs() < 1e-9 && g.right > 0.0);
    }

    #[test]
    fn h_is_efficient() {
        let r = assess_obpt(&laptops(), "H").unwrap();
        assert!(r.gap_star.abs() < 1e-9);
        assert!((r.tau_star - 0.829).abs() < 5e-3);
        assert!((r.intensity("H").unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn unknown_dmu() {
        assert!(matches!(assess_obpt(&laptops(), "Z"), Err(AssessError::Matrix(_))));
    }
}

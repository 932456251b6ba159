#![allow(dead_code)]

use std::path::PathBuf;

use nalgebra::{DMatrix, DVector};
use ordvga::simplex::{LpProblem, Relation, Sense, VarBound};
use ordvga::{load_matrix, DecisionMatrix, Direction, MetricSpec, Scale};
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn laptops() -> DecisionMatrix {
    load_matrix(fixture("laptops.csv")).unwrap()
}

pub fn provinces() -> DecisionMatrix {
    load_matrix(fixture("provinces.csv")).unwrap()
}

pub const PROVINCE_TIER: [&str; 9] = ["DM-1", "DM-4", "DM-5", "DM-9", "DM-10", "DM-19", "DM-21", "DM-26", "DM-28"];

/// Random valid matrix: 3..=8 metrics, 4..=15 DMUs, cardinal values in
/// `[0.1, 100]`, Likert bounds inside `[1, 7]`.
pub fn random_matrix<R: Rng>(rng: &mut R) -> DecisionMatrix {
    random_matrix_with(rng, 0.3)
}

/// Same shape as [`random_matrix`] with every metric cardinal.
pub fn random_cardinal_matrix<R: Rng>(rng: &mut R) -> DecisionMatrix {
    random_matrix_with(rng, 0.0)
}

fn random_matrix_with<R: Rng>(rng: &mut R, ordinal_share: f64) -> DecisionMatrix {
    let n_metrics = rng.gen_range(3..=8);
    let n_dmus = rng.gen_range(4..=15);
    let mut metrics = Vec::with_capacity(n_metrics);
    let mut values = Vec::with_capacity(n_metrics);
    for i in 0..n_metrics {
        let direction = match i {
            0 => Direction::Input,
            1 => Direction::Output,
            _ if rng.gen_bool(0.5) => Direction::Input,
            _ => Direction::Output,
        };
        if rng.gen_bool(ordinal_share) {
            let lower = rng.gen_range(1..=6u32);
            let upper = rng.gen_range(lower + 1..=7u32);
            metrics.push(MetricSpec::new(&format!("M{i}"), direction, Scale::Ordinal { lower, upper }, "pt."));
            values.push((0..n_dmus).map(|_| f64::from(rng.gen_range(lower..=upper))).collect());
        } else {
            metrics.push(MetricSpec::new(&format!("M{i}"), direction, Scale::Cardinal, "u"));
            values.push((0..n_dmus).map(|_| rng.gen_range(0.1..=100.0)).collect());
        }
    }
    let names = (0..n_dmus).map(|j| format!("D{j}")).collect();
    DecisionMatrix::new(metrics, names, values).unwrap()
}

/// Random LP over 1..=4 variables with every variable boxed to `[-10, 10]`
/// (or `[0, 10]` when nonnegative), so it is bounded and its feasible set,
/// when nonempty, has a vertex.
pub fn random_boxed_lp<R: Rng>(rng: &mut R) -> LpProblem {
    let n = rng.gen_range(1..=4);
    let rows = rng.gen_range(1..=4);
    let sense = if rng.gen_bool(0.5) { Sense::Maximize } else { Sense::Minimize };
    let small = |rng: &mut R| f64::from(rng.gen_range(-5..=5i32));
    let obj = (0..n).map(|_| small(rng)).collect();
    let mut lp = LpProblem::new(sense, obj);
    for j in 0..n {
        if rng.gen_bool(0.25) {
            lp.set_free(j);
        }
    }
    for i in 0..rows {
        let coeffs = (0..n).map(|_| small(rng)).collect();
        let relation = match rng.gen_range(0..5) {
            0 => Relation::Eq,
            1 | 2 => Relation::Ge,
            _ => Relation::Le,
        };
        // Zero right-hand sides make degenerate vertices common.
        let rhs = if rng.gen_bool(0.3) { 0.0 } else { small(rng) * 2.0 };
        lp.add_row(format!("r{i}"), coeffs, relation, rhs);
    }
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        lp.add_row(format!("ub{j}"), e.clone(), Relation::Le, 10.0);
        if lp.var_bounds[j] == VarBound::Free {
            lp.add_row(format!("lb{j}"), e, Relation::Ge, -10.0);
        }
    }
    lp
}

/// Optimum of a bounded LP by enumerating every basic solution, `None` if infeasible.
pub fn enumerate_vertices(lp: &LpProblem) -> Option<f64> {
    let n = lp.num_vars();
    // Constraint pool: rows, then nonnegativity bounds as `x_j = 0` candidates.
    // Equalities need no special casing: the residual check rejects points off them.
    let mut pool: Vec<(Vec<f64>, f64)> = lp.rows.iter().map(|r| (r.coeffs.clone(), r.rhs)).collect();
    for j in 0..n {
        if lp.var_bounds[j] == VarBound::NonNegative {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            pool.push((e, 0.0));
        }
    }
    let mut best: Option<f64> = None;
    let mut pick = Vec::with_capacity(n);
    choose(pool.len(), n, 0, &mut pick, &mut |idx| {
        let a = DMatrix::from_fn(n, n, |r, c| pool[idx[r]].0[c]);
        if a.determinant().abs() < 1e-12 {
            return;
        }
        let b = DVector::from_fn(n, |r, _| pool[idx[r]].1);
        let Some(x) = a.lu().solve(&b) else { return };
        let x: Vec<f64> = x.iter().copied().collect();
        if lp.primal_residual(&x) > 1e-9 {
            return;
        }
        let v = lp.objective_at(&x);
        best = Some(match (best, lp.sense) {
            (None, _) => v,
            (Some(b), Sense::Maximize) => b.max(v),
            (Some(b), Sense::Minimize) => b.min(v),
        });
    });
    best
}

fn choose(n: usize, k: usize, start: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in start..n {
        if n - i < k - pick.len() {
            break;
        }
        pick.push(i);
        choose(n, k, i + 1, pick, f);
        pick.pop();
    }
}

/// Degenerate LP family: every right-hand side zero except one normalizing row.
pub fn random_degenerate_lp<R: Rng>(rng: &mut R) -> LpProblem {
    let n = rng.gen_range(3..=6);
    let rows = rng.gen_range(2..=5);
    let obj = (0..n).map(|_| f64::from(rng.gen_range(-9..=9i32))).collect();
    let mut lp = LpProblem::new(Sense::Minimize, obj);
    for i in 0..rows {
        let coeffs = (0..n).map(|_| f64::from(rng.gen_range(-9..=9i32)) / 4.0).collect();
        lp.add_row(format!("z{i}"), coeffs, Relation::Le, 0.0);
    }
    lp.add_row("cap", vec![1.0; n], Relation::Le, 1.0);
    lp
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Every duality, normalization, gap-range, complementarity, benchmark and
/// Likert-compliance violation found in a report.
pub fn report_violations(m: &DecisionMatrix, report: &ordvga::AssessmentReport) -> Vec<String> {
    use ordvga::simplex::solve;
    use ordvga::{build_obpt_tvg, build_ospt_tvg, Stage, StageTwo};

    let mut bad = Vec::new();
    let mut results: Vec<&ordvga::StageResult> = report.stage1.iter().collect();
    if let StageTwo::Ranked { results: r2 } = &report.stage2 {
        results.extend(r2);
    }
    for r in results {
        let tag = format!("{:?} {}", r.stage, r.dmu);
        let tvg = match r.stage {
            Stage::BestPractice => build_obpt_tvg(m, &r.dmu, 1.0),
            Stage::Super => build_ospt_tvg(m, &report.top_tier, &r.dmu, 1.0),
        }
        .unwrap();
        let dual = solve(&tvg).unwrap();
        if !dual.is_optimal() || (dual.objective_value - r.step1_objective).abs() > 1e-7 {
            bad.push(format!("{tag}: TAP {} vs TVG {:?} {}", r.step1_objective, dual.status, dual.objective_value));
        }
        let (unit, in_range) = match r.stage {
            Stage::BestPractice => (r.alpha_star, (0.0..1.0).contains(&r.gap_star)),
            Stage::Super => (r.beta_star, r.gap_star > -1.0 && r.gap_star <= 0.0),
        };
        if (unit - 1.0).abs() > 1e-7 {
            bad.push(format!("{tag}: normalized side {unit}"));
        }
        if !in_range {
            bad.push(format!("{tag}: gap {}", r.gap_star));
        }
        if r.scsc.max_abs_product > 1e-6 {
            bad.push(format!("{tag}: scsc {}", r.scsc.max_abs_product));
        }
        if (r.benchmark_alpha - r.benchmark_beta).abs() > 1e-7 {
            bad.push(format!("{tag}: benchmark {} vs {}", r.benchmark_alpha, r.benchmark_beta));
        }
        let targets = m.inputs().into_iter().zip(&r.targets_x).chain(m.outputs().into_iter().zip(&r.targets_y));
        for (metric, &t) in targets {
            let spec = &m.metrics()[metric];
            let Some((lower, upper)) = spec.likert() else { continue };
            let ok = match (r.stage, spec.direction) {
                (Stage::BestPractice, Direction::Input) => t >= lower - 1e-9,
                (Stage::BestPractice, Direction::Output) => t <= upper + 1e-9,
                (Stage::Super, Direction::Input) => t <= upper + 1e-9,
                (Stage::Super, Direction::Output) => t >= lower - 1e-9,
            };
            if !ok {
                bad.push(format!("{tag}: Likert target {} = {t}", spec.name));
            }
        }
    }
    bad
}

//! Two-stage orchestration: Stage I over all DMUs, top tier, Stage II over
//! the tier, best selection, and ranking by repeated removal of the best.

use serde::{Deserialize, Serialize};

use crate::error::AssessError;
use crate::matrix::{remove_dmus, DecisionMatrix};
use crate::model::{Stage, StageResult};
use crate::obpt::assess_obpt_with;
use crate::ospt::assess_ospt_with;
use crate::tolerance::Tolerances;

/// How per-DMU solves are scheduled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

fn fan_out<T, F>(items: &[String], exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&str) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(|d| f(d)).collect()
        }
        _ => items.iter().map(|d| f(d)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StageTwo {
    Ranked {
        results: Vec<StageResult>,
    },
    /// One DMU in the top tier; the super-gap program is not defined.
    SoleEfficient {
        dmu: String,
    },
}

/// Zero-gap set versus the union of Stage I peer sets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TierCheck {
    pub peer_union: Vec<String>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankingRound {
    pub round: usize,
    pub best: String,
    pub report: AssessmentReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssessmentReport {
    /// SHA-256 of the matrix in canonical CSV form.
    pub matrix_digest: String,
    pub dmu_names: Vec<String>,
    pub stage1: Vec<StageResult>,
    pub top_tier: Vec<String>,
    pub tier_check: TierCheck,
    pub stage2: StageTwo,
    pub best: String,
    /// DMUs whose Stage II gap is within the tie tolerance of the best (best included).
    pub ties: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranking: Option<Vec<RankingRound>>,
}

impl AssessmentReport {
    pub fn stage1_of(&self, dmu: &str) -> Option<&StageResult> {
        self.stage1.iter().find(|r| r.dmu == dmu)
    }

    pub fn stage2_of(&self, dmu: &str) -> Option<&StageResult> {
        match &self.stage2 {
            StageTwo::Ranked { results } => results.iter().find(|r| r.dmu == dmu),
            StageTwo::SoleEfficient { .. } => None,
        }
    }

    pub fn result(&self, dmu: &str, stage: Stage) -> Option<&StageResult> {
        match stage {
            Stage::BestPractice => self.stage1_of(dmu),
            Stage::Super => self.stage2_of(dmu),
        }
    }
}

pub fn assess(matrix: &DecisionMatrix) -> Result<AssessmentReport, AssessError> {
    assess_with(matrix, Execution::default(), &Tolerances::from_env())
}

pub fn assess_with(matrix: &DecisionMatrix, exec: Execution, tol: &Tolerances) -> Result<AssessmentReport, AssessError> {
    let names = matrix.dmu_names().to_vec();
    let stage1 = fan_out(&names, exec, |o| assess_obpt_with(matrix, o, tol)).into_iter().collect::<Result<Vec<_>, _>>()?;

    let top_tier: Vec<String> = stage1.iter().filter(|r| r.gap_star <= tol.top_tier).map(|r| r.dmu.clone()).collect();
    let peer_union: Vec<String> = names.iter().filter(|d| stage1.iter().any(|r| r.peers.contains(d))).cloned().collect();
    let tier_check = TierCheck { consistent: peer_union == top_tier, peer_union };

    let (stage2, best, ties) = if top_tier.len() == 1 {
        let only = top_tier[0].clone();
        (StageTwo::SoleEfficient { dmu: only.clone() }, only.clone(), vec![only])
    } else {
        let results =
            fan_out(&top_tier, exec, |o| assess_ospt_with(matrix, &top_tier, o, tol)).into_iter().collect::<Result<Vec<_>, _>>()?;
        let min = results.iter().map(|r| r.gap_star).fold(f64::INFINITY, f64::min);
        let mut ties: Vec<String> = results.iter().filter(|r| r.gap_star <= min + tol.tie).map(|r| r.dmu.clone()).collect();
        ties.sort();
        (StageTwo::Ranked { results }, ties[0].clone(), ties)
    };

    Ok(AssessmentReport {
        matrix_digest: matrix.digest(),
        dmu_names: names,
        stage1,
        top_tier,
        tier_check,
        stage2,
        best,
        ties,
        ranking: None,
    })
}

pub fn rank_all(matrix: &DecisionMatrix, rounds: Option<usize>) -> Result<Vec<RankingRound>, AssessError> {
    rank_all_with(matrix, rounds, Execution::default(), &Tolerances::from_env())
}

/// Repeatedly assesses, records the best and removes it, until one DMU is
/// left or `rounds` rounds have run. Every round starts from scratch.
pub fn rank_all_with(
    matrix: &DecisionMatrix,
    rounds: Option<usize>,
    exec: Execution,
    tol: &Tolerances,
) -> Result<Vec<RankingRound>, AssessError> {
    let limit = rounds.unwrap_or(usize::MAX);
    let mut current = matrix.clone();
    let mut out = Vec::new();
    while out.len() < limit {
        let report = assess_with(&current, exec, tol)?;
        let best = report.best.clone();
        let last = current.n_dmus() == 1;
        out.push(RankingRound { round: out.len() + 1, best: best.clone(), report });
        if last {
            break;
        }
        current = remove_dmus(&current, &[best])?;
    }
    Ok(out)
}

/// One point of the virtual technology set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TechPoint {
    pub label: String,
    pub alpha: f64,
    pub beta: f64,
}

/// Label of the benchmark target point.
pub const TARGET_LABEL: &str = "T";

/// The assessed DMU (penalized pair), each comparison DMU's plain pair, and the target.
///
/// In Stage I the assessed DMU is also a comparison DMU; its penalized pair
/// replaces the plain one.
pub fn virtual_technology_set(result: &StageResult) -> Vec<TechPoint> {
    let mut pts = vec![TechPoint { label: result.dmu.clone(), alpha: result.alpha_star, beta: result.beta_star }];
    pts.extend(result.pairs.iter().filter(|p| p.dmu != result.dmu).map(|p| TechPoint {
        label: p.dmu.clone(),
        alpha: p.alpha,
        beta: p.beta,
    }));
    pts.push(TechPoint { label: TARGET_LABEL.to_string(), alpha: result.benchmark_alpha, beta: result.benchmark_beta });
    pts
}

/// Per-metric virtual price and its share of the total, matrix metric order.
pub fn metric_advantage(result: &StageResult) -> Vec<(f64, f64)> {
    let total: f64 = result.metric_prices.iter().sum();
    result.metric_prices.iter().map(|&e| (e, if total > 0.0 { e / total } else { 0.0 })).collect()
}

mod common;

use common::*;
use ordvga::{assess, metric_advantage, remove_dmus, Scale};
use proptest::prelude::*;

fn gaps(report: &ordvga::AssessmentReport) -> Vec<(String, f64)> {
    let mut out: Vec<(String, f64)> = report.stage1.iter().map(|r| (r.dmu.clone(), r.gap_star)).collect();
    if let ordvga::StageTwo::Ranked { results } = &report.stage2 {
        out.extend(results.iter().map(|r| (format!("{}*", r.dmu), r.gap_star)));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rescaling_a_metric_changes_nothing(seed in any::<u64>(), metric in 0usize..3, exp in -3i32..=3) {
        let m = random_cardinal_matrix(&mut rng(seed));
        let c = 10f64.powi(exp);
        let base = assess(&m).unwrap();
        let scaled = assess(&m.rescale_metric(metric, c)).unwrap();
        prop_assert_eq!(&base.top_tier, &scaled.top_tier);
        prop_assert_eq!(&base.best, &scaled.best);
        for ((a, ga), (_, gb)) in gaps(&base).iter().zip(gaps(&scaled)) {
            prop_assert!((ga - gb).abs() <= 1e-7, "{a}: {ga} vs {gb}");
        }
    }

    #[test]
    fn removing_an_unused_dmu_keeps_other_gaps(seed in any::<u64>()) {
        let m = random_cardinal_matrix(&mut rng(seed));
        let base = assess(&m).unwrap();
        let unused = m.dmu_names().iter().find(|d| {
            !base.top_tier.contains(d) && base.stage1.iter().all(|r| &r.dmu == *d || !r.peers.contains(d))
        });
        if let Some(drop) = unused {
            let reduced = assess(&remove_dmus(&m, &[drop]).unwrap()).unwrap();
            for r in &reduced.stage1 {
                let g0 = base.stage1_of(&r.dmu).unwrap().gap_star;
                prop_assert!((r.gap_star - g0).abs() <= 1e-7, "without {drop}: {} {} vs {g0}", r.dmu, r.gap_star);
            }
            prop_assert_eq!(&reduced.top_tier, &base.top_tier);
        }
    }
}

#[test]
fn advantage_shares_ignore_cardinal_units() {
    let m = laptops();
    let base = assess(&m).unwrap();
    let x1 = m.metric_index("X1").unwrap();
    let scaled = assess(&m.rescale_metric(x1, 1000.0)).unwrap();
    for (a, b) in base.stage1.iter().zip(&scaled.stage1) {
        for ((_, sa), (_, sb)) in metric_advantage(a).into_iter().zip(metric_advantage(b)) {
            assert!((sa - sb).abs() <= 1e-7, "{}: share {sa} vs {sb}", a.dmu);
        }
    }
}

#[test]
fn cardinal_metric_price_is_value_times_unit_price() {
    let m = random_cardinal_matrix(&mut rng(7));
    for r in assess(&m).unwrap().stage1 {
        let o = m.dmu_index(&r.dmu).unwrap();
        for (k, &i) in m.inputs().iter().enumerate() {
            assert!((r.metric_prices[i] - m.value(i, o) * r.prices.v[k]).abs() <= 1e-12);
        }
        for (k, &j) in m.outputs().iter().enumerate() {
            assert!((r.metric_prices[j] - m.value(j, o) * r.prices.u[k]).abs() <= 1e-12);
        }
        let shares: f64 = metric_advantage(&r).iter().map(|(_, s)| s).sum();
        assert!((shares - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn laptop_best_survives_cardinal_rescaling() {
    let m = laptops();
    for (i, spec) in m.metrics().iter().enumerate() {
        if spec.scale != Scale::Cardinal {
            continue;
        }
        let r = assess(&m.rescale_metric(i, 0.01)).unwrap();
        assert_eq!(r.best, "H");
    }
}

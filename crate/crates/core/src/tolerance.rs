use serde::{Deserialize, Serialize};

use crate::simplex::SimplexOptions;

/// Environment variable multiplying every tolerance.
pub const TOLERANCE_SCALE_VAR: &str = "ORDVGA_TOLERANCE_SCALE";

/// Numerical thresholds used across both stages.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub simplex: SimplexOptions,
    /// Intensity above which a DMU counts as a reference peer.
    pub peer: f64,
    /// Stage I gap at or below which a DMU is top tier.
    pub top_tier: f64,
    /// Largest acceptable complementary-slackness product.
    pub scsc: f64,
    /// Magnitude under which a complementary factor counts as zero.
    pub zero: f64,
    /// Stage II gaps closer than this form a tie group.
    pub tie: f64,
    /// Smallest Step I virtual input (Stage I) or output (Stage II) accepted for rescaling.
    pub normalizer: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { simplex: SimplexOptions::default(), peer: 1e-9, top_tier: 1e-6, scsc: 1e-6, zero: 1e-9, tie: 1e-9, normalizer: 1e-7 }
    }
}

impl Tolerances {
    pub fn scaled(self, factor: f64) -> Self {
        Tolerances {
            simplex: self.simplex.scaled(factor),
            peer: self.peer * factor,
            top_tier: self.top_tier * factor,
            scsc: self.scsc * factor,
            zero: self.zero * factor,
            tie: self.tie * factor,
            normalizer: self.normalizer * factor,
        }
    }

    /// Defaults scaled by `ORDVGA_TOLERANCE_SCALE` when it holds a positive number.
    pub fn from_env() -> Self {
        match std::env::var(TOLERANCE_SCALE_VAR).ok().and_then(|s| s.trim().parse::<f64>().ok()) {
            Some(f) if f.is_finite() && f > 0.0 => Tolerances::default().scaled(f),
            _ => Tolerances::default(),
        }
    }
}

//! Two-stage ordinal virtual-gap analysis.
//!
//! Stage I assesses every DMU against all DMUs and keeps the zero-gap top
//! tier; Stage II assesses each top-tier DMU against the rest of the tier
//! and picks the one with the most negative super gap as best.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
mod layout;
pub mod matrix;
pub mod model;
pub mod obpt;
pub mod ospt;
pub mod pipeline;
pub mod plot;
pub mod report;
pub mod simplex;
pub mod tolerance;

pub use error::{AssessError, MatrixError};
pub use matrix::{load_matrix, parse_matrix, remove_dmus, validate_matrix, DecisionMatrix, Direction, MetricSpec, Scale};
pub use model::{AdjustmentVector, PriceVector, ScscEntry, ScscKind, ScscReport, Stage, StageResult, VirtualPair};
pub use obpt::{assess_obpt, build_obpt_tap, build_obpt_tvg, verify_scsc_obpt};
pub use ospt::{assess_ospt, build_ospt_tap, build_ospt_tvg, verify_scsc_ospt};
pub use pipeline::{assess, metric_advantage, rank_all, virtual_technology_set, AssessmentReport, Execution, StageTwo};
pub use tolerance::Tolerances;

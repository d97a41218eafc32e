//! Brute-force numerical verifiers of the closed-form set descriptions.
//!
//! The samplers work only with state vectors, spectra and operator algebra;
//! the analytic formulas enter in the final comparison step. Every sample
//! draws from its own ChaCha8 stream (`seed`, stream = sample index), so a
//! report depends only on its arguments.

use alloc::string::String;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod classical;
mod concavity;
mod det_avg;
mod hull;
mod overlap;
mod qubit;
mod sampling;

pub use classical::{classical_agreement, classical_decomposition, ClassicalDecomposition, ATOMS};
pub use concavity::{concavity_check, mixing_closure_check, overlap_square};
pub use det_avg::{det_avg_oracle, det_avg_region, DetAvgRegion, DEFAULT_GRID};
pub use hull::{hull_vs_boundary, DIRECTIONS};
pub use overlap::overlap_bound_check;
pub use sampling::sample_quantum_points;

/// Outcome of one oracle run.
///
/// `worst_violation` is the most negative slack found (0 when nothing was
/// violated) and `passed` holds exactly when it is at least `-tolerance`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OracleReport {
    pub claim: String,
    pub samples: u64,
    pub seed: Option<u64>,
    pub worst_violation: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Headline measured quantity, when the claim has one.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub observed: Option<f64>,
}

impl OracleReport {
    pub(crate) fn new(
        claim: &str,
        samples: u64,
        seed: Option<u64>,
        worst_slack: f64,
        tolerance: f64,
    ) -> Self {
        let worst_violation = if worst_slack.is_nan() {
            f64::NEG_INFINITY
        } else {
            // `+ 0.0` turns a negative zero into zero
            worst_slack.min(0.0) + 0.0
        };
        OracleReport {
            claim: claim.into(),
            samples,
            seed,
            worst_violation,
            tolerance,
            passed: worst_violation >= -tolerance,
            observed: None,
        }
    }

    pub(crate) fn with_observed(mut self, v: f64) -> Self {
        self.observed = Some(v);
        self
    }
}

pub(crate) fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

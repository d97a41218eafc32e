//! Correlation sets of the simplest semi-device-independent
//! prepare-and-measure scenario: two preparations `x ∈ {1, 2}`, one binary
//! measurement, and a trusted upper bound on the mean value of an observable
//! `H` with a non-degenerate ground state (eigenvalue 0) and unit gap.
//!
//! Correlations are the pair `(E₁, E₂)` of output expectations, thresholds the
//! pair `(ω₁, ω₂)` bounding `Tr[H ρₓ]`. The crate provides
//!
//! * [`sets`]: closed-form membership for the quantum set, the classical
//!   polytopes under the max-average and max-peak assumptions, and the
//!   input-deterministic sets `D̄ₓ` / `D̂ₓ`;
//! * [`realize`]: explicit qubit realizations of quantum points;
//! * [`boundary`]: ordered boundary polygons of every set;
//! * [`schemes`]: the BPSK, 2ASK and OOK coherent-state schemes;
//! * [`oracle`]: brute-force numerical verifiers of the closed forms.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod boundary;
mod error;
pub mod oracle;
pub mod realize;
pub mod schemes;
pub mod sets;

pub use boundary::{boundary_curve, BoundaryCurve};
pub use error::{Error, Result};
pub use realize::{realize_point, QubitRealization};
pub use sets::{
    classical_avg_membership, classical_peak_membership, det_avg_interval, det_avg_membership,
    det_peak_membership, ellipse_point, g_value, guessing_probability, h_clamped, h_value,
    membership, overlap_lower_bound, quantum_membership, tsirelson_max_eminus, verdicts,
    Correlations, Input, OverlapBound, SetName, SetVerdict, Thresholds, MEMBERSHIP_TOL,
};

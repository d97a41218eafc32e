use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use rand::Rng;

use super::qubit::{expect, observable, random_direction, random_simplex, state};
use super::{stream, OracleReport};
use crate::sets::{quantum_membership, Correlations, Thresholds};

/// Draw `n` qubit realizations with `H = diag(0, 1)` and `⟨H⟩ₓ ≤ ωₓ`, and
/// check that every induced point is a quantum-set member.
///
/// Half of the draws saturate each budget, use opposite real amplitudes, or
/// measure projectively, so the boundary is well covered.
pub fn sample_quantum_points(
    w: Thresholds,
    n: u64,
    seed: u64,
) -> (Vec<Correlations>, OracleReport) {
    let mut points = Vec::with_capacity(n as usize);
    let mut worst = f64::INFINITY;
    for i in 0..n {
        let mut rng = stream(seed, i);
        let e = random_point(&mut rng, w);
        worst = worst.min(quantum_membership(e, w).margin);
        points.push(e);
    }
    let observed = if n == 0 { 0.0 } else { worst };
    let report = OracleReport::new("quantum-soundness", n, Some(seed), observed, 1e-9)
        .with_observed(observed);
    (points, report)
}

fn budget<R: Rng>(rng: &mut R, omega: f64) -> f64 {
    if rng.random::<bool>() {
        omega
    } else {
        omega * rng.random::<f64>()
    }
}

fn random_point<R: Rng>(rng: &mut R, w: Thresholds) -> Correlations {
    let t1 = budget(rng, w.omega1());
    let t2 = budget(rng, w.omega2());
    let phase = if rng.random::<bool>() {
        PI
    } else {
        TAU * rng.random::<f64>()
    };
    let psi1 = state(t1, 0.0);
    let psi2 = state(t2, phase);

    let (c, d) = if rng.random::<bool>() {
        (0.0, 1.0)
    } else {
        let p = random_simplex(rng, 3);
        (p[0] - p[1], p[2])
    };
    let m = observable(c, d, random_direction(rng));
    Correlations::clamped(expect(&psi1, &m), expect(&psi2, &m))
}

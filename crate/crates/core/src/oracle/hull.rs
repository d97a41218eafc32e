use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use libm::{cos, sin};
use rand::Rng;

use super::qubit::{expect, observable, state, Op2};
use super::{stream, OracleReport};
use crate::boundary::boundary_curve;
use crate::error::{Error, Result};
use crate::sets::{SetName, Thresholds};

/// Number of support directions probed by [`hull_vs_boundary`].
pub const DIRECTIONS: usize = 360;

const PARAMS: usize = 7;
const STATE_PARAMS: usize = 3;
const POLISH_ROUNDS: usize = 100;
const GOLDEN_STEPS: usize = 30;
const ANALYTIC_SAMPLES: usize = 4096;

/// A realization encoded in `[0, 1]⁷`: budget fractions for both states,
/// relative phase, measurement bias `c`, contrast `d` (scaled by `1 − |c|`)
/// and the polar and azimuthal angles of the Bloch direction.
type Params = [f64; PARAMS];

fn correlations(w: Thresholds, p: &Params) -> (f64, f64) {
    let psi1 = state(w.omega1() * p[0], 0.0);
    let psi2 = state(w.omega2() * p[1], TAU * p[2]);
    let c = 2.0 * p[3] - 1.0;
    let d = (2.0 * p[4] - 1.0) * (1.0 - c.abs());
    let (a, b) = (PI * p[5], TAU * p[6]);
    let m = observable(c, d, [sin(a) * cos(b), sin(a) * sin(b), cos(a)]);
    (expect(&psi1, &m), expect(&psi2, &m))
}

/// `max_M Tr[M(u₁ρ₁ + u₂ρ₂)]` over `−I ≤ M ≤ I`, i.e. the trace norm, for
/// the states encoded in the first three parameters.
fn best_measurement_score(w: Thresholds, u: (f64, f64), p: &[f64]) -> f64 {
    let psi = [
        state(w.omega1() * p[0], 0.0),
        state(w.omega2() * p[1], TAU * p[2]),
    ];
    let mut a: Op2 = Default::default();
    for (weight, v) in [u.0, u.1].into_iter().zip(&psi) {
        for i in 0..2 {
            for j in 0..2 {
                a[i][j] += v[i] * v[j].conj() * weight;
            }
        }
    }
    let (tr, half_diff) = (a[0][0].re + a[1][1].re, 0.5 * (a[0][0].re - a[1][1].re));
    let radius = libm::sqrt(half_diff * half_diff + a[0][1].norm_sqr());
    tr.abs().max(2.0 * radius)
}

/// Compare the support function of sampled qubit realizations with that of
/// the analytic quantum boundary over [`DIRECTIONS`] directions.
///
/// For each direction the best of `n` random realizations (states and
/// measurement) seeds a coordinate-wise golden-section search over the
/// state parameters, with the measurement re-optimized exactly at every
/// step. The report fails when the two support functions differ by more
/// than `1e-2` in either direction.
pub fn hull_vs_boundary(w: Thresholds, n: u64, seed: u64) -> Result<OracleReport> {
    if n < 1000 {
        return Err(Error::InvalidArgument(
            "hull oracle needs at least 1000 samples",
        ));
    }
    let samples: Vec<(Params, (f64, f64))> = (0..n)
        .map(|i| {
            let mut rng = stream(seed, i);
            let p: Params = core::array::from_fn(|_| rng.random::<f64>());
            (p, correlations(w, &p))
        })
        .collect();

    let analytic = boundary_curve(SetName::Quantum, w, ANALYTIC_SAMPLES)?;
    let mut worst_gap = 0.0f64;
    for k in 0..DIRECTIONS {
        let angle = TAU * k as f64 / DIRECTIONS as f64;
        let u = (cos(angle), sin(angle));
        let score = |e: (f64, f64)| u.0 * e.0 + u.1 * e.1;

        let mut best = 0;
        for (i, s) in samples.iter().enumerate() {
            if score(s.1) > score(samples[best].1) {
                best = i;
            }
        }
        let seed_state: [f64; STATE_PARAMS] = core::array::from_fn(|j| samples[best].0[j]);
        let empirical =
            polish(seed_state, |p| best_measurement_score(w, u, p)).max(score(samples[best].1));
        let exact = analytic
            .points
            .iter()
            .map(|p| score((p.e1(), p.e2())))
            .fold(f64::NEG_INFINITY, f64::max);
        worst_gap = worst_gap.max((empirical - exact).abs());
    }
    Ok(OracleReport::new("quantum-hull", n, Some(seed), -worst_gap, 1e-2).with_observed(worst_gap))
}

fn polish<const N: usize>(mut p: [f64; N], f: impl Fn(&[f64; N]) -> f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best = f(&p);
    for round in 0..POLISH_ROUNDS {
        let radius = (0.5 * libm::pow(0.9, round as f64)).max(1e-7);
        for j in 0..N {
            let at = |p: &[f64; N], v: f64| {
                let mut q = *p;
                q[j] = v;
                f(&q)
            };
            let (mut lo, mut hi) = ((p[j] - radius).max(0.0), (p[j] + radius).min(1.0));
            let mut x1 = hi - INV_PHI * (hi - lo);
            let mut x2 = lo + INV_PHI * (hi - lo);
            let (mut f1, mut f2) = (at(&p, x1), at(&p, x2));
            for _ in 0..GOLDEN_STEPS {
                if f1 < f2 {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + INV_PHI * (hi - lo);
                    f2 = at(&p, x2);
                } else {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - INV_PHI * (hi - lo);
                    f1 = at(&p, x1);
                }
            }
            for v in [x1, x2, lo, hi] {
                let fv = at(&p, v);
                if fv > best {
                    best = fv;
                    p[j] = v;
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_sample_counts() {
        assert!(hull_vs_boundary(Thresholds::new(0.1, 0.1).unwrap(), 999, 0).is_err());
    }

    #[test]
    fn box_corners_are_reached() {
        let r = hull_vs_boundary(Thresholds::new(0.5, 0.5).unwrap(), 2000, 5).unwrap();
        assert!(r.passed, "{r:?}");
    }
}

use alloc::vec::Vec;

use libm::{asin, sqrt};
use rand::Rng;

use super::qubit::{expect, observable, random_simplex, state};
use super::{stream, OracleReport};
use crate::sets::{quantum_membership, Correlations, Thresholds};

const FD_STEP: f64 = 1e-5;
const TOL: f64 = 1e-6;

/// `f(x, y) = (√(xy) + √((1−x)(1−y)))²` on `[0, 1]²`.
pub fn overlap_square(x: f64, y: f64) -> f64 {
    let s = sqrt(x * y) + sqrt((1.0 - x) * (1.0 - y));
    s * s
}

/// `1 − f`, written as the square of a difference so that finite
/// differences near the diagonal do not cancel catastrophically.
fn defect(x: f64, y: f64) -> f64 {
    let q = sqrt(x * (1.0 - y)) - sqrt(y * (1.0 - x));
    q * q
}

/// Midpoint concavity of [`overlap_square`] on random pairs, and the sign
/// conditions `tr ≤ 0`, `det ≥ 0` on a central-difference Hessian at random
/// interior points. Both use tolerance `1e-6`.
pub fn concavity_check(trials: u64, seed: u64) -> OracleReport {
    let h = FD_STEP;
    let mut worst = f64::INFINITY;
    for i in 0..trials {
        let mut rng = stream(seed, i);
        let a: (f64, f64) = (rng.random(), rng.random());
        let b: (f64, f64) = (rng.random(), rng.random());
        let mid = overlap_square(0.5 * (a.0 + b.0), 0.5 * (a.1 + b.1));
        worst = worst.min(mid - 0.5 * (overlap_square(a.0, a.1) + overlap_square(b.0, b.1)));

        let lo = 2.0 * h;
        let x = lo + (1.0 - 2.0 * lo) * rng.random::<f64>();
        let y = lo + (1.0 - 2.0 * lo) * rng.random::<f64>();
        let d = |dx: f64, dy: f64| -defect(x + dx, y + dy);
        let c = d(0.0, 0.0);
        let fxx = (d(h, 0.0) - 2.0 * c + d(-h, 0.0)) / (h * h);
        let fyy = (d(0.0, h) - 2.0 * c + d(0.0, -h)) / (h * h);
        let fxy = (d(h, h) - d(h, -h) - d(-h, h) + d(-h, -h)) / (4.0 * h * h);
        worst = worst.min(-(fxx + fyy)).min(fxx * fyy - fxy * fxy);
    }
    let worst = if trials == 0 { 0.0 } else { worst };
    OracleReport::new("concavity", trials, Some(seed), worst, TOL)
}

/// Average random finite mixtures of points on quantum boundaries and check
/// that the result is a quantum point at the average budget.
///
/// Each component is either a perfectly correlated corner (free) or a
/// projective measurement on the two saturating qubit states at its own
/// budget `H_λ`; budgets are rescaled so that `Σ p_λ H_λ ≤ ω`.
pub fn mixing_closure_check(w: Thresholds, trials: u64, seed: u64) -> OracleReport {
    let mut worst = f64::INFINITY;
    for i in 0..trials {
        let mut rng = stream(seed, i);
        let k = 1 + (rng.random::<u32>() % 4) as usize;
        let weights = random_simplex(&mut rng, k);
        let mut budgets: Vec<(f64, f64)> = (0..k)
            .map(|_| {
                let (a, b): (f64, f64) = (rng.random(), rng.random());
                if a + b > 1.0 {
                    (1.0 - a, 1.0 - b)
                } else {
                    (a, b)
                }
            })
            .collect();
        let avg = |bs: &[(f64, f64)]| {
            bs.iter()
                .zip(&weights)
                .fold((0.0, 0.0), |acc, (b, p)| (acc.0 + p * b.0, acc.1 + p * b.1))
        };
        let (m1, m2) = avg(&budgets);
        let mut scale: f64 = 1.0;
        if m1 > 0.0 {
            scale = scale.min(w.omega1() / m1);
        }
        if m2 > 0.0 {
            scale = scale.min(w.omega2() / m2);
        }
        for b in &mut budgets {
            *b = (b.0 * scale, b.1 * scale);
        }

        let (mut e1, mut e2) = (0.0, 0.0);
        for (b, p) in budgets.iter().zip(&weights) {
            let (a1, a2) = component(&mut rng, *b);
            e1 += p * a1;
            e2 += p * a2;
        }
        worst = worst.min(quantum_membership(Correlations::clamped(e1, e2), w).margin);
    }
    let worst = if trials == 0 { 0.0 } else { worst };
    OracleReport::new("mixing-closure", trials, Some(seed), worst, 1e-9)
}

fn component<R: Rng>(rng: &mut R, budget: (f64, f64)) -> (f64, f64) {
    match rng.random::<u32>() % 8 {
        0 => (1.0, 1.0),
        1 => (-1.0, -1.0),
        _ => {
            let t1 = asin(sqrt(budget.0));
            let t2 = asin(sqrt(budget.1));
            let (s1, s2) = (libm::sin(t1), libm::sin(t2));
            let psi1 = state(s1 * s1, 0.0);
            let psi2 = state(s2 * s2, core::f64::consts::PI);
            let alpha = core::f64::consts::TAU * rng.random::<f64>();
            let m = observable(0.0, 1.0, [libm::sin(alpha), 0.0, libm::cos(alpha)]);
            (expect(&psi1, &m), expect(&psi2, &m))
        }
    }
}

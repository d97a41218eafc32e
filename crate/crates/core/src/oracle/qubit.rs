//! Small dense linear algebra over complex amplitudes.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use libm::{cos, log, sin, sqrt};
use num_complex::Complex64 as C;
use rand::Rng;

pub(crate) type Op2 = [[C; 2]; 2];

const ZERO: C = C::new(0.0, 0.0);

/// `√(1−t)|0⟩ + e^{iφ}√t|1⟩`, the qubit state with `⟨H⟩ = t` for `H = diag(0, 1)`.
pub(crate) fn state(t: f64, phase: f64) -> [C; 2] {
    let t = t.clamp(0.0, 1.0);
    [C::new(sqrt(1.0 - t), 0.0), C::from_polar(sqrt(t), phase)]
}

/// `c·I + d·(n·σ)` for a unit Bloch vector `n`.
pub(crate) fn observable(c: f64, d: f64, n: [f64; 3]) -> Op2 {
    [
        [C::new(c + d * n[2], 0.0), C::new(d * n[0], -d * n[1])],
        [C::new(d * n[0], d * n[1]), C::new(c - d * n[2], 0.0)],
    ]
}

/// `2|ψ⟩⟨ψ| − I`
pub(crate) fn reflection(psi: &[C; 2]) -> Op2 {
    let mut m = [[ZERO; 2]; 2];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = psi[i] * psi[j].conj() * 2.0;
            if i == j {
                *v -= 1.0;
            }
        }
    }
    m
}

/// `Re ⟨ψ|M|ψ⟩`
pub(crate) fn expect(psi: &[C; 2], m: &Op2) -> f64 {
    let mut acc = ZERO;
    for i in 0..2 {
        for j in 0..2 {
            acc += psi[i].conj() * m[i][j] * psi[j];
        }
    }
    acc.re
}

/// `⟨a|b⟩`
pub(crate) fn inner(a: &[C], b: &[C]) -> C {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn norm_sqr(a: &[C]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum()
}

/// Standard normal deviate (Box–Muller).
pub(crate) fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    let u: f64 = 1.0 - rng.random::<f64>();
    let v: f64 = rng.random();
    sqrt(-2.0 * log(u)) * cos(TAU * v)
}

/// Haar-random unit vector in `ℂⁿ`.
pub(crate) fn random_unit<R: Rng>(rng: &mut R, n: usize) -> Vec<C> {
    loop {
        let v: Vec<C> = (0..n)
            .map(|_| C::new(gaussian(rng), gaussian(rng)))
            .collect();
        let norm = sqrt(norm_sqr(&v));
        if norm > 1e-12 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Uniform point on the unit sphere.
pub(crate) fn random_direction<R: Rng>(rng: &mut R) -> [f64; 3] {
    let z = 2.0 * rng.random::<f64>() - 1.0;
    let phi = TAU * rng.random::<f64>();
    let r = sqrt((1.0 - z * z).max(0.0));
    [r * cos(phi), r * sin(phi), z]
}

/// Uniform weights on the probability simplex with `k` vertices.
pub(crate) fn random_simplex<R: Rng>(rng: &mut R, k: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..k).map(|_| -log(1.0 - rng.random::<f64>())).collect();
    let total: f64 = raw.iter().sum();
    if total > 0.0 {
        raw.into_iter().map(|x| x / total).collect()
    } else {
        alloc::vec![1.0 / k as f64; k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn pauli_expectations() {
        let plus = state(0.5, 0.0);
        assert_abs_diff_eq!(
            expect(&plus, &observable(0.0, 1.0, [1.0, 0.0, 0.0])),
            1.0,
            epsilon = 1e-15
        );
        let y = state(0.5, core::f64::consts::FRAC_PI_2);
        assert_abs_diff_eq!(
            expect(&y, &observable(0.0, 1.0, [0.0, 1.0, 0.0])),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            expect(&state(0.0, 0.0), &observable(0.2, 0.5, [0.0, 0.0, 1.0])),
            0.7,
            epsilon = 1e-15
        );
    }

    #[test]
    fn reflection_expectation_is_overlap() {
        let a = state(0.2, 0.3);
        let b = state(0.7, -1.1);
        let o = inner(&a, &b).norm_sqr();
        assert_abs_diff_eq!(expect(&b, &reflection(&a)), 2.0 * o - 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(expect(&a, &reflection(&a)), 1.0, epsilon = 1e-14);
    }
}

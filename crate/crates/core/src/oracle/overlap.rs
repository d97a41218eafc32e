use alloc::vec::Vec;

use libm::{asin, cos, sin, sqrt};
use num_complex::Complex64 as C;
use rand::Rng;

use super::qubit::{inner, random_unit};
use super::{stream, OracleReport};
use crate::error::{Error, Result};
use crate::sets::{h_value, Thresholds};

const MAX_EIGENVALUE: f64 = 5.0;
const MAX_REJECTIONS: usize = 64;

/// Sample pairs of states with `⟨H⟩ₓ = hₓ` exactly and check that their
/// overlap never drops below `h(h₁, h₂)`.
///
/// Spectra are `0, 1, λ₂, …` with `λᵢ ∈ [1, 5]`. Each state is
/// `√(1−β)|0⟩ + √β·v` with `v` uniform in the excited subspace and `β` fixed
/// by the expectation. The two-level construction attaining the bound is
/// included, and `observed` is the smallest overlap seen.
pub fn overlap_bound_check(
    h1: f64,
    h2: f64,
    dim: usize,
    trials: u64,
    seed: u64,
) -> Result<OracleReport> {
    Thresholds::new(h1, h2)?;
    if dim < 2 {
        return Err(Error::InvalidArgument("overlap check needs dim >= 2"));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "overlap check needs at least one trial",
        ));
    }
    let bound = h_value(h1, h2)?;

    let explicit = explicit_overlap(h1, h2);
    let mut smallest = explicit;
    for i in 0..trials {
        let mut rng = stream(seed, i);
        let mut spectrum = Vec::with_capacity(dim);
        spectrum.push(0.0);
        spectrum.push(1.0);
        for _ in 2..dim {
            spectrum.push(1.0 + (MAX_EIGENVALUE - 1.0) * rng.random::<f64>());
        }
        let a = conditioned_state(&mut rng, &spectrum, h1)?;
        let b = conditioned_state(&mut rng, &spectrum, h2)?;
        smallest = smallest.min(inner(&a, &b).norm());
    }
    let slack = (smallest - bound).min(-(explicit - bound).abs());
    Ok(OracleReport::new("overlap-bound", trials, Some(seed), slack, 1e-9).with_observed(smallest))
}

/// `|⟨φ₁|φ₂⟩|` for `cos θ₁|0⟩ + sin θ₁|1⟩` and `cos θ₂|0⟩ − sin θ₂|1⟩`.
fn explicit_overlap(h1: f64, h2: f64) -> f64 {
    let (t1, t2) = (asin(sqrt(h1)), asin(sqrt(h2)));
    let a = [C::new(cos(t1), 0.0), C::new(sin(t1), 0.0)];
    let b = [C::new(cos(t2), 0.0), C::new(-sin(t2), 0.0)];
    inner(&a, &b).norm()
}

fn conditioned_state<R: Rng>(rng: &mut R, spectrum: &[f64], target: f64) -> Result<Vec<C>> {
    let dim = spectrum.len();
    for _ in 0..MAX_REJECTIONS {
        let v = random_unit(rng, dim - 1);
        let excited: f64 = v
            .iter()
            .zip(&spectrum[1..])
            .map(|(c, l)| l * c.norm_sqr())
            .sum();
        let beta = target / excited;
        if beta <= 1.0 {
            let mut psi = Vec::with_capacity(dim);
            psi.push(C::new(sqrt(1.0 - beta), 0.0));
            psi.extend(v.into_iter().map(|c| c * sqrt(beta)));
            return Ok(psi);
        }
    }
    Err(Error::InvalidArgument(
        "expectation exceeds the sampled spectrum",
    ))
}

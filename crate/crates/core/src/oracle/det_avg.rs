use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use libm::{asin, cos, sin, sqrt};
use num_complex::Complex64 as C;

use super::qubit::{expect, reflection};
use super::OracleReport;
use crate::error::{Error, Result};
use crate::sets::{det_avg_interval, Input, Thresholds};

pub const DEFAULT_GRID: usize = 201;

/// Extremes of `E_x̄` reachable with a pre-determined answer for input `x`,
/// found by grid search.
#[derive(Debug, Clone, PartialEq)]
pub struct DetAvgRegion {
    pub ex: Vec<f64>,
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

/// Smallest `E_x̄` in a branch where input `x` always answers `+1`, given
/// per-input expectations `budget`.
///
/// The answer is forced by a measurement projector containing `|φₓ⟩`; the
/// other state then scores at least `2|⟨φₓ|φ_x̄⟩|² − 1`, and the overlap is
/// smallest for real amplitudes of opposite sign on `|1⟩`. Once the budgets
/// allow orthogonal states the overlap is zero.
fn branch_extreme(x: Input, budget: (f64, f64)) -> f64 {
    let t1 = asin(sqrt(budget.0.clamp(0.0, 1.0)));
    let t2 = asin(sqrt(budget.1.clamp(0.0, 1.0)));
    if t1 + t2 >= FRAC_PI_2 {
        return -1.0;
    }
    let a = [C::new(cos(t1), 0.0), C::new(sin(t1), 0.0)];
    let b = [C::new(cos(t2), 0.0), C::new(-sin(t2), 0.0)];
    let (fixed, other) = match x {
        Input::One => (a, b),
        Input::Two => (b, a),
    };
    expect(&other, &reflection(&fixed))
}

/// Brute-force the two-branch decomposition: with probability `p` input `x`
/// answers `+1`, otherwise `−1`, and each input's budget is split between
/// the branches as `p·H₊ + (1−p)·H₋ = ω` on a `grid × grid` lattice of split
/// fractions. The `−1` branch is the mirror image of the `+1` branch.
pub fn det_avg_region(x: Input, w: Thresholds, grid: usize) -> DetAvgRegion {
    let grid = grid.max(2);
    let step = |k: usize| k as f64 / (grid - 1) as f64;
    let mut out = DetAvgRegion {
        ex: Vec::with_capacity(grid),
        lo: Vec::with_capacity(grid),
        hi: Vec::with_capacity(grid),
    };
    for k in 0..grid {
        let p = step(k);
        let q = 1.0 - p;
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..grid {
            for j in 0..grid {
                let (f1, f2) = (step(i), step(j));
                let plus = (f1 * w.omega1() / p, f2 * w.omega2() / p);
                let minus = ((1.0 - f1) * w.omega1() / q, (1.0 - f2) * w.omega2() / q);
                let (mut l, mut h) = (0.0, 0.0);
                if p > 0.0 {
                    l += p * branch_extreme(x, plus);
                    h += p;
                }
                if q > 0.0 {
                    l -= q;
                    h -= q * branch_extreme(x, minus);
                }
                lo = lo.min(l);
                hi = hi.max(h);
            }
        }
        out.ex.push(2.0 * p - 1.0);
        out.lo.push(lo);
        out.hi.push(hi);
    }
    out
}

/// Compare [`det_avg_region`] with the closed-form bounds of `D̄ₓ`.
///
/// Returns two reports: agreement of the boundaries within `2e-3`, and
/// containment of the brute-force region in the closed form within `1e-9`.
pub fn det_avg_oracle(x: Input, w: Thresholds, grid: usize) -> Result<[OracleReport; 2]> {
    if grid < 50 {
        return Err(Error::InvalidArgument("det-avg oracle needs grid >= 50"));
    }
    let region = det_avg_region(x, w, grid);
    let (mut gap, mut inside) = (0.0f64, f64::INFINITY);
    for k in 0..region.ex.len() {
        let (lo, hi) = det_avg_interval(region.ex[k], w);
        gap = gap
            .max((region.lo[k] - lo).abs())
            .max((region.hi[k] - hi).abs());
        inside = inside.min(region.lo[k] - lo).min(hi - region.hi[k]);
    }
    let n = (grid * grid * grid) as u64;
    let name = match x {
        Input::One => ["det-avg-1-agreement", "det-avg-1-containment"],
        Input::Two => ["det-avg-2-agreement", "det-avg-2-containment"],
    };
    Ok([
        OracleReport::new(name[0], n, None, -gap, 2e-3).with_observed(gap),
        OracleReport::new(name[1], n, None, inside, 1e-9).with_observed(inside),
    ])
}

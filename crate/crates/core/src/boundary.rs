//! Ordered boundary polygons of the correlation sets.
//!
//! Curves are closed chains (the last point connects back to the first),
//! counterclockwise in the `(E₁, E₂)` plane, starting from the point with
//! the largest `E₁` and, among those, the largest `E₂`. Sets of measure zero
//! come back as the segment `(1, 1) – (−1, −1)` with `degenerate` set.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::sets::{
    det_avg_bounds, ellipse_coords, h_unchecked, peak_step, tangent_angle, Correlations, Input,
    SetName, Thresholds,
};

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundaryCurve {
    pub set: SetName,
    pub points: Vec<Correlations>,
    pub degenerate: bool,
}

/// Smallest sample count accepted for sets with curved boundaries.
pub const MIN_CURVED_SAMPLES: usize = 8;

/// Boundary of `set` at thresholds `w`.
///
/// Curved boundaries (quantum, det-avg) are sampled with exactly `n` points.
/// Polygons return their vertices, padded with points along the edges when
/// `n` exceeds the vertex count.
pub fn boundary_curve(set: SetName, w: Thresholds, n: usize) -> Result<BoundaryCurve> {
    if n < 2 {
        return Err(Error::InvalidArgument("boundary needs at least 2 samples"));
    }
    let shape = match set {
        SetName::Quantum => quantum_shape(w, n)?,
        SetName::ClassicalAvg => {
            let d = 2.0 * w.sum();
            if d <= 0.0 {
                Shape::Segment
            } else if d >= 2.0 {
                Shape::Polygon(box_corners())
            } else {
                Shape::Polygon(pts(&[
                    (1.0, 1.0),
                    (1.0 - d, 1.0),
                    (-1.0, d - 1.0),
                    (-1.0, -1.0),
                    (d - 1.0, -1.0),
                    (1.0, 1.0 - d),
                ]))
            }
        }
        SetName::ClassicalPeak => {
            if peak_step(w) > 0.0 {
                Shape::Polygon(box_corners())
            } else {
                Shape::Segment
            }
        }
        SetName::DetAvg1 => det_avg_shape(Input::One, w, n)?,
        SetName::DetAvg2 => det_avg_shape(Input::Two, w, n)?,
        SetName::DetPeak1 => det_peak_shape(Input::One, w),
        SetName::DetPeak2 => det_peak_shape(Input::Two, w),
    };
    Ok(match shape {
        Shape::Segment => BoundaryCurve {
            set,
            points: pts(&[(1.0, 1.0), (-1.0, -1.0)]),
            degenerate: true,
        },
        Shape::Polygon(v) => BoundaryCurve {
            set,
            points: pad_edges(&canonical_order(v), n),
            degenerate: false,
        },
        Shape::Curve(v) => BoundaryCurve {
            set,
            points: canonical_order(v),
            degenerate: false,
        },
    })
}

enum Shape {
    Segment,
    Polygon(Vec<Correlations>),
    Curve(Vec<Correlations>),
}

fn pts(v: &[(f64, f64)]) -> Vec<Correlations> {
    v.iter()
        .map(|&(a, b)| Correlations::clamped(a, b))
        .collect()
}

fn box_corners() -> Vec<Correlations> {
    pts(&[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)])
}

fn require_curved(n: usize) -> Result<()> {
    if n < MIN_CURVED_SAMPLES {
        return Err(Error::InvalidArgument(
            "curved boundaries need at least 8 samples",
        ));
    }
    Ok(())
}

fn quantum_shape(w: Thresholds, n: usize) -> Result<Shape> {
    let gamma = h_unchecked(w.omega1(), w.omega2());
    if gamma >= 1.0 {
        return Ok(Shape::Segment);
    }
    if gamma <= 1e-12 {
        return Ok(Shape::Polygon(box_corners()));
    }
    require_curved(n)?;
    let t = tangent_angle(gamma);
    let arc_points = n - 2;
    let upper = arc_points.div_ceil(2);
    let lower = arc_points - upper;

    let mut v = Vec::with_capacity(n);
    v.push(Correlations::clamped(1.0, 1.0));
    // above the diagonal: from (2γ²−1, 1) to (−1, 1−2γ²)
    sweep(&mut v, gamma, -t, t - PI, upper);
    v.push(Correlations::clamped(-1.0, -1.0));
    // below the diagonal: from (1−2γ², −1) to (1, 2γ²−1)
    sweep(&mut v, gamma, PI - t, t, lower);
    Ok(Shape::Curve(v))
}

fn sweep(out: &mut Vec<Correlations>, gamma: f64, from: f64, to: f64, count: usize) {
    match count {
        0 => {}
        1 => {
            let (a, b) = ellipse_coords(gamma, 0.5 * (from + to));
            out.push(Correlations::clamped(a, b));
        }
        _ => {
            let last = (count - 1) as f64;
            for k in 0..count {
                let theta = from + (to - from) * k as f64 / last;
                let (a, b) = ellipse_coords(gamma, theta);
                out.push(Correlations::clamped(a, b));
            }
        }
    }
}

fn det_avg_shape(x: Input, w: Thresholds, n: usize) -> Result<Shape> {
    if w.sum() <= 0.0 {
        return Ok(Shape::Segment);
    }
    require_curved(n)?;
    let top = n / 2;
    let bottom = n - top;
    let grid = |k: usize, count: usize| -1.0 + 2.0 * k as f64 / (count - 1) as f64;

    let mut v = Vec::with_capacity(n);
    for k in (0..top).rev() {
        let ex = grid(k, top);
        let hi = det_avg_bounds(ex, w).1.unwrap_or(1.0).min(1.0);
        v.push(Correlations::from_split(x, ex, hi));
    }
    for k in 0..bottom {
        let ex = grid(k, bottom);
        let lo = det_avg_bounds(ex, w).0.unwrap_or(-1.0).max(-1.0);
        v.push(Correlations::from_split(x, ex, lo));
    }
    Ok(Shape::Curve(v))
}

fn det_peak_shape(x: Input, w: Thresholds) -> Shape {
    let h = h_unchecked(w.omega1(), w.omega2());
    let hh = h * h;
    if hh >= 1.0 {
        return Shape::Segment;
    }
    let corners = [
        (1.0, 1.0),
        (-1.0, 1.0 - 2.0 * hh),
        (-1.0, -1.0),
        (1.0, 2.0 * hh - 1.0),
    ];
    Shape::Polygon(
        corners
            .iter()
            .map(|&(ex, ebar)| {
                let p = Correlations::from_split(x, ex, ebar);
                Correlations::clamped(p.e1(), p.e2())
            })
            .collect(),
    )
}

fn signed_area(v: &[Correlations]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            a.e1() * b.e2() - b.e1() * a.e2()
        })
        .sum::<f64>()
        * 0.5
}

/// Drop repeated vertices, orient counterclockwise, and rotate so the chain
/// starts at the largest `E₁` (ties: largest `E₂`).
fn canonical_order(mut v: Vec<Correlations>) -> Vec<Correlations> {
    const SAME: f64 = 1e-15;
    v.dedup_by(|a, b| (a.e1() - b.e1()).abs() <= SAME && (a.e2() - b.e2()).abs() <= SAME);
    while v.len() > 1 {
        let (first, last) = (v[0], v[v.len() - 1]);
        if (first.e1() - last.e1()).abs() <= SAME && (first.e2() - last.e2()).abs() <= SAME {
            v.pop();
        } else {
            break;
        }
    }
    if signed_area(&v) < 0.0 {
        v.reverse();
    }
    let start = (0..v.len())
        .max_by(|&i, &j| {
            let (a, b) = (v[i], v[j]);
            if (a.e1() - b.e1()).abs() <= 1e-12 {
                a.e2().total_cmp(&b.e2())
            } else {
                a.e1().total_cmp(&b.e1())
            }
        })
        .unwrap_or(0);
    v.rotate_left(start);
    v
}

/// Insert evenly spaced points on the polygon edges until there are `n`
/// points, distributing them by edge length (largest remainder first).
fn pad_edges(vertices: &[Correlations], n: usize) -> Vec<Correlations> {
    let k = vertices.len();
    if n <= k || k < 2 {
        return vertices.to_vec();
    }
    let lengths: Vec<f64> = (0..k)
        .map(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            libm::hypot(b.e1() - a.e1(), b.e2() - a.e2())
        })
        .collect();
    let perimeter: f64 = lengths.iter().sum();
    let extra = n - k;
    let quotas: Vec<f64> = lengths
        .iter()
        .map(|l| extra as f64 * l / perimeter)
        .collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| *q as usize).collect();
    let mut left = extra - counts.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| {
        let (fi, fj) = (quotas[i] - counts[i] as f64, quotas[j] - counts[j] as f64);
        fj.total_cmp(&fi).then(i.cmp(&j))
    });
    for &i in order.iter().cycle() {
        if left == 0 {
            break;
        }
        counts[i] += 1;
        left -= 1;
    }

    let mut out = Vec::with_capacity(n);
    for i in 0..k {
        let (a, b) = (vertices[i], vertices[(i + 1) % k]);
        out.push(a);
        let steps = counts[i] + 1;
        for j in 1..steps {
            let t = j as f64 / steps as f64;
            out.push(Correlations::clamped(
                a.e1() + t * (b.e1() - a.e1()),
                a.e2() + t * (b.e2() - a.e2()),
            ));
        }
    }
    out
}

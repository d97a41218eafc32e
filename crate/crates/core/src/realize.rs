//! Explicit qubit realizations of quantum correlation points.
//!
//! With `H = diag(0, 1)` on a qubit, the states
//! `|φ₁⟩ = cos θ₁|0⟩ + sin θ₁|1⟩` and `|φ₂⟩ = cos θ₂|0⟩ − sin θ₂|1⟩` with
//! `sin² θₓ = ωₓ` saturate both constraints and have the smallest overlap the
//! budget allows. Every measurement in their span is a mixture
//! `M = (p₀ − p₁)·I + p₂·m·σ`, so every quantum point is a convex combination
//! of `(1, 1)`, `(−1, −1)` and one point of the projective ellipse.

use core::f64::consts::{FRAC_PI_2, PI, TAU};

use libm::{acos, asin, atan2, cos, fabs, hypot, sin, sqrt};

use crate::error::{Error, Result};
use crate::sets::{quantum_membership, Correlations, Thresholds};

type Vec3 = [f64; 3];

/// Two saturating pure states plus a mixed-projective measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct QubitRealization {
    pub theta1: f64,
    pub theta2: f64,
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
    /// Angle of `m` in the frame `((n₁+n₂)/|n₁+n₂|, (n₁−n₂)/|n₁−n₂|)`.
    pub theta_m: f64,
}

impl QubitRealization {
    /// `(sin² θ₁, sin² θ₂)`
    pub fn expectations(&self) -> (f64, f64) {
        let (a, b) = (sin(self.theta1), sin(self.theta2));
        (a * a, b * b)
    }

    /// `|⟨φ₁|φ₂⟩| = |cos(θ₁ + θ₂)|`
    pub fn overlap(&self) -> f64 {
        fabs(cos(self.theta1 + self.theta2))
    }

    pub fn bloch_vectors(&self) -> (Vec3, Vec3) {
        let (a, b) = (2.0 * self.theta1, 2.0 * self.theta2);
        ([sin(a), 0.0, cos(a)], [-sin(b), 0.0, cos(b)])
    }

    /// Unit Bloch vector `m` of the projective part.
    pub fn measurement_direction(&self) -> Vec3 {
        let (n1, n2) = self.bloch_vectors();
        let (plus, minus) = frame(n1, n2);
        let (c, s) = (cos(self.theta_m), sin(self.theta_m));
        [
            c * plus[0] + s * minus[0],
            c * plus[1] + s * minus[1],
            c * plus[2] + s * minus[2],
        ]
    }

    /// Correlations induced by the realization, `Eₓ = p₀ − p₁ + p₂·nₓ·m`.
    pub fn correlations(&self) -> Correlations {
        let (n1, n2) = self.bloch_vectors();
        let m = self.measurement_direction();
        let bias = self.p0 - self.p1;
        Correlations::clamped(bias + self.p2 * dot(n1, m), bias + self.p2 * dot(n2, m))
    }
}

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn unit_or(v: Vec3, fallback: Vec3) -> Vec3 {
    let n = sqrt(dot(v, v));
    if n > 1e-12 {
        [v[0] / n, v[1] / n, v[2] / n]
    } else {
        fallback
    }
}

/// Orthonormal frame `(u₊, u₋)` of the xz-plane aligned with `n₁ ± n₂`.
fn frame(n1: Vec3, n2: Vec3) -> (Vec3, Vec3) {
    let sum = [n1[0] + n2[0], n1[1] + n2[1], n1[2] + n2[2]];
    let diff = [n1[0] - n2[0], n1[1] - n2[1], n1[2] - n2[2]];
    if dot(sum, sum) >= dot(diff, diff) {
        let plus = unit_or(sum, [0.0, 0.0, 1.0]);
        let minus = unit_or(diff, [plus[2], 0.0, -plus[0]]);
        (plus, minus)
    } else {
        let minus = unit_or(diff, [1.0, 0.0, 0.0]);
        let plus = unit_or(sum, [minus[2], 0.0, -minus[0]]);
        (plus, minus)
    }
}

/// Realize `e` with the saturating states for `w`.
///
/// The decomposition is not unique; the canonical one minimizes `p₂`, taking
/// the ellipse angle closest to `±π/2` among those whose triangle with the
/// corners `(±1, ±1)` contains `e`. Points with `E₋ = 0` use `p₂ = 0` and
/// `theta_m = π/2`.
pub fn realize_point(e: Correlations, w: Thresholds) -> Result<QubitRealization> {
    let verdict = quantum_membership(e, w);
    if !verdict.member {
        return Err(Error::Infeasible {
            deficit: -verdict.margin,
        });
    }

    let theta1 = asin(sqrt(w.omega1().min(1.0)));
    let theta2 = asin(sqrt(w.omega2().min(1.0)));
    let mut r = QubitRealization {
        theta1,
        theta2,
        p0: 0.0,
        p1: 0.0,
        p2: 0.0,
        theta_m: FRAC_PI_2,
    };

    let (n1, n2) = r.bloch_vectors();
    let (plus, minus) = frame(n1, n2);
    // ellipse semi-axes in (E₊, E₋) are 2·gp and 2·sp
    let gp = fabs(dot(n1, plus));
    let sp = fabs(dot(n1, minus));

    let x = e.e_plus();
    let y = e.e_minus();
    if y == 0.0 || sp == 0.0 {
        set_weights(&mut r, 0.0, 0.5 * x);
        return Ok(r);
    }

    let ya = fabs(y);
    let theta = closest_feasible_angle(gp, sp, x, ya);
    let py = 2.0 * sp * sin(theta);
    let p2 = (ya / py).min(1.0);
    let bias = 0.5 * (x - p2 * 2.0 * gp * cos(theta));
    set_weights(&mut r, p2, bias);
    r.theta_m = if y > 0.0 { theta } else { TAU - theta };
    Ok(r)
}

fn set_weights(r: &mut QubitRealization, p2: f64, bias: f64) {
    let rest = 1.0 - p2;
    let bias = bias.clamp(-rest, rest);
    r.p2 = p2;
    r.p0 = 0.5 * (rest + bias);
    r.p1 = 0.5 * (rest - bias);
}

/// Angle in `(0, π)` closest to `π/2` for which the triangle spanned by
/// `(±2, 0)` and the ellipse point `(2γ cos θ, 2s sin θ)` contains `(x, y)`,
/// `y > 0`, in `(E₊, E₋)` coordinates.
///
/// Containment splits into `γ cos θ + a·s sin θ ≥ 1` and
/// `−γ cos θ + b·s sin θ ≥ 1` with `a = (2−x)/y`, `b = (2+x)/y`; each is an
/// arc `|θ − φ| ≤ acos(1/R)` of the phase form `R cos(θ − φ)`.
fn closest_feasible_angle(gamma: f64, s: f64, x: f64, y: f64) -> f64 {
    let arc = |cx: f64, cy: f64| {
        let r = hypot(cx, cy);
        let phi = atan2(cy, cx);
        let half = if r > 1.0 { acos(1.0 / r) } else { 0.0 };
        (phi - half, phi + half)
    };
    let (a_lo, a_hi) = arc(gamma, (2.0 - x) / y * s);
    let (b_lo, b_hi) = arc(-gamma, (2.0 + x) / y * s);
    let lo = a_lo.max(b_lo).max(0.0);
    let hi = a_hi.min(b_hi).min(PI);
    if lo > hi {
        // rounding on a boundary point collapses the arc to one angle
        return 0.5 * (lo + hi);
    }
    FRAC_PI_2.clamp(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{g_value, h_value};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    /// Independent route: `⟨φ|M|φ⟩` from 2×2 matrices on the state vectors.
    fn expectation_by_matrices(r: &QubitRealization) -> (f64, f64) {
        let m = r.measurement_direction();
        let bias = r.p0 - r.p1;
        // real symmetric because m has no y component
        let op = [
            [bias + r.p2 * m[2], r.p2 * m[0]],
            [r.p2 * m[0], bias - r.p2 * m[2]],
        ];
        let psi1 = [cos(r.theta1), sin(r.theta1)];
        let psi2 = [cos(r.theta2), -sin(r.theta2)];
        let ev = |v: [f64; 2]| {
            v[0] * (op[0][0] * v[0] + op[0][1] * v[1]) + v[1] * (op[1][0] * v[0] + op[1][1] * v[1])
        };
        (ev(psi1), ev(psi2))
    }

    fn check_round_trip(e: Correlations, w: Thresholds) {
        let r = realize_point(e, w).unwrap();
        assert!(r.p0 >= 0.0 && r.p1 >= 0.0 && r.p2 >= 0.0, "{r:?}");
        assert_abs_diff_eq!(r.p0 + r.p1 + r.p2, 1.0, epsilon = 1e-12);
        assert!((0.0..TAU).contains(&r.theta_m));
        let got = r.correlations();
        assert_abs_diff_eq!(got.e1(), e.e1(), epsilon = 1e-9);
        assert_abs_diff_eq!(got.e2(), e.e2(), epsilon = 1e-9);
        let (m1, m2) = expectation_by_matrices(&r);
        assert_abs_diff_eq!(m1, e.e1(), epsilon = 1e-9);
        assert_abs_diff_eq!(m2, e.e2(), epsilon = 1e-9);
        let (h1, h2) = r.expectations();
        assert_abs_diff_eq!(h1, w.omega1(), epsilon = 1e-14);
        assert_abs_diff_eq!(h2, w.omega2(), epsilon = 1e-14);
    }

    #[test]
    fn corner_point_uses_no_projective_part() {
        let w = Thresholds::new(0.15, 0.15).unwrap();
        let r = realize_point(Correlations::new(1.0, 1.0).unwrap(), w).unwrap();
        assert_eq!(r.p0, 1.0);
        assert_eq!(r.p2, 0.0);
        assert_eq!(r.theta_m, FRAC_PI_2);
    }

    #[test]
    fn tsirelson_point_is_pure_projective() {
        let w = Thresholds::new(0.15, 0.15).unwrap();
        let a = sqrt(0.51);
        let e = Correlations::new(a, -a).unwrap();
        let r = realize_point(e, w).unwrap();
        assert_abs_diff_eq!(r.p2, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(r.theta_m, FRAC_PI_2, epsilon = 1e-7);
        assert_abs_diff_eq!(r.overlap(), 0.7, epsilon = 1e-12);
        check_round_trip(e, w);
    }

    #[test]
    fn negative_eminus_maps_to_lower_half_turn() {
        let w = Thresholds::new(0.15, 0.15).unwrap();
        let a = sqrt(0.51);
        let r = realize_point(Correlations::new(-a, a).unwrap(), w).unwrap();
        assert_abs_diff_eq!(r.theta_m, 3.0 * FRAC_PI_2, epsilon = 1e-7);
    }

    #[test]
    fn outside_points_report_deficit() {
        let w = Thresholds::new(0.15, 0.15).unwrap();
        let e = Correlations::new(0.9, -0.9).unwrap();
        match realize_point(e, w) {
            Err(Error::Infeasible { deficit }) => {
                let want = h_value(0.15, 0.15).unwrap() - g_value(e);
                assert_abs_diff_eq!(deficit, want, epsilon = 1e-15);
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_budgets() {
        let zero = Thresholds::new(0.0, 0.0).unwrap();
        check_round_trip(Correlations::new(0.3, 0.3).unwrap(), zero);
        let full = Thresholds::new(0.5, 0.5).unwrap();
        for (a, b) in [(1.0, -1.0), (-1.0, 1.0), (0.2, -0.9), (1.0, 0.0)] {
            check_round_trip(Correlations::new(a, b).unwrap(), full);
        }
        let edge = Thresholds::new(0.0, 0.2).unwrap();
        check_round_trip(Correlations::new(0.9, 0.2).unwrap(), edge);
    }

    #[test]
    fn boundary_arc_points_round_trip() {
        let w = Thresholds::new(0.3, 0.1).unwrap();
        let gamma = h_value(0.3, 0.1).unwrap();
        let t = crate::sets::tangent_angle(gamma);
        for k in 0..=50 {
            let theta = t + (PI - 2.0 * t) * k as f64 / 50.0;
            let (a, b) = crate::sets::ellipse_coords(gamma, theta);
            check_round_trip(Correlations::clamped(a, b), w);
            check_round_trip(Correlations::clamped(b, a), w);
        }
    }

    proptest! {
        #[test]
        fn random_members_round_trip(
            e1 in -1.0f64..=1.0,
            e2 in -1.0f64..=1.0,
            a in 0.0f64..=1.0,
            b in 0.0f64..=1.0,
        ) {
            let w = Thresholds::new(a * 0.5, b * 0.5).unwrap();
            let e = Correlations::new(e1, e2).unwrap();
            prop_assume!(quantum_membership(e, w).member);
            check_round_trip(e, w);
        }
    }
}

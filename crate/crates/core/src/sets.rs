//! Closed-form descriptions of the correlation sets.
//!
//! Every set lives in the square `|E₁|, |E₂| ≤ 1`:
//!
//! | set              | defining inequality                                              |
//! |------------------|------------------------------------------------------------------|
//! | quantum          | `g(E₁, E₂) ≥ h(ω₁, ω₂)`                                          |
//! | classical-avg    | `|E₋| ≤ 2(ω₁ + ω₂)`                                              |
//! | classical-peak   | `|E₋| ≤ 2Θ(ω₁ + ω₂)`, `Θ(z) = 0` for `z < 1`, `Θ(1) = 1`         |
//! | det-avg-x        | `(1+Eₓ)·h²(2ω/(1+Eₓ)) − 1 ≤ E_x̄ ≤ 1 − (1−Eₓ)·h²(2ω/(1−Eₓ))`     |
//! | det-peak-x       | `|Eₓ·h²(ω₁, ω₂) − E_x̄| ≤ 1 − h²(ω₁, ω₂)`                         |
//!
//! The quantum set is the same under the pure-state, shared-randomness,
//! max-average and max-peak models, so a single verdict covers all four.

use core::f64::consts::FRAC_PI_2;
use core::fmt;
use core::str::FromStr;

use libm::{cos, fabs, sin, sqrt};

use crate::error::{Error, Result};

/// Absolute slack on verdict margins.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

/// Rounding slack accepted on the box `|E| ≤ 1` and on `ω₁ + ω₂ ≤ 1`.
pub(crate) const DOMAIN_TOL: f64 = 1e-12;

/// Output expectations `(E₁, E₂)` for the two preparations.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Correlations {
    e1: f64,
    e2: f64,
}

impl Correlations {
    /// Values within [`DOMAIN_TOL`] of the box are clamped onto it.
    pub fn new(e1: f64, e2: f64) -> Result<Self> {
        Ok(Correlations {
            e1: unit_interval("e1", e1)?,
            e2: unit_interval("e2", e2)?,
        })
    }

    pub fn e1(&self) -> f64 {
        self.e1
    }

    pub fn e2(&self) -> f64 {
        self.e2
    }

    pub fn get(&self, x: Input) -> f64 {
        match x {
            Input::One => self.e1,
            Input::Two => self.e2,
        }
    }

    /// `E₊ = E₁ + E₂`
    pub fn e_plus(&self) -> f64 {
        self.e1 + self.e2
    }

    /// `E₋ = E₁ − E₂`
    pub fn e_minus(&self) -> f64 {
        self.e1 - self.e2
    }

    pub fn negated(&self) -> Self {
        Correlations {
            e1: -self.e1,
            e2: -self.e2,
        }
    }

    pub fn swapped(&self) -> Self {
        Correlations {
            e1: self.e2,
            e2: self.e1,
        }
    }

    /// `(Eₓ, E_x̄)`
    pub(crate) fn split(&self, x: Input) -> (f64, f64) {
        match x {
            Input::One => (self.e1, self.e2),
            Input::Two => (self.e2, self.e1),
        }
    }

    pub(crate) fn from_split(x: Input, ex: f64, ebar: f64) -> Self {
        match x {
            Input::One => Correlations { e1: ex, e2: ebar },
            Input::Two => Correlations { e1: ebar, e2: ex },
        }
    }

    pub(crate) fn clamped(e1: f64, e2: f64) -> Self {
        Correlations {
            e1: e1.clamp(-1.0, 1.0),
            e2: e2.clamp(-1.0, 1.0),
        }
    }
}

fn unit_interval(name: &'static str, v: f64) -> Result<f64> {
    if !v.is_finite() || fabs(v) > 1.0 + DOMAIN_TOL {
        return Err(Error::out_of_range(name, v, "a finite value in [-1, 1]"));
    }
    Ok(v.clamp(-1.0, 1.0))
}

/// Upper bounds `(ω₁, ω₂)` on `Tr[H ρₓ]`; also used for exact expectations.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Thresholds {
    omega1: f64,
    omega2: f64,
}

impl Thresholds {
    /// Requires `ω₁, ω₂ ≥ 0` and `ω₁ + ω₂ ≤ 1`. Beyond 1 every point of the
    /// square is already reachable, so larger budgets carry no information.
    pub fn new(omega1: f64, omega2: f64) -> Result<Self> {
        for (name, v) in [("omega1", omega1), ("omega2", omega2)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::out_of_range(name, v, "a finite value >= 0"));
            }
        }
        if omega1 + omega2 > 1.0 + DOMAIN_TOL {
            return Err(Error::out_of_range(
                "omega1 + omega2",
                omega1 + omega2,
                "a sum <= 1",
            ));
        }
        Ok(Thresholds { omega1, omega2 })
    }

    pub fn omega1(&self) -> f64 {
        self.omega1
    }

    pub fn omega2(&self) -> f64 {
        self.omega2
    }

    pub fn get(&self, x: Input) -> f64 {
        match x {
            Input::One => self.omega1,
            Input::Two => self.omega2,
        }
    }

    pub fn sum(&self) -> f64 {
        self.omega1 + self.omega2
    }

    pub fn swapped(&self) -> Self {
        Thresholds {
            omega1: self.omega2,
            omega2: self.omega1,
        }
    }
}

/// Lower bound `γ` on the overlap `|⟨φ₁|φ₂⟩|`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OverlapBound {
    gamma: f64,
}

impl OverlapBound {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::out_of_range("gamma", gamma, "a value in [0, 1]"));
        }
        Ok(OverlapBound { gamma })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Preparation index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Input {
    One,
    Two,
}

impl Input {
    pub fn index(self) -> u8 {
        match self {
            Input::One => 1,
            Input::Two => 2,
        }
    }

    pub fn complement(self) -> Input {
        match self {
            Input::One => Input::Two,
            Input::Two => Input::One,
        }
    }
}

impl TryFrom<u8> for Input {
    type Error = Error;

    fn try_from(x: u8) -> Result<Self> {
        match x {
            1 => Ok(Input::One),
            2 => Ok(Input::Two),
            other => Err(Error::InputIndex(other)),
        }
    }
}

/// The seven sets a verdict can refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetName {
    Quantum,
    ClassicalAvg,
    ClassicalPeak,
    DetAvg1,
    DetAvg2,
    DetPeak1,
    DetPeak2,
}

impl SetName {
    /// Canonical reporting order.
    pub const ALL: [SetName; 7] = [
        SetName::Quantum,
        SetName::ClassicalAvg,
        SetName::ClassicalPeak,
        SetName::DetAvg1,
        SetName::DetAvg2,
        SetName::DetPeak1,
        SetName::DetPeak2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SetName::Quantum => "quantum",
            SetName::ClassicalAvg => "classical-avg",
            SetName::ClassicalPeak => "classical-peak",
            SetName::DetAvg1 => "det-avg-1",
            SetName::DetAvg2 => "det-avg-2",
            SetName::DetPeak1 => "det-peak-1",
            SetName::DetPeak2 => "det-peak-2",
        }
    }

    pub fn det_avg(x: Input) -> SetName {
        match x {
            Input::One => SetName::DetAvg1,
            Input::Two => SetName::DetAvg2,
        }
    }

    pub fn det_peak(x: Input) -> SetName {
        match x {
            Input::One => SetName::DetPeak1,
            Input::Two => SetName::DetPeak2,
        }
    }
}

impl fmt::Display for SetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSet(s.into()))
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for SetName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Membership decision with signed slack of the tightest defining inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SetVerdict {
    pub set: SetName,
    pub member: bool,
    pub margin: f64,
}

impl SetVerdict {
    pub fn from_margin(set: SetName, margin: f64) -> Self {
        SetVerdict {
            set,
            member: margin >= -MEMBERSHIP_TOL,
            margin,
        }
    }
}

/// `g(E₁, E₂) = ½(√(1+E₁)√(1+E₂) + √(1−E₁)√(1−E₂))`
pub fn g_value(e: Correlations) -> f64 {
    let (e1, e2) = (e.e1, e.e2);
    let g = 0.5 * (sqrt(1.0 + e1) * sqrt(1.0 + e2) + sqrt(1.0 - e1) * sqrt(1.0 - e2));
    g.min(1.0)
}

/// `h(H₁, H₂) = √(1−H₁)√(1−H₂) − √H₁√H₂` on `H₁, H₂ ≥ 0`, `H₁ + H₂ ≤ 1`.
pub fn h_value(h1: f64, h2: f64) -> Result<f64> {
    for (name, v) in [("h1", h1), ("h2", h2)] {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::out_of_range(name, v, "a finite value >= 0"));
        }
    }
    if h1 + h2 > 1.0 + DOMAIN_TOL {
        return Err(Error::out_of_range("h1 + h2", h1 + h2, "a sum <= 1"));
    }
    Ok(h_unchecked(h1, h2))
}

pub(crate) fn h_unchecked(h1: f64, h2: f64) -> f64 {
    let v = sqrt((1.0 - h1).max(0.0)) * sqrt((1.0 - h2).max(0.0)) - sqrt(h1) * sqrt(h2);
    v.max(0.0)
}

/// [`h_value`] extended by 0 outside the simplex, where orthogonal
/// preparations fit the budget and the overlap bound is vacuous.
pub fn h_clamped(h1: f64, h2: f64) -> Result<f64> {
    for (name, v) in [("h1", h1), ("h2", h2)] {
        if v.is_nan() || v < 0.0 {
            return Err(Error::out_of_range(name, v, "a value >= 0"));
        }
    }
    Ok(h_clamped_unchecked(h1, h2))
}

fn h_clamped_unchecked(h1: f64, h2: f64) -> f64 {
    if h1 + h2 > 1.0 {
        0.0
    } else {
        h_unchecked(h1, h2)
    }
}

pub fn overlap_lower_bound(w: Thresholds) -> OverlapBound {
    OverlapBound {
        gamma: h_unchecked(w.omega1, w.omega2),
    }
}

/// Image of a projective measurement along Bloch angle `theta_m` on two pure
/// qubit states of overlap `γ`:
/// `E₊ = 2γ cos θ`, `E₋ = 2√(1−γ²) sin θ`.
pub fn ellipse_point(gamma: OverlapBound, theta_m: f64) -> Result<Correlations> {
    let g = gamma.gamma;
    if g <= 0.0 || g >= 1.0 {
        return Err(Error::DegenerateEllipse { gamma: g });
    }
    let (e1, e2) = ellipse_coords(g, theta_m);
    Ok(Correlations::clamped(e1, e2))
}

/// Unchecked ellipse parametrization, valid for all `γ ∈ [0, 1]`.
pub(crate) fn ellipse_coords(gamma: f64, theta: f64) -> (f64, f64) {
    let s = sqrt((1.0 - gamma * gamma).max(0.0));
    let (c, sn) = (cos(theta), sin(theta));
    (gamma * c + s * sn, gamma * c - s * sn)
}

/// Bloch angle at which the ellipse touches the edge `E₂ = 1`; the other
/// three contact points sit at `−θ`, `π − θ` and `θ − π`.
pub(crate) fn tangent_angle(gamma: f64) -> f64 {
    libm::acos(gamma.clamp(0.0, 1.0)).min(FRAC_PI_2)
}

pub fn quantum_membership(e: Correlations, w: Thresholds) -> SetVerdict {
    let margin = g_value(e) - h_unchecked(w.omega1, w.omega2);
    SetVerdict::from_margin(SetName::Quantum, margin)
}

/// Largest `|E₁ − E₂|` in the quantum set.
pub fn tsirelson_max_eminus(w: Thresholds) -> f64 {
    let (a, b) = (w.omega1.min(1.0), w.omega2.min(1.0));
    let v = 2.0 * (sqrt(a) * sqrt(1.0 - b) + sqrt(1.0 - a) * sqrt(b));
    v.min(2.0)
}

/// Optimal probability of guessing `x` from the outcome.
pub fn guessing_probability(e: Correlations) -> f64 {
    0.5 * (1.0 + 0.5 * fabs(e.e_minus()))
}

pub fn classical_avg_membership(e: Correlations, w: Thresholds) -> SetVerdict {
    let margin = 2.0 * w.sum() - fabs(e.e_minus());
    SetVerdict::from_margin(SetName::ClassicalAvg, margin)
}

/// `Θ(ω₁ + ω₂)`; the max-peak classical set is a segment unless the budget
/// admits orthogonal preparations.
pub(crate) fn peak_step(w: Thresholds) -> f64 {
    if w.sum() >= 1.0 - DOMAIN_TOL {
        1.0
    } else {
        0.0
    }
}

pub fn classical_peak_membership(e: Correlations, w: Thresholds) -> SetVerdict {
    let margin = 2.0 * peak_step(w) - fabs(e.e_minus());
    SetVerdict::from_margin(SetName::ClassicalPeak, margin)
}

/// Bounds on `E_x̄` over `D̄ₓ` at fixed `Eₓ`, before clipping to the box.
/// A bound whose branch weight `(1 ± Eₓ)/2` vanishes is `None`.
pub(crate) fn det_avg_bounds(ex: f64, w: Thresholds) -> (Option<f64>, Option<f64>) {
    let up = 1.0 + ex;
    let lower = (up > 0.0).then(|| {
        let h = h_clamped_unchecked(2.0 * w.omega1 / up, 2.0 * w.omega2 / up);
        up * h * h - 1.0
    });
    let down = 1.0 - ex;
    let upper = (down > 0.0).then(|| {
        let h = h_clamped_unchecked(2.0 * w.omega1 / down, 2.0 * w.omega2 / down);
        1.0 - down * h * h
    });
    (lower, upper)
}

/// Interval of `E_x̄` allowed in `D̄ₓ` at fixed `Eₓ`, clipped to `[−1, 1]`.
pub fn det_avg_interval(ex: f64, w: Thresholds) -> (f64, f64) {
    let (lo, hi) = det_avg_bounds(ex, w);
    (
        lo.unwrap_or(-1.0).clamp(-1.0, 1.0),
        hi.unwrap_or(1.0).clamp(-1.0, 1.0),
    )
}

pub fn det_avg_membership(e: Correlations, x: Input, w: Thresholds) -> SetVerdict {
    let (ex, ebar) = e.split(x);
    let (lower, upper) = det_avg_bounds(ex, w);
    let margin = match (lower, upper) {
        (Some(lo), Some(hi)) => (ebar - lo).min(hi - ebar),
        (Some(lo), None) => ebar - lo,
        (None, Some(hi)) => hi - ebar,
        (None, None) => unreachable!("1 + Ex and 1 - Ex cannot both vanish"),
    };
    SetVerdict::from_margin(SetName::det_avg(x), margin)
}

pub fn det_peak_membership(e: Correlations, x: Input, w: Thresholds) -> SetVerdict {
    let (ex, ebar) = e.split(x);
    let h = h_unchecked(w.omega1, w.omega2);
    let hh = h * h;
    let margin = (1.0 - hh) - fabs(ex * hh - ebar);
    SetVerdict::from_margin(SetName::det_peak(x), margin)
}

pub fn membership(set: SetName, e: Correlations, w: Thresholds) -> SetVerdict {
    match set {
        SetName::Quantum => quantum_membership(e, w),
        SetName::ClassicalAvg => classical_avg_membership(e, w),
        SetName::ClassicalPeak => classical_peak_membership(e, w),
        SetName::DetAvg1 => det_avg_membership(e, Input::One, w),
        SetName::DetAvg2 => det_avg_membership(e, Input::Two, w),
        SetName::DetPeak1 => det_peak_membership(e, Input::One, w),
        SetName::DetPeak2 => det_peak_membership(e, Input::Two, w),
    }
}

/// Verdicts for all seven sets in [`SetName::ALL`] order.
pub fn verdicts(e: Correlations, w: Thresholds) -> [SetVerdict; 7] {
    SetName::ALL.map(|s| membership(s, e, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::PI;

    fn c(e1: f64, e2: f64) -> Correlations {
        Correlations::new(e1, e2).unwrap()
    }

    fn w(a: f64, b: f64) -> Thresholds {
        Thresholds::new(a, b).unwrap()
    }

    const SQRT_051: f64 = 0.714_142_842_854_285;

    #[test]
    fn correlations_reject_outside_box() {
        assert!(Correlations::new(1.5, 0.0).is_err());
        assert!(Correlations::new(0.0, -1.01).is_err());
        assert!(Correlations::new(f64::NAN, 0.0).is_err());
        assert_eq!(Correlations::new(1.0 + 1e-15, 0.0).unwrap().e1(), 1.0);
        let e = c(0.3, -0.2);
        assert_abs_diff_eq!(e.e_plus(), 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(e.e_minus(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn thresholds_reject_bad_budgets() {
        assert!(Thresholds::new(-0.1, 0.0).is_err());
        assert!(Thresholds::new(0.6, 0.6).is_err());
        assert!(Thresholds::new(0.5, 0.5).is_ok());
        assert!(Thresholds::new(f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn g_examples() {
        assert_abs_diff_eq!(g_value(c(1.0, 1.0)), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g_value(c(1.0, -1.0)), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g_value(c(0.714143, -0.714143)), 0.7, epsilon = 1e-6);
        assert_abs_diff_eq!(g_value(c(SQRT_051, -SQRT_051)), 0.7, epsilon = 1e-12);
    }

    #[test]
    fn h_examples() {
        assert_abs_diff_eq!(h_value(0.0, 0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(h_value(0.5, 0.5).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h_value(0.15, 0.15).unwrap(), 0.70, epsilon = 1e-15);
        assert!(matches!(
            h_value(-0.1, 0.2),
            Err(Error::OutOfRange { name: "h1", .. })
        ));
        assert!(matches!(
            h_value(0.2, -0.1),
            Err(Error::OutOfRange { name: "h2", .. })
        ));
        assert!(h_value(0.7, 0.4).is_err());
    }

    #[test]
    fn h_clamped_examples() {
        assert_eq!(h_clamped(0.6, 0.6).unwrap(), 0.0);
        assert_abs_diff_eq!(h_clamped(0.3, 0.3).unwrap(), 0.40, epsilon = 1e-15);
        assert_abs_diff_eq!(h_clamped(0.0, 0.2).unwrap(), sqrt(0.8), epsilon = 1e-15);
        assert_eq!(h_clamped(f64::INFINITY, 0.0).unwrap(), 0.0);
        assert!(h_clamped(-1e-3, 0.0).is_err());
    }

    #[test]
    fn overlap_bound_examples() {
        assert_eq!(overlap_lower_bound(w(0.0, 0.0)).gamma(), 1.0);
        assert_abs_diff_eq!(
            overlap_lower_bound(w(0.15, 0.15)).gamma(),
            0.7,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            overlap_lower_bound(w(0.51, 0.0)).gamma(),
            0.7,
            epsilon = 1e-15
        );
        assert!(OverlapBound::new(1.2).is_err());
    }

    #[test]
    fn ellipse_examples() {
        let p = ellipse_point(OverlapBound::new(0.82).unwrap(), 0.0).unwrap();
        assert_abs_diff_eq!(p.e1(), 0.82, epsilon = 1e-15);
        assert_abs_diff_eq!(p.e2(), 0.82, epsilon = 1e-15);
        let p = ellipse_point(OverlapBound::new(0.7).unwrap(), PI / 2.0).unwrap();
        assert_abs_diff_eq!(p.e1(), 0.714143, epsilon = 1e-6);
        assert_abs_diff_eq!(p.e2(), -0.714143, epsilon = 1e-6);
        for g in [0.0, 1.0] {
            assert!(matches!(
                ellipse_point(OverlapBound::new(g).unwrap(), 0.3),
                Err(Error::DegenerateEllipse { .. })
            ));
        }
    }

    #[test]
    fn ellipse_touches_box_at_four_points() {
        for gamma in [0.2, 0.55, 0.82, 0.95] {
            let t = tangent_angle(gamma);
            let want = [
                (t, (1.0, 2.0 * gamma * gamma - 1.0)),
                (-t, (2.0 * gamma * gamma - 1.0, 1.0)),
                (PI - t, (1.0 - 2.0 * gamma * gamma, -1.0)),
                (t - PI, (-1.0, 1.0 - 2.0 * gamma * gamma)),
            ];
            for (theta, (a, b)) in want {
                let (e1, e2) = ellipse_coords(gamma, theta);
                assert_abs_diff_eq!(e1, a, epsilon = 1e-12);
                assert_abs_diff_eq!(e2, b, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn quantum_examples() {
        let v = quantum_membership(c(SQRT_051, -SQRT_051), w(0.15, 0.15));
        assert!(v.member);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-12);
        // the six-decimal rendering of the same point sits 1.6e-7 outside
        let v = quantum_membership(c(0.714143, -0.714143), w(0.15, 0.15));
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(c(0.714143, -0.714143).e_minus(), 1.4283, epsilon = 1e-4);

        let v = quantum_membership(c(0.9, -0.9), w(0.15, 0.15));
        assert!(!v.member);
        assert_abs_diff_eq!(v.margin, sqrt(0.19) - 0.7, epsilon = 1e-12);

        for k in 0..=20 {
            let e = -1.0 + 0.1 * k as f64;
            assert!(quantum_membership(c(e, e), w(0.0, 0.0)).member);
        }
    }

    #[test]
    fn tsirelson_examples() {
        assert_abs_diff_eq!(
            tsirelson_max_eminus(w(0.15, 0.15)),
            1.4283,
            epsilon = 0.0017
        );
        assert_abs_diff_eq!(
            tsirelson_max_eminus(w(0.15, 0.15)),
            2.0 * SQRT_051,
            epsilon = 1e-12
        );
        assert_eq!(tsirelson_max_eminus(w(0.0, 0.0)), 0.0);
        assert_abs_diff_eq!(tsirelson_max_eminus(w(0.5, 0.5)), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn guessing_examples() {
        assert_eq!(guessing_probability(c(1.0, -1.0)), 1.0);
        assert_eq!(guessing_probability(c(0.3, 0.3)), 0.5);
        assert_abs_diff_eq!(
            guessing_probability(c(0.714143, -0.714143)),
            0.857,
            epsilon = 1e-3
        );
    }

    #[test]
    fn classical_avg_examples() {
        let v = classical_avg_membership(c(0.3, -0.3), w(0.15, 0.15));
        assert!(v.member);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-15);
        assert!(classical_avg_membership(c(1.0, 1.0), w(0.0, 0.0)).member);
        let v = classical_avg_membership(c(0.02, -1.0), w(0.51, 0.0));
        assert!(v.member);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-15);
        assert!(!classical_avg_membership(c(0.4, -0.4), w(0.15, 0.15)).member);
    }

    #[test]
    fn classical_peak_examples() {
        assert!(classical_peak_membership(c(0.5, 0.5), w(0.1, 0.1)).member);
        assert!(!classical_peak_membership(c(0.5, 0.4999), w(0.1, 0.1)).member);
        assert!(classical_peak_membership(c(1.0, -1.0), w(0.5, 0.5)).member);
    }

    #[test]
    fn det_avg_examples() {
        let x = Input::One;
        let v = det_avg_membership(c(1.0, -0.02), x, w(0.15, 0.15));
        assert!(v.member);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-12);
        let v = det_avg_membership(c(0.0, -0.84), x, w(0.15, 0.15));
        assert!(v.member);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-12);
        assert!(!det_avg_membership(c(0.714143, -0.714143), x, w(0.15, 0.15)).member);
        assert!(matches!(Input::try_from(3), Err(Error::InputIndex(3))));
        assert!(matches!(Input::try_from(0), Err(Error::InputIndex(0))));
    }

    #[test]
    fn det_avg_endpoints_drop_vacuous_branch() {
        // at E1 = -1 only the upper inequality survives: E2 <= 1 - 2h^2
        let t = w(0.15, 0.15);
        let v = det_avg_membership(c(-1.0, 0.02), Input::One, t);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-12);
        let v = det_avg_membership(c(-1.0, -1.0), Input::One, t);
        assert!(v.member);
        // input 2 mirrors input 1 under the coordinate swap
        let v = det_avg_membership(c(-0.02, 1.0), Input::Two, t);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn det_peak_examples() {
        let v = det_peak_membership(c(1.0, -0.02), Input::One, w(0.15, 0.15));
        assert!(v.member);
        assert_abs_diff_eq!(v.margin, 0.0, epsilon = 1e-12);
        assert!(det_peak_membership(c(0.0, 0.0), Input::One, w(0.3, 0.1)).member);
        assert!(det_peak_membership(c(0.0, 0.0), Input::Two, w(0.0, 0.0)).member);
        let v = det_peak_membership(c(-0.6734, -1.0), Input::One, w(0.51, 0.0));
        assert!(!v.member);
        assert_abs_diff_eq!(v.margin, 0.51 - fabs(-0.6734 * 0.49 + 1.0), epsilon = 1e-12);
    }

    #[test]
    fn det_peak_corner_intervals() {
        let t = w(0.2, 0.1);
        let h = h_value(0.2, 0.1).unwrap();
        let hh = h * h;
        let at = |e1: f64, e2: f64| det_peak_membership(c(e1, e2), Input::One, t).margin;
        assert_abs_diff_eq!(at(1.0, 2.0 * hh - 1.0), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(at(1.0, 1.0), 0.0, epsilon = 1e-12);
        assert!(at(1.0, 2.0 * hh - 1.0 - 1e-6) < 0.0);
        assert_abs_diff_eq!(at(-1.0, 1.0 - 2.0 * hh), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(at(-1.0, -1.0), 0.0, epsilon = 1e-12);
        assert!(at(-1.0, 1.0 - 2.0 * hh + 1e-6) < 0.0);
    }

    #[test]
    fn set_names_round_trip() {
        for s in SetName::ALL {
            assert_eq!(s.as_str().parse::<SetName>().unwrap(), s);
        }
        assert!(matches!(
            "bogus".parse::<SetName>(),
            Err(Error::UnknownSet(_))
        ));
    }

    #[test]
    fn verdicts_follow_canonical_order() {
        let v = verdicts(c(1.0, 1.0), w(0.15, 0.15));
        for (got, want) in v.iter().zip(SetName::ALL) {
            assert_eq!(got.set, want);
            assert!(got.member);
        }
    }
}

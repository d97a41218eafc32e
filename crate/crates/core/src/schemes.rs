//! Coherent-state implementations: binary phase shift keying (BPSK),
//! two-level amplitude shift keying (2ASK) and on-off keying (OOK).
//!
//! Each scheme maps its amplitudes to a correlation point and to the
//! thresholds it certifies. By default the threshold is the weight of the
//! non-vacuum component of the emitted state; [`ThresholdModel::MeanPhotonNumber`]
//! uses the mean photon number instead.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::sets::{verdicts, Correlations, SetName, SetVerdict, Thresholds, DOMAIN_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum SchemeKind {
    #[cfg_attr(feature = "serde", serde(rename = "bpsk"))]
    Bpsk,
    #[cfg_attr(feature = "serde", serde(rename = "2ask"))]
    Ask2,
    #[cfg_attr(feature = "serde", serde(rename = "ook"))]
    Ook,
}

impl SchemeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SchemeKind::Bpsk => "bpsk",
            SchemeKind::Ask2 => "2ask",
            SchemeKind::Ook => "ook",
        }
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum ThresholdModel {
    /// `ω = 1 − e^(−a²)`: probability of a non-vacuum outcome.
    #[default]
    NonVacuum,
    /// `ω = a²`: mean photon number, a looser bound.
    MeanPhotonNumber,
}

impl ThresholdModel {
    /// Amplitude whose threshold is `omega`; `ω < 1` for the non-vacuum model.
    pub fn amplitude(self, omega: f64) -> Result<f64> {
        let ok = match self {
            ThresholdModel::NonVacuum => (0.0..1.0).contains(&omega),
            ThresholdModel::MeanPhotonNumber => omega.is_finite() && omega >= 0.0,
        };
        if !ok {
            return Err(Error::out_of_range(
                "omega1",
                omega,
                "a threshold reachable by a finite amplitude",
            ));
        }
        Ok(match self {
            ThresholdModel::NonVacuum => libm::sqrt(-libm::log1p(-omega)),
            ThresholdModel::MeanPhotonNumber => libm::sqrt(omega),
        })
    }

    fn omega(self, amplitude: f64) -> f64 {
        let a2 = amplitude * amplitude;
        match self {
            ThresholdModel::NonVacuum => -libm::expm1(-a2),
            ThresholdModel::MeanPhotonNumber => a2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SchemeParams {
    pub scheme: SchemeKind,
    pub xi: f64,
    /// 2ASK amplitude offset; zero for the other schemes.
    pub epsilon: f64,
    /// Detector efficiency; OOK only, 1 otherwise.
    pub eta: f64,
    pub model: ThresholdModel,
}

impl SchemeParams {
    pub fn bpsk(xi: f64) -> Self {
        Self {
            scheme: SchemeKind::Bpsk,
            xi,
            epsilon: 0.0,
            eta: 1.0,
            model: ThresholdModel::NonVacuum,
        }
    }

    pub fn ask2(xi: f64, epsilon: f64) -> Self {
        Self {
            scheme: SchemeKind::Ask2,
            epsilon,
            ..Self::bpsk(xi)
        }
    }

    pub fn ook(xi: f64, eta: f64) -> Self {
        Self {
            scheme: SchemeKind::Ook,
            eta,
            ..Self::bpsk(xi)
        }
    }

    pub fn with_model(self, model: ThresholdModel) -> Self {
        Self { model, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SchemePoint {
    pub e: Correlations,
    pub w: Thresholds,
    pub params: SchemeParams,
}

fn check_amplitude(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::out_of_range(name, v, "a finite value >= 0"))
    }
}

fn symmetric_thresholds(name: &'static str, amplitude: f64, omega: f64) -> Result<Thresholds> {
    if 2.0 * omega > 1.0 + DOMAIN_TOL {
        return Err(Error::out_of_range(
            name,
            amplitude,
            "an amplitude whose threshold does not exceed 0.5",
        ));
    }
    Thresholds::new(omega.min(0.5), omega.min(0.5))
}

/// Evaluate the scheme described by `params`.
pub fn scheme_point(params: SchemeParams) -> Result<SchemePoint> {
    check_amplitude("xi", params.xi)?;
    let (e, w) = match params.scheme {
        SchemeKind::Bpsk => {
            let w = symmetric_thresholds("xi", params.xi, params.model.omega(params.xi))?;
            let r = libm::erf(core::f64::consts::SQRT_2 * params.xi);
            (Correlations::new(r, -r)?, w)
        }
        SchemeKind::Ask2 => {
            check_amplitude("epsilon", params.epsilon)?;
            let eps = params.epsilon;
            let w = symmetric_thresholds("epsilon", eps, params.model.omega(eps))?;
            let e_of = |a: f64| 1.0 - 2.0 * libm::exp(-a * a);
            (
                Correlations::new(e_of(params.xi + eps), e_of(params.xi - eps))?,
                w,
            )
        }
        SchemeKind::Ook => {
            if !(params.eta > 0.0 && params.eta <= 1.0) {
                return Err(Error::out_of_range("eta", params.eta, "a value in (0, 1]"));
            }
            let omega = params.model.omega(params.xi);
            if omega > 1.0 + DOMAIN_TOL {
                return Err(Error::out_of_range(
                    "xi",
                    params.xi,
                    "an amplitude whose threshold does not exceed 1",
                ));
            }
            let e1 = 1.0 - 2.0 * libm::exp(-params.xi * params.xi * params.eta);
            (
                Correlations::new(e1, -1.0)?,
                Thresholds::new(omega.min(1.0), 0.0)?,
            )
        }
    };
    Ok(SchemePoint { e, w, params })
}

pub fn bpsk_point(xi: f64) -> Result<SchemePoint> {
    scheme_point(SchemeParams::bpsk(xi))
}

pub fn ask2_point(xi: f64, epsilon: f64) -> Result<SchemePoint> {
    scheme_point(SchemeParams::ask2(xi, epsilon))
}

pub fn ook_point(xi: f64, eta: f64) -> Result<SchemePoint> {
    scheme_point(SchemeParams::ook(xi, eta))
}

/// OOK point whose first-input threshold (non-vacuum model) equals `omega1`.
pub fn ook_point_from_omega(omega1: f64, eta: f64) -> Result<SchemePoint> {
    ook_point(ThresholdModel::NonVacuum.amplitude(omega1)?, eta)
}

/// Verdicts for all seven sets at the point's own thresholds.
pub fn classify(p: &SchemePoint) -> [SetVerdict; 7] {
    verdicts(p.e, p.w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum ScanParameter {
    Xi,
    Epsilon,
    Eta,
}

impl ScanParameter {
    fn set(self, base: SchemeParams, v: f64) -> SchemeParams {
        match self {
            ScanParameter::Xi => SchemeParams { xi: v, ..base },
            ScanParameter::Epsilon => SchemeParams { epsilon: v, ..base },
            ScanParameter::Eta => SchemeParams { eta: v, ..base },
        }
    }

    fn applies_to(self, scheme: SchemeKind) -> bool {
        matches!(
            (self, scheme),
            (ScanParameter::Xi, _)
                | (ScanParameter::Epsilon, SchemeKind::Ask2)
                | (ScanParameter::Eta, SchemeKind::Ook)
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ScanRow {
    pub value: f64,
    pub point: SchemePoint,
    pub verdicts: [SetVerdict; 7],
}

/// A change of membership between two adjacent scan rows.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Flip {
    pub set: SetName,
    /// Parameter value of the transition, within [`FLIP_TOL`].
    pub at: f64,
    /// Membership just below `at` (in sweep order).
    pub member_before: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Scan {
    pub parameter: ScanParameter,
    pub rows: Vec<ScanRow>,
    pub flips: Vec<Flip>,
}

/// Width of the bracket left by the flip bisection.
pub const FLIP_TOL: f64 = 1e-6;

/// Uniform sweep of one parameter of `base` from `start` to `end`
/// (inclusive) over `steps` rows.
pub fn scan(
    base: SchemeParams,
    parameter: ScanParameter,
    start: f64,
    end: f64,
    steps: usize,
) -> Result<Scan> {
    if steps < 2 {
        return Err(Error::InvalidArgument("a scan needs at least 2 steps"));
    }
    if !parameter.applies_to(base.scheme) {
        return Err(Error::InvalidArgument(
            "scan parameter does not apply to this scheme",
        ));
    }
    if !(start.is_finite() && end.is_finite()) {
        return Err(Error::InvalidArgument("scan range must be finite"));
    }
    if start == end {
        return Err(Error::InvalidArgument("scan range is empty"));
    }
    let last = (steps - 1) as f64;
    let mut rows = Vec::with_capacity(steps);
    for k in 0..steps {
        let value = if k + 1 == steps {
            end
        } else {
            start + (end - start) * k as f64 / last
        };
        let point = scheme_point(parameter.set(base, value))?;
        rows.push(ScanRow {
            value,
            point,
            verdicts: classify(&point),
        });
    }

    let mut flips = Vec::new();
    for pair in rows.windows(2) {
        for (i, set) in SetName::ALL.iter().enumerate() {
            let before = pair[0].verdicts[i].member;
            if before == pair[1].verdicts[i].member {
                continue;
            }
            let at = bisect(pair[0].value, pair[1].value, before, |v| {
                scheme_point(parameter.set(base, v))
                    .map(|p| classify(&p)[i].member)
                    .unwrap_or(!before)
            });
            flips.push(Flip {
                set: *set,
                at,
                member_before: before,
            });
        }
    }
    Ok(Scan {
        parameter,
        rows,
        flips,
    })
}

fn bisect(mut a: f64, mut b: f64, state_a: bool, member: impl Fn(f64) -> bool) -> f64 {
    while (b - a).abs() > FLIP_TOL {
        let mid = 0.5 * (a + b);
        if member(mid) == state_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

//! Command-line front end for `pmcorr-core`.
//!
//! Data goes to stdout as CSV or single-document JSON; diagnostics go to
//! stderr. Exit codes: 0 success, 1 domain error, 2 usage error, 3 oracle
//! disagreement.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pmcorr_core::oracle::{self, OracleReport};
use pmcorr_core::schemes::{
    self, ScanParameter, SchemeKind, SchemeParams, SchemePoint, ThresholdModel,
};
use pmcorr_core::{boundary_curve, verdicts, Correlations, Input, SetName, SetVerdict, Thresholds};

mod output;

use output::{write_csv, write_json};
pub use output::{Meta, OutputRecord};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pmcorr_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(pmcorr_core::Error::InvalidArgument(_)) | CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// What a successful run found; oracle disagreements are data, not errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    OracleFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::OracleFailed => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pmcorr",
    version,
    about = "Correlation sets of the two-input prepare-and-measure scenario with bounded mean energy"
)]
pub struct Cli {
    /// Record the current UTC time in the output metadata.
    #[arg(long, global = true)]
    pub timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boundary polygon of one set.
    Boundary(BoundaryArgs),
    /// Membership verdicts of a point for all seven sets.
    Check(CheckArgs),
    /// Correlations, thresholds and verdicts of an optical scheme.
    Scheme(SchemeArgs),
    /// Sweep one scheme parameter and locate verdict changes.
    Scan(ScanArgs),
    /// Run a numerical oracle and print its report.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long, value_parser = parse_set)]
    pub set: SetName,
    #[arg(long, allow_negative_numbers = true)]
    pub omega1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub omega2: f64,
    #[arg(long, default_value_t = 720)]
    pub samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub e1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub e2: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub omega1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub omega2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeName {
    Bpsk,
    #[value(name = "2ask")]
    Ask2,
    Ook,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelName {
    NonVacuum,
    MeanPhotonNumber,
}

#[derive(Debug, Clone, Args)]
pub struct SchemeArgs {
    #[arg(long, value_enum)]
    pub name: SchemeName,
    /// Coherent amplitude ξ.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "omega1")]
    pub xi: Option<f64>,
    /// 2ASK amplitude offset ε.
    #[arg(long, allow_negative_numbers = true)]
    pub epsilon: Option<f64>,
    /// OOK detector efficiency η.
    #[arg(long, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    /// OOK only: derive ξ from the first-input threshold.
    #[arg(long, allow_negative_numbers = true)]
    pub omega1: Option<f64>,
    #[arg(long, value_enum, default_value_t = ModelName::NonVacuum)]
    pub threshold_model: ModelName,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ParamName {
    Xi,
    Epsilon,
    Eta,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub scheme: SchemeArgs,
    #[arg(long, value_enum)]
    pub param: ParamName,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// Sampled qubit points satisfy the quantum inequality.
    Soundness,
    /// Sampled support function matches the quantum boundary.
    Hull,
    /// Overlap of constrained states never drops below h.
    Overlap,
    /// Midpoint and Hessian concavity of the overlap function.
    Concavity,
    /// Mixtures of boundary points stay quantum.
    Mixing,
    /// Grid search over two-branch deterministic strategies.
    DetAvg,
    /// Classical decomposition agrees with the closed form.
    Classical,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub claim: Claim,
    #[arg(long, allow_negative_numbers = true)]
    pub omega1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub omega2: Option<f64>,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Hilbert-space dimension (overlap).
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Deterministic input (det-avg).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub input: u8,
    /// Grid size per axis (det-avg, classical).
    #[arg(long)]
    pub grid: Option<usize>,
}

fn parse_set(s: &str) -> Result<SetName, String> {
    s.parse::<SetName>().map_err(|e| {
        let names: Vec<_> = SetName::ALL.iter().map(|n| n.as_str()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Boundary(a) => boundary(a, cli.timestamp, out),
        Command::Check(a) => check(a, cli.timestamp, out),
        Command::Scheme(a) => scheme(a, cli.timestamp, out),
        Command::Scan(a) => scan(a, cli.timestamp, out),
        Command::Oracle(a) => run_oracle(a, cli.timestamp, out),
    }
}

fn boundary(a: &BoundaryArgs, stamp: bool, out: &mut impl Write) -> Result<Outcome, CliError> {
    let w = Thresholds::new(a.omega1, a.omega2)?;
    let curve = boundary_curve(a.set, w, a.samples)?;
    match a.format {
        Format::Csv => write_csv(
            out,
            &["e1", "e2"],
            curve.points.iter().map(|p| vec![p.e1(), p.e2()]),
        )?,
        Format::Json => write_json(out, "boundary", &curve, &Meta::new(None, stamp)?)?,
    }
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct VerdictPayload<'a> {
    e: Correlations,
    w: Thresholds,
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<&'a SchemeParams>,
    verdicts: [SetVerdict; 7],
}

fn check(a: &CheckArgs, stamp: bool, out: &mut impl Write) -> Result<Outcome, CliError> {
    let e = Correlations::new(a.e1, a.e2)?;
    let w = Thresholds::new(a.omega1, a.omega2)?;
    let payload = VerdictPayload {
        e,
        w,
        params: None,
        verdicts: verdicts(e, w),
    };
    write_json(out, "verdict", payload, &Meta::new(None, stamp)?)?;
    Ok(Outcome::Success)
}

fn scheme_params(a: &SchemeArgs) -> Result<SchemeParams, CliError> {
    let model = match a.threshold_model {
        ModelName::NonVacuum => ThresholdModel::NonVacuum,
        ModelName::MeanPhotonNumber => ThresholdModel::MeanPhotonNumber,
    };
    let only_for = |flag: &str, set: bool, allowed: bool, scheme: &str| {
        if set && !allowed {
            Err(CliError::Usage(format!(
                "--{flag} applies to {scheme} only"
            )))
        } else {
            Ok(())
        }
    };
    let is = |k: SchemeName| a.name == k;
    only_for("epsilon", a.epsilon.is_some(), is(SchemeName::Ask2), "2ask")?;
    only_for("eta", a.eta.is_some(), is(SchemeName::Ook), "ook")?;
    only_for("omega1", a.omega1.is_some(), is(SchemeName::Ook), "ook")?;

    let xi = match (a.xi, a.omega1) {
        (Some(xi), _) => xi,
        (None, Some(omega1)) => model.amplitude(omega1)?,
        (None, None) => return Err(CliError::Usage("--xi is required".into())),
    };
    let params = match a.name {
        SchemeName::Bpsk => SchemeParams::bpsk(xi),
        SchemeName::Ask2 => SchemeParams::ask2(xi, a.epsilon.unwrap_or(0.0)),
        SchemeName::Ook => SchemeParams::ook(xi, a.eta.unwrap_or(1.0)),
    };
    Ok(params.with_model(model))
}

fn scheme(a: &SchemeArgs, stamp: bool, out: &mut impl Write) -> Result<Outcome, CliError> {
    let SchemePoint { e, w, params } = schemes::scheme_point(scheme_params(a)?)?;
    let payload = VerdictPayload {
        e,
        w,
        params: Some(&params),
        verdicts: verdicts(e, w),
    };
    write_json(out, "verdict", payload, &Meta::new(None, stamp)?)?;
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct FlipsPayload<'a> {
    scheme: SchemeKind,
    parameter: ScanParameter,
    flips: &'a [schemes::Flip],
}

fn scan(a: &ScanArgs, stamp: bool, out: &mut impl Write) -> Result<Outcome, CliError> {
    if a.from == a.to {
        return Err(CliError::Usage("scan range is empty".into()));
    }
    let parameter = match a.param {
        ParamName::Xi => ScanParameter::Xi,
        ParamName::Epsilon => ScanParameter::Epsilon,
        ParamName::Eta => ScanParameter::Eta,
    };
    let base = match (a.scheme.xi, a.scheme.omega1, parameter) {
        // the swept value replaces ξ, so it need not be given
        (None, None, ScanParameter::Xi) => {
            let mut s = a.scheme.clone();
            s.xi = Some(a.from);
            scheme_params(&s)?
        }
        _ => scheme_params(&a.scheme)?,
    };
    let result = schemes::scan(base, parameter, a.from, a.to, a.steps)?;

    let mut header = vec![a.param.as_str(), "e1", "e2", "omega1", "omega2"];
    header.extend(SetName::ALL.iter().map(|s| s.as_str()));
    write_csv(
        out,
        &header,
        result.rows.iter().map(|r| {
            let mut row = vec![
                r.value,
                r.point.e.e1(),
                r.point.e.e2(),
                r.point.w.omega1(),
                r.point.w.omega2(),
            ];
            row.extend(r.verdicts.iter().map(|v| v.margin));
            row
        }),
    )?;
    let payload = FlipsPayload {
        scheme: base.scheme,
        parameter,
        flips: &result.flips,
    };
    write_json(out, "scan-flips", payload, &Meta::new(None, stamp)?)?;
    Ok(Outcome::Success)
}

impl ParamName {
    fn as_str(self) -> &'static str {
        match self {
            ParamName::Xi => "xi",
            ParamName::Epsilon => "epsilon",
            ParamName::Eta => "eta",
        }
    }
}

fn thresholds(a: &OracleArgs) -> Result<Thresholds, CliError> {
    match (a.omega1, a.omega2) {
        (Some(o1), Some(o2)) => Ok(Thresholds::new(o1, o2)?),
        _ => Err(CliError::Usage(
            "this claim needs --omega1 and --omega2".into(),
        )),
    }
}

fn run_oracle(a: &OracleArgs, stamp: bool, out: &mut impl Write) -> Result<Outcome, CliError> {
    let reports: Vec<OracleReport> = match a.claim {
        Claim::Soundness => vec![oracle::sample_quantum_points(thresholds(a)?, a.trials, a.seed).1],
        Claim::Hull => vec![oracle::hull_vs_boundary(thresholds(a)?, a.trials, a.seed)?],
        Claim::Overlap => {
            let w = thresholds(a)?;
            vec![oracle::overlap_bound_check(
                w.omega1(),
                w.omega2(),
                a.dim,
                a.trials,
                a.seed,
            )?]
        }
        Claim::Concavity => vec![oracle::concavity_check(a.trials, a.seed)],
        Claim::Mixing => vec![oracle::mixing_closure_check(
            thresholds(a)?,
            a.trials,
            a.seed,
        )],
        Claim::DetAvg => {
            let x = Input::try_from(a.input)?;
            let grid = a.grid.unwrap_or(oracle::DEFAULT_GRID);
            oracle::det_avg_oracle(x, thresholds(a)?, grid)?.to_vec()
        }
        Claim::Classical => vec![oracle::classical_agreement(
            thresholds(a)?,
            a.grid.unwrap_or(101),
        )],
    };
    let seed = reports.iter().find_map(|r| r.seed);
    let meta = Meta::new(seed, stamp)?;
    let passed = reports.iter().all(|r| r.passed);
    match reports.as_slice() {
        [single] => write_json(out, "oracle-report", single, &meta)?,
        many => write_json(out, "oracle-report", many, &meta)?,
    }
    Ok(if passed {
        Outcome::Success
    } else {
        Outcome::OracleFailed
    })
}

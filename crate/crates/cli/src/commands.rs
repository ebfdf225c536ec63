use std::fmt::{self, Write as _};
use std::io::Read;

use calogero_core::dynamics::trajectory;
use calogero_core::linalg::CMatrix;
use calogero_core::spectral::theorem_residual;
use calogero_core::{
    backward_map, build_dual, build_lax, canonical_report, forward_map, momentum_map_residual,
    random_phase_point, scattering_data, sklyanin_coordinates, Complex64, FdMode, NumericConfig,
    PhaseSpacePoint, State, StateError, Sweep,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::{Cli, Command, Format, Input, Mode};

pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, status: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Numerical(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl From<calogero_core::Error> for CliError {
    fn from(e: calogero_core::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

impl From<StateError> for CliError {
    fn from(e: StateError) -> Self {
        match e {
            StateError::Invalid(inner) => inner.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_state(input: &Input) -> Result<State> {
    let text = match input.input.as_deref() {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Invalid(format!("standard input: {e}")))?;
            buf
        }
    };
    Ok(State::from_json(&text)?)
}

fn phase_point(state: State, cfg: &NumericConfig) -> Result<PhaseSpacePoint> {
    match state {
        State::Phase(pt) => Ok(pt),
        State::ActionAngle(aa) => Ok(backward_map(&aa, cfg)?),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

/// Row-major nested arrays of `[re, im]` pairs.
fn matrix_json(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    m.row_iter()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

pub fn run(cli: &Cli) -> Result<Output> {
    let n = &cli.numeric;
    let cfg = NumericConfig::new(n.eig_gap_tol, n.fd_step, n.identity_tol)?;
    match &cli.command {
        Command::Lax(input) => lax(read_state(input)?),
        Command::Spectral(input) => spectral(read_state(input)?, &cfg),
        Command::Map(input) => map(read_state(input)?, &cfg),
        Command::Evolve {
            input,
            t,
            k,
            samples,
            format,
        } => evolve(read_state(input)?, *t, *k, *samples, *format, &cfg),
        Command::Scatter { input, t_large } => {
            let pt = phase_point(read_state(input)?, &cfg)?;
            Ok(Output::ok(to_json(&scattering_data(&pt, *t_large, &cfg)?)))
        }
        Command::Verify {
            seed,
            trials,
            n,
            g_range,
            min_gap,
            mode,
            tol,
        } => verify(*seed, *trials, *n, *g_range, *min_gap, *mode, *tol, &cfg),
    }
}

#[derive(Serialize)]
struct LaxReport {
    gauge: &'static str,
    g: f64,
    x_like: Vec<Vec<[f64; 2]>>,
    p_like: Vec<Vec<[f64; 2]>>,
    momentum_map_residual: f64,
}

fn lax(state: State) -> Result<Output> {
    let pair = match &state {
        State::Phase(pt) => build_lax(pt),
        State::ActionAngle(aa) => build_dual(aa),
    };
    let gauge = match pair.gauge() {
        calogero_core::Gauge::PositionDiagonal => "position_diagonal",
        calogero_core::Gauge::MomentumDiagonal => "momentum_diagonal",
    };
    let report = LaxReport {
        gauge,
        g: pair.g(),
        x_like: matrix_json(pair.x_like()),
        p_like: matrix_json(pair.p_like()),
        momentum_map_residual: momentum_map_residual(&pair),
    };
    Ok(Output::ok(to_json(&report)))
}

#[derive(Serialize)]
struct SpectralReport {
    lambda: Vec<f64>,
    mu: Vec<f64>,
    theta: Vec<[f64; 2]>,
    f_im: Vec<f64>,
    theorem_residual_max: f64,
}

/// Residual of `C - D = (ig/2) A''` sampled at the eigenvalues and on a circle enclosing the spectrum.
fn theorem_residual_max(pt: &PhaseSpacePoint, lambda: &[f64]) -> f64 {
    let radius = 1.0 + lambda.iter().fold(0.0_f64, |m, l| m.max(l.abs()));
    let circle =
        (0..16).map(|i| Complex64::from_polar(radius, std::f64::consts::TAU * i as f64 / 16.0));
    lambda
        .iter()
        .map(|&l| Complex64::from(l))
        .chain(circle)
        .map(|z| theorem_residual(pt, z))
        .fold(0.0, f64::max)
}

fn spectral(state: State, cfg: &NumericConfig) -> Result<Output> {
    let pt = phase_point(state, cfg)?;
    let sc = sklyanin_coordinates(&pt, cfg)?;
    let report = SpectralReport {
        theorem_residual_max: theorem_residual_max(&pt, &sc.lambda),
        theta: sc.theta.iter().map(|t| [t.re, t.im]).collect(),
        lambda: sc.lambda,
        mu: sc.mu,
        f_im: sc.f,
    };
    Ok(Output::ok(to_json(&report)))
}

fn map(state: State, cfg: &NumericConfig) -> Result<Output> {
    let dual: State = match state {
        State::Phase(pt) => forward_map(&pt, cfg)?.into(),
        State::ActionAngle(aa) => backward_map(&aa, cfg)?.into(),
    };
    Ok(Output::ok(dual.to_json()))
}

#[derive(Serialize)]
struct Sample<'a> {
    t: f64,
    q: &'a [f64],
    p: &'a [f64],
}

#[derive(Serialize)]
struct Trajectory<'a> {
    n: usize,
    g: f64,
    k: usize,
    trajectory: Vec<Sample<'a>>,
}

fn evolve(
    state: State,
    t: f64,
    k: usize,
    samples: usize,
    format: Format,
    cfg: &NumericConfig,
) -> Result<Output> {
    if !t.is_finite() {
        return Err(CliError::Invalid(format!("time {t} is not finite")));
    }
    if samples == 0 {
        return Err(CliError::Invalid("--samples must be at least 1".into()));
    }
    let pt = phase_point(state, cfg)?;
    let times: Vec<f64> = if samples == 1 {
        vec![t]
    } else {
        (0..samples)
            .map(|i| t * i as f64 / (samples - 1) as f64)
            .collect()
    };
    let states = trajectory(&pt, &times, k, cfg)?;

    let text = match format {
        Format::Csv => {
            let n = pt.n();
            let mut out = String::from("t");
            for j in 1..=n {
                write!(out, ",q_{j}").unwrap();
            }
            for j in 1..=n {
                write!(out, ",p_{j}").unwrap();
            }
            for (time, s) in times.iter().zip(&states) {
                write!(out, "\n{time}").unwrap();
                for x in s.q().iter().chain(s.p()) {
                    write!(out, ",{x}").unwrap();
                }
            }
            out
        }
        Format::Json if samples == 1 => State::from(states[0].clone()).to_json(),
        Format::Json => {
            let trajectory = times
                .iter()
                .zip(&states)
                .map(|(&t, s)| Sample {
                    t,
                    q: s.q(),
                    p: s.p(),
                })
                .collect();
            to_json(&Trajectory {
                n: pt.n(),
                g: pt.g(),
                k,
                trajectory,
            })
        }
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct TrialReport {
    trial: usize,
    g: f64,
    max_deviation: Option<f64>,
    error: Option<String>,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    seed: u64,
    trials: usize,
    n: usize,
    g_range: f64,
    min_gap: f64,
    mode: FdMode,
    tolerance: f64,
    worst_deviation: f64,
    pass: bool,
    results: Vec<TrialReport>,
}

#[allow(clippy::too_many_arguments)]
fn verify(
    seed: u64,
    trials: usize,
    n: usize,
    g_range: f64,
    min_gap: f64,
    mode: Mode,
    tol: f64,
    cfg: &NumericConfig,
) -> Result<Output> {
    if n == 0 {
        return Err(CliError::Invalid("--n must be at least 1".into()));
    }
    if !(g_range.is_finite() && g_range >= 0.0) {
        return Err(CliError::Invalid(format!(
            "--g-range {g_range} must be non-negative"
        )));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Invalid(format!("--tol {tol} must be positive")));
    }
    let mode = match mode {
        Mode::Fast => FdMode::Fast,
        Mode::Extrapolated => FdMode::Extrapolated,
    };
    let sweep = Sweep {
        seed,
        count: trials,
        n_min: n,
        n_max: n,
        g_max: g_range,
        min_gap,
    };
    // Reject bad sweep parameters up front rather than per trial.
    random_phase_point(seed, n, 0.0, min_gap)?;

    let results: Vec<TrialReport> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let (point_seed, n, g) = sweep.trial(trial);
            let outcome = random_phase_point(point_seed, n, g, min_gap)
                .and_then(|pt| canonical_report(&pt, cfg, mode));
            match outcome {
                Ok(report) => TrialReport {
                    trial,
                    g,
                    max_deviation: Some(report.max_deviation),
                    error: None,
                    pass: report.max_deviation <= tol,
                },
                Err(e) => TrialReport {
                    trial,
                    g,
                    max_deviation: None,
                    error: Some(e.to_string()),
                    pass: false,
                },
            }
        })
        .collect();

    let worst_deviation = results
        .iter()
        .filter_map(|r| r.max_deviation)
        .fold(0.0, f64::max);
    let pass = results.iter().all(|r| r.pass);
    let report = VerifyReport {
        seed,
        trials,
        n,
        g_range,
        min_gap,
        mode,
        tolerance: tol,
        worst_deviation,
        pass,
        results,
    };
    Ok(Output {
        text: to_json(&report),
        status: if pass { 0 } else { 3 },
    })
}

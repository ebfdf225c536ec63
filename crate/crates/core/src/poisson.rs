//! Finite-difference Poisson brackets on `(q, p)` with `ω = Σ dq_j ∧ dp_j`:
//!
//! ```text
//! {F, G} = Σ_j ∂F/∂q_j ∂G/∂p_j - ∂F/∂p_j ∂G/∂q_j
//! ```
//!
//! Observables are arbitrary functions of a [`PhaseSpacePoint`]. Steps in a
//! position coordinate are shrunk when they would break the ordering
//! `q_1 > ... > q_n`.

use serde::Serialize;

use crate::config::NumericConfig;
use crate::error::{Error, Result};
use crate::point::PhaseSpacePoint;
use crate::spectral::sklyanin_coordinates;

/// Differentiation scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FdMode {
    /// Plain central differences.
    Fast,
    /// Central differences at `h` and `h/2`, Richardson-extrapolated.
    #[default]
    Extrapolated,
}

/// Halvings allowed before a position step is declared unusable.
const MAX_SHRINK: u32 = 10;

/// Step for coordinate `index` of `coords = (q, p)`.
fn step_for(coords: &[f64], index: usize, fd_step: f64) -> Result<f64> {
    let n = coords.len() / 2;
    let mut h = fd_step * (1.0 + coords[index].abs());
    if index >= n {
        return Ok(h);
    }
    let q = &coords[..n];
    let mut room = f64::INFINITY;
    if index > 0 {
        room = room.min(q[index - 1] - q[index]);
    }
    if index + 1 < n {
        room = room.min(q[index] - q[index + 1]);
    }
    let mut halvings = 0;
    while h >= 0.5 * room {
        if halvings == MAX_SHRINK {
            return Err(Error::StepLeavesDomain { coordinate: index });
        }
        h *= 0.5;
        halvings += 1;
    }
    Ok(h)
}

fn central<F>(observable: &F, coords: &[f64], g: f64, index: usize, h: f64) -> Result<Vec<f64>>
where
    F: Fn(&PhaseSpacePoint) -> Result<Vec<f64>>,
{
    let mut plus = coords.to_vec();
    let mut minus = coords.to_vec();
    plus[index] += h;
    minus[index] -= h;
    let width = plus[index] - minus[index];
    let fp = observable(&PhaseSpacePoint::from_coordinates(&plus, g)?)?;
    let fm = observable(&PhaseSpacePoint::from_coordinates(&minus, g)?)?;
    Ok(fp.iter().zip(&fm).map(|(a, b)| (a - b) / width).collect())
}

/// Jacobian of a vector-valued observable: `result[i][j] = ∂F_i/∂x_j` with
/// `x = (q_1..q_n, p_1..p_n)`.
pub fn fd_jacobian<F>(
    observable: F,
    pt: &PhaseSpacePoint,
    cfg: &NumericConfig,
    mode: FdMode,
) -> Result<Vec<Vec<f64>>>
where
    F: Fn(&PhaseSpacePoint) -> Result<Vec<f64>>,
{
    let coords = pt.coordinates();
    let mut columns = Vec::with_capacity(coords.len());
    for index in 0..coords.len() {
        let h = step_for(&coords, index, cfg.fd_step)?;
        let coarse = central(&observable, &coords, pt.g(), index, h)?;
        let column = match mode {
            FdMode::Fast => coarse,
            FdMode::Extrapolated => {
                let fine = central(&observable, &coords, pt.g(), index, 0.5 * h)?;
                fine.iter()
                    .zip(&coarse)
                    .map(|(f, c)| (4.0 * f - c) / 3.0)
                    .collect()
            }
        };
        columns.push(column);
    }
    let rows = columns.first().map_or(0, Vec::len);
    Ok((0..rows)
        .map(|i| columns.iter().map(|col| col[i]).collect())
        .collect())
}

/// `(∂F/∂q, ∂F/∂p)` of a scalar observable.
pub fn fd_gradient<F>(
    observable: F,
    pt: &PhaseSpacePoint,
    cfg: &NumericConfig,
    mode: FdMode,
) -> Result<Vec<f64>>
where
    F: Fn(&PhaseSpacePoint) -> Result<f64>,
{
    let jac = fd_jacobian(|x| observable(x).map(|v| vec![v]), pt, cfg, mode)?;
    Ok(jac.into_iter().next().expect("one row"))
}

/// `{F, G}` from gradients in `(q, p)` layout. Swapping the arguments
/// negates the result exactly.
pub fn bracket_from_gradients(df: &[f64], dg: &[f64]) -> f64 {
    let n = df.len() / 2;
    (0..n).map(|j| df[j] * dg[n + j] - df[n + j] * dg[j]).sum()
}

pub fn bracket<F, G>(
    f: F,
    g: G,
    pt: &PhaseSpacePoint,
    cfg: &NumericConfig,
    mode: FdMode,
) -> Result<f64>
where
    F: Fn(&PhaseSpacePoint) -> Result<f64>,
    G: Fn(&PhaseSpacePoint) -> Result<f64>,
{
    let df = fd_gradient(f, pt, cfg, mode)?;
    let dg = fd_gradient(g, pt, cfg, mode)?;
    Ok(bracket_from_gradients(&df, &dg))
}

/// Pairwise brackets `{F_i, G_j}` from two Jacobians.
pub fn bracket_matrix(jf: &[Vec<f64>], jg: &[Vec<f64>]) -> Vec<Vec<f64>> {
    jf.iter()
        .map(|df| jg.iter().map(|dg| bracket_from_gradients(df, dg)).collect())
        .collect()
}

/// Brackets among the spectral coordinates at one point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BracketReport {
    pub n: usize,
    /// `{Re θ_j, λ_k}`.
    pub theta_lambda_re: Vec<Vec<f64>>,
    /// `{Im θ_j, λ_k}`.
    pub theta_lambda_im: Vec<Vec<f64>>,
    /// `{μ_j, λ_k}`.
    pub mu_lambda: Vec<Vec<f64>>,
    /// `{λ_j, λ_k}`.
    pub lambda_lambda: Vec<Vec<f64>>,
    /// `{μ_j, μ_k}`.
    pub mu_mu: Vec<Vec<f64>>,
    /// Largest deviation of any entry from the canonical pattern.
    pub max_deviation: f64,
}

fn max_deviation_from(m: &[Vec<f64>], identity: bool) -> f64 {
    m.iter()
        .enumerate()
        .flat_map(|(j, row)| {
            row.iter().enumerate().map(move |(k, &v)| {
                let target = if identity && j == k { 1.0 } else { 0.0 };
                (v - target).abs()
            })
        })
        .fold(0.0, f64::max)
}

/// Spectral coordinates flattened as `(λ, μ, Re θ, Im θ)`.
pub fn spectral_observables(pt: &PhaseSpacePoint, cfg: &NumericConfig) -> Result<Vec<f64>> {
    let sc = sklyanin_coordinates(pt, cfg)?;
    Ok(sc
        .lambda
        .iter()
        .chain(&sc.mu)
        .copied()
        .chain(sc.theta.iter().map(|t| t.re))
        .chain(sc.theta.iter().map(|t| t.im))
        .collect())
}

/// Numerically evaluated brackets of `λ`, `μ` and `θ`, compared with
/// `{θ_j, λ_k} = {μ_j, λ_k} = δ_jk` and `{λ_j, λ_k} = {μ_j, μ_k} = 0`.
pub fn canonical_report(
    pt: &PhaseSpacePoint,
    cfg: &NumericConfig,
    mode: FdMode,
) -> Result<BracketReport> {
    let n = pt.n();
    let q_scale = 1.0 + pt.q().iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let clearance = 10.0 * cfg.fd_step * q_scale;
    if let Some(index) = pt.q().windows(2).position(|w| w[0] - w[1] < clearance) {
        return Err(Error::StepLeavesDomain { coordinate: index });
    }

    let jac = fd_jacobian(|x| spectral_observables(x, cfg), pt, cfg, mode)?;
    let lambda = &jac[..n];
    let mu = &jac[n..2 * n];
    let theta_re = &jac[2 * n..3 * n];
    let theta_im = &jac[3 * n..];

    let theta_lambda_re = bracket_matrix(theta_re, lambda);
    let theta_lambda_im = bracket_matrix(theta_im, lambda);
    let mu_lambda = bracket_matrix(mu, lambda);
    let lambda_lambda = bracket_matrix(lambda, lambda);
    let mu_mu = bracket_matrix(mu, mu);

    let max_deviation = [
        max_deviation_from(&mu_lambda, true),
        max_deviation_from(&theta_lambda_re, true),
        max_deviation_from(&theta_lambda_im, false),
        max_deviation_from(&lambda_lambda, false),
        max_deviation_from(&mu_mu, false),
    ]
    .into_iter()
    .fold(0.0, f64::max);

    Ok(BracketReport {
        n,
        theta_lambda_re,
        theta_lambda_im,
        mu_lambda,
        lambda_lambda,
        mu_mu,
        max_deviation,
    })
}

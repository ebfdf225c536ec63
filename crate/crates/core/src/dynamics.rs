//! Exact flows of the commuting Hamiltonians.
//!
//! In action-angle variables `H_k = (1/k) Σ λ_j^k`, so the `H_k` flow is
//! `λ(t) = λ`, `φ_j(t) = φ_j + t λ_j^{k-1}`. The `H_2` flow also follows from
//! the free matrix motion `X(t) = X_0 + t P_0`, which gives positions as the
//! spectrum of `Q + t L`; that route is kept as an independent check.

use serde::Serialize;

use crate::config::NumericConfig;
use crate::duality::{backward_map, forward_map};
use crate::error::{Error, Result};
use crate::lax::{build_lax, lax_matrix};
use crate::linalg::{check_simple, hermitian_eigenvalues};
use crate::point::{ActionAnglePoint, PhaseSpacePoint};

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 {
        Err(Error::KOutOfRange { k, n })
    } else {
        Ok(())
    }
}

/// Angles advanced by time `t` under `H_k = (1/k) Σ λ_j^k`. Any `k >= 1` is
/// accepted here; for `k > n` the flow is that of a dependent integral.
pub fn shift_angles(aa: &ActionAnglePoint, t: f64, k: usize) -> Result<ActionAnglePoint> {
    if k == 0 {
        return Err(Error::KOutOfRange { k, n: aa.n() });
    }
    let exp = k as i32 - 1;
    let phi = aa
        .phi()
        .iter()
        .zip(aa.lambda())
        .map(|(phi, lam)| phi + t * lam.powi(exp))
        .collect();
    ActionAnglePoint::new(aa.lambda().to_vec(), phi, aa.g())
}

/// State at time `t` under the flow of `H_k`. For `k > n` this is the flow of
/// the dependent integral `(1/k) Σ λ_j^k`, e.g. `H_2` for a single particle.
pub fn evolve(
    pt: &PhaseSpacePoint,
    t: f64,
    k: usize,
    cfg: &NumericConfig,
) -> Result<PhaseSpacePoint> {
    check_k(k, pt.n())?;
    let aa = forward_map(pt, cfg)?;
    backward_map(&shift_angles(&aa, t, k)?, cfg)
}

/// States at the given times under `H_k`, sharing one forward map.
pub fn trajectory(
    pt: &PhaseSpacePoint,
    times: &[f64],
    k: usize,
    cfg: &NumericConfig,
) -> Result<Vec<PhaseSpacePoint>> {
    check_k(k, pt.n())?;
    let aa = forward_map(pt, cfg)?;
    times
        .iter()
        .map(|&t| backward_map(&shift_angles(&aa, t, k)?, cfg))
        .collect()
}

/// Positions at time `t` under `H_2`: the spectrum of `Q + t L`, descending.
pub fn evolve_projection(pt: &PhaseSpacePoint, t: f64, cfg: &NumericConfig) -> Result<Vec<f64>> {
    let pair = build_lax(pt);
    let moved = pair.x_like() + pair.p_like() * num_complex::Complex64::from(t);
    let q = hermitian_eigenvalues(&moved);
    check_simple(&q, cfg.eig_gap_tol)?;
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatteringData {
    /// `(q_j(2T) - q_j(T)) / T`.
    pub momenta: Vec<f64>,
    /// `q_j(T) - T * momenta_j`.
    pub offsets: Vec<f64>,
    /// Actions of the initial state, for comparison with `momenta`.
    pub lambda: Vec<f64>,
}

/// Outgoing velocities and offsets estimated from the `H_2` flow at `T = t_large`.
pub fn scattering_data(
    pt: &PhaseSpacePoint,
    t_large: f64,
    cfg: &NumericConfig,
) -> Result<ScatteringData> {
    if !(t_large.is_finite() && t_large > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "t_large must be positive, got {t_large}"
        )));
    }
    let aa = forward_map(pt, cfg)?;
    let at_t = backward_map(&shift_angles(&aa, t_large, 2)?, cfg)?;
    let at_2t = backward_map(&shift_angles(&aa, 2.0 * t_large, 2)?, cfg)?;
    let momenta: Vec<f64> = at_2t
        .q()
        .iter()
        .zip(at_t.q())
        .map(|(b, a)| (b - a) / t_large)
        .collect();
    let offsets = at_t
        .q()
        .iter()
        .zip(&momenta)
        .map(|(q, v)| q - t_large * v)
        .collect();
    Ok(ScatteringData {
        momenta,
        offsets,
        lambda: aa.lambda().to_vec(),
    })
}

/// Spectrum of `L`, descending.
pub fn actions(pt: &PhaseSpacePoint) -> Vec<f64> {
    hermitian_eigenvalues(&lax_matrix(pt))
}

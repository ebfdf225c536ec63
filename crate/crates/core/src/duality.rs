//! Action-angle duality `(q, p) <-> (λ, φ)`.
//!
//! Forward: `λ` is the spectrum of `L` and `φ_k = D(λ_k) / A'(λ_k)`, a
//! gauge-invariant expression, so no diagonalizing unitary is ever formed.
//! Backward: the same construction with the matrices of the momentum gauge
//! in exchanged roles. `q` is the spectrum of `Q̃` and
//! `p_k = tr(L̃ adj(q_k - Q̃)) / Â'(q_k)` with `Â(z) = det(z - Q̃)`.

use crate::config::NumericConfig;
use crate::error::Result;
use crate::lax::build_dual;
use crate::linalg::{check_simple, hermitian_eigenvalues};
use crate::point::{ActionAnglePoint, PhaseSpacePoint};
use crate::spectral::{adjugate_ratios, sklyanin_coordinates};

pub fn forward_map(pt: &PhaseSpacePoint, cfg: &NumericConfig) -> Result<ActionAnglePoint> {
    let sc = sklyanin_coordinates(pt, cfg)?;
    ActionAnglePoint::new(sc.lambda, sc.mu, pt.g())
}

pub fn backward_map(aa: &ActionAnglePoint, cfg: &NumericConfig) -> Result<PhaseSpacePoint> {
    let dual = build_dual(aa);
    let q = hermitian_eigenvalues(dual.x_like());
    check_simple(&q, cfg.eig_gap_tol)?;
    let (_, ratios) = adjugate_ratios(dual.x_like(), aa.lambda(), &q);
    let p = ratios.iter().map(|r| r.re).collect();
    PhaseSpacePoint::new(q, p, aa.g())
}

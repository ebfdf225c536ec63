//! The two gauge slices of the reduced phase space and the commuting integrals.
//!
//! Position gauge (`Q` diagonal):
//! `Q_jk = q_j δ_jk`, `L_jk = p_j δ_jk + i g (1 - δ_jk) / (q_j - q_k)`.
//!
//! Momentum gauge (`L̃` diagonal):
//! `Q̃_jk = φ_j δ_jk - i g (1 - δ_jk) / (λ_j - λ_k)`, `L̃_jk = λ_j δ_jk`.
//!
//! Both satisfy the moment-map constraint `[X, P] = i g (v v† - 1)` with
//! `v` the all-ones vector.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{frobenius, real_diagonal, CMatrix, I};
use crate::point::{ActionAnglePoint, PhaseSpacePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gauge {
    PositionDiagonal,
    MomentumDiagonal,
}

/// A position-like and a momentum-like Hermitian matrix in a stated gauge.
#[derive(Debug, Clone, PartialEq)]
pub struct LaxPair {
    gauge: Gauge,
    x: CMatrix,
    p: CMatrix,
    g: f64,
}

impl LaxPair {
    pub fn gauge(&self) -> Gauge {
        self.gauge
    }

    /// `Q` or `Q̃`.
    pub fn x_like(&self) -> &CMatrix {
        &self.x
    }

    /// `L` or `L̃`.
    pub fn p_like(&self) -> &CMatrix {
        &self.p
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn n(&self) -> usize {
        self.x.nrows()
    }
}

/// Diagonal `d` plus `sign * i g / (a_j - a_k)` off the diagonal.
fn cauchy_like(d: &[f64], a: &[f64], g: f64, sign: f64) -> CMatrix {
    let n = d.len();
    let mut m = real_diagonal(d);
    for j in 0..n {
        for k in (j + 1)..n {
            let entry = I * (sign * g / (a[j] - a[k]));
            m[(j, k)] = entry;
            m[(k, j)] = entry.conj();
        }
    }
    m
}

/// The Lax matrix `L` alone.
pub fn lax_matrix(pt: &PhaseSpacePoint) -> CMatrix {
    cauchy_like(pt.p(), pt.q(), pt.g(), 1.0)
}

pub fn build_lax(pt: &PhaseSpacePoint) -> LaxPair {
    LaxPair {
        gauge: Gauge::PositionDiagonal,
        x: real_diagonal(pt.q()),
        p: lax_matrix(pt),
        g: pt.g(),
    }
}

pub fn build_dual(aa: &ActionAnglePoint) -> LaxPair {
    LaxPair {
        gauge: Gauge::MomentumDiagonal,
        x: cauchy_like(aa.phi(), aa.lambda(), aa.g(), -1.0),
        p: real_diagonal(aa.lambda()),
        g: aa.g(),
    }
}

/// `H_k = tr(L^k) / k` for `1 <= k <= n`.
pub fn hamiltonian(pt: &PhaseSpacePoint, k: usize) -> Result<f64> {
    let n = pt.n();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let l = lax_matrix(pt);
    let mut power = l.clone();
    for _ in 1..k {
        power = &power * &l;
    }
    Ok(power.trace().re / k as f64)
}

/// `½ Σ p_j² + g² Σ_{j<k} (q_j - q_k)⁻²`, evaluated without matrices.
pub fn hamiltonian_direct(pt: &PhaseSpacePoint) -> f64 {
    let (q, p, g) = (pt.q(), pt.p(), pt.g());
    let kinetic = 0.5 * p.iter().map(|x| x * x).sum::<f64>();
    let mut potential = 0.0;
    for j in 0..q.len() {
        for k in (j + 1)..q.len() {
            potential += 1.0 / (q[j] - q[k]).powi(2);
        }
    }
    kinetic + g * g * potential
}

/// `‖[X, P] - i g (v v† - 1)‖_F`.
pub fn momentum_map_residual(pair: &LaxPair) -> f64 {
    let commutator = &pair.x * &pair.p - &pair.p * &pair.x;
    let n = pair.n();
    let target = CMatrix::from_fn(n, n, |j, k| {
        if j == k {
            Complex64::new(0.0, 0.0)
        } else {
            I * pair.g
        }
    });
    frobenius(&(commutator - target))
}

//! Numerical toolkit for the rational Calogero-Moser system
//!
//! `H = ½ Σ p_j² + g² Σ_{j<k} (q_j - q_k)⁻²`
//!
//! built around its Lax matrix: spectral Darboux coordinates `(λ_k, θ_k)`,
//! the action-angle duality `(q, p) <-> (λ, φ)`, exact flows of the
//! commuting integrals and a finite-difference Poisson-bracket engine for
//! checking canonical relations.
//!
//! Positions, actions and every eigenvalue list are ordered descending.

pub mod config;
pub mod duality;
pub mod dynamics;
mod error;
pub mod lax;
pub mod linalg;
pub mod point;
pub mod poisson;
pub mod sample;
pub mod spectral;
pub mod state;

pub use config::NumericConfig;
pub use duality::{backward_map, forward_map};
pub use dynamics::{evolve, evolve_projection, scattering_data, trajectory, ScatteringData};
pub use error::{Error, Result};
pub use lax::{build_dual, build_lax, hamiltonian, momentum_map_residual, Gauge, LaxPair};
pub use num_complex::Complex64;
pub use point::{validate_phase_point, ActionAnglePoint, PhaseSpacePoint};
pub use poisson::{bracket, canonical_report, fd_gradient, BracketReport, FdMode};
pub use sample::{random_action_angle_point, random_phase_point, Sweep};
pub use spectral::{
    adjugate_polynomial, coordinates_via_projectors, sklyanin_coordinates, theorem_residual,
    SpectralCoordinates, SpectralData,
};
pub use state::{State, StateError};

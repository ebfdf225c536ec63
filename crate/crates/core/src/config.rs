use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances shared by the numerical routines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericConfig {
    /// Minimum admissible eigenvalue gap, relative to `1 + spectral diameter`.
    pub eig_gap_tol: f64,
    /// Finite-difference step; the step in coordinate `x` is `fd_step * (1 + |x|)`.
    pub fd_step: f64,
    /// Residual tolerance for exact identities, relative to the scale of each check.
    pub identity_tol: f64,
}

impl NumericConfig {
    pub fn new(eig_gap_tol: f64, fd_step: f64, identity_tol: f64) -> Result<Self> {
        let cfg = Self {
            eig_gap_tol,
            fd_step,
            identity_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("eig_gap_tol", self.eig_gap_tol),
            ("fd_step", self.fd_step),
            ("identity_tol", self.identity_tol),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if self.fd_step >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "fd_step must be below 1, got {}",
                self.fd_step
            )));
        }
        Ok(())
    }
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            eig_gap_tol: 1e-9,
            fd_step: 1e-5,
            identity_tol: 1e-10,
        }
    }
}

//! Dense complex matrix helpers and the Hermitian eigensolver wrapper.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Eigenvalues sorted descending with matching unit eigenvectors (as columns).
#[derive(Debug, Clone)]
pub struct SortedEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

pub fn real_diagonal(d: &[f64]) -> CMatrix {
    let n = d.len();
    CMatrix::from_fn(n, n, |j, k| {
        if j == k {
            Complex64::from(d[j])
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `‖M - M†‖_F`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    frobenius(&(m - m.adjoint()))
}

/// Smallest admissible gap for a spectrum with the given extremes.
pub fn gap_threshold(values_desc: &[f64], eig_gap_tol: f64) -> f64 {
    let diameter = match (values_desc.first(), values_desc.last()) {
        (Some(hi), Some(lo)) => hi - lo,
        _ => 0.0,
    };
    eig_gap_tol * (diameter + 1.0)
}

/// Fails with `DegenerateSpectrum` when two consecutive values of a
/// descending list are closer than `eig_gap_tol * (diameter + 1)`.
pub fn check_simple(values_desc: &[f64], eig_gap_tol: f64) -> Result<()> {
    let threshold = gap_threshold(values_desc, eig_gap_tol);
    let gap = crate::point::min_consecutive_gap(values_desc);
    if gap < threshold {
        Err(Error::DegenerateSpectrum { gap, threshold })
    } else {
        Ok(())
    }
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut values: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

/// Full Hermitian eigendecomposition, descending.
pub fn hermitian_eigen(m: &CMatrix) -> SortedEigen {
    let eig = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&j| eig.eigenvalues[j]).collect();
    let vectors = CMatrix::from_fn(m.nrows(), m.ncols(), |r, c| eig.eigenvectors[(r, order[c])]);
    SortedEigen { values, vectors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_descending() {
        let m = real_diagonal(&[-1.0, 3.0, 0.5]);
        assert_eq!(hermitian_eigenvalues(&m), vec![3.0, 0.5, -1.0]);
        let e = hermitian_eigen(&m);
        assert_eq!(e.values, vec![3.0, 0.5, -1.0]);
        assert!((e.vectors[(1, 0)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_detection() {
        assert!(check_simple(&[1.0, 1.0 - 1e-12], 1e-9).is_err());
        assert!(check_simple(&[1.0, 0.0], 1e-9).is_ok());
        assert!(check_simple(&[4.0], 1e-9).is_ok());
    }
}

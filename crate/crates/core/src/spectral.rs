//! Characteristic polynomial, adjugate expansion and the spectral
//! coordinates built from them.
//!
//! For the Lax matrix `L` and positions `Q = diag(q)`:
//!
//! ```text
//! A(z) = det(z - L)
//! C(z) = tr(Q adj(z - L) v v†)      (sum of all entries of Q adj(z - L))
//! D(z) = tr(Q adj(z - L))
//! θ_k  = C(λ_k) / A'(λ_k)           μ_k = D(λ_k) / A'(λ_k)
//! ```
//!
//! The adjugate is expanded as a matrix polynomial with the
//! Faddeev-LeVerrier recursion, so it stays finite at the eigenvalues where
//! the resolvent blows up. `C` and `D` are then scalar polynomials of degree
//! `n - 1` whose coefficients are contractions of the matrix coefficients.

use num_complex::Complex64;

use crate::config::NumericConfig;
use crate::error::Result;
use crate::lax::lax_matrix;
use crate::linalg::{check_simple, frobenius, hermitian_eigen, hermitian_eigenvalues, CMatrix, I};
use crate::point::PhaseSpacePoint;

/// `A(z) = Σ a_k z^k` (monic, degree `n`) and `adj(z - L) = Σ z^k M_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    a_coeffs: Vec<f64>,
    adj_coeffs: Vec<CMatrix>,
}

/// Spectral Darboux coordinates at one phase-space point.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCoordinates {
    /// Eigenvalues of `L`, descending.
    pub lambda: Vec<f64>,
    /// `C(λ_k) / A'(λ_k)`.
    pub theta: Vec<Complex64>,
    /// Real part of `D(λ_k) / A'(λ_k)`.
    pub mu: Vec<f64>,
    /// `Im(θ_k - μ_k)`; the correction `θ - μ` is purely imaginary.
    pub f: Vec<f64>,
    /// Largest `|Im D(λ_k) / A'(λ_k)|`, pure rounding for valid input.
    pub mu_imag_max: f64,
}

impl SpectralCoordinates {
    pub fn n(&self) -> usize {
        self.lambda.len()
    }
}

/// Faddeev-LeVerrier: `N_0 = 1`, `c_j = -tr(L N_{j-1}) / j`,
/// `N_j = L N_{j-1} + c_j`, with `adj(z - L) = Σ_j z^{n-1-j} N_j`.
pub fn adjugate_polynomial(l: &CMatrix) -> SpectralData {
    let n = l.nrows();
    let identity = CMatrix::identity(n, n);
    let mut a_desc = Vec::with_capacity(n + 1);
    let mut n_desc = Vec::with_capacity(n);
    a_desc.push(1.0);
    let mut current = identity.clone();
    for j in 1..=n {
        let product = l * &current;
        let c = -product.trace().re / j as f64;
        a_desc.push(c);
        n_desc.push(current);
        current = product + &identity * Complex64::from(c);
    }
    a_desc.reverse();
    n_desc.reverse();
    SpectralData {
        a_coeffs: a_desc,
        adj_coeffs: n_desc,
    }
}

fn horner<T>(coeffs: &[T], z: Complex64) -> Complex64
where
    T: Copy + Into<Complex64>,
{
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c.into())
}

impl SpectralData {
    pub fn n(&self) -> usize {
        self.adj_coeffs.len()
    }

    /// Ascending coefficients `a_0..a_n`, `a_n = 1`.
    pub fn a_coeffs(&self) -> &[f64] {
        &self.a_coeffs
    }

    /// Matrix coefficients `M_0..M_{n-1}`, ascending in `z`.
    pub fn adj_coeffs(&self) -> &[CMatrix] {
        &self.adj_coeffs
    }

    /// `d^order A / dz^order` at `z`.
    pub fn eval_a(&self, z: Complex64, order: usize) -> Complex64 {
        let derived: Vec<f64> = self
            .a_coeffs
            .iter()
            .enumerate()
            .skip(order)
            .map(|(k, &a)| a * falling_factorial(k, order))
            .collect();
        horner(&derived, z)
    }

    /// `adj(z - L)`.
    pub fn adjugate_at(&self, z: Complex64) -> CMatrix {
        let n = self.n();
        let mut acc = CMatrix::zeros(n, n);
        for m in self.adj_coeffs.iter().rev() {
            acc = acc * z + m;
        }
        acc
    }

    /// Coefficients of `C(z)` for `Q = diag(q)`: `q^T M_k v`.
    pub fn c_coeffs(&self, q: &[f64]) -> Vec<Complex64> {
        self.adj_coeffs
            .iter()
            .map(|m| m.row_iter().zip(q).map(|(row, &qj)| row.sum() * qj).sum())
            .collect()
    }

    /// Coefficients of `D(z)` for `Q = diag(q)`: `Σ_j q_j (M_k)_jj`.
    pub fn d_coeffs(&self, q: &[f64]) -> Vec<Complex64> {
        self.adj_coeffs
            .iter()
            .map(|m| m.diagonal().iter().zip(q).map(|(d, &qj)| d * qj).sum())
            .collect()
    }

    pub fn eval_c(&self, q: &[f64], z: Complex64) -> Complex64 {
        horner(&self.c_coeffs(q), z)
    }

    pub fn eval_d(&self, q: &[f64], z: Complex64) -> Complex64 {
        horner(&self.d_coeffs(q), z)
    }

    /// `max_z ‖(z - L) adj(z - L) - A(z)‖_F` over the given sample points.
    pub fn reconstruction_residual(&self, l: &CMatrix, zs: &[Complex64]) -> f64 {
        let n = self.n();
        let identity = CMatrix::identity(n, n);
        zs.iter()
            .map(|&z| {
                let shifted = &identity * z - l;
                frobenius(&(shifted * self.adjugate_at(z) - &identity * self.eval_a(z, 0)))
            })
            .fold(0.0, f64::max)
    }
}

fn falling_factorial(k: usize, order: usize) -> f64 {
    (0..order).map(|i| (k - i) as f64).product()
}

/// `A^{(derivative)}(z)` for the Lax matrix of `pt`.
pub fn eval_a(sd: &SpectralData, z: Complex64, derivative: usize) -> Complex64 {
    sd.eval_a(z, derivative)
}

pub fn eval_c(pt: &PhaseSpacePoint, z: Complex64) -> Complex64 {
    adjugate_polynomial(&lax_matrix(pt)).eval_c(pt.q(), z)
}

pub fn eval_d(pt: &PhaseSpacePoint, z: Complex64) -> Complex64 {
    adjugate_polynomial(&lax_matrix(pt)).eval_d(pt.q(), z)
}

/// `|C(z) - D(z) - (i g / 2) A''(z)|`. Zero up to rounding for every `z`.
pub fn theorem_residual(pt: &PhaseSpacePoint, z: Complex64) -> f64 {
    let sd = adjugate_polynomial(&lax_matrix(pt));
    theorem_residual_with(&sd, pt, z)
}

pub(crate) fn theorem_residual_with(sd: &SpectralData, pt: &PhaseSpacePoint, z: Complex64) -> f64 {
    let lhs = sd.eval_c(pt.q(), z) - sd.eval_d(pt.q(), z);
    let rhs = I * (0.5 * pt.g()) * sd.eval_a(z, 2);
    (lhs - rhs).norm()
}

/// Magnitude scale for residuals of degree-`n - 1` spectral identities:
/// `(1 + |z|)^{n-1} (1 + ‖q‖_∞) (1 + ‖L‖_F)^{n-1}`.
pub fn residual_scale(pt: &PhaseSpacePoint, z: Complex64) -> f64 {
    let exp = pt.n() as i32 - 1;
    let q_inf = pt.q().iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    (1.0 + z.norm()).powi(exp) * (1.0 + q_inf) * (1.0 + frobenius(&lax_matrix(pt))).powi(exp)
}

/// `g Σ_{ℓ≠k} 1 / (λ_k - λ_ℓ)`: the imaginary correction separating `θ_k` from `μ_k`.
pub fn correction_field(lambda: &[f64], g: f64) -> Vec<f64> {
    lambda
        .iter()
        .enumerate()
        .map(|(k, &lk)| {
            g * lambda
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, &ll)| 1.0 / (lk - ll))
                .sum::<f64>()
        })
        .collect()
}

/// For a Hermitian `m` with simple spectrum `values` and a real diagonal
/// `W = diag(weights)`, returns
/// `tr(W adj(x - m) v v†) / A'(x)` and `tr(W adj(x - m)) / A'(x)` at each
/// `x` in `values`, where `A(z) = det(z - m)`.
///
/// The adjugate polynomial is expanded about the mean eigenvalue, which keeps
/// Horner evaluation well scaled when the whole spectrum sits far from zero.
pub(crate) fn adjugate_ratios(
    m: &CMatrix,
    weights: &[f64],
    values: &[f64],
) -> (Vec<Complex64>, Vec<Complex64>) {
    let n = m.nrows();
    let center = m.trace().re / n as f64;
    let centered = m - CMatrix::identity(n, n) * Complex64::from(center);
    let sd = adjugate_polynomial(&centered);
    let c_coeffs = sd.c_coeffs(weights);
    let d_coeffs = sd.d_coeffs(weights);
    values
        .iter()
        .map(|&x| {
            let z = Complex64::from(x - center);
            let da = sd.eval_a(z, 1);
            (horner(&c_coeffs, z) / da, horner(&d_coeffs, z) / da)
        })
        .unzip()
}

/// `θ_k = C(λ_k) / A'(λ_k)` and `μ_k = D(λ_k) / A'(λ_k)` from the adjugate
/// polynomial.
pub fn sklyanin_coordinates(
    pt: &PhaseSpacePoint,
    cfg: &NumericConfig,
) -> Result<SpectralCoordinates> {
    let l = lax_matrix(pt);
    let lambda = hermitian_eigenvalues(&l);
    check_simple(&lambda, cfg.eig_gap_tol)?;

    let (theta, d_ratios) = adjugate_ratios(&l, pt.q(), &lambda);
    let mu_imag_max = d_ratios.iter().fold(0.0_f64, |m, d| m.max(d.im.abs()));
    let mu: Vec<f64> = d_ratios.iter().map(|d| d.re).collect();
    let f = theta.iter().zip(&mu).map(|(t, m)| (t - m).im).collect();
    Ok(SpectralCoordinates {
        lambda,
        theta,
        mu,
        f,
        mu_imag_max,
    })
}

/// Same coordinates from unit eigenvectors `w_k` of `L`: since
/// `adj(λ_k - L) = A'(λ_k) w_k w_k†` for a simple spectrum,
/// `μ_k = w_k† Q w_k` and `θ_k = (v† Q w_k)(w_k† v)`.
pub fn coordinates_via_projectors(
    pt: &PhaseSpacePoint,
    cfg: &NumericConfig,
) -> Result<SpectralCoordinates> {
    let l = lax_matrix(pt);
    let eig = hermitian_eigen(&l);
    check_simple(&eig.values, cfg.eig_gap_tol)?;
    let q = pt.q();

    let mut theta = Vec::with_capacity(q.len());
    let mut mu: Vec<f64> = Vec::with_capacity(q.len());
    for w in eig.vectors.column_iter() {
        let qw: Complex64 = w.iter().zip(q).map(|(wj, &qj)| wj * qj).sum();
        let wv: Complex64 = w.iter().map(|wj| wj.conj()).sum();
        theta.push(qw * wv);
        mu.push(w.iter().zip(q).map(|(wj, &qj)| wj.norm_sqr() * qj).sum());
    }
    let f = theta.iter().zip(&mu).map(|(t, m)| (t - m).im).collect();
    Ok(SpectralCoordinates {
        lambda: eig.values,
        theta,
        mu,
        f,
        mu_imag_max: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::real_diagonal;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn reference() -> PhaseSpacePoint {
        PhaseSpacePoint::new(vec![1.0, -1.0], vec![0.0, 0.0], 1.0).unwrap()
    }

    fn moving() -> PhaseSpacePoint {
        PhaseSpacePoint::new(vec![1.0, -1.0], vec![1.0, -1.0], 1.0).unwrap()
    }

    #[test]
    fn two_by_two_adjugate() {
        let l = lax_matrix(&reference());
        let sd = adjugate_polynomial(&l);
        assert_eq!(sd.a_coeffs(), &[-0.25, 0.0, 1.0]);
        assert_eq!(sd.adj_coeffs()[1], CMatrix::identity(2, 2));
        assert_eq!(sd.adj_coeffs()[0], l);
        let adj = sd.adjugate_at(c(0.3, 0.0));
        assert!(close(adj[(0, 1)], c(0.0, 0.5), 1e-15));
        assert!(close(adj[(0, 0)], c(0.3, 0.0), 1e-15));
    }

    #[test]
    fn diagonal_adjugate() {
        let p = [2.0, -1.0, 0.5];
        let sd = adjugate_polynomial(&real_diagonal(&p));
        let z = c(0.7, -0.4);
        let expect_a: Complex64 = p.iter().map(|&pj| z - pj).product();
        assert!(close(sd.eval_a(z, 0), expect_a, 1e-14));
        let adj = sd.adjugate_at(z);
        for j in 0..3 {
            let expect: Complex64 = (0..3).filter(|&l| l != j).map(|l| z - p[l]).product();
            assert!(close(adj[(j, j)], expect, 1e-14));
            for k in 0..3 {
                if k != j {
                    assert_eq!(adj[(j, k)], c(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn one_by_one() {
        let sd = adjugate_polynomial(&real_diagonal(&[5.0]));
        assert_eq!(sd.a_coeffs(), &[-5.0, 1.0]);
        assert_eq!(sd.adj_coeffs(), &[CMatrix::identity(1, 1)]);
        assert_eq!(sd.eval_a(c(3.0, 1.0), 2), c(0.0, 0.0));
        let pt = PhaseSpacePoint::new(vec![3.0], vec![5.0], 7.0).unwrap();
        assert_eq!(eval_d(&pt, c(-2.0, 9.0)), c(3.0, 0.0));
        assert_eq!(theorem_residual(&pt, c(1.5, -0.5)), 0.0);
    }

    #[test]
    fn derivatives_of_a() {
        let sd = adjugate_polynomial(&lax_matrix(&reference()));
        assert!(close(sd.eval_a(c(0.5, 0.0), 1), c(1.0, 0.0), 1e-15));
        assert_eq!(sd.eval_a(c(-3.0, 2.0), 2), c(2.0, 0.0));
        assert_eq!(sd.eval_a(c(-3.0, 2.0), 3), c(0.0, 0.0));
        assert!(close(sd.eval_a(c(0.5, 0.0), 0), c(0.0, 0.0), 1e-15));
    }

    #[test]
    fn c_and_d_reference_values() {
        for z in [c(0.0, 0.0), c(0.37, 0.0), c(-2.0, 1.5)] {
            assert!(close(eval_c(&reference(), z), c(0.0, 1.0), 1e-14));
            assert!(close(eval_d(&reference(), z), c(0.0, 0.0), 1e-14));
            assert!(close(eval_c(&moving(), z), c(2.0, 1.0), 1e-14));
            assert!(close(eval_d(&moving(), z), c(2.0, 0.0), 1e-14));
        }
    }

    #[test]
    fn c_minus_d_identity_at_reference() {
        assert!(theorem_residual(&reference(), c(0.37, 0.0)) <= 1e-13);
    }

    #[test]
    fn sklyanin_reference() {
        let cfg = NumericConfig::default();
        let sc = sklyanin_coordinates(&reference(), &cfg).unwrap();
        assert!((sc.lambda[0] - 0.5).abs() < 1e-15 && (sc.lambda[1] + 0.5).abs() < 1e-15);
        assert!(sc.mu.iter().all(|m| m.abs() < 1e-15));
        assert!(close(sc.theta[0], c(0.0, 1.0), 1e-14));
        assert!(close(sc.theta[1], c(0.0, -1.0), 1e-14));

        let sc = sklyanin_coordinates(&moving(), &cfg).unwrap();
        let r5 = 5.0_f64.sqrt();
        assert!((sc.lambda[0] - r5 / 2.0).abs() < 1e-14);
        assert!((sc.mu[0] - 2.0 / r5).abs() < 1e-14);
        assert!(close(sc.theta[0], c(2.0 / r5, 1.0 / r5), 1e-14));
    }

    #[test]
    fn free_case_reduces_to_positions() {
        let pt = PhaseSpacePoint::new(vec![2.0, 0.5, -1.0], vec![1.0, 0.0, -2.0], 0.0).unwrap();
        let cfg = NumericConfig::default();
        for sc in [
            sklyanin_coordinates(&pt, &cfg).unwrap(),
            coordinates_via_projectors(&pt, &cfg).unwrap(),
        ] {
            assert_eq!(sc.lambda, vec![1.0, 0.0, -2.0]);
            for k in 0..3 {
                assert!((sc.mu[k] - pt.q()[k]).abs() < 1e-14);
                assert!(close(sc.theta[k], c(pt.q()[k], 0.0), 1e-14));
                assert!(sc.f[k].abs() < 1e-14);
            }
        }
    }

    #[test]
    fn projector_reference() {
        let sc = coordinates_via_projectors(&reference(), &NumericConfig::default()).unwrap();
        assert!(sc.mu.iter().all(|m| m.abs() < 1e-15));
        assert!(close(sc.theta[0], c(0.0, 1.0), 1e-14));
        assert!(close(sc.theta[1], c(0.0, -1.0), 1e-14));
    }

    #[test]
    fn degenerate_spectrum_rejected() {
        // Free particles with equal momenta share an eigenvalue.
        let pt = PhaseSpacePoint::new(vec![1.0, 0.0], vec![0.3, 0.3], 0.0).unwrap();
        let cfg = NumericConfig::default();
        assert!(matches!(
            sklyanin_coordinates(&pt, &cfg),
            Err(crate::Error::DegenerateSpectrum { .. })
        ));
        assert!(matches!(
            coordinates_via_projectors(&pt, &cfg),
            Err(crate::Error::DegenerateSpectrum { .. })
        ));
    }

    #[test]
    fn correction_closed_form() {
        assert_eq!(correction_field(&[0.5, -0.5], 1.0), vec![1.0, -1.0]);
        assert_eq!(correction_field(&[3.0], 2.0), vec![0.0]);
    }
}

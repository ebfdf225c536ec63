//! Validated points of the phase space and of the action-angle space.
//!
//! Both carry a strictly decreasing coordinate array: positions `q` for
//! [`PhaseSpacePoint`], actions `lambda` for [`ActionAnglePoint`]. The
//! ordering is part of the type invariant, so code receiving a point never
//! needs to re-check it.

use crate::error::{Error, Result};

/// A point `(q, p)` of the cotangent bundle of the ordered configuration
/// domain `q_1 > q_2 > ... > q_n`, together with the coupling `g`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpacePoint {
    g: f64,
    q: Vec<f64>,
    p: Vec<f64>,
}

/// Actions `lambda` (strictly decreasing) and conjugate angles `phi`.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionAnglePoint {
    g: f64,
    lambda: Vec<f64>,
    phi: Vec<f64>,
}

fn check_pair(
    ordered_name: &'static str,
    ordered: &[f64],
    other_name: &'static str,
    other: &[f64],
    g: f64,
) -> Result<()> {
    if ordered.is_empty() && other.is_empty() {
        return Err(Error::Empty);
    }
    if ordered.len() != other.len() {
        return Err(Error::LengthMismatch {
            first: ordered_name,
            first_len: ordered.len(),
            second: other_name,
            second_len: other.len(),
        });
    }
    if !g.is_finite() {
        return Err(Error::NonFinite {
            name: "g",
            index: 0,
            value: g,
        });
    }
    for (name, xs) in [(ordered_name, ordered), (other_name, other)] {
        if let Some((index, &value)) = xs.iter().enumerate().find(|(_, x)| !x.is_finite()) {
            return Err(Error::NonFinite { name, index, value });
        }
    }
    check_descending(ordered_name, ordered)
}

pub(crate) fn check_descending(name: &'static str, xs: &[f64]) -> Result<()> {
    match xs.windows(2).position(|w| w[0] <= w[1]) {
        Some(index) => Err(Error::OrderingViolation {
            name,
            index,
            left: xs[index],
            right: xs[index + 1],
        }),
        None => Ok(()),
    }
}

impl PhaseSpacePoint {
    pub fn new(q: Vec<f64>, p: Vec<f64>, g: f64) -> Result<Self> {
        check_pair("q", &q, "p", &p, g)?;
        Ok(Self { g, q, p })
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn q(&self) -> &[f64] {
        &self.q
    }

    pub fn p(&self) -> &[f64] {
        &self.p
    }

    /// Smallest gap `q_j - q_{j+1}`; infinite for a single particle.
    pub fn min_gap(&self) -> f64 {
        min_consecutive_gap(&self.q)
    }

    /// Coordinates flattened as `(q_1..q_n, p_1..p_n)`.
    pub fn coordinates(&self) -> Vec<f64> {
        self.q.iter().chain(&self.p).copied().collect()
    }

    /// Inverse of [`coordinates`](Self::coordinates), with validation.
    pub fn from_coordinates(coords: &[f64], g: f64) -> Result<Self> {
        if !coords.len().is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "coordinate vector length {} is odd",
                coords.len()
            )));
        }
        let (q, p) = coords.split_at(coords.len() / 2);
        Self::new(q.to_vec(), p.to_vec(), g)
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>, f64) {
        (self.q, self.p, self.g)
    }
}

impl ActionAnglePoint {
    pub fn new(lambda: Vec<f64>, phi: Vec<f64>, g: f64) -> Result<Self> {
        check_pair("lambda", &lambda, "phi", &phi, g)?;
        Ok(Self { g, lambda, phi })
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    pub fn min_gap(&self) -> f64 {
        min_consecutive_gap(&self.lambda)
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>, f64) {
        (self.lambda, self.phi, self.g)
    }
}

/// Validates raw arrays as a phase-space point.
pub fn validate_phase_point(q: &[f64], p: &[f64], g: f64) -> Result<PhaseSpacePoint> {
    PhaseSpacePoint::new(q.to_vec(), p.to_vec(), g)
}

pub(crate) fn min_consecutive_gap(xs: &[f64]) -> f64 {
    xs.windows(2)
        .map(|w| w[0] - w[1])
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_ordered_pair() {
        let pt = validate_phase_point(&[1.0, -1.0], &[0.0, 0.0], 1.0).unwrap();
        assert_eq!(pt.n(), 2);
        assert_eq!(pt.min_gap(), 2.0);
    }

    #[test]
    fn rejects_coincident_positions() {
        let err = validate_phase_point(&[0.0, 0.0], &[1.0, 2.0], 1.0).unwrap_err();
        assert!(matches!(err, Error::OrderingViolation { index: 0, .. }));
    }

    #[test]
    fn free_case_is_valid() {
        validate_phase_point(&[3.0, 2.0, 1.0], &[0.0; 3], 0.0).unwrap();
    }

    #[test]
    fn rejects_ascending_and_nonfinite() {
        assert!(matches!(
            validate_phase_point(&[1.0, 2.0, 0.0], &[0.0; 3], 1.0),
            Err(Error::OrderingViolation { index: 0, .. })
        ));
        assert!(matches!(
            validate_phase_point(&[2.0, 1.0, 1.0], &[0.0; 3], 1.0),
            Err(Error::OrderingViolation { index: 1, .. })
        ));
        assert!(matches!(
            validate_phase_point(&[1.0, f64::NAN], &[0.0; 2], 1.0),
            Err(Error::NonFinite {
                name: "q",
                index: 1,
                ..
            })
        ));
        assert!(matches!(
            validate_phase_point(&[1.0, 0.0], &[0.0, f64::INFINITY], 1.0),
            Err(Error::NonFinite { name: "p", .. })
        ));
        assert!(matches!(
            validate_phase_point(&[1.0, 0.0], &[0.0, 0.0], f64::NAN),
            Err(Error::NonFinite { name: "g", .. })
        ));
    }

    #[test]
    fn rejects_shape_errors() {
        assert_eq!(validate_phase_point(&[], &[], 1.0), Err(Error::Empty));
        assert!(matches!(
            validate_phase_point(&[1.0, 0.0], &[0.0], 1.0),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn single_particle() {
        let pt = validate_phase_point(&[3.0], &[5.0], 7.0).unwrap();
        assert_eq!(pt.min_gap(), f64::INFINITY);
        let aa = ActionAnglePoint::new(vec![0.5], vec![-2.0], 1.0).unwrap();
        assert_eq!(aa.n(), 1);
    }

    #[test]
    fn action_angle_ordering() {
        assert!(ActionAnglePoint::new(vec![-0.5, 0.5], vec![0.0, 0.0], 1.0).is_err());
        assert!(ActionAnglePoint::new(vec![0.5, -0.5], vec![0.0, 0.0], 1.0).is_ok());
    }

    #[test]
    fn coordinates_round_trip() {
        let pt = validate_phase_point(&[2.0, 1.0], &[0.25, -3.0], 0.5).unwrap();
        let back = PhaseSpacePoint::from_coordinates(&pt.coordinates(), pt.g()).unwrap();
        assert_eq!(back, pt);
    }
}

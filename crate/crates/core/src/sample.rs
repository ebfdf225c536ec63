//! Seeded generation of test and benchmark points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point::{ActionAnglePoint, PhaseSpacePoint};

/// Momenta and angles are drawn uniformly from `[-MOMENTUM_BOUND, MOMENTUM_BOUND]`.
pub const MOMENTUM_BOUND: f64 = 2.0;

fn check_params(n: usize, g: f64, min_gap: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if !g.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "coupling {g} is not finite"
        )));
    }
    if !(min_gap.is_finite() && min_gap > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "min_gap must be positive, got {min_gap}"
        )));
    }
    Ok(())
}

/// Strictly decreasing, centered at zero, consecutive gaps in `[min_gap, 2 min_gap)`.
fn ordered_coordinates(rng: &mut ChaCha8Rng, n: usize, min_gap: f64) -> Vec<f64> {
    let mut xs = Vec::with_capacity(n);
    let mut x = 0.0;
    for _ in 0..n {
        xs.push(x);
        x -= min_gap * (1.0 + rng.gen::<f64>());
    }
    let shift = rng.gen_range(-0.5..0.5) * min_gap - xs.iter().sum::<f64>() / n as f64;
    for x in &mut xs {
        *x += shift;
    }
    // Re-centering can round two close values together only for absurd gaps.
    for j in 1..n {
        if xs[j] >= xs[j - 1] {
            xs[j] = xs[j - 1] - min_gap;
        }
    }
    xs
}

fn bounded(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| rng.gen_range(-MOMENTUM_BOUND..=MOMENTUM_BOUND))
        .collect()
}

/// Deterministic random phase-space point with position gaps of at least `min_gap`.
pub fn random_phase_point(seed: u64, n: usize, g: f64, min_gap: f64) -> Result<PhaseSpacePoint> {
    check_params(n, g, min_gap)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = ordered_coordinates(&mut rng, n, min_gap);
    let p = bounded(&mut rng, n);
    PhaseSpacePoint::new(q, p, g)
}

/// Deterministic random action-angle point with action gaps of at least `min_gap`.
pub fn random_action_angle_point(
    seed: u64,
    n: usize,
    g: f64,
    min_gap: f64,
) -> Result<ActionAnglePoint> {
    check_params(n, g, min_gap)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_acc0_u64);
    let lambda = ordered_coordinates(&mut rng, n, min_gap);
    let phi = bounded(&mut rng, n);
    ActionAnglePoint::new(lambda, phi, g)
}

/// Parameters of a seeded sweep over particle numbers and couplings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub seed: u64,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub g_max: f64,
    pub min_gap: f64,
}

impl Sweep {
    /// Particle number and coupling of trial `i`. `n` cycles through
    /// `n_min..=n_max`; `g` is uniform in `[-g_max, g_max]`.
    pub fn trial(&self, i: usize) -> (u64, usize, f64) {
        let span = self.n_max - self.n_min + 1;
        let n = self.n_min + i % span;
        let seed = self
            .seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(i as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = if self.g_max > 0.0 {
            rng.gen_range(-self.g_max..=self.g_max)
        } else {
            0.0
        };
        (seed, n, g)
    }

    pub fn phase_points(&self) -> Result<Vec<PhaseSpacePoint>> {
        (0..self.count)
            .map(|i| {
                let (seed, n, g) = self.trial(i);
                random_phase_point(seed, n, g, self.min_gap)
            })
            .collect()
    }

    pub fn action_angle_points(&self) -> Result<Vec<ActionAnglePoint>> {
        (0..self.count)
            .map(|i| {
                let (seed, n, g) = self.trial(i);
                random_action_angle_point(seed, n, g, self.min_gap)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::validate_phase_point;

    #[test]
    fn deterministic() {
        let a = random_phase_point(7, 3, 1.0, 0.5).unwrap();
        let b = random_phase_point(7, 3, 1.0, 0.5).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_phase_point(8, 3, 1.0, 0.5).unwrap());
    }

    #[test]
    fn respects_gap_and_bounds() {
        for seed in 0..50 {
            let pt = random_phase_point(seed, 6, -2.0, 0.5).unwrap();
            assert!(pt.min_gap() >= 0.5);
            assert!(pt.p().iter().all(|p| p.abs() <= MOMENTUM_BOUND));
        }
    }

    #[test]
    fn single_particle() {
        let pt = random_phase_point(7, 1, 2.0, 1.0).unwrap();
        assert_eq!(pt.n(), 1);
        assert!(pt.q()[0].is_finite() && pt.p()[0].is_finite());
    }

    #[test]
    fn validation_accepts_every_output() {
        for seed in 0..1000 {
            for n in 1..=8 {
                let pt = random_phase_point(seed, n, 1.0, 0.5).unwrap();
                validate_phase_point(pt.q(), pt.p(), pt.g()).unwrap();
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(random_phase_point(0, 0, 1.0, 0.5).is_err());
        assert!(random_phase_point(0, 2, 1.0, 0.0).is_err());
        assert!(random_action_angle_point(0, 2, f64::NAN, 0.5).is_err());
    }

    #[test]
    fn sweep_cycles_n() {
        let sweep = Sweep {
            seed: 1,
            count: 16,
            n_min: 1,
            n_max: 8,
            g_max: 5.0,
            min_gap: 0.5,
        };
        let pts = sweep.phase_points().unwrap();
        let ns: Vec<usize> = pts.iter().map(|p| p.n()).collect();
        assert_eq!(&ns[..8], &[1, 2, 3, 4, 5, 6, 7, 8]);
        assert!(pts.iter().all(|p| p.g().abs() <= 5.0));
    }
}

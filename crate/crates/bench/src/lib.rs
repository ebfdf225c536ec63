//! Fixtures shared by the criterion benches.

use calogero_core::{
    random_action_angle_point, random_phase_point, ActionAnglePoint, PhaseSpacePoint,
};

/// Particle numbers swept by every bench group.
pub const SIZES: [usize; 4] = [2, 4, 8, 16];

pub fn phase_point(n: usize) -> PhaseSpacePoint {
    random_phase_point(0xbe7c, n, 1.5, 0.5).expect("valid fixture")
}

pub fn action_angle_point(n: usize) -> ActionAnglePoint {
    random_action_angle_point(0xbe7c, n, 1.5, 0.5).expect("valid fixture")
}

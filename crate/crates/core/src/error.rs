use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty coordinate arrays (n must be at least 1)")]
    Empty,

    #[error("length mismatch: {first} has {first_len} entries, {second} has {second_len}")]
    LengthMismatch {
        first: &'static str,
        first_len: usize,
        second: &'static str,
        second_len: usize,
    },

    #[error("{name}[{index}] = {value} is not finite")]
    NonFinite {
        name: &'static str,
        index: usize,
        value: f64,
    },

    #[error("{name} must be strictly decreasing, but {name}[{index}] = {left} <= {name}[{}] = {right}", index + 1)]
    OrderingViolation {
        name: &'static str,
        index: usize,
        left: f64,
        right: f64,
    },

    #[error("integral index k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("degenerate spectrum: eigenvalue gap {gap:e} below threshold {threshold:e}")]
    DegenerateSpectrum { gap: f64, threshold: f64 },

    #[error(
        "finite-difference step in coordinate {coordinate} cannot stay inside the ordered domain"
    )]
    StepLeavesDomain { coordinate: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for failures of the numerical pipeline, as opposed to rejected input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::DegenerateSpectrum { .. } | Error::StepLeavesDomain { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

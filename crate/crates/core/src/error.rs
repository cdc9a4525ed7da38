use thiserror::Error;

/// Errors raised by the spectral toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point {phi} lies within {distance:e} of the singularity at {singularity}")]
    NearSingularity {
        phi: f64,
        singularity: f64,
        distance: f64,
    },

    #[error("point is within {value:e} of a singular line (guard {guard:e})")]
    NearSingularLine { value: f64, guard: f64 },

    #[error("point {phi} lies outside the open cell ({lo}, {hi})")]
    OutsideCell { phi: f64, lo: f64, hi: f64 },

    #[error("grid point {phi} is closer than {min_distance} to a cell endpoint")]
    GridTooCloseToBoundary { phi: f64, min_distance: f64 },

    #[error("form {form} is not defined for {reason}")]
    FormMismatch { form: &'static str, reason: String },

    #[error(
        "eigenvalue {index} did not converge: bracket [{lo}, {hi}] after {iterations} bisections"
    )]
    NoConvergence {
        index: usize,
        lo: f64,
        hi: f64,
        iterations: usize,
    },

    #[error("rejection sampling could not place a point {min_dist} away from every singularity (N = {n_order})")]
    SamplingExhausted { n_order: u32, min_dist: f64 },

    #[error("level {index} is not resolved by the grid: coarse {coarse}, fine {fine}")]
    Unresolved {
        index: usize,
        coarse: f64,
        fine: f64,
    },

    #[error("radial box r_max = {r_max} is too small: eigenvalue {index} drifted by {drift:e}")]
    RadialBoxTooSmall {
        r_max: f64,
        index: usize,
        drift: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

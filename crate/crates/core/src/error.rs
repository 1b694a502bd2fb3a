use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero quaternion has no inverse")]
    ZeroQuaternion,

    #[error("norm {norm} is too far from 1 to renormalise")]
    NotUnit { norm: f64 },

    #[error("vectors are not orthogonal within tolerance (dot = {dot})")]
    NotOrthogonal { dot: f64 },

    #[error("matrix is not special orthogonal within tolerance")]
    NotRotation,

    #[error("{name} = {value} is outside its admissible range")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("input lies in stratum {found}, expected {expected}")]
    WrongStratum {
        expected: &'static str,
        found: &'static str,
    },

    #[error("map is not periodic with order <= {max_order} at tolerance {tol}")]
    NotPeriodic { max_order: usize, tol: f64 },

    #[error("orbit does not close up: residual {residual} at step {order}")]
    OrbitNotClosed { order: usize, residual: f64 },

    #[error(
        "orbit entries nearly coincide (min pairwise distance {min_dist}); action is not free here"
    )]
    OrbitDegenerate { min_dist: f64 },

    #[error("cover orbits do not refine base orbits (escape distance {residual})")]
    InconsistentCover { residual: f64 },

    #[error("neither sign of the action matches descent (best error {best_error})")]
    DescentFailure { best_error: f64 },

    #[error("fibre-family check failed at t = {t} (max error {max_error})")]
    TheoremFailure { t: f64, max_error: f64 },

    #[error("unknown suite name `{0}`")]
    UnknownSuite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

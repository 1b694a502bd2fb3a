//! Scalar abstraction: everything in this crate is generic over a floating
//! point type through [`Real`], with `f64` as the working precision of the
//! verification harness.

use core::fmt::{Debug, Display};

use num_traits::{Float, FloatConst};

/// Floating point scalar usable as the coordinate field.
///
/// The associated constants are the repair thresholds of the validating
/// constructors: a constructor renormalises inputs that are off by less than
/// the slack and rejects anything worse, so round-off is absorbed silently
/// while genuinely bad data fails loudly.
pub trait Real: Float + FloatConst + Debug + Display + 'static {
    /// Largest norm deviation a unit-vector constructor will renormalise.
    const UNIT_SLACK: Self;
    /// Largest orthogonality defect a frame constructor will repair.
    const ORTHO_SLACK: Self;
    /// Grid spacing used when bucketing coordinates for canonical
    /// orbit-representative selection.
    const BUCKET: Self;

    fn from_f64(x: f64) -> Self;
    fn as_f64(self) -> f64;

    /// `x` clamped to `[-1, 1]`, for inverse trigonometry.
    fn clamp_unit(self) -> Self {
        if self > Self::one() {
            Self::one()
        } else if self < -Self::one() {
            -Self::one()
        } else {
            self
        }
    }
}

impl Real for f64 {
    const UNIT_SLACK: f64 = 1e-9;
    const ORTHO_SLACK: f64 = 1e-9;
    const BUCKET: f64 = 1e-7;

    fn from_f64(x: f64) -> f64 {
        x
    }

    fn as_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    const UNIT_SLACK: f32 = 1e-4;
    const ORTHO_SLACK: f32 = 1e-4;
    const BUCKET: f32 = 1e-3;

    fn from_f64(x: f64) -> f32 {
        x as f32
    }

    fn as_f64(self) -> f64 {
        f64::from(self)
    }
}

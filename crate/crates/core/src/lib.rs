//! Quaternionic models for the quotients of `S^2 x S^2` by free cyclic
//! actions of order 4, together with a seeded verification harness.
//!
//! The library provides exact-formula quaternion algebra and the Hopf map
//! ([`quat`]), the spin double cover of `SO(3)` in the basis that sends
//! `sqrt(j)` to the distinguished rotation `T` ([`so3`]), the stratification
//! of `S^2 x S^2` with its angle-normalisation charts ([`sphere_pairs`]),
//! the order-4 actions `f1`, `f5` and the family `f_A` ([`actions`]), the
//! lens-space deck transformations with orbit, covering-degree, descent and
//! fibre-family checks ([`quotients`]), and the check-suite front end with
//! deterministic sampling and machine-readable reports ([`harness`]).
//!
//! All geometry is generic over the scalar through [`Real`]; the `F64`
//! aliases below are the working types of the harness.

pub mod actions;
mod error;
pub mod harness;
pub mod quat;
pub mod quotients;
pub mod real;
pub mod so3;
pub mod sphere_pairs;
mod vec3;

pub use error::{Error, Result};
pub use harness::{
    dump_orbits, run, CheckReport, OrbitTarget, ReportFormat, RunConfig, RunReport, Suite,
    SuiteReport,
};
pub use real::Real;

pub type QuaternionF64 = quat::Quaternion<f64>;
pub type UnitQuaternionF64 = quat::UnitQuaternion<f64>;
pub type ImaginaryUnitF64 = quat::ImaginaryUnit<f64>;
pub type Rotation3F64 = so3::Rotation3<f64>;
pub type SpherePointF64 = sphere_pairs::SpherePoint<f64>;
pub type PairPointF64 = sphere_pairs::PairPoint<f64>;
pub type PerpPairF64 = sphere_pairs::PerpPair<f64>;
pub type ChartPointF64 = sphere_pairs::ChartPoint<f64>;
pub type ActionGeneratorF64 = actions::ActionGenerator<f64>;

pub type QuaternionF32 = quat::Quaternion<f32>;
pub type UnitQuaternionF32 = quat::UnitQuaternion<f32>;
pub type ImaginaryUnitF32 = quat::ImaginaryUnit<f32>;
pub type Rotation3F32 = so3::Rotation3<f32>;
pub type SpherePointF32 = sphere_pairs::SpherePoint<f32>;
pub type PairPointF32 = sphere_pairs::PairPoint<f32>;
pub type PerpPairF32 = sphere_pairs::PerpPair<f32>;
pub type ChartPointF32 = sphere_pairs::ChartPoint<f32>;
pub type ActionGeneratorF32 = actions::ActionGenerator<f32>;

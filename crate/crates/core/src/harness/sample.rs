//! Seeded, reproducible sampling of the spaces under test.
//!
//! All randomness in the crate flows through [`stream`]: a ChaCha8 generator
//! keyed by `(master seed, suite index, check index)`, so every check owns
//! an independent stream and a given seed reproduces every draw bit for bit
//! regardless of which suites run or in what order.

use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;

pub use rand_chacha::ChaCha8Rng;

use crate::quat::{Quaternion, UnitQuaternion};
use crate::real::Real;
use crate::so3::{rotation_to_perp, spin_cover, Rotation3};
use crate::sphere_pairs::{PairPoint, PerpPair, SpherePoint};
use crate::vec3;

/// Name of the derivation scheme, recorded in reports.
pub const RNG_NAME: &str = "chacha8(seed,suite,check)";

/// Deterministic stream for one check of one suite.
pub fn stream(seed: u64, suite_index: u64, check_index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&suite_index.to_le_bytes());
    key[16..24].copy_from_slice(&check_index.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

fn normal<T: Real, R: Rng>(rng: &mut R) -> T {
    T::from_f64(rng.sample(StandardNormal))
}

/// Uniform point of `S^2`: a normalised 3-dimensional standard normal.
pub fn sample_sphere<T: Real, R: Rng>(rng: &mut R) -> SpherePoint<T> {
    loop {
        let v = [normal(rng), normal(rng), normal(rng)];
        let n = vec3::norm(&v);
        if n > T::from_f64(1e-6) {
            return SpherePoint::new_unchecked(vec3::scale(&v, n.recip()));
        }
    }
}

/// Uniform point of `S^3`: a normalised 4-dimensional standard normal.
pub fn sample_s3<T: Real, R: Rng>(rng: &mut R) -> UnitQuaternion<T> {
    loop {
        let q: Quaternion<T> = Quaternion::new(normal(rng), normal(rng), normal(rng), normal(rng));
        let n = q.norm();
        if n > T::from_f64(1e-6) {
            return UnitQuaternion::new_unchecked(q.scale(n.recip()));
        }
    }
}

/// Haar-uniform rotation: the spin cover of a uniform unit quaternion.
pub fn sample_so3<T: Real, R: Rng>(rng: &mut R) -> Rotation3<T> {
    spin_cover(&sample_s3(rng))
}

/// Uniform orthogonal pair: the frame columns of a Haar-uniform rotation.
pub fn sample_perp<T: Real, R: Rng>(rng: &mut R) -> PerpPair<T> {
    rotation_to_perp(&sample_so3(rng))
}

/// Product-uniform point of `S^2 x S^2`.
pub fn sample_pair<T: Real, R: Rng>(rng: &mut R) -> PairPoint<T> {
    let u = sample_sphere(rng);
    let v = sample_sphere(rng);
    PairPoint::new(u, v)
}

/// Raw 4-normal quaternion (not normalised); used for norm identities.
pub fn sample_quaternion<T: Real, R: Rng>(rng: &mut R) -> Quaternion<T> {
    Quaternion::new(normal(rng), normal(rng), normal(rng), normal(rng))
}

/// Uniform element of the circle `S^1_i`: `cos t + i sin t`.
pub fn sample_circle_i<T: Real, R: Rng>(rng: &mut R) -> UnitQuaternion<T> {
    let t = T::from_f64(rng.random::<f64>()) * T::PI() * T::from_f64(2.0);
    UnitQuaternion::new_unchecked(Quaternion::new(t.cos(), t.sin(), T::zero(), T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_independent() {
        let a: Vec<f64> = {
            let mut r = stream(42, 0, 0);
            (0..8).map(|_| r.random()).collect()
        };
        let b: Vec<f64> = {
            let mut r = stream(42, 0, 0);
            (0..8).map(|_| r.random()).collect()
        };
        assert_eq!(a, b);
        let c: Vec<f64> = {
            let mut r = stream(42, 0, 1);
            (0..8).map(|_| r.random()).collect()
        };
        assert_ne!(a, c);
        let d: Vec<f64> = {
            let mut r = stream(43, 0, 0);
            (0..8).map(|_| r.random()).collect()
        };
        assert_ne!(a, d);
    }

    #[test]
    fn samples_lie_on_their_spaces() {
        let mut r = stream(7, 1, 0);
        for _ in 0..200 {
            let u = sample_sphere::<f64, _>(&mut r);
            assert!((vec3::norm(&u.coords()) - 1.0).abs() < 1e-14);
            let w = sample_s3::<f64, _>(&mut r);
            assert!((w.as_quaternion().norm() - 1.0).abs() < 1e-14);
            let p = sample_perp::<f64, _>(&mut r);
            assert!(p.u().dot(&p.v()).abs() < 1e-12);
            let m = sample_so3::<f64, _>(&mut r);
            assert!((m.det() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sphere_sampling_has_no_drift() {
        // mean of 1e5 uniform sphere points stays within the 3-sigma ball
        let mut r = stream(11, 2, 0);
        let mut acc = [0.0f64; 3];
        let n = 100_000;
        for _ in 0..n {
            let u = sample_sphere::<f64, _>(&mut r);
            for (a, x) in acc.iter_mut().zip(u.coords()) {
                *a += x;
            }
        }
        let mean = vec3::scale(&acc, 1.0 / n as f64);
        assert!(vec3::norm(&mean) < 0.02);
    }
}

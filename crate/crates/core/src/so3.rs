//! Rotation matrices, the double cover by unit quaternions, and the
//! identification of `SO(3)` with the space of orthogonal unit-vector pairs.
//!
//! The cover is written in the ordered basis `(j, i, k)` of the imaginary
//! span: `spin_cover(w)` is the matrix of `x -> w^-1 x w` in that basis.
//! This is the unique basis ordering for which the conjugation by
//! `sqrt(j) = (1 + j)/sqrt(2)` comes out as the distinguished rotation `T`
//! (`e1 -> e1, e2 -> e3, e3 -> -e2`); the `spin_cover(sqrt_j) == t_matrix()`
//! test pins the convention. Because the action is by `w^-1 . w`, the cover
//! is an anti-homomorphism: `spin_cover(p q) = spin_cover(q) spin_cover(p)`.

use crate::quat::{ImaginaryUnit, Quaternion, UnitQuaternion};
use crate::real::Real;
use crate::sphere_pairs::{PerpPair, SpherePoint};
use crate::vec3;
use crate::{Error, Result};

/// Special orthogonal 3x3 matrix, stored row major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation3<T> {
    m: [[T; 3]; 3],
}

impl<T: Real> Rotation3<T> {
    /// Validating constructor. Columns that are orthonormal within
    /// [`Real::ORTHO_SLACK`] are repaired by stabilised Gram-Schmidt;
    /// anything worse, or a frame of negative determinant, is rejected.
    pub fn new(rows: [[T; 3]; 3]) -> Result<Self> {
        let raw = Self { m: rows };
        let cols = [raw.col(0), raw.col(1), raw.col(2)];
        for (i, ci) in cols.iter().enumerate() {
            if (vec3::norm(ci) - T::one()).abs() >= T::ORTHO_SLACK {
                return Err(Error::NotRotation);
            }
            for cj in cols.iter().skip(i + 1) {
                if vec3::dot(ci, cj).abs() >= T::ORTHO_SLACK {
                    return Err(Error::NotRotation);
                }
            }
        }
        let q1 = vec3::normalize(&cols[0]);
        let mut q2 = vec3::sub(&cols[1], &vec3::scale(&q1, vec3::dot(&q1, &cols[1])));
        q2 = vec3::normalize(&q2);
        let mut q3 = vec3::sub(&cols[2], &vec3::scale(&q1, vec3::dot(&q1, &cols[2])));
        q3 = vec3::sub(&q3, &vec3::scale(&q2, vec3::dot(&q2, &q3)));
        q3 = vec3::normalize(&q3);
        let repaired = Self::from_columns(q1, q2, q3);
        if repaired.det() < T::zero() {
            return Err(Error::NotRotation);
        }
        Ok(repaired)
    }

    pub(crate) fn from_columns(c1: [T; 3], c2: [T; 3], c3: [T; 3]) -> Self {
        Self {
            m: [
                [c1[0], c2[0], c3[0]],
                [c1[1], c2[1], c3[1]],
                [c1[2], c2[2], c3[2]],
            ],
        }
    }

    pub fn identity() -> Self {
        let (o, z) = (T::one(), T::zero());
        Self {
            m: [[o, z, z], [z, o, z], [z, z, o]],
        }
    }

    pub fn entries(&self) -> &[[T; 3]; 3] {
        &self.m
    }

    pub fn col(&self, j: usize) -> [T; 3] {
        [self.m[0][j], self.m[1][j], self.m[2][j]]
    }

    pub(crate) fn apply_vec(&self, v: &[T; 3]) -> [T; 3] {
        [
            vec3::dot(&self.m[0], v),
            vec3::dot(&self.m[1], v),
            vec3::dot(&self.m[2], v),
        ]
    }

    pub fn apply(&self, v: &SpherePoint<T>) -> SpherePoint<T> {
        SpherePoint::new_unchecked(self.apply_vec(&v.coords()))
    }

    /// Transpose, which is the inverse.
    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    pub fn det(&self) -> T {
        let c = [self.col(0), self.col(1), self.col(2)];
        vec3::dot(&c[0], &vec3::cross(&c[1], &c[2]))
    }

    pub fn trace(&self) -> T {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn frobenius_dist(&self, other: &Self) -> T {
        let mut acc = T::zero();
        for r in 0..3 {
            for c in 0..3 {
                let d = self.m[r][c] - other.m[r][c];
                acc = acc + d * d;
            }
        }
        acc.sqrt()
    }

    pub fn max_entry_dist(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for r in 0..3 {
            for c in 0..3 {
                worst = worst.max((self.m[r][c] - other.m[r][c]).abs());
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.max_entry_dist(other) <= tol
    }
}

impl<T: Real> std::ops::Mul for Rotation3<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::from_columns(
            self.apply_vec(&rhs.col(0)),
            self.apply_vec(&rhs.col(1)),
            self.apply_vec(&rhs.col(2)),
        )
    }
}

/// The rotation `T`: `e1 -> e1, e2 -> e3, e3 -> -e2`. It has order 4.
pub fn t_matrix<T: Real>() -> Rotation3<T> {
    let (o, z) = (T::one(), T::zero());
    Rotation3 {
        m: [[o, z, z], [z, z, -o], [z, o, z]],
    }
}

/// `T^2 = diag(1, -1, -1)`.
pub fn t_squared<T: Real>() -> Rotation3<T> {
    let (o, z) = (T::one(), T::zero());
    Rotation3 {
        m: [[o, z, z], [z, -o, z], [z, z, -o]],
    }
}

/// The double cover `S^3 -> SO(3)`: the matrix of `x -> w^-1 x w` on the
/// imaginary span in the ordered basis `(j, i, k)`.
///
/// `spin_cover(-w) = spin_cover(w)`, and under this convention the map is an
/// anti-homomorphism.
pub fn spin_cover<T: Real>(w: &UnitQuaternion<T>) -> Rotation3<T> {
    let col_j = w.rotate(&ImaginaryUnit::j()).coords_jik();
    let col_i = w.rotate(&ImaginaryUnit::i()).coords_jik();
    let col_k = w.rotate(&ImaginaryUnit::k()).coords_jik();
    Rotation3::from_columns(col_j, col_i, col_k)
}

/// Both preimages `{w, -w}` of a rotation under [`spin_cover`].
///
/// Extraction runs Shepperd's branch selection on the conjugate matrix in
/// the standard `(i, j, k)` basis, which keeps every branch away from the
/// cancellation-prone small pivots.
pub fn lift_rotation<T: Real>(r: &Rotation3<T>) -> (UnitQuaternion<T>, UnitQuaternion<T>) {
    // sigma = P R^T P is the matrix of v -> w v w^-1 in the (i, j, k) basis,
    // where P swaps the first two coordinates.
    let rt = r.transpose();
    let p = |v: [T; 3]| [v[1], v[0], v[2]];
    let cols = [p(rt.col(1)), p(rt.col(0)), p(rt.col(2))];
    let s = Rotation3::from_columns(cols[0], cols[1], cols[2]).m;

    let four = T::from_f64(4.0);
    let trace = s[0][0] + s[1][1] + s[2][2];
    let q = if trace > s[0][0] && trace > s[1][1] && trace > s[2][2] {
        let a = (T::one() + trace).sqrt() * T::from_f64(0.5);
        let f = (four * a).recip();
        Quaternion::new(
            a,
            (s[2][1] - s[1][2]) * f,
            (s[0][2] - s[2][0]) * f,
            (s[1][0] - s[0][1]) * f,
        )
    } else if s[0][0] > s[1][1] && s[0][0] > s[2][2] {
        let b = (T::one() + s[0][0] - s[1][1] - s[2][2])
            .max(T::zero())
            .sqrt()
            * T::from_f64(0.5);
        let f = (four * b).recip();
        Quaternion::new(
            (s[2][1] - s[1][2]) * f,
            b,
            (s[0][1] + s[1][0]) * f,
            (s[0][2] + s[2][0]) * f,
        )
    } else if s[1][1] > s[2][2] {
        let c = (T::one() + s[1][1] - s[0][0] - s[2][2])
            .max(T::zero())
            .sqrt()
            * T::from_f64(0.5);
        let f = (four * c).recip();
        Quaternion::new(
            (s[0][2] - s[2][0]) * f,
            (s[0][1] + s[1][0]) * f,
            c,
            (s[1][2] + s[2][1]) * f,
        )
    } else {
        let d = (T::one() + s[2][2] - s[0][0] - s[1][1])
            .max(T::zero())
            .sqrt()
            * T::from_f64(0.5);
        let f = (four * d).recip();
        Quaternion::new(
            (s[1][0] - s[0][1]) * f,
            (s[0][2] + s[2][0]) * f,
            (s[1][2] + s[2][1]) * f,
            d,
        )
    };
    let w = UnitQuaternion::new_unchecked(q.scale(q.norm().recip()));
    (w, -w)
}

/// The identification `perp -> SO(3)` sending `(u, v)` to the matrix with
/// columns `(u x v, u, v)`, i.e. the rotation taking `(e1, e2, e3)` to the
/// oriented frame `(u x v, u, v)`.
pub fn perp_to_rotation<T: Real>(p: &PerpPair<T>) -> Rotation3<T> {
    let u = p.u().coords();
    let v = p.v().coords();
    Rotation3::from_columns(vec3::cross(&u, &v), u, v)
}

/// Inverse identification: the second and third columns of the rotation.
pub fn rotation_to_perp<T: Real>(r: &Rotation3<T>) -> PerpPair<T> {
    PerpPair::new_unchecked(r.col(1), r.col(2))
}

/// Frobenius norm of `R^2 - I`. Zero exactly on the rotations equal to
/// their own inverse; a rotation by angle `phi` scores
/// `sqrt(4 (1 - cos 2 phi))`.
pub fn involution_defect<T: Real>(r: &Rotation3<T>) -> T {
    (*r * *r).frobenius_dist(&Rotation3::identity())
}

/// Constant-speed path from `start` to `end` in `SO(3)`, realised by lifting
/// both endpoints to `S^3`, interpolating along the shorter great circle and
/// projecting back through [`spin_cover`].
///
/// The lift of `start` is fixed by [`UnitQuaternion::canonical_sign`]; the
/// lift of `end` is the one with nonnegative inner product against it, with
/// an exact tie broken by the canonical sign again. The choice is
/// deterministic, so repeated runs sample the identical path.
pub fn geodesic<T: Real>(start: &Rotation3<T>, end: &Rotation3<T>, t: T) -> Result<Rotation3<T>> {
    if t < T::zero() || t > T::one() {
        return Err(Error::OutOfRange {
            name: "t",
            value: t.as_f64(),
        });
    }
    let w0 = lift_rotation(start).0.canonical_sign();
    let w1_raw = lift_rotation(end).0;
    let d0 = w0.dot(&w1_raw);
    let w1 = if d0 > T::zero() {
        w1_raw
    } else if d0 < T::zero() {
        -w1_raw
    } else {
        w1_raw.canonical_sign()
    };
    let w = slerp(&w0, &w1, t)?;
    Ok(spin_cover(&w))
}

fn slerp<T: Real>(
    w0: &UnitQuaternion<T>,
    w1: &UnitQuaternion<T>,
    t: T,
) -> Result<UnitQuaternion<T>> {
    let dot = w0.dot(w1).clamp_unit();
    if dot < T::from_f64(-0.999_999) {
        // opposite lifts leave the great circle undetermined
        return Err(Error::OutOfRange {
            name: "lift inner product",
            value: dot.as_f64(),
        });
    }
    let p0 = *w0.as_quaternion();
    let p1 = *w1.as_quaternion();
    let combined = if dot > T::from_f64(1.0 - 1e-12) {
        // endpoints nearly coincide; linear blend is exact to round-off
        p0.scale(T::one() - t) + p1.scale(t)
    } else {
        let omega = dot.acos();
        let sin_omega = omega.sin();
        let c0 = ((T::one() - t) * omega).sin() / sin_omega;
        let c1 = (t * omega).sin() / sin_omega;
        p0.scale(c0) + p1.scale(c1)
    };
    Ok(UnitQuaternion::new_unchecked(
        combined.scale(combined.norm().recip()),
    ))
}

//! Quaternion algebra over H and its action on the imaginary sphere.
//!
//! Coefficients live in the ordered basis `(1, i, j, k)`, so a value holds
//! `a + bi + cj + dk`. The unit sphere of the imaginary span `I = <i, j, k>`
//! is the working model of `S^2`, and unit quaternions act on it on the
//! right by conjugation, `x -> w^-1 x w`. The Hopf map and the distinguished
//! element `sqrt(j) = (1 + j) / sqrt(2)` are provided here; everything built
//! on top (the double cover, lens-space decks, descent) reuses these
//! conventions unchanged.

use std::ops::{Add, Mul, Neg, Sub};

use crate::real::Real;
use crate::{Error, Result};

/// Quaternion `a + bi + cj + dk`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Real> Quaternion<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn norm_sq(&self) -> T {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a, -self.b, -self.c, -self.d)
    }

    /// Multiplicative inverse, `conj(q) / |q|^2`.
    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sq();
        if n2 <= T::zero() {
            return Err(Error::ZeroQuaternion);
        }
        Ok(self.conjugate().scale(n2.recip()))
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Euclidean inner product of the coefficient vectors.
    pub fn dot(&self, other: &Self) -> T {
        self.a * other.a + self.b * other.b + self.c * other.c + self.d * other.d
    }

    pub fn dist(&self, other: &Self) -> T {
        (*self - *other).norm()
    }

    /// Componentwise comparison; the only equality used on quaternions.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (self.a - other.a).abs() <= tol
            && (self.b - other.b).abs() <= tol
            && (self.c - other.c).abs() <= tol
            && (self.d - other.d).abs() <= tol
    }

    pub fn coords(&self) -> [T; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

impl<T: Real> Mul for Quaternion<T> {
    type Output = Self;

    /// Hamilton product.
    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
        )
    }
}

impl<T: Real> Add for Quaternion<T> {
    type Output = Self;

    fn add(self, q: Self) -> Self {
        Self::new(self.a + q.a, self.b + q.b, self.c + q.c, self.d + q.d)
    }
}

impl<T: Real> Sub for Quaternion<T> {
    type Output = Self;

    fn sub(self, q: Self) -> Self {
        Self::new(self.a - q.a, self.b - q.b, self.c - q.c, self.d - q.d)
    }
}

impl<T: Real> Neg for Quaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

/// Element of `S^3`, the unit sphere in H.
///
/// The constructor renormalises inputs whose norm is within
/// [`Real::UNIT_SLACK`] of 1 and rejects anything further out.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitQuaternion<T>(Quaternion<T>);

impl<T: Real> UnitQuaternion<T> {
    pub fn new(q: Quaternion<T>) -> Result<Self> {
        let n = q.norm();
        if (n - T::one()).abs() < T::UNIT_SLACK {
            Ok(Self(q.scale(n.recip())))
        } else {
            Err(Error::NotUnit { norm: n.as_f64() })
        }
    }

    pub(crate) fn new_unchecked(q: Quaternion<T>) -> Self {
        debug_assert!((q.norm() - T::one()).abs() < T::UNIT_SLACK);
        Self(q)
    }

    pub fn one() -> Self {
        Self(Quaternion::one())
    }

    pub fn i() -> Self {
        Self(Quaternion::i())
    }

    pub fn j() -> Self {
        Self(Quaternion::j())
    }

    pub fn k() -> Self {
        Self(Quaternion::k())
    }

    /// `(1 + j) / sqrt(2)`, a square root of `j`.
    pub fn sqrt_j() -> Self {
        let s = T::FRAC_1_SQRT_2();
        Self(Quaternion::new(s, T::zero(), s, T::zero()))
    }

    pub fn as_quaternion(&self) -> &Quaternion<T> {
        &self.0
    }

    /// Conjugate, which for unit quaternions is the inverse.
    pub fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    pub fn inverse(&self) -> Self {
        self.conjugate()
    }

    /// Right conjugation action on the unit sphere of `I`: `x -> w^-1 x w`.
    ///
    /// This is an isometry of the imaginary sphere; the tiny real part
    /// produced by round-off is dropped.
    pub fn rotate(&self, x: &ImaginaryUnit<T>) -> ImaginaryUnit<T> {
        let y = self.conjugate().0 * x.as_quaternion() * self.0;
        ImaginaryUnit::new_unchecked(y.b, y.c, y.d)
    }

    /// Hopf map `w -> w^-1 i w`.
    pub fn hopf(&self) -> ImaginaryUnit<T> {
        self.rotate(&ImaginaryUnit::i())
    }

    pub fn dot(&self, other: &Self) -> T {
        self.0.dot(&other.0)
    }

    pub fn dist(&self, other: &Self) -> T {
        self.0.dist(&other.0)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    /// The representative of `{w, -w}` whose first nonzero coefficient is
    /// positive. Used wherever a deterministic choice of lift is needed.
    pub fn canonical_sign(&self) -> Self {
        for x in self.0.coords() {
            if x > T::zero() {
                return *self;
            }
            if x < T::zero() {
                return -*self;
            }
        }
        *self
    }
}

impl<T: Real> Mul for UnitQuaternion<T> {
    type Output = Self;

    // Norm multiplicativity keeps short products unit to round-off; no
    // renormalisation here.
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl<T: Real> Neg for UnitQuaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self(-self.0)
    }
}

/// Unit vector in the imaginary span `I`; the model of a point of `S^2`.
///
/// The real part is structurally zero: only the `(i, j, k)` coefficients are
/// stored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImaginaryUnit<T> {
    b: T,
    c: T,
    d: T,
}

impl<T: Real> ImaginaryUnit<T> {
    pub fn new(b: T, c: T, d: T) -> Result<Self> {
        let n = (b * b + c * c + d * d).sqrt();
        if (n - T::one()).abs() < T::UNIT_SLACK {
            let s = n.recip();
            Ok(Self {
                b: b * s,
                c: c * s,
                d: d * s,
            })
        } else {
            Err(Error::NotUnit { norm: n.as_f64() })
        }
    }

    pub(crate) fn new_unchecked(b: T, c: T, d: T) -> Self {
        debug_assert!(((b * b + c * c + d * d).sqrt() - T::one()).abs() < T::UNIT_SLACK);
        Self { b, c, d }
    }

    pub fn i() -> Self {
        Self {
            b: T::one(),
            c: T::zero(),
            d: T::zero(),
        }
    }

    pub fn j() -> Self {
        Self {
            b: T::zero(),
            c: T::one(),
            d: T::zero(),
        }
    }

    pub fn k() -> Self {
        Self {
            b: T::zero(),
            c: T::zero(),
            d: T::one(),
        }
    }

    pub fn as_quaternion(&self) -> Quaternion<T> {
        Quaternion::new(T::zero(), self.b, self.c, self.d)
    }

    /// Coefficients on `(i, j, k)`.
    pub fn coords_ijk(&self) -> [T; 3] {
        [self.b, self.c, self.d]
    }

    /// Coordinates in the ordered basis `(j, i, k)` of `I`, the basis in
    /// which the double cover is written.
    pub fn coords_jik(&self) -> [T; 3] {
        [self.c, self.b, self.d]
    }

    pub fn dot(&self, other: &Self) -> T {
        self.b * other.b + self.c * other.c + self.d * other.d
    }

    pub fn dist(&self, other: &Self) -> T {
        let db = self.b - other.b;
        let dc = self.c - other.c;
        let dd = self.d - other.d;
        (db * db + dc * dc + dd * dd).sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (self.b - other.b).abs() <= tol
            && (self.c - other.c).abs() <= tol
            && (self.d - other.d).abs() <= tol
    }
}

impl<T: Real> Neg for ImaginaryUnit<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

/// Largest deviation in the pair of identities
/// `(jw)^-1 i (jw) = -(w^-1 i w)` and `(jw)^-1 k (jw) = -(w^-1 k w)`,
/// which say that left multiplication by `j` descends to the antipodal map
/// on `S^2` and on the unit tangent bundle.
pub fn antipodal_cover_error<T: Real>(w: &UnitQuaternion<T>) -> T {
    let jw = UnitQuaternion::j() * *w;
    let err_i = jw
        .rotate(&ImaginaryUnit::i())
        .dist(&-w.rotate(&ImaginaryUnit::i()));
    let err_k = jw
        .rotate(&ImaginaryUnit::k())
        .dist(&-w.rotate(&ImaginaryUnit::k()));
    err_i.max(err_k)
}

/// True when both antipodal identities hold within `tol`.
pub fn antipodal_cover_check<T: Real>(w: &UnitQuaternion<T>, tol: T) -> bool {
    antipodal_cover_error(w) < tol
}

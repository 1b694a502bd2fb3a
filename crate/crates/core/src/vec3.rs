//! Minimal fixed-size vector helpers shared by the geometry modules.

use crate::real::Real;

pub(crate) fn dot<T: Real>(x: &[T; 3], y: &[T; 3]) -> T {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

pub(crate) fn cross<T: Real>(x: &[T; 3], y: &[T; 3]) -> [T; 3] {
    [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ]
}

pub(crate) fn add<T: Real>(x: &[T; 3], y: &[T; 3]) -> [T; 3] {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2]]
}

pub(crate) fn sub<T: Real>(x: &[T; 3], y: &[T; 3]) -> [T; 3] {
    [x[0] - y[0], x[1] - y[1], x[2] - y[2]]
}

pub(crate) fn neg<T: Real>(x: &[T; 3]) -> [T; 3] {
    [-x[0], -x[1], -x[2]]
}

pub(crate) fn scale<T: Real>(x: &[T; 3], s: T) -> [T; 3] {
    [x[0] * s, x[1] * s, x[2] * s]
}

pub(crate) fn norm<T: Real>(x: &[T; 3]) -> T {
    dot(x, x).sqrt()
}

pub(crate) fn dist<T: Real>(x: &[T; 3], y: &[T; 3]) -> T {
    norm(&sub(x, y))
}

/// Normalises `x`; the caller guarantees `x` is bounded away from zero.
pub(crate) fn normalize<T: Real>(x: &[T; 3]) -> [T; 3] {
    scale(x, norm(x).recip())
}

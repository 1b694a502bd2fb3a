//! The order-4 self-maps of `S^2 x S^2` and the one-parameter family
//! interpolating between them.
//!
//! `f1` sends `(u, v) -> (-v, u)`, `f5` sends `(u, v) -> (-T^2 v, T^2 u)`,
//! and for any rotation `A` the map `f_A` sends `(u, v) -> (-A v, A^-1 u)`.
//! All three square to the simultaneous antipodal map, so they have order 4,
//! and `f_A` displaces every point by exactly 2 in the ambient `R^6` metric,
//! which certifies freeness of the whole family at once. The intertwiner
//! `g_A (u, v) = (u, A^-1 v)` conjugates `f1` into `f_A` and is the explicit
//! witness used to identify the quotients along a path of rotations.

use rand::Rng;

use crate::harness::sample;
use crate::real::Real;
use crate::so3::{t_squared, Rotation3};
use crate::sphere_pairs::PairPoint;
use crate::{Error, Result};

/// `(u, v) -> (-v, u)`.
pub fn f1<T: Real>(p: &PairPoint<T>) -> PairPoint<T> {
    PairPoint::new(-p.v, p.u)
}

/// `(u, v) -> (-T^2 v, T^2 u)`.
pub fn f5<T: Real>(p: &PairPoint<T>) -> PairPoint<T> {
    let t2 = t_squared();
    PairPoint::new(-t2.apply(&p.v), t2.apply(&p.u))
}

/// `(u, v) -> (-A v, A^-1 u)`; `A^-1` is taken as the transpose.
pub fn fa<T: Real>(a: &Rotation3<T>, p: &PairPoint<T>) -> PairPoint<T> {
    PairPoint::new(-a.apply(&p.v), a.transpose().apply(&p.u))
}

/// Ambient `R^6` distance between `p` and `f_A(p)`.
///
/// The identity `|u + Av|^2 + |v - A^-1 u|^2 = 4` makes this exactly 2 for
/// every rotation and every point, so no power `f_A^k` with `k` in `{1,2,3}`
/// has a fixed point anywhere.
pub fn displacement<T: Real>(a: &Rotation3<T>, p: &PairPoint<T>) -> T {
    p.dist(&fa(a, p))
}

/// Generator of one of the cyclic actions on `S^2 x S^2`.
#[derive(Clone, Debug)]
pub enum ActionGenerator<T> {
    F1,
    F5,
    FA(Rotation3<T>),
}

impl<T: Real> ActionGenerator<T> {
    pub fn apply(&self, p: &PairPoint<T>) -> PairPoint<T> {
        match self {
            ActionGenerator::F1 => f1(p),
            ActionGenerator::F5 => f5(p),
            ActionGenerator::FA(a) => fa(a, p),
        }
    }

    /// `g^k(p)`.
    pub fn apply_iter(&self, p: &PairPoint<T>, k: usize) -> PairPoint<T> {
        let mut out = *p;
        for _ in 0..k {
            out = self.apply(&out);
        }
        out
    }

    /// Inverse, using that every generator has order 4.
    pub fn apply_inverse(&self, p: &PairPoint<T>) -> PairPoint<T> {
        self.apply_iter(p, 3)
    }

    pub fn order(&self) -> usize {
        4
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ActionGenerator::F1 => "f1",
            ActionGenerator::F5 => "f5",
            ActionGenerator::FA(_) => "fA",
        }
    }
}

/// Which of the two named actions is meant, `f1` or `f5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ell {
    One,
    Five,
}

impl Ell {
    pub fn generator<T: Real>(&self) -> ActionGenerator<T> {
        match self {
            Ell::One => ActionGenerator::F1,
            Ell::Five => ActionGenerator::F5,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Ell::One => "f1",
            Ell::Five => "f5",
        }
    }

    pub fn both() -> [Ell; 2] {
        [Ell::One, Ell::Five]
    }
}

impl std::fmt::Display for Ell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Smallest `k <= max_order` with `g^k` equal to the identity on every probe
/// point within `tol`.
pub(crate) fn smallest_order<T: Real, P, G>(
    g: G,
    probes: &[P],
    max_order: usize,
    tol: T,
    dist: impl Fn(&P, &P) -> T,
) -> Result<usize>
where
    P: Clone,
    G: Fn(&P) -> P,
{
    let mut iterates: Vec<P> = probes.to_vec();
    for k in 1..=max_order {
        let mut worst = T::zero();
        for (it, start) in iterates.iter_mut().zip(probes) {
            *it = g(it);
            worst = worst.max(dist(it, start));
        }
        if worst < tol {
            return Ok(k);
        }
    }
    Err(Error::NotPeriodic {
        max_order,
        tol: tol.as_f64(),
    })
}

/// Order of the action generator, probed on `samples` random points.
///
/// The search is capped at 4: each generator is proven order 4, so a larger
/// answer signals an implementation bug rather than new mathematics.
pub fn order_of<T: Real, R: Rng>(
    g: &ActionGenerator<T>,
    rng: &mut R,
    samples: usize,
    tol: T,
) -> Result<usize> {
    let probes: Vec<PairPoint<T>> = (0..samples.max(1))
        .map(|_| sample::sample_pair(rng))
        .collect();
    smallest_order(|p| g.apply(p), &probes, 4, tol, |a, b| a.dist(b))
}

/// The intertwiner `g_A (u, v) = (u, A^-1 v)`.
///
/// It satisfies `g_A . f1 = f_A . g_A` identically, is invertible with
/// inverse `(u, v) -> (u, A v)`, and is the identity at `A = Id`, so it maps
/// `f1`-orbits bijectively onto `f_A`-orbits.
#[derive(Clone, Debug)]
pub struct Intertwiner<T> {
    a: Rotation3<T>,
}

impl<T: Real> Intertwiner<T> {
    pub fn new(a: Rotation3<T>) -> Self {
        Self { a }
    }

    pub fn rotation(&self) -> &Rotation3<T> {
        &self.a
    }

    pub fn apply(&self, p: &PairPoint<T>) -> PairPoint<T> {
        PairPoint::new(p.u, self.a.transpose().apply(&p.v))
    }

    pub fn apply_inverse(&self, p: &PairPoint<T>) -> PairPoint<T> {
        PairPoint::new(p.u, self.a.apply(&p.v))
    }
}

/// Convenience form of [`Intertwiner::apply`].
pub fn intertwine<T: Real>(a: &Rotation3<T>, p: &PairPoint<T>) -> PairPoint<T> {
    Intertwiner::new(*a).apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::so3::geodesic;
    use crate::sphere_pairs::SpherePoint;

    type PP = PairPoint<f64>;
    type SP = SpherePoint<f64>;

    fn p12() -> PP {
        PP::new(SP::e1(), SP::e2())
    }

    fn sample_points(seed: u64, n: usize) -> Vec<PP> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..n).map(|_| sample::sample_pair(&mut rng)).collect()
    }

    #[test]
    fn f1_examples() {
        let q = f1(&p12());
        assert!(q.approx_eq(&PP::new(-SP::e2(), SP::e1()), 0.0));
        for p in sample_points(11, 50) {
            assert!(f1(&f1(&p)).approx_eq(&p.antipodal(), 0.0));
            assert!(f1(&f1(&f1(&f1(&p)))).approx_eq(&p, 0.0));
        }
    }

    #[test]
    fn f5_examples() {
        // -T^2 e2 = e2 and T^2 e1 = e1
        assert!(f5(&p12()).approx_eq(&PP::new(SP::e2(), SP::e1()), 0.0));
        for p in sample_points(12, 50) {
            assert!(f5(&f5(&p)).approx_eq(&p.antipodal(), 0.0));
            assert!(f5(&f5(&f5(&f5(&p)))).approx_eq(&p, 0.0));
            // f1^2 = f5^2 pointwise
            assert!(f5(&f5(&p)).approx_eq(&f1(&f1(&p)), 0.0));
        }
    }

    #[test]
    fn fa_specialises_to_f1_and_f5() {
        let id = Rotation3::identity();
        let t2 = t_squared::<f64>();
        for p in sample_points(13, 100) {
            assert!(fa(&id, &p).approx_eq(&f1(&p), 0.0));
            assert!(fa(&t2, &p).approx_eq(&f5(&p), 0.0));
        }
    }

    #[test]
    fn fa_squares_to_antipodal_for_generic_rotation() {
        let a = geodesic(&Rotation3::identity(), &t_squared(), 0.37).unwrap();
        for p in sample_points(14, 100) {
            let twice = fa(&a, &fa(&a, &p));
            assert!(twice.approx_eq(&p.antipodal(), 1e-14));
        }
    }

    #[test]
    fn displacement_is_exactly_two() {
        assert!((displacement(&Rotation3::identity(), &p12()) - 2.0).abs() < 1e-15);
        let a = geodesic(&Rotation3::identity(), &t_squared(), 0.81).unwrap();
        for p in sample_points(15, 200) {
            assert!((displacement(&a, &p) - 2.0).abs() < 1e-13);
            assert!((displacement(&t_squared(), &p) - 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn orders_are_four() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        assert_eq!(
            order_of(&ActionGenerator::F1, &mut rng, 100, 1e-12).unwrap(),
            4
        );
        assert_eq!(
            order_of(&ActionGenerator::F5, &mut rng, 100, 1e-12).unwrap(),
            4
        );
        let a = geodesic(&Rotation3::identity(), &t_squared(), 0.63).unwrap();
        assert_eq!(
            order_of(&ActionGenerator::FA(a), &mut rng, 100, 1e-12).unwrap(),
            4
        );
    }

    #[test]
    fn smallest_order_rejects_aperiodic_maps() {
        // rotation by 2 pi / 5 in the plane is order 5, beyond the cap
        let step = |p: &[f64; 2]| {
            let (s, c) = (0.4 * std::f64::consts::PI).sin_cos();
            [c * p[0] - s * p[1], s * p[0] + c * p[1]]
        };
        let probes = vec![[1.0, 0.0]];
        let err = smallest_order(step, &probes, 4, 1e-9, |a, b| {
            ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
        });
        assert!(matches!(err, Err(Error::NotPeriodic { .. })));
    }

    #[test]
    fn intertwiner_examples_and_equivariance() {
        let id = Intertwiner::new(Rotation3::identity());
        assert!(id.apply(&p12()).approx_eq(&p12(), 0.0));
        let g = Intertwiner::new(t_squared());
        assert!(g
            .apply(&p12())
            .approx_eq(&PP::new(SP::e1(), -SP::e2()), 0.0));
        let a = geodesic(&Rotation3::identity(), &t_squared(), 0.29).unwrap();
        let ga = Intertwiner::new(a);
        for p in sample_points(16, 100) {
            let lhs = ga.apply(&f1(&p));
            let rhs = fa(&a, &ga.apply(&p));
            assert!(lhs.approx_eq(&rhs, 1e-14));
            assert!(ga.apply_inverse(&ga.apply(&p)).approx_eq(&p, 1e-14));
        }
    }
}

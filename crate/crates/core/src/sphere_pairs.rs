//! Points of `S^2 x S^2`, the stratification by the angle between the two
//! factors, and the angle-normalisation charts.
//!
//! A pair `(u, v)` of unit vectors is classified by the angle `theta`
//! between them: the diagonal (`theta = 0`), the antidiagonal (`theta =
//! pi`), the orthogonal pairs (`theta = pi/2`), and the open acute and
//! obtuse sectors in between. Each open sector is identified with
//! `(0,1) x perp` by renormalising the angle and rotating `u`, `v` apart in
//! their own plane until they are orthogonal, keeping the barycentre
//! `(u + v)/|u + v|` fixed; the obtuse identification is orientation
//! reversing so that folding the two charts together is equivariant for the
//! order-4 actions defined in [`crate::actions`].

use crate::real::Real;
use crate::vec3;
use crate::{Error, Result};

/// Unit vector in `R^3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint<T>([T; 3]);

impl<T: Real> SpherePoint<T> {
    pub fn new(coords: [T; 3]) -> Result<Self> {
        let n = vec3::norm(&coords);
        if (n - T::one()).abs() < T::UNIT_SLACK {
            Ok(Self(vec3::scale(&coords, n.recip())))
        } else {
            Err(Error::NotUnit { norm: n.as_f64() })
        }
    }

    pub(crate) fn new_unchecked(coords: [T; 3]) -> Self {
        debug_assert!((vec3::norm(&coords) - T::one()).abs() < T::UNIT_SLACK);
        Self(coords)
    }

    pub fn e1() -> Self {
        Self([T::one(), T::zero(), T::zero()])
    }

    pub fn e2() -> Self {
        Self([T::zero(), T::one(), T::zero()])
    }

    pub fn e3() -> Self {
        Self([T::zero(), T::zero(), T::one()])
    }

    pub fn coords(&self) -> [T; 3] {
        self.0
    }

    pub fn dot(&self, other: &Self) -> T {
        vec3::dot(&self.0, &other.0)
    }

    pub fn dist(&self, other: &Self) -> T {
        vec3::dist(&self.0, &other.0)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dist(other) <= tol
    }
}

impl<T: Real> std::ops::Neg for SpherePoint<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self(vec3::neg(&self.0))
    }
}

/// Point of `S^2 x S^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairPoint<T> {
    pub u: SpherePoint<T>,
    pub v: SpherePoint<T>,
}

impl<T: Real> PairPoint<T> {
    pub fn new(u: SpherePoint<T>, v: SpherePoint<T>) -> Self {
        Self { u, v }
    }

    /// `(-u, -v)`.
    pub fn antipodal(&self) -> Self {
        Self::new(-self.u, -self.v)
    }

    /// Ambient `R^6` distance.
    pub fn dist(&self, other: &Self) -> T {
        let du = self.u.dist(&other.u);
        let dv = self.v.dist(&other.v);
        (du * du + dv * dv).sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dist(other) <= tol
    }
}

/// Pair of orthogonal unit vectors; the space called `perp`.
///
/// The constructor repairs an orthogonality defect below
/// [`Real::ORTHO_SLACK`] by Gram-Schmidt on the second vector and rejects
/// anything worse.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PerpPair<T> {
    u: SpherePoint<T>,
    v: SpherePoint<T>,
}

impl<T: Real> PerpPair<T> {
    pub fn new(u: SpherePoint<T>, v: SpherePoint<T>) -> Result<Self> {
        let dot = u.dot(&v);
        if dot.abs() >= T::ORTHO_SLACK {
            return Err(Error::NotOrthogonal { dot: dot.as_f64() });
        }
        let corrected = vec3::sub(&v.coords(), &vec3::scale(&u.coords(), dot));
        Ok(Self {
            u,
            v: SpherePoint::new_unchecked(vec3::normalize(&corrected)),
        })
    }

    pub(crate) fn new_unchecked(u: [T; 3], v: [T; 3]) -> Self {
        debug_assert!(vec3::dot(&u, &v).abs() < T::ORTHO_SLACK);
        Self {
            u: SpherePoint::new_unchecked(u),
            v: SpherePoint::new_unchecked(v),
        }
    }

    pub fn from_pair(p: &PairPoint<T>) -> Result<Self> {
        Self::new(p.u, p.v)
    }

    pub fn u(&self) -> SpherePoint<T> {
        self.u
    }

    pub fn v(&self) -> SpherePoint<T> {
        self.v
    }

    pub fn as_pair(&self) -> PairPoint<T> {
        PairPoint::new(self.u, self.v)
    }

    pub fn dist(&self, other: &Self) -> T {
        self.as_pair().dist(&other.as_pair())
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dist(other) <= tol
    }
}

/// Stratum of `S^2 x S^2` a pair belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StratumLabel {
    Diagonal,
    Antidiagonal,
    Perp,
    Acute,
    Obtuse,
}

impl StratumLabel {
    pub fn name(&self) -> &'static str {
        match self {
            StratumLabel::Diagonal => "diagonal",
            StratumLabel::Antidiagonal => "antidiagonal",
            StratumLabel::Perp => "perp",
            StratumLabel::Acute => "acute",
            StratumLabel::Obtuse => "obtuse",
        }
    }
}

impl std::fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the two open sectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sector {
    Acute,
    Obtuse,
}

/// Point of a normalised cylinder chart `(0,1) x perp`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChartPoint<T> {
    t: T,
    orthopair: PerpPair<T>,
}

impl<T: Real> ChartPoint<T> {
    /// Requires `0 < t < 1`; the charts degenerate at the boundary.
    pub fn new(t: T, orthopair: PerpPair<T>) -> Result<Self> {
        if t <= T::zero() || t >= T::one() {
            return Err(Error::OutOfRange {
                name: "t",
                value: t.as_f64(),
            });
        }
        Ok(Self { t, orthopair })
    }

    pub fn t(&self) -> T {
        self.t
    }

    pub fn orthopair(&self) -> &PerpPair<T> {
        &self.orthopair
    }
}

/// Stratum of `p` at tolerance `tol`: diagonal if `|u - v| < tol`,
/// antidiagonal if `|u + v| < tol`, orthogonal if `|u . v| < tol`, otherwise
/// acute or obtuse by the sign of `u . v`.
pub fn classify<T: Real>(p: &PairPoint<T>, tol: T) -> StratumLabel {
    let (u, v) = (p.u.coords(), p.v.coords());
    if vec3::dist(&u, &v) < tol {
        StratumLabel::Diagonal
    } else if vec3::norm(&vec3::add(&u, &v)) < tol {
        StratumLabel::Antidiagonal
    } else {
        let dot = vec3::dot(&u, &v);
        if dot.abs() < tol {
            StratumLabel::Perp
        } else if dot > T::zero() {
            StratumLabel::Acute
        } else {
            StratumLabel::Obtuse
        }
    }
}

/// [`classify`] at the default tolerance [`Real::ORTHO_SLACK`].
pub fn classify_default<T: Real>(p: &PairPoint<T>) -> StratumLabel {
    classify(p, T::ORTHO_SLACK)
}

/// Angle between the members of a pair, computed as
/// `2 atan2(|u - v|, |u + v|)`, which stays accurate near both the diagonal
/// and the antidiagonal where `acos(u . v)` cancels catastrophically.
fn angle_between<T: Real>(p: &PairPoint<T>) -> T {
    let (u, v) = (p.u.coords(), p.v.coords());
    let chord = vec3::norm(&vec3::sub(&u, &v));
    let sum = vec3::norm(&vec3::add(&u, &v));
    (T::one() + T::one()) * chord.atan2(sum)
}

/// Midline frame of a non-degenerate pair: the unit barycentre `m` along
/// `u + v` and the unit separation direction `d` along `v - u`.
fn midline_frame<T: Real>(p: &PairPoint<T>) -> ([T; 3], [T; 3]) {
    let (u, v) = (p.u.coords(), p.v.coords());
    let m = vec3::normalize(&vec3::add(&u, &v));
    let d = vec3::normalize(&vec3::sub(&v, &u));
    (m, d)
}

fn orthopair_of_frame<T: Real>(m: &[T; 3], d: &[T; 3]) -> PerpPair<T> {
    let s = T::FRAC_1_SQRT_2();
    let up = vec3::scale(&vec3::sub(m, d), s);
    let vp = vec3::scale(&vec3::add(m, d), s);
    PerpPair::new_unchecked(up, vp)
}

fn chart_at<T: Real>(p: &PairPoint<T>, sector: Sector) -> ChartPoint<T> {
    let theta = angle_between(p);
    let t = match sector {
        Sector::Acute => theta / T::FRAC_PI_2(),
        Sector::Obtuse => (T::PI() - theta) / T::FRAC_PI_2(),
    };
    let (m, d) = midline_frame(p);
    ChartPoint {
        t,
        orthopair: orthopair_of_frame(&m, &d),
    }
}

/// Chart `A -> (0,1) x perp` on the acute sector: `t = 2 theta / pi` and the
/// orthopair obtained by opening the angle to a right angle about the
/// barycentre.
pub fn acute_chart<T: Real>(p: &PairPoint<T>) -> Result<ChartPoint<T>> {
    match classify_default(p) {
        StratumLabel::Acute => Ok(chart_at(p, Sector::Acute)),
        other => Err(Error::WrongStratum {
            expected: StratumLabel::Acute.name(),
            found: other.name(),
        }),
    }
}

/// Chart `O -> (0,1) x perp` on the obtuse sector, orientation reversing in
/// the angle: `t = 2 (pi - theta) / pi`.
pub fn obtuse_chart<T: Real>(p: &PairPoint<T>) -> Result<ChartPoint<T>> {
    match classify_default(p) {
        StratumLabel::Obtuse => Ok(chart_at(p, Sector::Obtuse)),
        other => Err(Error::WrongStratum {
            expected: StratumLabel::Obtuse.name(),
            found: other.name(),
        }),
    }
}

/// Closes the chart: rebuilds the pair at angle `theta` from an orthopair,
/// tilting `u` and `v` towards each other about the shared barycentre.
pub(crate) fn embed_at_angle<T: Real>(orthopair: &PerpPair<T>, theta: T) -> PairPoint<T> {
    let s = T::FRAC_1_SQRT_2();
    let (up, vp) = (orthopair.u().coords(), orthopair.v().coords());
    let m = vec3::scale(&vec3::add(&up, &vp), s);
    let d = vec3::scale(&vec3::sub(&vp, &up), s);
    let half = theta / (T::one() + T::one());
    let (cos, sin) = (half.cos(), half.sin());
    let u = vec3::sub(&vec3::scale(&m, cos), &vec3::scale(&d, sin));
    let v = vec3::add(&vec3::scale(&m, cos), &vec3::scale(&d, sin));
    PairPoint::new(SpherePoint::new_unchecked(u), SpherePoint::new_unchecked(v))
}

/// Inverse of [`acute_chart`] / [`obtuse_chart`] for the requested sector.
pub fn chart_inverse<T: Real>(c: &ChartPoint<T>, sector: Sector) -> PairPoint<T> {
    let theta = match sector {
        Sector::Acute => c.t * T::FRAC_PI_2(),
        Sector::Obtuse => T::PI() - c.t * T::FRAC_PI_2(),
    };
    embed_at_angle(&c.orthopair, theta)
}

/// Folds the two charts into a single map `A u O -> (0,1) x perp`.
pub fn folding_map<T: Real>(p: &PairPoint<T>) -> Result<ChartPoint<T>> {
    match classify_default(p) {
        StratumLabel::Acute => Ok(chart_at(p, Sector::Acute)),
        StratumLabel::Obtuse => Ok(chart_at(p, Sector::Obtuse)),
        other => Err(Error::WrongStratum {
            expected: "acute or obtuse",
            found: other.name(),
        }),
    }
}

/// `(u + v) / |u + v|` for an orthogonal pair, i.e. `(u + v) / sqrt(2)`.
pub fn barycentre<T: Real>(p: &PerpPair<T>) -> SpherePoint<T> {
    SpherePoint::new_unchecked(vec3::normalize(&vec3::add(
        &p.u().coords(),
        &p.v().coords(),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    type SP = SpherePoint<f64>;
    type PP = PairPoint<f64>;

    fn pair(u: [f64; 3], v: [f64; 3]) -> PP {
        PP::new(SP::new(u).unwrap(), SP::new(v).unwrap())
    }

    #[test]
    fn classify_examples() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(
            classify_default(&pair([1.0, 0.0, 0.0], [1.0, 0.0, 0.0])),
            StratumLabel::Diagonal
        );
        assert_eq!(
            classify_default(&pair([1.0, 0.0, 0.0], [-1.0, 0.0, 0.0])),
            StratumLabel::Antidiagonal
        );
        assert_eq!(
            classify_default(&pair([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])),
            StratumLabel::Perp
        );
        assert_eq!(
            classify_default(&pair([1.0, 0.0, 0.0], [s, s, 0.0])),
            StratumLabel::Acute
        );
        assert_eq!(
            classify_default(&pair([1.0, 0.0, 0.0], [-s, s, 0.0])),
            StratumLabel::Obtuse
        );
    }

    #[test]
    fn acute_chart_symmetric_example() {
        // symmetric pair about e1 with total angle pi/4
        let (c8, s8) = (
            std::f64::consts::FRAC_PI_8.cos(),
            std::f64::consts::FRAC_PI_8.sin(),
        );
        let p = pair([c8, -s8, 0.0], [c8, s8, 0.0]);
        let chart = acute_chart(&p).unwrap();
        assert!((chart.t() - 0.5).abs() < 1e-12);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(chart
            .orthopair()
            .u()
            .approx_eq(&SP::new([s, -s, 0.0]).unwrap(), 1e-12));
        assert!(chart
            .orthopair()
            .v()
            .approx_eq(&SP::new([s, s, 0.0]).unwrap(), 1e-12));
        // orthopair is orthogonal by the closed form
        assert!(chart.orthopair().u().dot(&chart.orthopair().v()).abs() < 1e-12);
    }

    #[test]
    fn obtuse_chart_symmetric_example() {
        // angle 3 pi / 4 gives t = 1/2 and the same orthopair
        let a = 3.0 * std::f64::consts::FRAC_PI_8;
        let p = pair([a.cos(), -a.sin(), 0.0], [a.cos(), a.sin(), 0.0]);
        let chart = obtuse_chart(&p).unwrap();
        assert!((chart.t() - 0.5).abs() < 1e-12);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(chart
            .orthopair()
            .u()
            .approx_eq(&SP::new([s, -s, 0.0]).unwrap(), 1e-12));
    }

    #[test]
    fn charts_reject_wrong_stratum() {
        let perp = pair([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]);
        assert!(matches!(
            acute_chart(&perp),
            Err(Error::WrongStratum { .. })
        ));
        assert!(matches!(
            obtuse_chart(&perp),
            Err(Error::WrongStratum { .. })
        ));
        let diag = pair([0.0, 0.0, 1.0], [0.0, 0.0, 1.0]);
        assert!(matches!(
            folding_map(&diag),
            Err(Error::WrongStratum { .. })
        ));
    }

    #[test]
    fn chart_roundtrip_example() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let orthopair = PerpPair::new(
            SP::new([s, -s, 0.0]).unwrap(),
            SP::new([s, s, 0.0]).unwrap(),
        )
        .unwrap();
        let c = ChartPoint::new(0.5, orthopair).unwrap();
        let p = chart_inverse(&c, Sector::Acute);
        let (c8, s8) = (
            std::f64::consts::FRAC_PI_8.cos(),
            std::f64::consts::FRAC_PI_8.sin(),
        );
        assert!(p.approx_eq(&pair([c8, -s8, 0.0], [c8, s8, 0.0]), 1e-12));
        let back = acute_chart(&p).unwrap();
        assert!((back.t() - 0.5).abs() < 1e-12);
        assert!(back.orthopair().approx_eq(&c.orthopair, 1e-12));
    }

    #[test]
    fn chart_point_rejects_boundary() {
        let op = PerpPair::new(SP::e2(), SP::e3()).unwrap();
        assert!(matches!(
            ChartPoint::new(0.0, op),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            ChartPoint::new(1.0, op),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn right_angle_embedding_recovers_orthopair() {
        let op = PerpPair::new(SP::e2(), SP::e3()).unwrap();
        let p = embed_at_angle(&op, std::f64::consts::FRAC_PI_2);
        assert!(p.u.approx_eq(&op.u(), 1e-15));
        assert!(p.v.approx_eq(&op.v(), 1e-15));
    }

    #[test]
    fn barycentre_examples() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = PerpPair::new(SP::e1(), SP::e2()).unwrap();
        assert!(barycentre(&p).approx_eq(&SP::new([s, s, 0.0]).unwrap(), 1e-15));
        let q = PerpPair::new(SP::e3(), -SP::e2()).unwrap();
        assert!(barycentre(&q).approx_eq(&SP::new([0.0, -s, s]).unwrap(), 1e-15));
    }

    #[test]
    fn perp_pair_repairs_small_defect_and_rejects_large() {
        let almost = SP::new([1e-10, 1.0, 0.0]).unwrap();
        let p = PerpPair::new(SP::e1(), almost).unwrap();
        assert!(p.u().dot(&p.v()).abs() < 1e-15);
        let skew = SP::new([0.5, 0.75f64.sqrt(), 0.0]).unwrap();
        assert!(matches!(
            PerpPair::new(SP::e1(), skew),
            Err(Error::NotOrthogonal { .. })
        ));
    }
}

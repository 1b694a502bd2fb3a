//! Finite orbits, canonical representatives, lens-space deck
//! transformations, covering-degree counting, and the descent and
//! fibre-family sweeps that tie the quaternionic models to the actions on
//! `S^2 x S^2`.
//!
//! A point of a quotient space is modelled by the finite orbit of a sampled
//! point together with a canonical representative, chosen as the
//! lexicographically least entry after bucketing coordinates to the
//! [`Real::BUCKET`] grid; the grid is three orders of magnitude coarser than
//! the identity tolerances, so representative selection is stable under
//! round-off.

use std::collections::BTreeMap;

use rand::Rng;

use crate::actions::{ActionGenerator, Ell, Intertwiner};
use crate::harness::sample;
use crate::quat::{ImaginaryUnit, UnitQuaternion};
use crate::real::Real;
use crate::so3::{
    geodesic, involution_defect, lift_rotation, rotation_to_perp, spin_cover, t_squared, Rotation3,
};
use crate::sphere_pairs::{classify_default, PairPoint, PerpPair, SpherePoint, StratumLabel};
use crate::vec3;
use crate::{Error, Result};

/// Tolerance for "same orbit" membership decisions. Far above accumulated
/// round-off, far below the separation of distinct sampled orbits.
const MEMBERSHIP_TOL: f64 = 1e-8;

/// Point type on which finite orbits are formed.
pub trait OrbitPoint<T: Real>: Clone {
    /// Ambient Euclidean distance.
    fn dist(&self, other: &Self) -> T;

    /// Coordinates bucketed to the [`Real::BUCKET`] grid, for canonical
    /// lexicographic comparison.
    fn bucket_key(&self) -> Vec<i64>;
}

fn bucket<T: Real>(x: T) -> i64 {
    (x.as_f64() / T::BUCKET.as_f64()).round() as i64
}

impl<T: Real> OrbitPoint<T> for UnitQuaternion<T> {
    fn dist(&self, other: &Self) -> T {
        UnitQuaternion::dist(self, other)
    }

    fn bucket_key(&self) -> Vec<i64> {
        self.as_quaternion()
            .coords()
            .iter()
            .map(|&x| bucket(x))
            .collect()
    }
}

impl<T: Real> OrbitPoint<T> for SpherePoint<T> {
    fn dist(&self, other: &Self) -> T {
        SpherePoint::dist(self, other)
    }

    fn bucket_key(&self) -> Vec<i64> {
        self.coords().iter().map(|&x| bucket(x)).collect()
    }
}

impl<T: Real> OrbitPoint<T> for PairPoint<T> {
    fn dist(&self, other: &Self) -> T {
        PairPoint::dist(self, other)
    }

    fn bucket_key(&self) -> Vec<i64> {
        let mut key = Vec::with_capacity(6);
        key.extend(self.u.coords().iter().map(|&x| bucket(x)));
        key.extend(self.v.coords().iter().map(|&x| bucket(x)));
        key
    }
}

impl<T: Real> OrbitPoint<T> for PerpPair<T> {
    fn dist(&self, other: &Self) -> T {
        PerpPair::dist(self, other)
    }

    fn bucket_key(&self) -> Vec<i64> {
        self.as_pair().bucket_key()
    }
}

/// The four quaternionic lens-space models: deck transformation of the
/// universal cover `S^3` and its order.
///
/// `L21` quotients by `z -> -z`, `L41` by left multiplication by `j`, `L81`
/// by left multiplication by `sqrt(j)`, and `L85` by `z -> sqrt(j) j z j^-1`
/// (left multiplication by `sqrt(j)` composed with conjugation by `j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LensModel {
    L21,
    L41,
    L81,
    L85,
}

impl LensModel {
    pub fn deck<T: Real>(&self, z: &UnitQuaternion<T>) -> UnitQuaternion<T> {
        match self {
            LensModel::L21 => -*z,
            LensModel::L41 => UnitQuaternion::j() * *z,
            LensModel::L81 => UnitQuaternion::sqrt_j() * *z,
            LensModel::L85 => {
                let j = UnitQuaternion::j();
                UnitQuaternion::sqrt_j() * j * *z * j.inverse()
            }
        }
    }

    pub fn order(&self) -> usize {
        match self {
            LensModel::L21 => 2,
            LensModel::L41 => 4,
            LensModel::L81 | LensModel::L85 => 8,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            LensModel::L21 => "l21",
            LensModel::L41 => "l41",
            LensModel::L81 => "l81",
            LensModel::L85 => "l85",
        }
    }

    pub fn all() -> [LensModel; 4] {
        [
            LensModel::L21,
            LensModel::L41,
            LensModel::L81,
            LensModel::L85,
        ]
    }
}

impl std::fmt::Display for LensModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Finite orbit `(p, g p, ..., g^{n-1} p)` of a cyclic action.
#[derive(Clone, Debug)]
pub struct Orbit<P> {
    entries: Vec<P>,
}

impl<P> Orbit<P> {
    pub fn entries(&self) -> &[P] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Builds the orbit of `p` under `g`, checking that the action closes up
/// after exactly `n` steps and that no two entries nearly coincide.
pub fn orbit_of<T: Real, P: OrbitPoint<T>>(
    g: impl Fn(&P) -> P,
    p: &P,
    n: usize,
    tol: T,
) -> Result<Orbit<P>> {
    let mut entries = Vec::with_capacity(n);
    entries.push(p.clone());
    for _ in 1..n {
        let next = g(entries.last().unwrap());
        entries.push(next);
    }
    let wrap = g(entries.last().unwrap());
    let residual = wrap.dist(p);
    if residual >= tol {
        return Err(Error::OrbitNotClosed {
            order: n,
            residual: residual.as_f64(),
        });
    }
    let mut min_dist = T::infinity();
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            min_dist = min_dist.min(entries[i].dist(&entries[j]));
        }
    }
    if n > 1 && min_dist <= tol {
        return Err(Error::OrbitDegenerate {
            min_dist: min_dist.as_f64(),
        });
    }
    Ok(Orbit { entries })
}

/// The canonical representative: the entry whose bucketed coordinate vector
/// is lexicographically least.
pub fn canonical_rep<T: Real, P: OrbitPoint<T>>(orbit: &Orbit<P>) -> &P {
    orbit
        .entries
        .iter()
        .min_by(|a, b| a.bucket_key().cmp(&b.bucket_key()))
        .expect("orbit is nonempty")
}

/// A point of a quotient space: canonical representative plus the tag of
/// the acting generator.
#[derive(Clone, Debug)]
pub struct QuotientPoint<P> {
    pub rep: P,
    pub tag: &'static str,
}

impl<P> QuotientPoint<P> {
    pub fn from_orbit<T: Real>(orbit: &Orbit<P>, tag: &'static str) -> Self
    where
        P: OrbitPoint<T>,
    {
        Self {
            rep: canonical_rep(orbit).clone(),
            tag,
        }
    }

    pub fn approx_eq<T: Real>(&self, other: &Self, tol: T) -> bool
    where
        P: OrbitPoint<T>,
    {
        self.tag == other.tag && self.rep.dist(&other.rep) < tol
    }
}

/// True when `q` lies on the `g`-orbit of `p` within `tol`.
pub fn quotient_eq<T: Real, P: OrbitPoint<T>>(
    p: &P,
    q: &P,
    g: impl Fn(&P) -> P,
    n: usize,
    tol: T,
) -> bool {
    let mut x = p.clone();
    for _ in 0..n {
        if x.dist(q) < tol {
            return true;
        }
        x = g(&x);
    }
    false
}

/// The unit-tangent pair of `w`: `(w^-1 i w, w^-1 k w)`.
pub fn tangent_pair<T: Real>(w: &UnitQuaternion<T>) -> (ImaginaryUnit<T>, ImaginaryUnit<T>) {
    (w.rotate(&ImaginaryUnit::i()), w.rotate(&ImaginaryUnit::k()))
}

/// Both elements `{w, -w}` whose tangent pair is `(a, b)`.
///
/// The frame sending `i -> a`, `j -> b x a`, `k -> b` is special orthogonal
/// (the middle column is forced by `j = k x i` and equivariance of the cross
/// product), so the lift is obtained from it through [`lift_rotation`].
pub fn ut_lift<T: Real>(
    a: &ImaginaryUnit<T>,
    b: &ImaginaryUnit<T>,
) -> Result<(UnitQuaternion<T>, UnitQuaternion<T>)> {
    let dot = a.dot(b);
    if dot.abs() >= T::ORTHO_SLACK {
        return Err(Error::NotOrthogonal { dot: dot.as_f64() });
    }
    let va = a.coords_ijk();
    let vb = b.coords_ijk();
    let vj = vec3::cross(&vb, &va);
    // rows of the matrix whose columns, in the (j, i, k) basis, are the
    // images of j, i, k: (b x a, a, b)
    let frame = Rotation3::new([
        [vj[1], va[1], vb[1]],
        [vj[0], va[0], vb[0]],
        [vj[2], va[2], vb[2]],
    ])?;
    Ok(lift_rotation(&frame))
}

/// The composite `S^3 -> SO(3) -> perp`, i.e. the second and third columns
/// of the spin cover. Two-to-one, with fibres `{z, -z}`.
pub fn unit_to_perp<T: Real>(z: &UnitQuaternion<T>) -> PerpPair<T> {
    rotation_to_perp(&spin_cover(z))
}

/// Result of a sampled identity sweep.
#[derive(Clone, Copy, Debug)]
pub struct SweepOutcome<T> {
    pub samples: usize,
    pub max_error: T,
    /// Count of discrete failures (wrong stratum, wrong membership, ...).
    pub violations: usize,
}

impl<T: Real> SweepOutcome<T> {
    fn new(samples: usize) -> Self {
        Self {
            samples,
            max_error: T::zero(),
            violations: 0,
        }
    }

    fn record(&mut self, err: T) {
        self.max_error = self.max_error.max(err);
    }
}

/// Checks that left multiplication by `j` negates the tangent pair:
/// the pair of `j w` equals minus the pair of `w`.
pub fn antipodal_descent_check<T: Real, R: Rng>(rng: &mut R, samples: usize) -> SweepOutcome<T> {
    let mut out = SweepOutcome::new(samples);
    for _ in 0..samples {
        let w = sample::sample_s3(rng);
        let (a, b) = tangent_pair(&w);
        let (ja, jb) = tangent_pair(&(UnitQuaternion::j() * w));
        out.record(ja.dist(&-a));
        out.record(jb.dist(&-b));
    }
    out
}

/// Fibre-count record of a covering check.
#[derive(Clone, Debug)]
pub struct CoverReport {
    pub name: String,
    pub base_points: usize,
    /// Multiset of observed fibre cardinalities: cardinality -> occurrences.
    pub fibre_cardinalities: BTreeMap<usize, usize>,
    pub expected_degree: usize,
    pub pass: bool,
}

/// Counts, over sampled base orbits, how many `h`-orbits tile each
/// `g`-orbit. For an honest covering the answer is the constant `n / m`.
///
/// `cover` is the deck pair `(h, m)` of the covering space, `base` the pair
/// `(g, n)` downstairs; `h`-orbits must refine `g`-orbits.
pub fn cover_check<T, P, G, H, S>(
    name: &str,
    cover: (H, usize),
    base: (G, usize),
    mut sample_point: S,
    samples: usize,
    tol: T,
) -> Result<CoverReport>
where
    T: Real,
    P: OrbitPoint<T>,
    G: Fn(&P) -> P,
    H: Fn(&P) -> P,
    S: FnMut() -> P,
{
    let (h, m) = cover;
    let (g, n) = base;
    if m == 0 || n % m != 0 {
        return Err(Error::OutOfRange {
            name: "cover order ratio",
            value: n as f64 / m as f64,
        });
    }
    let expected = n / m;
    let mut cardinalities = BTreeMap::new();
    let mut pass = true;
    for _ in 0..samples {
        let p = sample_point();
        let orbit = orbit_of(&g, &p, n, tol)?;
        let entries = orbit.entries();
        // refinement: h must not lead out of the g-orbit
        for x in entries {
            let hx = h(x);
            let escape = entries
                .iter()
                .map(|y| hx.dist(y))
                .fold(T::infinity(), T::min);
            if escape >= tol {
                return Err(Error::InconsistentCover {
                    residual: escape.as_f64(),
                });
            }
        }
        let mut assigned = vec![false; entries.len()];
        let mut classes = 0usize;
        for i in 0..entries.len() {
            if assigned[i] {
                continue;
            }
            classes += 1;
            for j in i..entries.len() {
                if !assigned[j] && quotient_eq(&entries[i], &entries[j], &h, m, tol) {
                    assigned[j] = true;
                }
            }
        }
        *cardinalities.entry(classes).or_insert(0) += 1;
        if classes != expected {
            pass = false;
        }
    }
    Ok(CoverReport {
        name: name.to_string(),
        base_points: samples,
        fibre_cardinalities: cardinalities,
        expected_degree: expected,
        pass,
    })
}

/// The attaching map `perp -> RP^2` sending an orthogonal pair to the
/// sign-class of its barycentre `(u + v)/|u + v|`.
pub fn rp2_attach<T: Real>(p: &PerpPair<T>) -> QuotientPoint<SpherePoint<T>> {
    let m = crate::sphere_pairs::barycentre(p);
    let orbit = Orbit {
        entries: vec![m, -m],
    };
    QuotientPoint::from_orbit(&orbit, "rp2")
}

/// Verifies the diagonal-stratum pattern of the action: the diagonal is
/// swapped with the antidiagonal, the square acts antipodally on the
/// diagonal, and the orbit of `(u, u)` meets the diagonal in exactly
/// `{(u, u), (-u, -u)}`.
pub fn diag_stratum_check<T: Real, R: Rng>(
    ell: Ell,
    rng: &mut R,
    samples: usize,
) -> SweepOutcome<T> {
    let action = ell.generator();
    let mut out = SweepOutcome::new(samples);
    for _ in 0..samples {
        let u = sample::sample_sphere(rng);
        let p = PairPoint::new(u, u);
        let orbit: Vec<PairPoint<T>> = (0..4).map(|k| action.apply_iter(&p, k)).collect();
        let expected = [
            StratumLabel::Diagonal,
            StratumLabel::Antidiagonal,
            StratumLabel::Diagonal,
            StratumLabel::Antidiagonal,
        ];
        for (entry, want) in orbit.iter().zip(expected) {
            if classify_default(entry) != want {
                out.violations += 1;
            }
        }
        // the square is the antipodal map on the diagonal
        out.record(orbit[2].dist(&p.antipodal()));
        // the orbit meets the diagonal exactly in {(u,u), (-u,-u)}
        out.record(orbit[0].dist(&p));
    }
    out
}

/// Realised conjugation sign in a descent check: the deck transformation
/// can correspond to the action generator itself or to its inverse; both
/// generate the same cyclic group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentSign {
    Direct,
    Inverse,
}

impl DescentSign {
    pub fn tag(&self) -> &'static str {
        match self {
            DescentSign::Direct => "direct",
            DescentSign::Inverse => "inverse",
        }
    }
}

/// Outcome of [`descent_check`].
#[derive(Clone, Copy, Debug)]
pub struct DescentOutcome<T> {
    pub samples: usize,
    pub realized: DescentSign,
    pub max_error: T,
}

/// Verifies that the composite `Phi : S^3 -> SO(3) -> perp` intertwines the
/// lens-space deck with the order-4 action on orthogonal pairs:
/// `Phi . deck = f^{+-1} . Phi`, with the realised sign reported.
///
/// For each sample the full deck orbit (8 points upstairs) is also pushed
/// through `Phi` and compared setwise with the 4-point action orbit of
/// `Phi(z)`, which certifies that `Phi` descends to a bijection of sampled
/// quotient points.
pub fn descent_check<T: Real, R: Rng>(
    ell: Ell,
    rng: &mut R,
    samples: usize,
    tol: T,
) -> Result<DescentOutcome<T>> {
    let model = match ell {
        Ell::One => LensModel::L81,
        Ell::Five => LensModel::L85,
    };
    let action = ell.generator();
    let mut err_direct = T::zero();
    let mut err_inverse = T::zero();
    let mut err_orbit = T::zero();
    for _ in 0..samples {
        let z = sample::sample_s3(rng);
        let base = unit_to_perp(&z).as_pair();
        let moved = unit_to_perp(&model.deck(&z)).as_pair();
        err_direct = err_direct.max(moved.dist(&action.apply(&base)));
        err_inverse = err_inverse.max(moved.dist(&action.apply_inverse(&base)));

        // orbit-level: Phi(deck-orbit) = action-orbit of Phi(z), setwise
        let deck_orbit = orbit_of(
            |w| model.deck(w),
            &z,
            model.order(),
            T::from_f64(MEMBERSHIP_TOL),
        )?;
        let images: Vec<PairPoint<T>> = deck_orbit
            .entries()
            .iter()
            .map(|w| unit_to_perp(w).as_pair())
            .collect();
        let downstairs: Vec<PairPoint<T>> = (0..4).map(|k| action.apply_iter(&base, k)).collect();
        for x in &images {
            let best = downstairs
                .iter()
                .map(|y| x.dist(y))
                .fold(T::infinity(), T::min);
            err_orbit = err_orbit.max(best);
        }
        for y in &downstairs {
            let best = images.iter().map(|x| x.dist(y)).fold(T::infinity(), T::min);
            err_orbit = err_orbit.max(best);
        }
    }
    let (realized, sign_err) = if err_direct <= err_inverse {
        (DescentSign::Direct, err_direct)
    } else {
        (DescentSign::Inverse, err_inverse)
    };
    let max_error = sign_err.max(err_orbit);
    if max_error >= tol {
        return Err(Error::DescentFailure {
            best_error: max_error.as_f64(),
        });
    }
    Ok(DescentOutcome {
        samples,
        realized,
        max_error,
    })
}

/// Outcome of [`theorem_check`].
#[derive(Clone, Copy, Debug)]
pub struct TheoremOutcome<T> {
    pub steps: usize,
    pub samples_per_step: usize,
    pub max_order_error: T,
    pub max_displacement_error: T,
    pub max_orbit_error: T,
    pub equivalence_mismatches: usize,
}

/// Walks the geodesic from the identity to `T^2` and verifies, at every
/// step, that the fibre action is a free order-4 action and that the
/// intertwiner maps `f1`-orbits bijectively onto `f_A`-orbits; at the final
/// step the target action is `f5`, which exhibits the identification of the
/// two quotients pointwise.
pub fn theorem_check<T: Real, R: Rng>(
    rng: &mut R,
    path_steps: usize,
    samples: usize,
    tol: T,
) -> Result<TheoremOutcome<T>> {
    if path_steps < 2 {
        return Err(Error::OutOfRange {
            name: "path_steps",
            value: path_steps as f64,
        });
    }
    let id = Rotation3::identity();
    let t2 = t_squared();
    let membership = T::from_f64(MEMBERSHIP_TOL);
    let mut out = TheoremOutcome {
        steps: path_steps,
        samples_per_step: samples,
        max_order_error: T::zero(),
        max_displacement_error: T::zero(),
        max_orbit_error: T::zero(),
        equivalence_mismatches: 0,
    };
    for step in 0..path_steps {
        let t = T::from_f64(step as f64 / (path_steps - 1) as f64);
        let a = geodesic(&id, &t2, t)?;
        let gen = ActionGenerator::FA(a);
        let ga = Intertwiner::new(a);
        let last = step + 1 == path_steps;
        let mut step_worst = T::zero();
        for _ in 0..samples {
            let p = sample::sample_pair(rng);
            let q = sample::sample_pair(rng);

            let order_err = gen
                .apply_iter(&p, 4)
                .dist(&p)
                .max(gen.apply_iter(&p, 2).dist(&p.antipodal()));
            out.max_order_error = out.max_order_error.max(order_err);

            let disp_err = (crate::actions::displacement(&a, &p) - T::from_f64(2.0)).abs();
            out.max_displacement_error = out.max_displacement_error.max(disp_err);

            // image of the f1-orbit vs orbit of the image, setwise
            let upstairs: Vec<PairPoint<T>> = (0..4)
                .map(|k| ActionGenerator::F1.apply_iter(&p, k))
                .collect();
            let mapped: Vec<PairPoint<T>> = upstairs.iter().map(|x| ga.apply(x)).collect();
            let image_base = ga.apply(&p);
            let downstairs: Vec<PairPoint<T>> =
                (0..4).map(|k| gen.apply_iter(&image_base, k)).collect();
            let mut orbit_err = T::zero();
            for x in &mapped {
                let best = downstairs
                    .iter()
                    .map(|y| x.dist(y))
                    .fold(T::infinity(), T::min);
                orbit_err = orbit_err.max(best);
            }
            for y in &downstairs {
                let best = mapped.iter().map(|x| x.dist(y)).fold(T::infinity(), T::min);
                orbit_err = orbit_err.max(best);
            }
            if last {
                // at t = 1 the fibre action is f5 itself
                let f5_orbit: Vec<PairPoint<T>> = (0..4)
                    .map(|k| ActionGenerator::F5.apply_iter(&image_base, k))
                    .collect();
                for (x, y) in downstairs.iter().zip(&f5_orbit) {
                    orbit_err = orbit_err.max(x.dist(y));
                }
            }
            out.max_orbit_error = out.max_orbit_error.max(orbit_err);

            // distinct f1-orbits must map to distinct f_A-orbits and back
            let eq_up = quotient_eq(&p, &q, |x| ActionGenerator::F1.apply(x), 4, membership);
            let eq_down = quotient_eq(
                &ga.apply(&p),
                &ga.apply(&q),
                |x| gen.apply(x),
                4,
                membership,
            );
            if eq_up != eq_down {
                out.equivalence_mismatches += 1;
            }
            step_worst = step_worst.max(order_err).max(disp_err).max(orbit_err);
        }
        if last {
            out.max_orbit_error = out.max_orbit_error.max(a.max_entry_dist(&t2));
        }
        if step_worst >= tol || out.equivalence_mismatches > 0 {
            return Err(Error::TheoremFailure {
                t: t.as_f64(),
                max_error: step_worst.as_f64(),
            });
        }
    }
    Ok(out)
}

/// A stratum-breaking witness: an orthogonal pair whose image under
/// `f_{A(t)}` has the stated inner product between its two members.
#[derive(Clone, Copy, Debug)]
pub struct ObstructionWitness<T> {
    pub t: T,
    pub pair: PerpPair<T>,
    pub overlap: T,
}

/// Outcome of [`obstruction_check`].
#[derive(Clone, Copy, Debug)]
pub struct ObstructionOutcome<T> {
    pub steps: usize,
    /// Larger of the two endpoint defects; both endpoints are involutions.
    pub endpoint_defect: T,
    pub min_interior_defect: T,
    pub max_defect: T,
    /// `| defect(1/2) - 2 sqrt(2) |`; the path maximum is attained midway.
    pub midpoint_error: T,
    pub witness: Option<ObstructionWitness<T>>,
}

/// Quantifies the two obstruction remarks about the geodesic from the
/// identity to `T^2`: the involution defect must rise from zero at the
/// endpoints to at least 2 (exactly `2 sqrt(2)` at the midpoint), and some
/// orthogonal pair must leave the orthogonal stratum under `f_{A(t)}` with
/// margin `|u . v| > 0.1`.
pub fn obstruction_check<T: Real, R: Rng>(
    rng: &mut R,
    path_steps: usize,
    witness_attempts: usize,
) -> Result<ObstructionOutcome<T>> {
    if path_steps < 3 {
        return Err(Error::OutOfRange {
            name: "path_steps",
            value: path_steps as f64,
        });
    }
    let id = Rotation3::identity();
    let t2 = t_squared();
    let mut defects = Vec::with_capacity(path_steps);
    for step in 0..path_steps {
        let t = T::from_f64(step as f64 / (path_steps - 1) as f64);
        defects.push((t, involution_defect(&geodesic(&id, &t2, t)?)));
    }
    let endpoint_defect = defects[0].1.max(defects[path_steps - 1].1);
    let interior = &defects[1..path_steps - 1];
    let min_interior_defect = interior.iter().map(|&(_, d)| d).fold(T::infinity(), T::min);
    let max_defect = interior.iter().map(|&(_, d)| d).fold(T::zero(), T::max);
    let half = T::from_f64(0.5);
    let midpoint_defect = involution_defect(&geodesic(&id, &t2, half)?);
    let midpoint_error = (midpoint_defect - T::from_f64(8.0).sqrt()).abs();

    // witness search, starting at the midpoint where displacement from the
    // endpoints is largest
    let threshold = T::from_f64(0.1);
    let mut order: Vec<usize> = (1..path_steps - 1).collect();
    order.sort_by(|&a, &b| {
        let da = (a as f64 / (path_steps - 1) as f64 - 0.5).abs();
        let db = (b as f64 / (path_steps - 1) as f64 - 0.5).abs();
        da.partial_cmp(&db).unwrap()
    });
    let mut witness = None;
    'search: for step in order {
        let t = T::from_f64(step as f64 / (path_steps - 1) as f64);
        let a = geodesic(&id, &t2, t)?;
        for _ in 0..witness_attempts {
            let p = sample::sample_perp(rng);
            let image = crate::actions::fa(&a, &p.as_pair());
            let overlap = image.u.dot(&image.v).abs();
            if overlap > threshold {
                witness = Some(ObstructionWitness {
                    t,
                    pair: p,
                    overlap,
                });
                break 'search;
            }
        }
    }

    Ok(ObstructionOutcome {
        steps: path_steps,
        endpoint_defect,
        min_interior_defect,
        max_defect,
        midpoint_error,
        witness,
    })
}

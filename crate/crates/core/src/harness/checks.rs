//! The check registry: every suite is a fixed list of named, anchored
//! checks, each drawing from its own deterministic stream.
//!
//! A check reports the maximum observed error over its samples; discrete
//! failures (a wrong stratum, a wrong fibre count, a missing witness) are
//! scored as an error of 1 so that they trip any sane tolerance.

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use crate::actions::{displacement, f1, f5, fa, order_of, ActionGenerator, Ell, Intertwiner};
use crate::harness::{sample, RunConfig, Suite};
use crate::quat::{antipodal_cover_error, ImaginaryUnit, Quaternion, UnitQuaternion};
use crate::quotients::{
    antipodal_descent_check, cover_check, descent_check, diag_stratum_check, obstruction_check,
    rp2_attach, tangent_pair, theorem_check, ut_lift, DescentSign, LensModel,
};
use crate::so3::{
    geodesic, involution_defect, lift_rotation, perp_to_rotation, rotation_to_perp, spin_cover,
    t_matrix, t_squared, Rotation3,
};
use crate::sphere_pairs::{
    acute_chart, barycentre, chart_inverse, classify_default, folding_map, obtuse_chart,
    ChartPoint, PairPoint, PerpPair, Sector, SpherePoint, StratumLabel,
};

/// Which configured tolerance a check is judged against.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Kind {
    /// Closed-form algebraic identity; `tol_identity`.
    Identity,
    /// Composition of normalisations and inverse trigonometry; `tol_geometry`.
    Geometry,
    /// Discrete count (violations scored 1); fixed tolerance 1/2.
    Exact,
    /// Empirical frequency bound; fixed tolerance 1e-6.
    Frequency,
}

impl Kind {
    pub(crate) fn tolerance(&self, config: &RunConfig) -> f64 {
        match self {
            Kind::Identity => config.tol_identity,
            Kind::Geometry => config.tol_geometry,
            Kind::Exact => 0.5,
            Kind::Frequency => 1e-6,
        }
    }
}

pub(crate) struct Outcome {
    pub samples: usize,
    pub max_error: f64,
    /// Deterministic annotation appended to the check name in reports.
    pub detail: Option<String>,
}

impl Outcome {
    fn sweep(samples: usize, max_error: f64) -> Self {
        Self {
            samples,
            max_error,
            detail: None,
        }
    }
}

pub(crate) struct Check {
    pub name: &'static str,
    pub anchor: &'static str,
    pub kind: Kind,
    pub run: fn(&mut ChaCha8Rng, &RunConfig) -> Outcome,
}

pub(crate) fn checks_for(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Algebra => algebra(),
        Suite::So3 => so3(),
        Suite::Strata => strata(),
        Suite::Actions => actions(),
        Suite::Lens => lens(),
        Suite::Covers => covers(),
        Suite::Descent => descent(),
        Suite::Theorem => theorem(),
        Suite::Obstruction => obstruction(),
    }
}

fn violations_to_error(count: usize) -> f64 {
    if count > 0 {
        1.0
    } else {
        0.0
    }
}

// ---------------------------------------------------------------- algebra

fn algebra() -> Vec<Check> {
    vec![
        Check {
            name: "quat.basis_products",
            anchor: "the body of quaternions",
            kind: Kind::Identity,
            run: |_, _| {
                let i = Quaternion::<f64>::i();
                let j = Quaternion::j();
                let k = Quaternion::k();
                let one = Quaternion::one();
                let table = [
                    (i * i, -one),
                    (j * j, -one),
                    (k * k, -one),
                    (i * j * k, -one),
                    (i * j, k),
                    (j * i, -k),
                    (j * k, i),
                    (k * j, -i),
                    (k * i, j),
                    (i * k, -j),
                ];
                let mut err = 0.0f64;
                for (got, want) in table {
                    err = err.max(got.dist(&want));
                }
                let sj = UnitQuaternion::<f64>::sqrt_j();
                err = err.max((sj * sj).as_quaternion().dist(&j));
                Outcome::sweep(0, err)
            },
        },
        Check {
            name: "quat.norm_multiplicative",
            anchor: "the unit sphere in H",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let p = sample::sample_quaternion::<f64, _>(rng);
                    let q = sample::sample_quaternion::<f64, _>(rng);
                    err = err.max(((p * q).norm() - p.norm() * q.norm()).abs());
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "quat.rotation_isometry",
            anchor: "on which S^3 acts on right by conjugation",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let w = sample::sample_s3::<f64, _>(rng);
                    let x = sample_imaginary(rng);
                    let y = sample_imaginary(rng);
                    let rotated = w.rotate(&x).dot(&w.rotate(&y));
                    err = err.max((rotated - x.dot(&y)).abs());
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "quat.hopf_definition",
            anchor: "sending w -> w^-1 i w",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let w = sample::sample_s3::<f64, _>(rng);
                    err = err.max(w.hopf().dist(&w.rotate(&ImaginaryUnit::i())));
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "quat.hopf_fibre_invariance",
            anchor: "the quotient map S^3 -> S^3/S^1_i",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let w = sample::sample_s3::<f64, _>(rng);
                    let lambda = sample::sample_circle_i::<f64, _>(rng);
                    err = err.max((lambda * w).hopf().dist(&w.hopf()));
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "quat.antipodal_cover",
            anchor: "(jw)^-1 i (jw) = -(w^-1 i w)",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let w = sample::sample_s3::<f64, _>(rng);
                    err = err.max(antipodal_cover_error(&w));
                }
                Outcome::sweep(config.samples, err)
            },
        },
    ]
}

fn sample_imaginary(rng: &mut ChaCha8Rng) -> ImaginaryUnit<f64> {
    let u = sample::sample_sphere::<f64, _>(rng).coords();
    ImaginaryUnit::new(u[0], u[1], u[2]).expect("unit by construction")
}

// -------------------------------------------------------------------- so3

fn so3() -> Vec<Check> {
    vec![
        Check {
            name: "so3.t_defining",
            anchor: "e_1 -> e_1, e_2 -> e_3, e_3 -> -e_2",
            kind: Kind::Identity,
            run: |_, _| {
                let t = t_matrix::<f64>();
                let mut err = 0.0f64;
                err = err.max(t.apply(&SpherePoint::e1()).dist(&SpherePoint::e1()));
                err = err.max(t.apply(&SpherePoint::e2()).dist(&SpherePoint::e3()));
                err = err.max(t.apply(&SpherePoint::e3()).dist(&-SpherePoint::e2()));
                err = err.max((t * t).max_entry_dist(&t_squared()));
                err = err.max((t * t * t * t).max_entry_dist(&Rotation3::identity()));
                Outcome::sweep(0, err)
            },
        },
        Check {
            name: "so3.sqrtj_to_t",
            anchor: "an isomorphism sending sqrt(j) -> T",
            kind: Kind::Identity,
            run: |_, _| {
                let err = spin_cover(&UnitQuaternion::<f64>::sqrt_j()).max_entry_dist(&t_matrix());
                Outcome::sweep(0, err)
            },
        },
        Check {
            name: "so3.cover_antihomomorphism",
            anchor: "S^3/-1, as a Lie group, is isomorphic to SO(3)",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let p = sample::sample_s3::<f64, _>(rng);
                    let q = sample::sample_s3::<f64, _>(rng);
                    let lhs = spin_cover(&(p * q));
                    let rhs = spin_cover(&q) * spin_cover(&p);
                    err = err.max(lhs.frobenius_dist(&rhs));
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "so3.double_cover_fibre",
            anchor: "a unique pair of opposite element +-w in S^3",
            kind: Kind::Geometry,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let w = sample::sample_s3::<f64, _>(rng);
                    let r = spin_cover(&w);
                    // the cover identifies +-w
                    err = err.max(spin_cover(&-w).max_entry_dist(&r));
                    let (l, ln) = lift_rotation(&r);
                    err = err.max(l.dist(&w).min(ln.dist(&w)));
                    err = err.max(spin_cover(&l).max_entry_dist(&r));
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "so3.perp_identification",
            anchor: "a unique w such that (w,u,v) is an oriented orthonormal basis",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                err = err.max(
                    perp_to_rotation(&PerpPair::new(SpherePoint::e2(), SpherePoint::e3()).unwrap())
                        .max_entry_dist(&Rotation3::identity()),
                );
                err = err.max(
                    perp_to_rotation(
                        &PerpPair::new(SpherePoint::e3(), -SpherePoint::e2()).unwrap(),
                    )
                    .max_entry_dist(&t_matrix()),
                );
                for _ in 0..config.samples {
                    let p = sample::sample_perp::<f64, _>(rng);
                    err = err.max(rotation_to_perp(&perp_to_rotation(&p)).dist(&p));
                    let r = sample::sample_so3::<f64, _>(rng);
                    err = err.max(perp_to_rotation(&rotation_to_perp(&r)).max_entry_dist(&r));
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "so3.geodesic_endpoints",
            anchor: "Since SO(3) is connected",
            kind: Kind::Geometry,
            run: |rng, config| {
                let n = (config.samples / 10).max(32);
                let mut err = 0.0f64;
                for _ in 0..n {
                    let a = sample::sample_so3::<f64, _>(rng);
                    let b = sample::sample_so3::<f64, _>(rng);
                    err = err.max(geodesic(&a, &b, 0.0).unwrap().max_entry_dist(&a));
                    err = err.max(geodesic(&a, &b, 1.0).unwrap().max_entry_dist(&b));
                }
                Outcome::sweep(n, err)
            },
        },
        Check {
            name: "so3.involution_defect_values",
            anchor: "the elements Id, T^2 have order 2",
            kind: Kind::Identity,
            run: |_, _| {
                let mut err = involution_defect(&Rotation3::<f64>::identity());
                err = err.max(involution_defect(&t_squared::<f64>()));
                err = err.max((involution_defect(&t_matrix::<f64>()) - 8.0f64.sqrt()).abs());
                Outcome::sweep(0, err)
            },
        },
    ]
}

// ------------------------------------------------------------------ strata

fn strata() -> Vec<Check> {
    vec![
        Check {
            name: "strata.action_on_strata",
            anchor: "it swaps A and O, and it preserves perp",
            kind: Kind::Exact,
            run: |rng, config| {
                let mut violations = 0usize;
                let per_stratum = (config.samples / 5).max(10);
                for ell in Ell::both() {
                    let g = ell.generator::<f64>();
                    for _ in 0..per_stratum {
                        let u = sample::sample_sphere::<f64, _>(rng);
                        let diag = PairPoint::new(u, u);
                        let anti = PairPoint::new(u, -u);
                        let perp = sample::sample_perp::<f64, _>(rng).as_pair();
                        let (acute, obtuse) = sample_open_pair(rng);
                        let cases = [
                            (diag, StratumLabel::Antidiagonal),
                            (anti, StratumLabel::Diagonal),
                            (perp, StratumLabel::Perp),
                            (acute, StratumLabel::Obtuse),
                            (obtuse, StratumLabel::Acute),
                        ];
                        for (p, want) in cases {
                            if classify_default(&g.apply(&p)) != want {
                                violations += 1;
                            }
                        }
                    }
                }
                Outcome::sweep(2 * per_stratum * 5, violations_to_error(violations))
            },
        },
        Check {
            name: "strata.chart_roundtrip",
            anchor: "We identify A = (0,1) x perp",
            kind: Kind::Geometry,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let (acute, obtuse) = sample_open_pair(rng);
                    let ca = acute_chart(&acute).unwrap();
                    err = err.max(chart_inverse(&ca, Sector::Acute).dist(&acute));
                    let co = obtuse_chart(&obtuse).unwrap();
                    err = err.max(chart_inverse(&co, Sector::Obtuse).dist(&obtuse));
                    // and the other way round, from a random chart point
                    let t = 0.02 + 0.96 * rng.random::<f64>();
                    let op = sample::sample_perp::<f64, _>(rng);
                    let c = ChartPoint::new(t, op).unwrap();
                    let back = acute_chart(&chart_inverse(&c, Sector::Acute)).unwrap();
                    err = err.max((back.t() - t).abs());
                    err = err.max(back.orthopair().dist(&op));
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "strata.folding_equivariance",
            anchor: "folding the two identifications above is f_l-equivariant",
            kind: Kind::Geometry,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples / 2 {
                    let (acute, obtuse) = sample_open_pair(rng);
                    for ell in Ell::both() {
                        let g = ell.generator::<f64>();
                        for p in [acute, obtuse] {
                            let before = folding_map(&p).unwrap();
                            let after = folding_map(&g.apply(&p)).unwrap();
                            err = err.max((after.t() - before.t()).abs());
                            let moved = g.apply(&before.orthopair().as_pair());
                            err = err.max(after.orthopair().as_pair().dist(&moved));
                        }
                    }
                }
                Outcome::sweep(config.samples / 2 * 4, err)
            },
        },
        Check {
            name: "strata.partition_frequency",
            anchor: "an angle which is acute (i.e. strictly between 0 and pi/2)",
            kind: Kind::Frequency,
            run: |rng, config| {
                let mut misses = 0usize;
                for _ in 0..config.samples {
                    let p = sample::sample_pair::<f64, _>(rng);
                    match classify_default(&p) {
                        StratumLabel::Acute | StratumLabel::Obtuse => {}
                        _ => misses += 1,
                    }
                }
                Outcome::sweep(config.samples, misses as f64 / config.samples as f64)
            },
        },
        Check {
            name: "strata.barycentre_negation",
            anchor: "keeping their barycentre u+v/|u+v| invariant",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let p = sample::sample_perp::<f64, _>(rng);
                    for ell in Ell::both() {
                        let g = ell.generator::<f64>();
                        let moved = g.apply_iter(&p.as_pair(), 2);
                        let moved = PerpPair::from_pair(&moved).unwrap();
                        err = err.max(barycentre(&moved).dist(&-barycentre(&p)));
                    }
                }
                Outcome::sweep(config.samples, err)
            },
        },
    ]
}

/// A matched acute/obtuse pair of samples, drawn by rejection from the
/// product measure.
fn sample_open_pair(rng: &mut ChaCha8Rng) -> (PairPoint<f64>, PairPoint<f64>) {
    let mut acute = None;
    let mut obtuse = None;
    loop {
        let p = sample::sample_pair::<f64, _>(rng);
        match classify_default(&p) {
            StratumLabel::Acute if acute.is_none() => acute = Some(p),
            StratumLabel::Obtuse if obtuse.is_none() => obtuse = Some(p),
            _ => {}
        }
        if let (Some(a), Some(o)) = (acute, obtuse) {
            return (a, o);
        }
    }
}

// ----------------------------------------------------------------- actions

fn actions() -> Vec<Check> {
    vec![
        Check {
            name: "actions.orders",
            anchor: "f_5 has order 4, just as f_1",
            kind: Kind::Exact,
            run: |rng, config| {
                let n = (config.samples / 10).max(32);
                let mut violations = 0usize;
                for g in [ActionGenerator::F1, ActionGenerator::F5] {
                    if !matches!(order_of(&g, rng, n, 1e-11), Ok(4)) {
                        violations += 1;
                    }
                }
                for _ in 0..8 {
                    let a = sample::sample_so3::<f64, _>(rng);
                    if !matches!(order_of(&ActionGenerator::FA(a), rng, n, 1e-11), Ok(4)) {
                        violations += 1;
                    }
                }
                Outcome::sweep(10 * n, violations_to_error(violations))
            },
        },
        Check {
            name: "actions.family_endpoints",
            anchor: "for A = Id, respectively A = T^2, we obtain the maps f_1, respectively f_5",
            kind: Kind::Identity,
            run: |rng, config| {
                let id = Rotation3::identity();
                let t2 = t_squared();
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let p = sample::sample_pair::<f64, _>(rng);
                    err = err.max(fa(&id, &p).dist(&f1(&p)));
                    err = err.max(fa(&t2, &p).dist(&f5(&p)));
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "actions.square_law",
            anchor: "f_A^2 is the map (u,v) -> (-u,-v)",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let a = sample::sample_so3::<f64, _>(rng);
                    let p = sample::sample_pair::<f64, _>(rng);
                    err = err.max(fa(&a, &fa(&a, &p)).dist(&p.antipodal()));
                    // f1^2 = f5^2 pointwise
                    err = err.max(f1(&f1(&p)).dist(&f5(&f5(&p))));
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "actions.constant_displacement",
            anchor: "is a smooth fibre bundle over SO(3)",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let a = sample::sample_so3::<f64, _>(rng);
                    let p = sample::sample_pair::<f64, _>(rng);
                    err = err.max((displacement(&a, &p) - 2.0).abs());
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "actions.intertwiner_equivariance",
            anchor: "The fibres over Id and T^2 are, respectively, M_1 and M_5",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let a = sample::sample_so3::<f64, _>(rng);
                    let p = sample::sample_pair::<f64, _>(rng);
                    let g = Intertwiner::new(a);
                    err = err.max(g.apply(&f1(&p)).dist(&fa(&a, &g.apply(&p))));
                    err = err.max(g.apply_inverse(&g.apply(&p)).dist(&p));
                }
                Outcome::sweep(config.samples, err)
            },
        },
    ]
}

// -------------------------------------------------------------------- lens

fn lens_order_outcome(model: LensModel, rng: &mut ChaCha8Rng, samples: usize) -> Outcome {
    let n = model.order();
    let mut err = 0.0f64;
    let mut min_disp = f64::INFINITY;
    for _ in 0..samples {
        let z = sample::sample_s3::<f64, _>(rng);
        let mut w = z;
        for _ in 1..n {
            w = model.deck(&w);
            min_disp = min_disp.min(w.dist(&z));
        }
        err = err.max(model.deck(&w).dist(&z));
    }
    // freeness margin: all proper powers displace by more than 1/2
    err = err.max((0.5 - min_disp).max(0.0));
    Outcome::sweep(samples, err)
}

fn lens() -> Vec<Check> {
    vec![
        Check {
            name: "lens.order_l21",
            anchor: "the quotient of S^3 by multiplication by -1",
            kind: Kind::Identity,
            run: |rng, config| lens_order_outcome(LensModel::L21, rng, config.samples),
        },
        Check {
            name: "lens.order_l41",
            anchor: "the quotient of S^3 by left multiplication by j",
            kind: Kind::Identity,
            run: |rng, config| lens_order_outcome(LensModel::L41, rng, config.samples),
        },
        Check {
            name: "lens.order_l81",
            anchor: "quotient of S^3 by left multiplication by sqrt(j)",
            kind: Kind::Identity,
            run: |rng, config| lens_order_outcome(LensModel::L81, rng, config.samples),
        },
        Check {
            name: "lens.order_l85",
            anchor: "the map z -> sqrt(j) j z j^-1",
            kind: Kind::Identity,
            run: |rng, config| lens_order_outcome(LensModel::L85, rng, config.samples),
        },
        Check {
            name: "lens.l85_squared_is_j",
            anchor: "the composite of left multiplication by sqrt(j) and conjugation by j",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let z = sample::sample_s3::<f64, _>(rng);
                    let twice = LensModel::L85.deck(&LensModel::L85.deck(&z));
                    err = err.max(twice.dist(&(UnitQuaternion::j() * z)));
                }
                Outcome::sweep(config.samples, err)
            },
        },
    ]
}

// ------------------------------------------------------------------ covers

fn perp_cover_outcome(ell: Ell, rng: &mut ChaCha8Rng, samples: usize) -> Outcome {
    let g = ell.generator::<f64>();
    let g2 = ell.generator::<f64>();
    let report = cover_check(
        &format!("perp/{ell}^2 -> perp/{ell}"),
        (move |p: &PairPoint<f64>| g2.apply_iter(p, 2), 2),
        (move |p: &PairPoint<f64>| g.apply(p), 4),
        || sample::sample_perp::<f64, _>(rng).as_pair(),
        samples,
        1e-8,
    );
    cover_outcome(report, samples)
}

fn cover_outcome(report: crate::Result<crate::quotients::CoverReport>, samples: usize) -> Outcome {
    match report {
        Ok(r) => {
            let worst = r
                .fibre_cardinalities
                .keys()
                .map(|&c| (c as f64 - r.expected_degree as f64).abs())
                .fold(0.0f64, f64::max);
            Outcome::sweep(r.base_points, worst)
        }
        Err(_) => Outcome::sweep(samples, 1.0),
    }
}

fn covers() -> Vec<Check> {
    vec![
        Check {
            name: "covers.perp_f1_double",
            anchor: "the quotient map perp/f_l^2 -> perp/f_l, which is a double covering",
            kind: Kind::Exact,
            run: |rng, config| perp_cover_outcome(Ell::One, rng, config.samples),
        },
        Check {
            name: "covers.perp_f5_double",
            anchor: "the quotient map perp/f_l^2 -> perp/f_l, which is a double covering",
            kind: Kind::Exact,
            run: |rng, config| perp_cover_outcome(Ell::Five, rng, config.samples),
        },
        Check {
            name: "covers.l41_in_l81",
            anchor: "which admits L_{4,1} as a double cover",
            kind: Kind::Exact,
            run: |rng, config| {
                let report = cover_check(
                    "l41 -> l81",
                    (|z: &UnitQuaternion<f64>| LensModel::L41.deck(z), 4),
                    (|z: &UnitQuaternion<f64>| LensModel::L81.deck(z), 8),
                    || sample::sample_s3::<f64, _>(rng),
                    config.samples,
                    1e-8,
                );
                cover_outcome(report, config.samples)
            },
        },
        Check {
            name: "covers.l41_in_l85",
            anchor: "which admits L_{4,1} as a double cover",
            kind: Kind::Exact,
            run: |rng, config| {
                let report = cover_check(
                    "l41 -> l85",
                    (|z: &UnitQuaternion<f64>| LensModel::L41.deck(z), 4),
                    (|z: &UnitQuaternion<f64>| LensModel::L85.deck(z), 8),
                    || sample::sample_s3::<f64, _>(rng),
                    config.samples,
                    1e-8,
                );
                cover_outcome(report, config.samples)
            },
        },
        Check {
            name: "covers.rp2_attach",
            anchor: "sending (u,v) -> +-(u+v)/|u+v|",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let p = sample::sample_perp::<f64, _>(rng);
                    for ell in Ell::both() {
                        let g = ell.generator::<f64>();
                        let moved = PerpPair::from_pair(&g.apply_iter(&p.as_pair(), 2)).unwrap();
                        let a = rp2_attach(&p);
                        let b = rp2_attach(&moved);
                        err = err.max(a.rep.dist(&b.rep));
                    }
                    // fibre parameterisation: (u,v) = ((m-d)/sqrt2, (m+d)/sqrt2)
                    let frame = sample::sample_perp::<f64, _>(rng);
                    let (m, d) = (frame.u().coords(), frame.v().coords());
                    let s = std::f64::consts::FRAC_1_SQRT_2;
                    let u =
                        SpherePoint::new([s * (m[0] - d[0]), s * (m[1] - d[1]), s * (m[2] - d[2])])
                            .unwrap();
                    let v =
                        SpherePoint::new([s * (m[0] + d[0]), s * (m[1] + d[1]), s * (m[2] + d[2])])
                            .unwrap();
                    let fibre_point = PerpPair::new(u, v).unwrap();
                    let attached = rp2_attach(&fibre_point);
                    let m_point = SpherePoint::new(m).unwrap();
                    err = err.max(
                        attached
                            .rep
                            .dist(&m_point)
                            .min(attached.rep.dist(&-m_point)),
                    );
                }
                Outcome::sweep(config.samples, err)
            },
        },
        Check {
            name: "covers.diagonal_stratum",
            anchor: "f_l^2: Delta -> Delta is the antipodal map",
            kind: Kind::Identity,
            run: |rng, config| {
                let mut err = 0.0f64;
                let mut violations = 0usize;
                for ell in Ell::both() {
                    let out = diag_stratum_check::<f64, _>(ell, rng, config.samples / 2);
                    err = err.max(out.max_error);
                    violations += out.violations;
                }
                Outcome::sweep(config.samples, err.max(violations_to_error(violations)))
            },
        },
        Check {
            name: "covers.ut_antipodal",
            anchor: "corresponds to the antipodal map on UT S^2 and S^2",
            kind: Kind::Identity,
            run: |rng, config| {
                let out = antipodal_descent_check::<f64, _>(rng, config.samples);
                Outcome::sweep(out.samples, out.max_error)
            },
        },
        Check {
            name: "covers.ut_lift_roundtrip",
            anchor: "w^-1 i w = a and w^-1 k w = b",
            kind: Kind::Geometry,
            run: |rng, config| {
                let mut err = 0.0f64;
                for _ in 0..config.samples {
                    let z = sample::sample_s3::<f64, _>(rng);
                    let (a, b) = tangent_pair(&z);
                    match ut_lift(&a, &b) {
                        Ok((w, wn)) => {
                            err = err.max(w.dist(&z).min(wn.dist(&z)));
                            err = err.max(w.rotate(&ImaginaryUnit::i()).dist(&a));
                            err = err.max(w.rotate(&ImaginaryUnit::k()).dist(&b));
                        }
                        Err(_) => err = err.max(1.0),
                    }
                }
                Outcome::sweep(config.samples, err)
            },
        },
    ]
}

// ----------------------------------------------------------------- descent

fn descent_outcome(ell: Ell, rng: &mut ChaCha8Rng, config: &RunConfig) -> Outcome {
    match descent_check::<f64, _>(ell, rng, config.samples, config.tol_identity.max(1e-11)) {
        Ok(out) => {
            let sign = match (ell, out.realized) {
                (Ell::One, DescentSign::Inverse) => "sign=f1^-1",
                (Ell::One, DescentSign::Direct) => "sign=f1",
                (Ell::Five, DescentSign::Direct) => "sign=f5",
                (Ell::Five, DescentSign::Inverse) => "sign=f5^-1",
            };
            Outcome {
                samples: out.samples,
                max_error: out.max_error,
                detail: Some(sign.to_string()),
            }
        }
        Err(crate::Error::DescentFailure { best_error }) => {
            Outcome::sweep(config.samples, best_error)
        }
        Err(_) => Outcome::sweep(config.samples, 1.0),
    }
}

fn descent() -> Vec<Check> {
    vec![
        Check {
            name: "descent.l81_to_perp_f1",
            anchor: "it is now apparent that L_{8,l} = perp/f_l",
            kind: Kind::Identity,
            run: |rng, config| descent_outcome(Ell::One, rng, config),
        },
        Check {
            name: "descent.l85_to_perp_f5",
            anchor: "it is now apparent that L_{8,l} = perp/f_l",
            kind: Kind::Identity,
            run: |rng, config| descent_outcome(Ell::Five, rng, config),
        },
    ]
}

// ----------------------------------------------------------------- theorem

const THEOREM_PATH_STEPS: usize = 11;

fn theorem() -> Vec<Check> {
    vec![Check {
        name: "theorem.m1_m5_identification",
        anchor: "The manifolds M_1 and M_5 are diffeomorphic",
        kind: Kind::Identity,
        run: |rng, config| {
            let per_step = config.samples;
            match theorem_check::<f64, _>(
                rng,
                THEOREM_PATH_STEPS,
                per_step,
                config.tol_identity.max(1e-12),
            ) {
                Ok(out) => {
                    let err = out
                        .max_order_error
                        .max(out.max_displacement_error)
                        .max(out.max_orbit_error)
                        .max(violations_to_error(out.equivalence_mismatches));
                    Outcome::sweep(out.steps * out.samples_per_step, err)
                }
                Err(crate::Error::TheoremFailure { max_error, t }) => Outcome {
                    samples: THEOREM_PATH_STEPS * per_step,
                    max_error: max_error.max(1.0),
                    detail: Some(format!("failed at t={t}")),
                },
                Err(_) => Outcome::sweep(THEOREM_PATH_STEPS * per_step, 1.0),
            }
        },
    }]
}

// ------------------------------------------------------------- obstruction

const OBSTRUCTION_PATH_STEPS: usize = 101;
const OBSTRUCTION_WITNESS_ATTEMPTS: usize = 64;

fn obstruction() -> Vec<Check> {
    vec![
        Check {
            name: "obstruction.involution_defect_profile",
            anchor: "not connected by a path through order-2 elements",
            kind: Kind::Identity,
            run: |rng, _| match obstruction_check::<f64, _>(rng, OBSTRUCTION_PATH_STEPS, 1) {
                Ok(out) => {
                    let err = out
                        .endpoint_defect
                        .max((2.0 - out.max_defect).max(0.0))
                        .max(out.midpoint_error);
                    Outcome::sweep(out.steps, err)
                }
                Err(_) => Outcome::sweep(OBSTRUCTION_PATH_STEPS, 1.0),
            },
        },
        Check {
            name: "obstruction.stratum_witness",
            anchor: "is not respected by the action of the maps f_A",
            kind: Kind::Exact,
            run: |rng, _| {
                match obstruction_check::<f64, _>(
                    rng,
                    OBSTRUCTION_PATH_STEPS,
                    OBSTRUCTION_WITNESS_ATTEMPTS,
                ) {
                    Ok(out) => match out.witness {
                        Some(w) => {
                            // double-check the witness with the classifier
                            let a = geodesic(&Rotation3::identity(), &t_squared(), w.t).unwrap();
                            let image = fa(&a, &w.pair.as_pair());
                            let escaped = classify_default(&image) != StratumLabel::Perp
                                && image.u.dot(&image.v).abs() > 0.1;
                            Outcome {
                                samples: out.steps * OBSTRUCTION_WITNESS_ATTEMPTS,
                                max_error: violations_to_error(usize::from(!escaped)),
                                detail: Some(format!("witness at t={}", w.t)),
                            }
                        }
                        None => Outcome::sweep(out.steps * OBSTRUCTION_WITNESS_ATTEMPTS, 1.0),
                    },
                    Err(_) => Outcome::sweep(0, 1.0),
                }
            },
        },
    ]
}

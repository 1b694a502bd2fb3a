//! Property tests for the geometric invariants: these quantify over random
//! inputs what the unit tests pin at hand-picked points.

use proptest::prelude::*;

use pairsphere::actions::{displacement, f1, f5, fa, ActionGenerator, Ell};
use pairsphere::quat::{antipodal_cover_error, ImaginaryUnit, Quaternion, UnitQuaternion};
use pairsphere::quotients::{canonical_rep, orbit_of, quotient_eq, LensModel};
use pairsphere::so3::{lift_rotation, perp_to_rotation, rotation_to_perp, spin_cover, Rotation3};
use pairsphere::sphere_pairs::{
    acute_chart, chart_inverse, classify_default, folding_map, obtuse_chart, PairPoint, PerpPair,
    Sector, SpherePoint, StratumLabel,
};

type Q = Quaternion<f64>;
type U = UnitQuaternion<f64>;

fn quaternion() -> impl Strategy<Value = Q> {
    (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0)
        .prop_map(|(a, b, c, d)| Q::new(a, b, c, d))
        .prop_filter("bounded away from zero", |q| q.norm() > 0.1)
}

fn unit_quaternion() -> impl Strategy<Value = U> {
    quaternion().prop_map(|q| U::new(q.scale(q.norm().recip())).unwrap())
}

fn sphere_point() -> impl Strategy<Value = SpherePoint<f64>> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
        .prop_filter("bounded away from zero", |(x, y, z)| {
            (x * x + y * y + z * z).sqrt() > 0.1
        })
        .prop_map(|(x, y, z)| {
            let n = (x * x + y * y + z * z).sqrt();
            SpherePoint::new([x / n, y / n, z / n]).unwrap()
        })
}

fn imaginary_unit() -> impl Strategy<Value = ImaginaryUnit<f64>> {
    sphere_point().prop_map(|p| {
        let [x, y, z] = p.coords();
        ImaginaryUnit::new(x, y, z).unwrap()
    })
}

fn pair_point() -> impl Strategy<Value = PairPoint<f64>> {
    (sphere_point(), sphere_point()).prop_map(|(u, v)| PairPoint::new(u, v))
}

fn rotation() -> impl Strategy<Value = Rotation3<f64>> {
    unit_quaternion().prop_map(|w| spin_cover(&w))
}

fn perp_pair() -> impl Strategy<Value = PerpPair<f64>> {
    rotation().prop_map(|r| rotation_to_perp(&r))
}

proptest! {
    #[test]
    fn norm_is_multiplicative(p in quaternion(), q in quaternion()) {
        prop_assert!(((p * q).norm() - p.norm() * q.norm()).abs() < 1e-12);
    }

    #[test]
    fn unit_products_stay_unit(p in unit_quaternion(), q in unit_quaternion()) {
        prop_assert!(((p * q).as_quaternion().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn conjugation_is_an_isometry(w in unit_quaternion(), x in imaginary_unit(), y in imaginary_unit()) {
        let rotated = w.rotate(&x).dot(&w.rotate(&y));
        prop_assert!((rotated - x.dot(&y)).abs() < 1e-12);
    }

    #[test]
    fn hopf_is_constant_on_circle_cosets(w in unit_quaternion(), t in 0.0f64..std::f64::consts::TAU) {
        let lambda = U::new(Q::new(t.cos(), t.sin(), 0.0, 0.0)).unwrap();
        prop_assert!((lambda * w).hopf().dist(&w.hopf()) < 1e-12);
    }

    #[test]
    fn antipodal_identities_hold_everywhere(w in unit_quaternion()) {
        prop_assert!(antipodal_cover_error(&w) < 1e-12);
    }

    #[test]
    fn cover_is_anti_homomorphism(p in unit_quaternion(), q in unit_quaternion()) {
        let lhs = spin_cover(&(p * q));
        let rhs = spin_cover(&q) * spin_cover(&p);
        prop_assert!(lhs.frobenius_dist(&rhs) < 1e-11);
    }

    #[test]
    fn lift_recovers_sign_class(w in unit_quaternion()) {
        let (l, ln) = lift_rotation(&spin_cover(&w));
        prop_assert!(l.dist(&w).min(ln.dist(&w)) < 1e-9);
    }

    #[test]
    fn perp_and_rotation_are_inverse(p in perp_pair()) {
        let r = perp_to_rotation(&p);
        prop_assert!(rotation_to_perp(&r).dist(&p) < 1e-12);
        prop_assert!((r.det() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn open_strata_charts_round_trip(p in pair_point()) {
        match classify_default(&p) {
            StratumLabel::Acute => {
                let c = acute_chart(&p).unwrap();
                prop_assert!(chart_inverse(&c, Sector::Acute).dist(&p) < 1e-10);
            }
            StratumLabel::Obtuse => {
                let c = obtuse_chart(&p).unwrap();
                prop_assert!(chart_inverse(&c, Sector::Obtuse).dist(&p) < 1e-10);
            }
            _ => {}
        }
    }

    #[test]
    fn folding_is_equivariant(p in pair_point()) {
        let label = classify_default(&p);
        prop_assume!(label == StratumLabel::Acute || label == StratumLabel::Obtuse);
        for ell in Ell::both() {
            let g = ell.generator::<f64>();
            let before = folding_map(&p).unwrap();
            let after = folding_map(&g.apply(&p)).unwrap();
            prop_assert!((after.t() - before.t()).abs() < 1e-10);
            let moved = g.apply(&before.orthopair().as_pair());
            prop_assert!(after.orthopair().as_pair().dist(&moved) < 1e-10);
        }
    }

    #[test]
    fn action_squares_to_antipodal(a in rotation(), p in pair_point()) {
        prop_assert!(fa(&a, &fa(&a, &p)).dist(&p.antipodal()) < 1e-12);
        prop_assert!(f1(&f1(&p)).dist(&f5(&f5(&p))) < 1e-12);
    }

    #[test]
    fn displacement_is_constant(a in rotation(), p in pair_point()) {
        prop_assert!((displacement(&a, &p) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn deck_orbits_close(z in unit_quaternion()) {
        for model in LensModel::all() {
            let orbit = orbit_of(|w| model.deck(w), &z, model.order(), 1e-10).unwrap();
            prop_assert_eq!(orbit.len(), model.order());
        }
    }

    #[test]
    fn quotient_eq_matches_canonical_reps(p in pair_point(), q in pair_point(), k in 0usize..4) {
        let g = |x: &PairPoint<f64>| f1(x);
        let op = orbit_of(g, &p, 4, 1e-10).unwrap();
        let oq = orbit_of(g, &q, 4, 1e-10).unwrap();
        let same_orbit = quotient_eq(&p, &q, g, 4, 1e-8);
        let same_rep = canonical_rep(&op).dist(canonical_rep(&oq)) < 1e-8;
        prop_assert_eq!(same_orbit, same_rep);
        // and a point genuinely on the orbit agrees through both routes
        let shifted = ActionGenerator::F1.apply_iter(&p, k);
        let os = orbit_of(g, &shifted, 4, 1e-10).unwrap();
        prop_assert!(quotient_eq(&p, &shifted, g, 4, 1e-8));
        prop_assert!(canonical_rep(&op).dist(canonical_rep(&os)) < 1e-8);
    }

    #[test]
    fn intertwiner_conjugates_f1_into_fa(a in rotation(), p in pair_point()) {
        let g = pairsphere::actions::Intertwiner::new(a);
        prop_assert!(g.apply(&f1(&p)).dist(&fa(&a, &g.apply(&p))) < 1e-12);
    }

    #[test]
    fn generator_orders_divide_four(p in pair_point(), a in rotation()) {
        for g in [ActionGenerator::F1, ActionGenerator::F5, ActionGenerator::FA(a)] {
            prop_assert!(g.apply_iter(&p, 4).dist(&p) < 1e-12);
            // and not less: the square moves every point by the diameter
            prop_assert!(g.apply_iter(&p, 2).dist(&p) > 1.9);
        }
    }
}

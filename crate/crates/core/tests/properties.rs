//! Randomized invariants, checked with proptest over small random ideals.

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use proptest::test_runner::FailurePersistence;

use newtide::{
    integral_closure, lattice_box, lct, lp_classify, multiplier_ideal, parse_ideal, Exponent,
    MonomialIdeal, NewtonPolyhedron, PointClass, Rat, RatVec, Threshold,
};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None::<Box<dyn FailurePersistence>>,
        ..ProptestConfig::default()
    }
}

fn arb_exponent(dim: usize, max: u64) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0..=max, dim).prop_map(Exponent::new)
}

fn arb_ideal(max_dim: usize, max_exp: u64, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_dim).prop_flat_map(move |dim| {
        prop::collection::vec(arb_exponent(dim, max_exp), 1..=max_gens)
            .prop_map(move |gens| MonomialIdeal::new(dim, gens).unwrap())
    })
}

fn arb_pos_rat() -> impl Strategy<Value = Rat> {
    (1i64..=6, 1i64..=6).prop_map(|(p, q)| Rat::new(BigInt::from(p), BigInt::from(q)))
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn minimal_generators_form_an_antichain(ideal in arb_ideal(4, 9, 5)) {
        let gens = ideal.generators();
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                prop_assert!(i == j || !a.divides(b).unwrap(), "{a:?} divides {b:?}");
            }
        }
        let again = MonomialIdeal::new(ideal.dim(), gens.to_vec()).unwrap();
        prop_assert_eq!(again, ideal);
    }

    #[test]
    fn parse_display_round_trip(ideal in arb_ideal(4, 9, 5)) {
        let text = ideal.to_string();
        let back = parse_ideal(&text, Some(ideal.dim())).unwrap();
        prop_assert_eq!(back, ideal);
    }

    #[test]
    fn serde_round_trip(ideal in arb_ideal(4, 9, 5)) {
        let json = serde_json::to_string(&ideal).unwrap();
        let back: MonomialIdeal = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, ideal);
    }

    #[test]
    fn product_commutes(a in arb_ideal(3, 6, 4), b in arb_ideal(3, 6, 4)) {
        prop_assume!(a.dim() == b.dim());
        prop_assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
    }

    #[test]
    fn lattice_box_is_sorted_and_complete(bounds in prop::collection::vec(0u64..=3, 1..=4)) {
        let points: Vec<Exponent> = lattice_box(bounds.clone()).collect();
        let expected: usize = bounds.iter().map(|&b| b as usize + 1).product();
        prop_assert_eq!(points.len(), expected);
        for pair in points.windows(2) {
            prop_assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn closure_contains_and_is_idempotent(ideal in arb_ideal(3, 6, 4)) {
        let closed = integral_closure(&ideal).unwrap();
        prop_assert!(closed.contains_ideal(&ideal).unwrap());
        prop_assert_eq!(integral_closure(&closed).unwrap(), closed.clone());
    }

    #[test]
    fn generators_and_vertices_touch_the_region(ideal in arb_ideal(3, 6, 4)) {
        let poly = NewtonPolyhedron::from_ideal(&ideal).unwrap();
        for g in ideal.generators() {
            prop_assert_ne!(
                poly.classify(&g.to_rat_vec()).unwrap(),
                PointClass::Exterior
            );
        }
        for v in poly.vertices() {
            prop_assert_eq!(poly.classify(v).unwrap(), PointClass::Boundary);
        }
    }

    #[test]
    fn reciprocity_and_witness_tightness(ideal in arb_ideal(3, 6, 4)) {
        let result = lct(&ideal).unwrap();
        match (&result.threshold, &result.witness) {
            (Threshold::Finite(t), Some(facet)) => {
                prop_assert_eq!(t * &result.remoteness, Rat::one());
                let ratio = Rat::new(facet.normal_sum(), facet.offset().clone());
                prop_assert_eq!(&ratio, t);
            }
            (Threshold::Infinite, None) => {
                prop_assert!(ideal.is_unit());
            }
            other => prop_assert!(false, "inconsistent result {other:?}"),
        }
    }

    #[test]
    fn threshold_separates_trivial_from_proper(ideal in arb_ideal(3, 6, 4)) {
        match lct(&ideal).unwrap().threshold {
            Threshold::Finite(t) => {
                let below = &t * Rat::new(BigInt::from(6), BigInt::from(7));
                prop_assert!(multiplier_ideal(&ideal, &below).unwrap().is_unit());
                prop_assert!(!multiplier_ideal(&ideal, &t).unwrap().is_unit());
            }
            Threshold::Infinite => {
                let five = Rat::new(BigInt::from(5), BigInt::one());
                prop_assert!(multiplier_ideal(&ideal, &five).unwrap().is_unit());
            }
        }
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn power_law_for_polyhedra(ideal in arb_ideal(3, 5, 4), m in 2u64..=3) {
        let base = NewtonPolyhedron::from_ideal(&ideal).unwrap();
        let powered =
            NewtonPolyhedron::from_ideal(&ideal.pow(m as u32).unwrap()).unwrap();
        let scaled = base.scale(&Rat::new(BigInt::from(m), BigInt::one())).unwrap();
        prop_assert_eq!(powered.facets(), scaled.facets());
        let mut pv = powered.vertices().to_vec();
        let mut sv = scaled.vertices().to_vec();
        pv.sort();
        sv.sort();
        prop_assert_eq!(pv, sv);
    }

    #[test]
    fn permuting_coordinates_preserves_the_threshold(
        ideal in arb_ideal(3, 6, 4),
        seed in any::<u64>(),
    ) {
        let mut perm: Vec<usize> = (0..ideal.dim()).collect();
        // cheap deterministic shuffle driven by the seed
        for i in (1..perm.len()).rev() {
            perm.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let permuted = ideal.permute(&perm).unwrap();
        prop_assert_eq!(
            lct(&permuted).unwrap().threshold,
            lct(&ideal).unwrap().threshold
        );
    }

    #[test]
    fn lp_and_facets_classify_points_identically(
        ideal in arb_ideal(3, 5, 4),
        raw in prop::collection::vec((0i64..=12, 1i64..=3), 3),
    ) {
        let poly = NewtonPolyhedron::from_ideal(&ideal).unwrap();
        let p = RatVec::new(
            raw.into_iter()
                .take(ideal.dim())
                .map(|(a, b)| Rat::new(BigInt::from(a), BigInt::from(b)))
                .collect(),
        );
        prop_assume!(p.dim() == ideal.dim());
        let verdict = lp_classify(ideal.generators(), &p).unwrap();
        prop_assert_eq!(verdict.class, poly.classify(&p).unwrap());
        if verdict.class != PointClass::Exterior {
            prop_assert_eq!(verdict.slack, Some(poly.diagonal_slack(&p).unwrap()));
        }
    }

    #[test]
    fn scaling_commutes_with_classification(
        ideal in arb_ideal(3, 5, 4),
        r in arb_pos_rat(),
        raw in prop::collection::vec((0i64..=12, 1i64..=3), 3),
    ) {
        let poly = NewtonPolyhedron::from_ideal(&ideal).unwrap();
        let scaled = poly.scale(&r).unwrap();
        let p = RatVec::new(
            raw.into_iter()
                .take(ideal.dim())
                .map(|(a, b)| Rat::new(BigInt::from(a), BigInt::from(b)))
                .collect(),
        );
        prop_assume!(p.dim() == ideal.dim());
        let stretched = RatVec::new(p.coords().iter().map(|c| c * &r).collect());
        prop_assert_eq!(
            scaled.classify(&stretched).unwrap(),
            poly.classify(&p).unwrap()
        );
    }

    #[test]
    fn multiplier_ideals_shrink_as_r_grows(
        ideal in arb_ideal(3, 5, 4),
        r in arb_pos_rat(),
        bump in arb_pos_rat(),
    ) {
        let s = &r + &bump;
        let at_r = multiplier_ideal(&ideal, &r).unwrap();
        let at_s = multiplier_ideal(&ideal, &s).unwrap();
        prop_assert!(at_r.contains_ideal(&at_s).unwrap());
    }
}

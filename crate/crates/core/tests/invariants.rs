//! Property-based invariants over random models.

mod common;

use common::{random_boundary_cloud, random_cloud, random_comonotonic_cloud};
use credal_core::chateauneuf::{cloud_lower_via_transport, possibility_to_randomset};
use credal_core::cloudops::{
    cloud_to_randomset, cuts_nested, is_comonotonic, is_nonempty, outer_bounds,
};
use credal_core::credal::{
    is_2_monotone, is_feasible, lp_lower, lp_upper, mobius_transform, zeta_transform, MassFunction,
    SetFunction,
};
use credal_core::rational::{rat, rint, Rat};
use credal_core::{cloud_constraints, possibility_constraints, Cloud, OutcomeSpace};
use num::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cloud_strategy(max_n: usize) -> impl Strategy<Value = Cloud> {
    (2..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_cloud(&mut rng, n, 8)
    })
}

fn comonotonic_strategy(max_n: usize) -> impl Strategy<Value = Cloud> {
    (2..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_comonotonic_cloud(&mut rng, n, 8)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn cuts_are_antitone_and_ordered(cloud in cloud_strategy(6)) {
        let levels = cloud.level_values();
        let gammas = levels.values();
        for pair in gammas.windows(2) {
            for strict in [false, true] {
                let wide = cloud.upper_cut(&pair[0], strict).unwrap();
                let narrow = cloud.upper_cut(&pair[1], strict).unwrap();
                prop_assert!(narrow.is_subset(wide));
                let wide = cloud.lower_cut(&pair[0], strict).unwrap();
                let narrow = cloud.lower_cut(&pair[1], strict).unwrap();
                prop_assert!(narrow.is_subset(wide));
            }
        }
        for gamma in gammas {
            let c = cloud.lower_cut(gamma, false).unwrap();
            let b = cloud.upper_cut(gamma, false).unwrap();
            prop_assert!(c.is_subset(b));
        }
    }

    #[test]
    fn mirror_involution_and_credal_invariance(cloud in cloud_strategy(5)) {
        prop_assert_eq!(cloud.mirror().mirror(), cloud.clone());
        let original = cloud_constraints(&cloud);
        let mirrored = cloud_constraints(&cloud.mirror());
        for event in cloud.space().all_events() {
            prop_assert_eq!(lp_lower(&original, event), lp_lower(&mirrored, event));
        }
    }

    #[test]
    fn possibility_pair_generates_the_same_credal_set(cloud in cloud_strategy(5)) {
        let direct = cloud_constraints(&cloud);
        let (upper, complement) = cloud.possibility_pair();
        let merged = possibility_constraints(&upper)
            .merge(&possibility_constraints(&complement))
            .unwrap();
        for event in cloud.space().all_events() {
            prop_assert_eq!(lp_lower(&direct, event), lp_lower(&merged, event));
        }
    }

    #[test]
    fn nonemptiness_scan_agrees_with_lp_feasibility(cloud in cloud_strategy(6)) {
        prop_assert_eq!(is_nonempty(&cloud), is_feasible(&cloud_constraints(&cloud)));
    }

    #[test]
    fn comonotonicity_equals_nested_cuts(cloud in cloud_strategy(6)) {
        prop_assert_eq!(is_comonotonic(&cloud), cuts_nested(&cloud));
    }

    #[test]
    fn outer_bounds_sandwich_the_exact_range(cloud in cloud_strategy(4)) {
        let constraints = cloud_constraints(&cloud);
        if !is_feasible(&constraints) {
            return Ok(());
        }
        for event in cloud.space().all_events() {
            let (outer_lo, outer_hi) = outer_bounds(&cloud, event);
            let lo = lp_lower(&constraints, event).expect_feasible();
            let hi = lp_upper(&constraints, event).expect_feasible();
            prop_assert!(outer_lo <= lo);
            prop_assert!(lo <= hi);
            prop_assert!(hi <= outer_hi);
        }
    }

    #[test]
    fn inner_randomset_dominates_the_lower_probability(cloud in cloud_strategy(4)) {
        let constraints = cloud_constraints(&cloud);
        if !is_feasible(&constraints) {
            return Ok(());
        }
        let mass = cloud_to_randomset(&cloud).unwrap();
        for event in cloud.space().all_events() {
            let exact = lp_lower(&constraints, event).expect_feasible();
            prop_assert!(mass.bel(event) >= exact);
        }
    }

    #[test]
    fn comonotonic_randomset_is_exact(cloud in comonotonic_strategy(5)) {
        let constraints = cloud_constraints(&cloud);
        let mass = cloud_to_randomset(&cloud).unwrap();
        for event in cloud.space().all_events() {
            let exact = lp_lower(&constraints, event).expect_feasible();
            prop_assert_eq!(mass.bel(event), exact);
        }
    }

    #[test]
    fn comonotonic_pbox_rows_keep_the_credal_set(cloud in comonotonic_strategy(5)) {
        use credal_core::cloudops::{cloud_to_genpbox, genpbox_to_cloud};
        let constraints = cloud_constraints(&cloud);
        let gpb = cloud_to_genpbox(&cloud).unwrap();
        let chain_rows = gpb.constraints();
        let roundtrip = genpbox_to_cloud(&gpb);
        prop_assert_eq!(&roundtrip, &cloud);
        let back = cloud_constraints(&roundtrip);
        for event in cloud.space().all_events() {
            let exact = lp_lower(&constraints, event);
            prop_assert_eq!(lp_lower(&chain_rows, event), exact.clone());
            prop_assert_eq!(lp_lower(&back, event), exact);
        }
    }

    #[test]
    fn pair_nonemptiness_scan_agrees_with_lp_feasibility(
        (n, seed) in (2usize..=5, any::<u64>())
    ) {
        use credal_core::cloudops::pair_nonempty;
        use credal_core::credal::is_feasible as feasible;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pi1 = common::random_possibility(&mut rng, n, 6);
        let pi2 = common::random_possibility(&mut rng, n, 6);
        let merged = possibility_constraints(&pi1)
            .merge(&possibility_constraints(&pi2))
            .unwrap();
        prop_assert_eq!(pair_nonempty(&pi1, &pi2).unwrap(), feasible(&merged));
        // Normalized pointwise minimum is a sufficient condition.
        let min_normalized = (0..n).any(|i| pi1.value(i).is_one() && pi2.value(i).is_one());
        if min_normalized {
            prop_assert!(pair_nonempty(&pi1, &pi2).unwrap());
        }
    }

    #[test]
    fn cuts_match_the_predicate_scan(
        (cloud, num, strict) in (cloud_strategy(6), 0i64..=8, any::<bool>())
    ) {
        let gamma = rat(num, 8);
        let upper = cloud.upper_cut(&gamma, strict).unwrap();
        let lower = cloud.lower_cut(&gamma, strict).unwrap();
        for i in 0..cloud.space().len() {
            let in_upper = if strict { cloud.pi(i) > &gamma } else { cloud.pi(i) >= &gamma };
            let in_lower = if strict { cloud.delta(i) > &gamma } else { cloud.delta(i) >= &gamma };
            prop_assert_eq!(upper.contains(i), in_upper);
            prop_assert_eq!(lower.contains(i), in_lower);
        }
    }

    #[test]
    fn transport_route_agrees_with_the_simplex(cloud in cloud_strategy(4)) {
        let constraints = cloud_constraints(&cloud);
        for event in cloud.space().all_events() {
            prop_assert_eq!(
                cloud_lower_via_transport(&cloud, event),
                lp_lower(&constraints, event)
            );
        }
    }

    #[test]
    fn mobius_roundtrip_is_identity(values in prop::collection::vec(0i64..=16, 16)) {
        let space = OutcomeSpace::new(["a", "b", "c", "d"]).unwrap();
        let mut f: Vec<Rat> = values.into_iter().map(|v| rat(v, 16)).collect();
        f[0] = Rat::zero();
        f[15] = Rat::one();
        let f = SetFunction::new(space.clone(), f).unwrap();
        let masses = mobius_transform(&f);
        prop_assert_eq!(zeta_transform(&space, &masses), f);
    }

    #[test]
    fn belief_functions_are_two_monotone(
        picks in prop::collection::vec((1u128..15, 1i64..=8), 1..5)
    ) {
        let space = OutcomeSpace::new(["a", "b", "c", "d"]).unwrap();
        let total: i64 = picks.iter().map(|(_, w)| w).sum();
        let focal: Vec<_> = picks
            .iter()
            .map(|(bits, w)| (space.event_from_bits(*bits), rat(*w, total)))
            .collect();
        let mass = MassFunction::new(space.clone(), focal).unwrap();
        let bel = mass.bel_function();
        prop_assert!(is_2_monotone(&bel, 8).unwrap().holds());
        for event in space.all_events() {
            prop_assert!(mass.bel(event) <= mass.pl(event));
            prop_assert_eq!(mass.bel(event) + mass.pl(event.complement()), rint(1));
        }
    }

    #[test]
    fn possibility_randomset_matches_the_necessity_mobius(cloud in cloud_strategy(5)) {
        let (upper, _) = cloud.possibility_pair();
        let mass = possibility_to_randomset(&upper);
        let space = upper.space().clone();
        let values: Vec<Rat> = space.all_events().map(|e| upper.necessity(e)).collect();
        let necessity = SetFunction::new(space.clone(), values).unwrap();
        let mut masses = mobius_transform(&necessity);
        masses.sort_by_key(|(e, _)| e.bits());
        prop_assert_eq!(masses, mass.focal().to_vec());
    }
}

#[test]
fn aggregated_md_distributions_dominate_every_extension() {
    use credal_core::intervals::{
        interval_partial_order, linear_extensions, md_extension_lower, md_extension_upper,
        md_lower_possibility, md_upper_possibility,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..20 {
        let n = rand::Rng::gen_range(&mut rng, 2..=4usize);
        let intervals = common::random_probability_interval(&mut rng, n);
        let upper = md_upper_possibility(&intervals, 10).unwrap();
        let lower = md_lower_possibility(&intervals, 10).unwrap();
        let order = interval_partial_order(&intervals);
        for ext in linear_extensions(&order, 10).unwrap() {
            if let Some(row) = md_extension_upper(&intervals, &ext) {
                for (i, v) in row.iter().enumerate() {
                    assert!(upper.value(i) >= v);
                }
            }
            if let Some(row) = md_extension_lower(&intervals, &ext) {
                for (i, v) in row.iter().enumerate() {
                    assert!(lower.value(i) >= v);
                }
            }
        }
    }
}

#[test]
fn interval_clouds_outer_approximate_the_intervals() {
    use credal_core::intervals::intervals_to_cloud;
    let mut rng = ChaCha8Rng::seed_from_u64(76);
    for _ in 0..15 {
        let n = rand::Rng::gen_range(&mut rng, 2..=5usize);
        let intervals = common::random_probability_interval(&mut rng, n);
        let cloud = intervals_to_cloud(&intervals, 10).unwrap();
        let outer = cloud_constraints(&cloud);
        let exact = intervals.constraints();
        for event in intervals.space().all_events() {
            let outer_lo = lp_lower(&outer, event).expect_feasible();
            let exact_lo = lp_lower(&exact, event).expect_feasible();
            assert!(outer_lo <= exact_lo);
            let outer_hi = credal_core::credal::lp_upper(&outer, event).expect_feasible();
            let exact_hi = credal_core::credal::lp_upper(&exact, event).expect_feasible();
            assert!(outer_hi >= exact_hi);
        }
    }
}

#[test]
fn multi_order_intersections_outer_approximate_the_intervals() {
    use credal_core::intervals::multi_order_intersection;
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    for _ in 0..15 {
        let n = rand::Rng::gen_range(&mut rng, 2..=4usize);
        let intervals = common::random_probability_interval(&mut rng, n);
        // ceil(n/2) reversal-paired total orders.
        let mut orders: Vec<Vec<usize>> = Vec::new();
        for k in 0..n.div_ceil(2) {
            let mut order: Vec<usize> = (0..n).map(|i| (i + k) % n).collect();
            orders.push(order.clone());
            order.reverse();
            orders.push(order);
        }
        let merged = multi_order_intersection(&intervals, &orders).unwrap();
        let exact = intervals.constraints();
        for event in intervals.space().all_events() {
            let outer_lo = lp_lower(&merged, event).expect_feasible();
            let exact_lo = lp_lower(&exact, event).expect_feasible();
            let gap = &exact_lo - &outer_lo;
            assert!(gap >= Rat::zero(), "multi-order route must stay outer");
        }
    }
}

#[test]
fn boundary_clouds_behave_as_predicted() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..60 {
        let n = 2 + rng.gen_range(0..4usize);
        let exact = random_boundary_cloud(&mut rng, n, 0);
        assert!(is_nonempty(&exact), "delta_pi cloud must be non-empty");
        let relaxed = random_boundary_cloud(&mut rng, n, -1);
        assert!(
            is_nonempty(&relaxed),
            "delta below delta_pi stays non-empty"
        );
        assert!(
            !is_nonempty(&random_boundary_cloud(&mut rng, n, 1)),
            "delta above delta_pi empties the credal set"
        );
    }
}

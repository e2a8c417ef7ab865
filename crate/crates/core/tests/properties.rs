mod common;

use common::*;
use proptest::prelude::*;
use sparse_halves::arith::{CirclePoint, CircularInterval, EndMode, Rational};
use sparse_halves::circle::{lambda_count, z_xi_backward};
use sparse_halves::{
    blow_up, chromatic_number, find_homomorphism, generalized_andrasfai, independence_number, is_dense,
    min_edges_over_subsets, verify_homomorphism, z_xi, CircularArrangement, Graph, HomCaps, SubsetBudget,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn blow_up_strategy() -> impl Strategy<Value = (usize, usize, Vec<usize>)> {
    (2usize..=4, 1usize..=3).prop_flat_map(|(k, d)| {
        let m = (2 * k - 1) * (d - 1) + 2;
        (Just(k), Just(d), proptest::collection::vec(0usize..=3, m))
    })
}

fn arrangement_strategy() -> impl Strategy<Value = CircularArrangement> {
    blow_up_strategy()
        .prop_filter("needs two vertices", |(_, _, m)| m.iter().sum::<usize>() >= 2)
        .prop_map(|(k, d, m)| arrangement(k, d, &m).1)
}

fn point_strategy() -> impl Strategy<Value = CirclePoint> {
    (0i64..240).prop_map(|a| CirclePoint::from_ratio(a, 240))
}

fn mode_strategy() -> impl Strategy<Value = EndMode> {
    prop_oneof![Just(EndMode::Closed), Just(EndMode::Open), Just(EndMode::Half)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_search_matches_enumeration(g in graph_strategy(13), frac in 0usize..=100) {
        let s = g.n() * frac / 100;
        let m = min_edges_over_subsets(&g, s, SubsetBudget::default()).unwrap();
        prop_assert_eq!(m.min_edges, brute_min_edges(&g, s));
        prop_assert_eq!(edges_within(&g, m.witness.members()), m.min_edges);
        let seq = min_edges_over_subsets(&g, s, SubsetBudget::default().sequential()).unwrap();
        prop_assert_eq!(seq.witness, m.witness);
    }

    #[test]
    fn density_verdict_agrees_with_minimum(g in graph_strategy(11), p in 1i64..=10, b in 0i64..=20) {
        let alpha = Rational::new(p, 10);
        let beta = Rational::new(b, 100);
        let v = is_dense(&g, &alpha, &beta, SubsetBudget::default()).unwrap();
        let s = (g.n() as i64 * p / 10) as usize;
        prop_assert_eq!(v.s, s);
        let min = brute_min_edges(&g, s);
        prop_assert_eq!(v.dense, Rational::from(min) > beta * Rational::from(g.n() * g.n()));
    }

    #[test]
    fn independence_number_matches_reference(g in graph_strategy(14)) {
        let (a, witness) = independence_number(&g).unwrap();
        prop_assert_eq!(a, alpha(&g));
        prop_assert_eq!(edges_within(&g, witness.members()), 0);
    }

    #[test]
    fn blow_up_maps_onto_its_base((k, d, mults) in blow_up_strategy()) {
        let base = generalized_andrasfai(k, d).unwrap();
        let b = blow_up(&base, &mults).unwrap();
        let h = sparse_halves::Homomorphism { source: b.result.clone(), target: base.clone(), map: b.class_of.clone() };
        prop_assert!(verify_homomorphism(&h).unwrap());
        if mults.iter().all(|&t| t > 0) {
            prop_assert_eq!(chromatic_number(&b.result).unwrap(), chromatic_number(&base).unwrap());
            let found = find_homomorphism(&base, &b.result, HomCaps { max_source: 64, max_target: 64 }).unwrap();
            prop_assert!(found.is_some());
        }
    }

    #[test]
    fn lambda_matches_pointwise_count(arr in arrangement_strategy(), a in point_strategy(), len in 0i64..=240,
                                      sm in mode_strategy(), em in mode_strategy()) {
        let i = CircularInterval::from_length(a, &Rational::new(len, 240), sm, em);
        prop_assert_eq!(lambda_count(&arr, &i), lambda2(arr.positions(), &i));
    }

    #[test]
    fn lambda_splits_at_interior_points(arr in arrangement_strategy(), a in point_strategy(), l1 in 0i64..120, l2 in 0i64..120) {
        let b = a.shift(&Rational::new(l1, 240));
        let c = b.shift(&Rational::new(l2, 240));
        let whole = lambda_count(&arr, &CircularInterval::new(a.clone(), c.clone(), EndMode::Closed, EndMode::Open));
        let left = lambda_count(&arr, &CircularInterval::new(a, b.clone(), EndMode::Closed, EndMode::Open));
        let right = lambda_count(&arr, &CircularInterval::new(b, c, EndMode::Closed, EndMode::Open));
        prop_assert_eq!(whole, left + right);
    }

    #[test]
    fn closed_arc_and_open_complement_cover_everything(arr in arrangement_strategy(), a in point_strategy(), len in 1i64..240) {
        let b = a.shift(&Rational::new(len, 240));
        let inside = lambda_count(&arr, &CircularInterval::closed(a.clone(), b.clone()));
        let outside = lambda_count(&arr, &CircularInterval::open(b, a));
        prop_assert_eq!(inside + outside, 2 * arr.n() as u64);
    }

    #[test]
    fn arc_halves_read_both_ways(arr in arrangement_strategy(), xi in point_strategy()) {
        let z = z_xi(&arr, &xi).unwrap();
        prop_assert_eq!(z, z_of(&arr, &xi));
        // reflecting the circle swaps forward and backward halves
        let mirrored = arr.mirrored();
        prop_assert_eq!(z_xi_backward(&mirrored, &xi.mirrored()).unwrap(), z);
    }

    #[test]
    fn representation_survives_rotation_and_reflection(arr in arrangement_strategy(), t in 0i64..240) {
        prop_assert!(angle_ok(&arr));
        prop_assert!(angle_ok(&arr.rotated(&Rational::new(t, 240))));
        prop_assert!(angle_ok(&arr.mirrored()));
    }

    #[test]
    fn json_round_trips(arr in arrangement_strategy()) {
        let text = serde_json::to_string(&arr).unwrap();
        let back: CircularArrangement = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.positions(), arr.positions());
        prop_assert_eq!(back.graph(), arr.graph());
        let g = arr.graph().clone();
        let again: Graph = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        prop_assert_eq!(again, g);
    }

    #[test]
    fn rationals_print_exactly(num in -1000i64..1000, den in 1i64..1000) {
        let q = Rational::new(num, den);
        let text = q.to_string();
        prop_assert!(text.contains('/'));
        prop_assert_eq!(text.parse::<Rational>().unwrap(), q.clone());
        let json = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), q);
    }
}

#[test]
fn balanced_blow_ups_scale_density() {
    // Blowing up every class by t multiplies half-minima of the blow-up family by t^2.
    let c5 = generalized_andrasfai(2, 2).unwrap();
    let base = min_edges_over_subsets(&blow_up(&c5, &[2; 5]).unwrap().result, 5, SubsetBudget::default()).unwrap();
    for t in [2usize, 3] {
        let g = blow_up(&c5, &[2 * t; 5]).unwrap().result;
        let m = min_edges_over_subsets(&g, 5 * t, SubsetBudget::default()).unwrap();
        assert_eq!(m.min_edges, base.min_edges * t * t);
    }
}

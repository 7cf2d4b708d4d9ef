mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tricyclic_core::canon::{are_isomorphic, canonical_form};
use tricyclic_core::charpoly::{bseq, charpoly_oracle, charpoly_recursive, matching_count_oracle};
use tricyclic_core::energy::{coulson_energy, energy_certified, energy_compare, EnergyOrder};
use tricyclic_core::families::{recognize, FamilySpec};
use tricyclic_core::io::{from_graph6, from_json, to_graph6, to_json};
use tricyclic_core::quasiorder::{compare, Relation};
use tricyclic_core::Graph;

fn graph(seed: u64, n: usize, extra: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    common::random_bipartite_cyclic(n, extra, &mut rng)
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm).unwrap()
}

/// Θ_I and Θ_II specs with small cycles and arms.
fn theta_spec() -> impl Strategy<Value = FamilySpec> {
    let cyc = prop::sample::select(vec![4usize, 6, 8]);
    let arm = 2usize..6;
    prop_oneof![
        (cyc.clone(), cyc.clone(), cyc.clone(), arm.clone(), arm.clone(), 1usize..6).prop_map(
            |(a, b, k, l1, l2, lc)| {
                let lc = lc.min(b / 2 + 1);
                FamilySpec::ThetaI { n: a + b + k + l1 + l2 - 4, a, b, k, l1, l2, lc }
            }
        ),
        (cyc.clone(), cyc.clone(), cyc, arm.clone(), arm.clone(), arm).prop_map(|(a, b, k, l1, l2, l3)| {
            FamilySpec::ThetaII { n: a + b + k + l1 + l2 + l3 - 5, a, b, k, l1, l2, l3 }
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charpoly_routes_agree(seed in any::<u64>(), n in 4usize..13, extra in 0usize..4) {
        let g = graph(seed, n, extra);
        prop_assert_eq!(charpoly_recursive(&g), charpoly_oracle(&g).unwrap());
        prop_assert_eq!(bseq(&g).unwrap(), matching_count_oracle(&g).unwrap());
    }

    #[test]
    fn bseq_starts_with_one_and_edge_count(seed in any::<u64>(), n in 2usize..14, extra in 0usize..4) {
        let g = graph(seed, n, extra);
        let b = bseq(&g).unwrap();
        prop_assert_eq!(b.get(0), BigInt::from(1));
        prop_assert_eq!(b.get(1), BigInt::from(g.size()));
        prop_assert!(b.b.iter().all(|x| *x >= BigInt::from(0)));
    }

    #[test]
    fn invariants_ignore_labeling(seed in any::<u64>(), n in 4usize..13, extra in 0usize..4) {
        let g = graph(seed, n, extra);
        let h = shuffled(&g, seed ^ 0x5a5a);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(charpoly_recursive(&g), charpoly_recursive(&h));
        prop_assert_eq!(compare(&g, &h).unwrap().relation, Relation::Equal);
    }

    #[test]
    fn serialization_round_trips(seed in any::<u64>(), n in 1usize..20, extra in 0usize..3) {
        let g = graph(seed, n, extra);
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn comparison_is_antisymmetric(s1 in any::<u64>(), s2 in any::<u64>(), n in 6usize..12) {
        let g = graph(s1, n, 2);
        let h = graph(s2, n, 2);
        let fwd = compare(&g, &h).unwrap();
        let back = compare(&h, &g).unwrap();
        prop_assert_eq!(fwd.relation.reversed(), back.relation);
        prop_assert_eq!(fwd.witness(), back.witness());
    }

    #[test]
    fn strict_order_implies_smaller_energy(s1 in any::<u64>(), s2 in any::<u64>(), n in 6usize..12) {
        let g = graph(s1, n, 1);
        let h = graph(s2, n, 2);
        let q = compare(&g, &h).unwrap().relation;
        if q == Relation::StrictlyLess || q == Relation::StrictlyGreater {
            let e = energy_compare(&g, &h, 1e-9).unwrap();
            let want = if q == Relation::StrictlyLess { EnergyOrder::Less } else { EnergyOrder::Greater };
            prop_assert_eq!(e.order, want);
        }
    }

    #[test]
    fn certified_energy_brackets_coulson(seed in any::<u64>(), n in 2usize..12, extra in 0usize..3) {
        let g = graph(seed, n, extra);
        let e = energy_certified(&g, 1e-9).unwrap();
        let c = coulson_energy(&g, 1e-8).unwrap();
        prop_assert!(e.lo <= e.hi);
        prop_assert!((e.midpoint_f64() - c.value).abs() < 1e-6);
        // E(G) >= 2 sqrt(m) for any graph.
        prop_assert!(e.hi_f64() + 1e-9 >= 2.0 * (g.size() as f64).sqrt());
    }

    #[test]
    fn theta_specs_round_trip(spec in theta_spec()) {
        let s = spec.normalized();
        prop_assert_eq!(s.to_string().parse::<FamilySpec>().unwrap(), s);
        let g = s.build().unwrap();
        prop_assert_eq!(g.order(), s.order());
        prop_assert_eq!(g.size(), g.order() + 2);
        prop_assert!(g.is_bipartite() && g.is_connected());
        let r = recognize(&shuffled(&g, 7)).unwrap();
        prop_assert!(are_isomorphic(&r.build().unwrap(), &g).unwrap());
    }
}

#[test]
fn energy_corpus_is_consistent() {
    for (s, g) in common::energy_corpus() {
        let e = energy_certified(&g, 1e-10).unwrap();
        let c = coulson_energy(&g, 1e-9).unwrap();
        assert!((e.midpoint_f64() - c.value).abs() < 1e-6, "{s}");
    }
}

#[test]
fn tricyclic_class_oracle_matches_small_orders() {
    for n in 12..=13 {
        let full = tricyclic_core::enumerate::enumerate_full(n).unwrap().len();
        assert_eq!(full, common::class_oracle_count(n), "n = {n}");
    }
}

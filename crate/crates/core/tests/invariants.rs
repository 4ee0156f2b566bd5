use proptest::prelude::*;

use twdl_core::bounds::{bound_kset_lower, bound_tset, bound_vd_lower, ktree_average_degree};
use twdl_core::extraction::{extract_degree_d_tset, extract_tset, greedy_color_ktree};
use twdl_core::generators::{interval_model, random_ktree, IntervalKind};
use twdl_core::graph::{
    complete_to_ktree, is_chordal, is_ktree, is_perfect_elimination_order, lex_bfs, parse_edge_list,
    treewidth_exact, vd_set, write_edge_list,
};
use twdl_core::interval::{interval_bounded_degree_mis, interval_max_independent_set};
use twdl_core::oracles::{oracle_alpha, oracle_alpha_t};
use twdl_core::Graph;

fn ktree() -> impl Strategy<Value = (usize, usize, u64)> {
    (1usize..=4).prop_flat_map(|k| (Just(k), k + 1..=14usize, any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_ktrees_are_ktrees((k, n, seed) in ktree()) {
        let g = random_ktree(k, n, seed).unwrap();
        prop_assert!(is_ktree(&g, k));
        prop_assert_eq!(g.edge_count(), k * n - k * (k + 1) / 2);
        let mut peo = lex_bfs(&g);
        peo.reverse();
        prop_assert!(is_perfect_elimination_order(&g, &peo));
        prop_assert_eq!(is_chordal(&g).unwrap().width, k);
    }

    #[test]
    fn colouring_is_proper_with_rainbow_cliques((k, n, seed) in ktree()) {
        let g = random_ktree(k, n, seed).unwrap();
        let c = greedy_color_ktree(&g, k).unwrap();
        prop_assert!(c.iter().all(|&x| (1..=k + 1).contains(&x)));
        prop_assert!(g.edges().all(|(u, v)| c[u] != c[v]));
    }

    #[test]
    fn extraction_meets_guarantee_and_oracle_dominates((k, n, seed) in ktree(), t in 0usize..=4) {
        let t = t.min(k);
        let g = random_ktree(k, n, seed).unwrap();
        let s = extract_tset(&g, k, t).unwrap();
        let bound = bound_tset(n, k, t).unwrap().value;
        prop_assert!(num_rational::Rational64::from_integer(s.vertices.len() as i64) >= bound);
        prop_assert!(treewidth_exact(&g.induced(&s.vertices)).unwrap().0 <= t);
        let oracle = oracle_alpha_t(&g, t).unwrap();
        prop_assert!(oracle.value >= s.vertices.len());
    }

    #[test]
    fn degree_bounded_sets_respect_degree((k, n, seed) in ktree(), t in 0usize..=4, extra in 0usize..=4) {
        let t = t.min(k);
        let d = 2 * k + extra;
        let g = random_ktree(k, n, seed).unwrap();
        let s = extract_degree_d_tset(&g, k, t, d).unwrap();
        prop_assert!(s.vertices.iter().all(|&v| g.degree(v) <= d));
        prop_assert!(s.witness_width <= t);
        prop_assert!(s.vertices.len() * (k + 1) >= (t + 1) * vd_set(&g, d).len());
    }

    #[test]
    fn vd_counts_meet_both_lower_bounds((k, n, seed) in ktree(), extra in 0usize..=4) {
        let g = random_ktree(k, n, seed).unwrap();
        let d = 2 * k - 1 + extra;
        let vd = num_rational::Rational64::from_integer(vd_set(&g, d).len() as i64);
        prop_assert!(vd >= bound_kset_lower(n, k, d).unwrap().value);
        prop_assert!(vd >= bound_vd_lower(n, k, ktree_average_degree(n, k), d).value);
    }

    #[test]
    fn completion_keeps_edges((k, n, seed) in ktree(), drop in proptest::collection::vec(any::<bool>(), 64)) {
        let g = random_ktree(k, n, seed).unwrap();
        let kept: Vec<_> = g.edges().zip(drop.iter().cycle()).filter(|(_, &d)| !d).map(|(e, _)| e).collect();
        let sub = Graph::new(n, kept.iter().copied()).unwrap();
        let h = complete_to_ktree(&sub, k).unwrap();
        prop_assert!(is_ktree(&h, k));
        prop_assert!(kept.iter().all(|&(u, v)| h.has_edge(u, v)));
    }

    #[test]
    fn edge_list_text_is_stable((k, n, seed) in ktree()) {
        let g = random_ktree(k, n, seed).unwrap();
        let text = write_edge_list(&g, &[format!("seed {seed}")]);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn interval_sets_are_maximum(k in 1usize..=3, n in 2usize..=18, seed in any::<u64>()) {
        let n = n.max(k + 1);
        let m = interval_model(IntervalKind::Random, n, k, seed).unwrap();
        let g = m.intersection_graph();
        prop_assert!(m.clique_number() <= k + 1);
        let alpha = oracle_alpha(&g).unwrap().value;
        prop_assert_eq!(interval_max_independent_set(&m).len(), alpha);
        let s = interval_bounded_degree_mis(&m, k).unwrap();
        prop_assert_eq!(s.vertices.len(), alpha);
        prop_assert!(g.is_independent(&s.vertices));
        prop_assert!(s.vertices.iter().all(|&v| g.degree(v) <= 2 * k));
    }
}

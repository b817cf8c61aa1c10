//! Library results checked against independent brute force.

use std::collections::BTreeSet;

use lexext_core::bounds::{cr_upper, ir_upper_lex};
use lexext_core::enumerate::{clique_profile, independence_number, independence_profile};
use lexext_core::lexgraph::{build_lex_graph, lex_maximum_independent_sets};
use lexext_core::verify::{for_each_graph, DEFAULT_BUDGET};
use lexext_core::{Count, Graph};
use proptest::prelude::*;

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect())
}

fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

fn naive_counts(g: &Graph, keep: impl Fn(&Graph, &[usize]) -> bool) -> Vec<u64> {
    let mut counts = vec![0; g.order() + 1];
    for s in subsets(g.order()).filter(|s| keep(g, s)) {
        counts[s.len()] += 1;
    }
    counts
}

fn as_u64(counts: &[Count]) -> Vec<u64> {
    counts.iter().map(|c| c.try_into().unwrap()).collect()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = lexext_core::lexgraph::lex_pairs(n);
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

#[test]
fn lex_graph_counts_equal_closed_form() {
    for n in 2..=10usize {
        for m in 1..=(n * (n - 1) / 2) as u64 {
            let g = build_lex_graph(n, m).unwrap();
            let naive = naive_counts(&g, is_independent);
            for r in 2..=n {
                let bound: u64 = (&ir_upper_lex(n as u64, m, r as u64).unwrap()).try_into().unwrap();
                assert_eq!(naive[r], bound, "n={n} m={m} r={r}");
            }
        }
    }
}

#[test]
fn lex_maximum_sets_are_all_maximum_sets() {
    for n in 2..=9usize {
        for m in 1..=(n * (n - 1) / 2) as u64 {
            let g = build_lex_graph(n, m).unwrap();
            let alpha = independence_number(&g);
            let brute: BTreeSet<Vec<usize>> = subsets(n)
                .filter(|s| s.len() == alpha && is_independent(&g, s))
                .collect();
            let got: BTreeSet<Vec<usize>> = lex_maximum_independent_sets(n, m)
                .unwrap()
                .iter()
                .map(|s| s.to_vec())
                .collect();
            assert_eq!(got, brute, "n={n} m={m}");
        }
    }
}

#[test]
fn clique_bound_holds_and_is_reached() {
    // every graph on 6 vertices with m edges has at most cr_upper(m, r) r-cliques,
    // and some graph reaches it
    let n = 6;
    for m in 0..=15u64 {
        let mut best = vec![0u64; n + 1];
        for_each_graph(n, m, DEFAULT_BUDGET, |g| {
            let c = as_u64(clique_profile(g).counts());
            for r in 3..=n {
                best[r] = best[r].max(c[r]);
            }
        })
        .unwrap();
        for r in 3..=n as u64 {
            let bound: u64 = (&cr_upper(m, r).unwrap()).try_into().unwrap();
            assert_eq!(best[r as usize], bound, "m={m} r={r}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn profile_matches_subset_enumeration(g in graph_strategy(10)) {
        let profile = independence_profile(&g);
        let naive = naive_counts(&g, is_independent);
        prop_assert_eq!(as_u64(profile.counts()), naive.clone());
        prop_assert_eq!(independence_number(&g), naive.iter().rposition(|&c| c > 0).unwrap());
        prop_assert_eq!(profile.get(0), Count::from(1u32));
        prop_assert_eq!(profile.get(1), Count::from(g.order()));
        let pairs = g.order() * g.order().saturating_sub(1) / 2;
        if g.order() >= 2 {
            prop_assert_eq!(profile.get(2), Count::from(pairs - g.edge_count()));
        }
    }

    #[test]
    fn clique_profile_matches_direct_enumeration(g in graph_strategy(9)) {
        prop_assert_eq!(as_u64(clique_profile(&g).counts()), naive_counts(&g, is_clique));
        prop_assert_eq!(g.complement().complement(), g);
    }
}

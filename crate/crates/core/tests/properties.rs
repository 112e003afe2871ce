use std::collections::HashSet;

use itertools::Itertools;
use proptest::prelude::*;

use rainbow_arrow::arrow::{partitions_into_k_blocks, rainbow_induced_exists, stirling2, Coloring};
use rainbow_arrow::iso::{are_isomorphic, automorphisms, certificate, find_isomorphism};
use rainbow_arrow::{graph6, Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .tuple_combinations()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    n == b.vertex_count()
        && (0..n).permutations(n).any(|p| {
            (0..n)
                .tuple_combinations()
                .all(|(u, v)| a.has_edge(u, v) == b.has_edge(p[u], p[v]))
        })
}

fn brute_group_order(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0..n)
        .permutations(n)
        .filter(|p| {
            (0..n)
                .tuple_combinations()
                .all(|(u, v)| g.has_edge(u, v) == g.has_edge(p[u], p[v]))
        })
        .count()
}

/// Every choice of one vertex per class, tested directly.
fn brute_rainbow(g: &Graph, c: &Coloring, h: &Graph) -> bool {
    c.classes()
        .into_iter()
        .multi_cartesian_product()
        .any(|pick| {
            let s = VertexSet::new(pick, g.vertex_count()).unwrap();
            brute_isomorphic(&g.induced_subgraph(&s).unwrap(), h)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_edges_and_degrees(g in graph_strategy(12)) {
        let n = g.vertex_count();
        let co = g.complement();
        prop_assert_eq!(g.edge_count() + co.edge_count(), n * n.saturating_sub(1) / 2);
        for v in 0..n {
            prop_assert_eq!(g.degree(v) + co.degree(v), n - 1);
        }
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        let text = graph6::emit(&g).unwrap();
        prop_assert_eq!(graph6::parse(&text).unwrap(), g);
    }

    #[test]
    fn certificate_ignores_labels((g, perm) in graph_with_perm(10)) {
        let q = g.permuted(&perm).unwrap();
        prop_assert_eq!(certificate(&g).unwrap(), certificate(&q).unwrap());
        let map = find_isomorphism(&g, &q).unwrap().expect("relabelled copy");
        for (u, v) in g.edges() {
            prop_assert!(q.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn isomorphism_matches_brute_force(a in graph_strategy(6), b in graph_strategy(6)) {
        let b = if a.vertex_count() == b.vertex_count() { b } else { a.complement() };
        prop_assert_eq!(are_isomorphic(&a, &b).unwrap(), brute_isomorphic(&a, &b));
    }

    #[test]
    fn group_order_matches_brute_force(g in graph_strategy(7)) {
        let info = automorphisms(&g).unwrap();
        prop_assert_eq!(info.group_order, brute_group_order(&g).into());
        let orbit_total: usize = info.vertex_orbits.iter().map(Vec::len).sum();
        prop_assert_eq!(orbit_total, g.vertex_count());
    }

    #[test]
    fn rainbow_search_matches_brute_force(
        g in graph_strategy(7),
        h in graph_strategy(4),
        seed in any::<u64>(),
    ) {
        let (n, k) = (g.vertex_count(), h.vertex_count());
        prop_assume!(k >= 1 && n >= k);
        let all: Vec<Coloring> = partitions_into_k_blocks(n, k).unwrap().collect();
        let c = &all[(seed % all.len() as u64) as usize];
        let found = rainbow_induced_exists(&g, c, &h).unwrap();
        prop_assert_eq!(found.is_some(), brute_rainbow(&g, c, &h));
        if let Some(map) = found {
            prop_assert!(c.is_rainbow(&map));
            for (a, b) in (0..k).tuple_combinations() {
                prop_assert_eq!(h.has_edge(a, b), g.has_edge(map[a], map[b]));
            }
        }
    }

    #[test]
    fn partition_count_is_stirling(n in 1usize..=9, k in 1usize..=9) {
        prop_assume!(k <= n);
        let parts: Vec<Coloring> = partitions_into_k_blocks(n, k).unwrap().collect();
        prop_assert_eq!(parts.len() as u128, stirling2(n, k).unwrap());
        let distinct: HashSet<&Coloring> = parts.iter().collect();
        prop_assert_eq!(distinct.len(), parts.len());
        for c in &parts {
            prop_assert_eq!(&c.normalized(), c);
        }
    }

    #[test]
    fn stirling_recurrence(n in 1usize..=60, k in 1usize..=60) {
        prop_assume!(k <= n);
        if let (Some(a), Some(b), Some(c)) = (stirling2(n, k), stirling2(n - 1, k), stirling2(n - 1, k - 1)) {
            prop_assert_eq!(a, k as u128 * b + c);
        }
    }
}

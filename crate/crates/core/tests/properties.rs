mod common;

use andrasfai_core::{
    andrasfai_graph, find_odd_cycle_through_edge, is_bipartite, partition_ab, read_dimacs, signature, u1, u2,
    witness_c, witness_d, write_dimacs, Edge, EdgeSet, Graph, Removal, ResiduePair,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn sparse_graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let max_edges = (n * (n - 1) / 2).min(3 * n);
        proptest::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |pairs| {
            let mut g = Graph::new(n);
            for (a, b) in pairs {
                if a != b {
                    g.add_edge(a, b).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bipartite_check_agrees_with_brute_force(g in graph_strategy(10)) {
        let verdict = is_bipartite(&g);
        prop_assert_eq!(verdict.is_bipartite(), common::brute_bipartite(&g));
        match verdict.partition() {
            Some(p) => {
                prop_assert!(p.covers(g.n()));
                prop_assert!(p.check_proper(&g).is_ok());
            }
            None => {
                let c = verdict.odd_cycle().unwrap();
                prop_assert!(c.is_odd());
                prop_assert!(c.validate(&g).is_ok());
            }
        }
    }

    #[test]
    fn shortest_odd_cycle_through_edge_matches_brute_force(g in graph_strategy(8)) {
        for e in g.edges() {
            let found = find_odd_cycle_through_edge(&g, &e).unwrap();
            let expected = common::brute_shortest_odd_cycle_through(&g, e.u(), e.v());
            prop_assert_eq!(found.as_ref().map(|c| c.len()), expected);
            if let Some(c) = found {
                prop_assert!(c.is_odd());
                prop_assert!(c.validate(&g).is_ok());
                prop_assert!(c.edge_set().contains(&e));
            }
        }
    }

    #[test]
    fn removal_partitions_the_edge_set(g in graph_strategy(12), mask in any::<u64>()) {
        let all = g.edge_set();
        let chosen: EdgeSet = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let rest = g.remove_edges(&chosen, Removal::Strict).unwrap();
        let kept = rest.edge_set();
        prop_assert!(kept.is_disjoint(&chosen));
        prop_assert_eq!(kept.union(&chosen), all);
        prop_assert_eq!(rest.edge_count() + chosen.len(), g.edge_count());
    }

    #[test]
    fn strict_removal_rejects_foreign_edges(g in graph_strategy(8)) {
        let missing = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .find(|&(u, v)| !g.has_edge(u, v));
        if let Some((u, v)) = missing {
            let foreign = EdgeSet::from_pairs([(u, v)]).unwrap();
            prop_assert!(g.remove_edges(&foreign, Removal::Strict).is_err());
            prop_assert_eq!(g.remove_edges(&foreign, Removal::Lenient).unwrap(), g.clone());
        }
    }

    #[test]
    fn dimacs_round_trip(g in sparse_graph_strategy(200)) {
        let text = write_dimacs(&g);
        let back = read_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_dimacs(&back), text);
    }

    #[test]
    fn edge_normalisation_is_symmetric(a in 0usize..1000, b in 0usize..1000) {
        prop_assume!(a != b);
        let e = Edge::new(a, b).unwrap();
        prop_assert_eq!(e, Edge::new(b, a).unwrap());
        prop_assert!(e.u() < e.v());
        prop_assert_eq!(Edge::parse_key(&e.key()), Some(e));
    }
}

#[test]
fn u1_and_u2_have_fixed_residue_pairs() {
    for k in 2..=64 {
        for e in u1(k).unwrap().iter() {
            assert_eq!(ResiduePair::of_edge(e), ResiduePair::new(2, 1), "k={k} {e}");
        }
        for e in u2(k).unwrap().iter() {
            assert_eq!(ResiduePair::of_edge(e), ResiduePair::new(0, 1), "k={k} {e}");
        }
    }
}

#[test]
fn constructed_edges_are_monochromatic_under_ab() {
    for k in 2..=64 {
        let g = andrasfai_graph(k).unwrap();
        let p = partition_ab(k).unwrap();
        assert!(p.covers(g.n()));
        let fk = u1(k).unwrap().union(&u2(k).unwrap());
        assert_eq!(p.monochromatic_edges(&g), fk, "k={k}");
    }
}

#[test]
fn witness_signatures_follow_fixed_residue_patterns() {
    let r = ResiduePair::new;
    let c_pattern = [r(2, 1), r(1, 0), r(0, 1), r(1, 0), r(0, 2)];
    let d_pattern = [r(0, 1), r(1, 2), r(2, 0), r(0, 1), r(1, 0)];
    for k in 3..=30 {
        let g = andrasfai_graph(k).unwrap();
        for j in 0..k / 2 {
            assert_eq!(signature(&g, &witness_c(k, j).unwrap()).unwrap(), c_pattern, "k={k} j={j}");
        }
        if k % 2 == 1 {
            for i in 0..(k - 1) / 2 {
                assert_eq!(signature(&g, &witness_d(k, i).unwrap()).unwrap(), d_pattern, "k={k} i={i}");
            }
        }
    }
}

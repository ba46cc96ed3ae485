//! Property tests over randomly sampled oriented graphs (via random codes).

use okings_core::dominance::{
    self, classify_triple, kings, r_kings, reachable_within_two, serfs, weak_kings, weak_serfs,
    weakly_reachable_within_two,
};
use okings_core::enumerate::{code_space, decode, encode, GraphCode};
use okings_core::graph::OrientedGraph;
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = OrientedGraph> {
    (1usize..=12)
        .prop_flat_map(|n| (Just(n), 0..code_space(n).unwrap()))
        .prop_map(|(n, code)| decode(&GraphCode { n, code }).unwrap())
}

fn arb_tournament() -> impl Strategy<Value = OrientedGraph> {
    (1usize..=10, any::<u64>()).prop_map(|(n, bits)| {
        let mut arcs = Vec::new();
        let mut p = 0;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if bits >> p & 1 == 1 {
                    arcs.push((i, j));
                } else {
                    arcs.push((j, i));
                }
                p += 1;
            }
        }
        OrientedGraph::build(n, &arcs).unwrap()
    })
}

proptest! {
    #[test]
    fn score_identities(g in arb_graph()) {
        let n = g.vertex_count();
        let mut total = 0;
        for v in 1..=n {
            let r = g.vertex_report(v).unwrap();
            prop_assert_eq!(r.out_degree + r.in_degree + r.tie_degree, n - 1);
            prop_assert_eq!(r.score, 2 * r.out_degree + r.tie_degree);
            prop_assert_eq!(r.score, n - 1 + r.out_degree - r.in_degree);
            total += r.score;
        }
        prop_assert_eq!(total, n * (n - 1));
        prop_assert_eq!(g.score_sequence().sum(), n * (n - 1));
    }

    #[test]
    fn converse_involution_and_score_flip(g in arb_graph()) {
        let n = g.vertex_count();
        prop_assert_eq!(g.converse().converse(), g.clone());
        let mut flipped: Vec<usize> = g
            .score_sequence()
            .scores()
            .iter()
            .map(|s| 2 * (n - 1) - s)
            .collect();
        flipped.sort_unstable();
        let conv_seq = g.converse().score_sequence();
        prop_assert_eq!(conv_seq.scores(), flipped.as_slice());
    }

    #[test]
    fn duality(g in arb_graph()) {
        let conv = g.converse();
        prop_assert_eq!(weak_serfs(&g), weak_kings(&conv));
        prop_assert_eq!(serfs(&g), kings(&conv));
    }

    #[test]
    fn weak_contains_strict(g in arb_graph()) {
        let n = g.vertex_count();
        for u in 1..=n {
            for v in 1..=n {
                if u != v && reachable_within_two(&g, u, v).unwrap() {
                    prop_assert!(weakly_reachable_within_two(&g, u, v).unwrap().is_some());
                }
            }
        }
        let k = kings(&g);
        let wk = weak_kings(&g);
        prop_assert!(k.iter().all(|v| wk.contains(v)));
        let s = serfs(&g);
        let ws = weak_serfs(&g);
        prop_assert!(s.iter().all(|v| ws.contains(v)));
    }

    #[test]
    fn weak_witnesses_match_relations(g in arb_graph()) {
        use okings_core::dominance::WeakPathWitness;
        use okings_core::graph::Relation;
        let n = g.vertex_count();
        for u in 1..=n {
            for v in 1..=n {
                if u == v {
                    continue;
                }
                if let Some(w) = weakly_reachable_within_two(&g, u, v).unwrap() {
                    match w {
                        WeakPathWitness::DirectArc => {
                            prop_assert_eq!(g.relation(u, v), Relation::Forward)
                        }
                        WeakPathWitness::DirectTie => {
                            prop_assert_eq!(g.relation(u, v), Relation::Tie)
                        }
                        WeakPathWitness::ArcArc { via } => {
                            prop_assert_eq!(g.relation(u, via), Relation::Forward);
                            prop_assert_eq!(g.relation(via, v), Relation::Forward);
                        }
                        WeakPathWitness::ArcTie { via } => {
                            prop_assert_eq!(g.relation(u, via), Relation::Forward);
                            prop_assert_eq!(g.relation(via, v), Relation::Tie);
                        }
                        WeakPathWitness::TieArc { via } => {
                            prop_assert_eq!(g.relation(u, via), Relation::Tie);
                            prop_assert_eq!(g.relation(via, v), Relation::Forward);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn max_score_vertex_is_weak_king_and_weak_sets_nonempty(g in arb_graph()) {
        let n = g.vertex_count();
        let wk = weak_kings(&g);
        let ws = weak_serfs(&g);
        prop_assert!(!wk.is_empty());
        prop_assert!(!ws.is_empty());
        let max = (1..=n).map(|v| g.score(v).unwrap()).max().unwrap();
        for v in 1..=n {
            if g.score(v).unwrap() == max {
                prop_assert!(wk.contains(&v));
            }
        }
    }

    #[test]
    fn r_king_nesting(g in arb_graph()) {
        prop_assert_eq!(r_kings(&g, 2).unwrap(), kings(&g));
        for r in 1..=4 {
            let smaller = r_kings(&g, r).unwrap();
            let larger = r_kings(&g, r + 1).unwrap();
            prop_assert!(smaller.iter().all(|v| larger.contains(v)));
        }
    }

    #[test]
    fn weak_forms_collapse_on_tournaments(t in arb_tournament()) {
        prop_assert!(t.is_tournament());
        prop_assert_eq!(weak_kings(&t), kings(&t));
        prop_assert_eq!(weak_serfs(&t), serfs(&t));
    }

    #[test]
    fn triple_classification_ignores_labeling(g in arb_graph()) {
        let n = g.vertex_count();
        if n < 3 {
            return Ok(());
        }
        for u in 1..=n {
            for v in (u + 1)..=n {
                for w in (v + 1)..=n {
                    let kind = classify_triple(&g, u, v, w).unwrap();
                    for (a, b, c) in [
                        (u, w, v),
                        (v, u, w),
                        (v, w, u),
                        (w, u, v),
                        (w, v, u),
                    ] {
                        prop_assert_eq!(classify_triple(&g, a, b, c).unwrap(), kind);
                    }
                }
            }
        }
    }

    #[test]
    fn code_roundtrip(n in 1usize..=13, seed in any::<u128>()) {
        let code = seed % code_space(n).unwrap();
        let gc = GraphCode { n, code };
        let g = decode(&gc).unwrap();
        prop_assert_eq!(encode(&g).unwrap(), gc);
    }

    #[test]
    fn arc_list_roundtrip(g in arb_graph()) {
        let rebuilt = OrientedGraph::build(g.vertex_count(), &g.arcs()).unwrap();
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn transitive_graphs_have_transitive_triples(g in arb_graph()) {
        let n = g.vertex_count();
        let census = dominance::triple_census(&g);
        let expected = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
        prop_assert_eq!(census.0 + census.1, expected);
        prop_assert_eq!(
            dominance::is_transitive_oriented_graph(&g),
            census.1 == 0
        );
    }
}

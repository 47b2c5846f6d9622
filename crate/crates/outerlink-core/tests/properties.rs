//! Randomized invariant checks. Fixed exhaustive facts live in the unit
//! tests and the acceptance suite; everything here samples.

use proptest::prelude::*;
use proptest::sample::Index;

use outerlink_core::canon::{canonical_form, isomorphic};
use outerlink_core::{
    apex_extension, classify, convex_diagram, crossing_change,
    enumerate_cyclic_orders, find_nonsplit_outer_link, has_minor,
    is_intrinsically_s1_linked_bruteforce, is_outerplanar, is_planar, link_parity_sum,
    lk2_cycle_cycle, lk2_s1, parity_sum, standard_graph, CyclicOrder, Edge, EdgePairLink, Graph,
    GraphName, ObstructionKind, OuterDiagram, OverRule,
};

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u32..(1u32 << bits)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

fn arb_graph_with_order(max_n: usize) -> impl Strategy<Value = (Graph, CyclicOrder)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let verts: Vec<usize> = g.vertices().collect();
        let order = Just(verts).prop_shuffle().prop_map(|s| CyclicOrder::new(s).unwrap());
        (Just(g), order)
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn contraction_shrinks_by_one_vertex(g in arb_graph(6), pick in any::<Index>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let e = edges[pick.index(edges.len())];
        let contracted = g.contract_edge(e).unwrap();
        prop_assert_eq!(contracted.vertex_count(), g.vertex_count() - 1);
        prop_assert!(contracted.edge_count() < g.edge_count());
    }

    #[test]
    fn expansion_contracts_back(g in arb_graph(6), pick in any::<Index>()) {
        let n = g.vertex_count();
        let v = pick.index(n);
        for expanded in g.enumerate_expansions(v).unwrap() {
            let back = expanded.contract_edge(Edge::new(v, n)).unwrap();
            prop_assert!(isomorphic(&back, &g).unwrap());
        }
    }

    #[test]
    fn apex_join_counts(g in arb_graph(6)) {
        let joined = g.join_apex();
        prop_assert_eq!(joined.vertex_count(), g.vertex_count() + 1);
        prop_assert_eq!(joined.edge_count(), g.edge_count() + g.vertex_count());
    }

    #[test]
    fn canonical_form_ignores_labeling(g in arb_graph(6), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        // cheap seeded Fisher-Yates; proptest drives the seed
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled = g.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap().code(), canonical_form(&relabeled).unwrap().code());
    }

    #[test]
    fn lk2_is_symmetric_and_dihedral(order in arb_permutation(7), picks in arb_permutation(7)) {
        let (a, b, c, d) = (picks[0], picks[1], picks[2], picks[3]);
        let e1 = Edge::new(a, b);
        let e2 = Edge::new(c, d);
        let fwd = EdgePairLink::new(e1, e2).unwrap();
        let rev = EdgePairLink::new(e2, e1).unwrap();
        let o = CyclicOrder::new(order.clone()).unwrap();
        let value = lk2_s1(&o, &fwd).unwrap();
        prop_assert_eq!(lk2_s1(&o, &rev).unwrap(), value);
        for k in 0..order.len() {
            let mut rotated = order[k..].to_vec();
            rotated.extend_from_slice(&order[..k]);
            let r = CyclicOrder::new(rotated).unwrap();
            prop_assert_eq!(lk2_s1(&r, &fwd).unwrap(), value);
        }
        let mut reflected = order.clone();
        reflected.reverse();
        let m = CyclicOrder::new(reflected).unwrap();
        prop_assert_eq!(lk2_s1(&m, &fwd).unwrap(), value);
    }

    #[test]
    fn k32_cross_class_swap_preserves_parity(
        order in arb_permutation(5),
        u in 0usize..3,
        w in 3usize..5,
    ) {
        let g = standard_graph(GraphName::CompleteBipartite(3, 2)).unwrap();
        let o = CyclicOrder::new(order.clone()).unwrap();
        let mut swapped = order;
        let ui = swapped.iter().position(|&x| x == u).unwrap();
        let wi = swapped.iter().position(|&x| x == w).unwrap();
        swapped.swap(ui, wi);
        let s = CyclicOrder::new(swapped).unwrap();
        prop_assert_eq!(parity_sum(&o, &g).unwrap(), parity_sum(&s, &g).unwrap());
    }

    #[test]
    fn minor_witnesses_revalidate(g in arb_graph(6)) {
        for kind in [ObstructionKind::K4, ObstructionKind::K32, ObstructionKind::K5, ObstructionKind::K33] {
            let pattern = kind.graph();
            if let Some(witness) = has_minor(&g, &pattern).unwrap() {
                prop_assert!(witness.validate(&g, &pattern).is_ok());
            }
        }
    }

    #[test]
    fn outerplanar_iff_apex_planar(g in arb_graph(6)) {
        prop_assert_eq!(is_outerplanar(&g).outerplanar, is_planar(&g.join_apex()).planar);
    }

    #[test]
    fn minors_survive_edge_addition(g in arb_graph(6), pick in any::<Index>()) {
        let mut missing = Vec::new();
        for i in 0..g.vertex_count() {
            for j in i + 1..g.vertex_count() {
                if !g.has_edge(i, j) {
                    missing.push((i, j));
                }
            }
        }
        prop_assume!(!missing.is_empty());
        let (a, b) = missing[pick.index(missing.len())];
        let bigger = g.with_edge(a, b).unwrap();
        for kind in [ObstructionKind::K4, ObstructionKind::K32, ObstructionKind::K5, ObstructionKind::K33] {
            let pattern = kind.graph();
            if has_minor(&g, &pattern).unwrap().is_some() {
                prop_assert!(has_minor(&bigger, &pattern).unwrap().is_some());
            }
        }
    }

    #[test]
    fn crossings_depend_on_order_not_rule((g, o) in arb_graph_with_order(6), seed in any::<u64>()) {
        let lex = convex_diagram(&g, &o, &OverRule::LexicographicOver).unwrap();
        let rnd = convex_diagram(&g, &o, &OverRule::Random(seed)).unwrap();
        let pairs = |d: &OuterDiagram| -> Vec<(Edge, Edge)> {
            d.crossings()
                .iter()
                .map(|c| {
                    let (x, y) = c.pair();
                    if x <= y { (x, y) } else { (y, x) }
                })
                .collect()
        };
        prop_assert_eq!(pairs(&lex), pairs(&rnd));
        for e in g.edges() {
            prop_assert_eq!(lex.traversal(e), rnd.traversal(e));
        }
    }

    #[test]
    fn crossing_change_is_an_involution((g, o) in arb_graph_with_order(6), seed in any::<u64>()) {
        let d = convex_diagram(&g, &o, &OverRule::Random(seed)).unwrap();
        for id in 0..d.crossings().len() {
            let once = crossing_change(&d, id).unwrap();
            prop_assert_ne!(&once, &d);
            let twice = crossing_change(&once, id).unwrap();
            prop_assert_eq!(&twice, &d);
        }
    }

    #[test]
    fn k5_links_extend_through_the_apex(seed in any::<u64>(), pick in any::<Index>()) {
        let g = standard_graph(GraphName::Complete(5)).unwrap();
        let orders = enumerate_cyclic_orders(&g).unwrap();
        let o = &orders[pick.index(orders.len())];
        let d = convex_diagram(&g, o, &OverRule::Random(seed)).unwrap();
        let link = find_nonsplit_outer_link(&d).unwrap();
        prop_assume!(link.cycle().len() == 3);
        let s = apex_extension(&d);
        let apex_triangle = [link.edge().u(), link.edge().v(), s.apex()];
        prop_assert_eq!(lk2_cycle_cycle(&s, link.cycle(), &apex_triangle).unwrap(), 1);
    }

    #[test]
    fn diagram_text_roundtrip((g, o) in arb_graph_with_order(6), seed in any::<u64>()) {
        let d = convex_diagram(&g, &o, &OverRule::Random(seed)).unwrap();
        let reparsed = OuterDiagram::from_text(&d.to_text()).unwrap();
        prop_assert_eq!(&reparsed, &d);
        prop_assert_eq!(reparsed.to_text(), d.to_text());
    }

    #[test]
    fn classification_flags_are_consistent(g in arb_graph(6)) {
        let r = classify(&g).unwrap();
        prop_assert_eq!(r.intrinsically_s1_linked, !r.outerplanar);
        prop_assert_eq!(r.intrinsically_outer_linked, !r.planar);
        prop_assert_eq!(r.outer_flat_and_linkless, r.planar);
        if r.outerplanar {
            prop_assert!(r.planar);
        }
        if r.intrinsically_outer_linked {
            prop_assert!(r.intrinsically_s1_linked);
        }
    }

    #[test]
    fn random_diagram_parity_never_strands_a_witness((g, o) in arb_graph_with_order(6), seed in any::<u64>()) {
        let d = convex_diagram(&g, &o, &OverRule::Random(seed)).unwrap();
        let witness = find_nonsplit_outer_link(&d);
        if link_parity_sum(&d) == 1 {
            prop_assert!(witness.is_some());
        }
    }
}

// Fixed-set monotonicity: one extra edge or isolated vertex never unlinks.
#[test]
fn linking_survives_additions() {
    for name in [GraphName::Complete(4), GraphName::CompleteBipartite(3, 2)] {
        let g = standard_graph(name).unwrap();
        assert!(is_intrinsically_s1_linked_bruteforce(&g).unwrap().is_linked());
        let n = g.vertex_count();
        let mut grown = Graph::new(n + 1).unwrap();
        for e in g.edges() {
            grown = grown.with_edge(e.u(), e.v()).unwrap();
        }
        assert!(is_intrinsically_s1_linked_bruteforce(&grown).unwrap().is_linked());
        for i in 0..n {
            for j in i + 1..n {
                if !g.has_edge(i, j) {
                    let denser = g.with_edge(i, j).unwrap();
                    assert!(is_intrinsically_s1_linked_bruteforce(&denser).unwrap().is_linked());
                }
            }
        }
    }
}

//! Range invariants that span modules: dominance of the identity vertex,
//! equivalence of the two adjacency routes on cyclic groups, and the
//! same-order dichotomy on cyclic groups.

use powerlab_core::{
    enumerate_abelian_groups_in, AbelianGroup, AdjacencyStrategy, PowerGraph, Variant,
};

#[test]
fn identity_vertex_dominates_up_to_200() {
    for g in enumerate_abelian_groups_in(2, 200) {
        let pg = PowerGraph::build(&g, Variant::Full);
        assert_eq!(
            pg.graph().degree(0),
            g.order() as usize - 1,
            "identity degree in {g}"
        );
    }
}

#[test]
fn divisibility_fast_path_is_edge_identical_up_to_200() {
    for n in 2..=200u64 {
        let g = AbelianGroup::cyclic(n).unwrap();
        let fast = PowerGraph::build_with(&g, Variant::Proper, AdjacencyStrategy::Auto);
        let slow = PowerGraph::build_with(&g, Variant::Proper, AdjacencyStrategy::Membership);
        assert_eq!(fast.graph(), slow.graph(), "C{n}");
    }
}

#[test]
fn same_order_dichotomy_holds_in_cyclic_groups_up_to_200() {
    // cyclic groups have one subgroup per order, so same-order elements
    // generate the same subgroup
    for n in 2..=200u64 {
        let g = AbelianGroup::cyclic(n).unwrap();
        let elements: Vec<_> = g.elements().collect();
        let orders: Vec<u64> = elements.iter().map(|e| g.element_order(e)).collect();
        let subgroups: Vec<_> = elements.iter().map(|e| g.cyclic_subgroup(e)).collect();
        for a in 0..elements.len() {
            for b in (a + 1)..elements.len() {
                if orders[a] == orders[b] {
                    assert_eq!(subgroups[a], subgroups[b], "C{n}: ranks {a}, {b}");
                }
            }
        }
    }
}

#[test]
fn proper_graph_sizes_match_group_orders_up_to_128() {
    for g in enumerate_abelian_groups_in(1, 128) {
        let full = PowerGraph::build(&g, Variant::Full);
        let proper = PowerGraph::build(&g, Variant::Proper);
        assert_eq!(full.vertex_count() as u64, g.order());
        assert_eq!(proper.vertex_count() as u64, g.order().saturating_sub(1));
        // removing the identity removes exactly its |G| - 1 incident edges
        assert_eq!(
            proper.edge_count(),
            full.edge_count() - (g.order() as usize).saturating_sub(1)
        );
    }
}

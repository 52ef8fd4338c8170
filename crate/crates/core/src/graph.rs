//! Power graph construction.
//!
//! [`SimpleGraph`] is a loop-free undirected graph over `0..n` backed by a
//! bitset adjacency matrix, which keeps complete graphs at the order cap
//! affordable. [`PowerGraph`] labels its vertices with group elements.

use crate::group::{AbelianGroup, Element};
use serde::{Deserialize, Serialize};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    degrees: Vec<u32>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        SimpleGraph {
            n,
            words,
            bits: vec![0; n * words],
            degrees: vec![0; n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Inserts the undirected edge `{u, v}`. Returns false if it was already
    /// present. Loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n && v < self.n, "vertex out of range");
        if self.has_edge(u, v) {
            return false;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.edge_count += 1;
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u] as usize
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0) as usize
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|u| self.neighbors(u).collect()).collect()
    }

    /// Relabels vertices: vertex `u` becomes `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = SimpleGraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// Full power graph (all elements) or proper power graph (identity removed).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Full,
    Proper,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::Proper => "proper",
        }
    }
}

/// How pairwise adjacency is evaluated during construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjacencyStrategy {
    /// Divisibility fast path for cyclic groups, membership otherwise.
    Auto,
    /// Always test cyclic-subgroup membership.
    Membership,
}

/// Power graph of a finite abelian group. Vertex `i` carries the element of
/// rank `i` (full variant) or rank `i + 1` (proper variant, identity
/// removed); ranks follow the lexicographic order of coordinate tuples.
#[derive(Clone, Debug)]
pub struct PowerGraph {
    variant: Variant,
    group: AbelianGroup,
    graph: SimpleGraph,
    orders: Vec<u64>,
    /// For cyclic groups: the integer residue mod |G| of each vertex, via the
    /// Chinese remainder theorem. Used for human-facing labels only.
    crt: Option<Vec<u64>>,
}

impl PowerGraph {
    pub fn build(group: &AbelianGroup, variant: Variant) -> PowerGraph {
        Self::build_with(group, variant, AdjacencyStrategy::Auto)
    }

    pub fn build_with(
        group: &AbelianGroup,
        variant: Variant,
        strategy: AdjacencyStrategy,
    ) -> PowerGraph {
        let n = group.order() as usize;
        let orders_full: Vec<u64> = group.elements().map(|a| group.element_order(&a)).collect();

        let mut full = SimpleGraph::new(n);
        let use_fast = strategy == AdjacencyStrategy::Auto && group.is_cyclic();
        if use_fast {
            // cyclic groups: adjacency is order divisibility
            for u in 0..n {
                for v in (u + 1)..n {
                    let (a, b) = (orders_full[u], orders_full[v]);
                    if a % b == 0 || b % a == 0 {
                        full.add_edge(u, v);
                    }
                }
            }
        } else {
            // one subgroup walk per element marks every b in <a>
            for ra in 0..n as u64 {
                let a = group.element(ra);
                let mut cur = group.add(&group.identity(), &a).expect("valid");
                while cur != group.identity() {
                    let rb = group.rank(&cur);
                    if rb != ra {
                        full.add_edge(ra as usize, rb as usize);
                    }
                    cur = group.add(&cur, &a).expect("valid");
                }
                if ra != 0 {
                    full.add_edge(ra as usize, 0); // identity lies in every subgroup
                }
            }
        }

        let crt_full = group.is_cyclic().then(|| crt_labels(group));
        let (graph, orders, crt) = match variant {
            Variant::Full => (full, orders_full, crt_full),
            Variant::Proper => {
                let m = n.saturating_sub(1);
                let mut proper = SimpleGraph::new(m);
                for (u, v) in full.edges() {
                    if u > 0 {
                        proper.add_edge(u - 1, v - 1);
                    }
                }
                (
                    proper,
                    orders_full[1..].to_vec(),
                    crt_full.map(|c| c[1..].to_vec()),
                )
            }
        };
        PowerGraph {
            variant,
            group: group.clone(),
            graph,
            orders,
            crt,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Rank of the element carried by vertex `v`.
    pub fn element_rank(&self, v: usize) -> u64 {
        match self.variant {
            Variant::Full => v as u64,
            Variant::Proper => v as u64 + 1,
        }
    }

    pub fn vertex_of_rank(&self, rank: u64) -> Option<usize> {
        match self.variant {
            Variant::Full => (rank < self.group.order()).then_some(rank as usize),
            Variant::Proper => {
                (rank >= 1 && rank < self.group.order()).then(|| rank as usize - 1)
            }
        }
    }

    /// Vertex carrying the integer `k` of a cyclic group `Z/n`.
    pub fn vertex_of_integer(&self, k: u64) -> Option<usize> {
        let coords: Vec<u64> = self.group.factors().iter().map(|f| k % f).collect();
        let mut rank = 0u64;
        for (c, f) in coords.iter().zip(self.group.factors()) {
            rank = rank * f + c;
        }
        self.vertex_of_rank(rank)
    }

    pub fn vertex_element(&self, v: usize) -> Element {
        self.group.element(self.element_rank(v))
    }

    pub fn vertex_order(&self, v: usize) -> u64 {
        self.orders[v]
    }

    /// Human-readable vertex label: the integer residue for cyclic groups,
    /// the coordinate tuple otherwise.
    pub fn vertex_label(&self, v: usize) -> String {
        match &self.crt {
            Some(crt) => crt[v].to_string(),
            None => self.vertex_element(v).label(),
        }
    }

    /// Display name such as `P(C6)` or `P*(C6)`.
    pub fn display_name(&self) -> String {
        match self.variant {
            Variant::Full => format!("P({})", self.group.canonical_name()),
            Variant::Proper => format!("P*({})", self.group.canonical_name()),
        }
    }
}

/// For a cyclic group, the integer in `0..n` congruent to each element's
/// coordinates, indexed by element rank.
fn crt_labels(group: &AbelianGroup) -> Vec<u64> {
    let n = group.order();
    let mut labels = vec![0u64; n as usize];
    for k in 0..n {
        let mut rank = 0u64;
        for f in group.factors() {
            rank = rank * f + k % f;
        }
        labels[rank as usize] = k;
    }
    labels
}

/// Power graph adjacency: `a != b` are adjacent iff one lies in the cyclic
/// subgroup generated by the other. Panics when `a == b` (loops undefined).
pub fn adjacent(group: &AbelianGroup, a: &Element, b: &Element) -> bool {
    assert!(a != b, "adjacency is undefined on equal elements");
    group.cyclic_subgroup(a).binary_search(b).is_ok()
        || group.cyclic_subgroup(b).binary_search(a).is_ok()
}

/// Divisibility criterion for cyclic groups: adjacent iff one element order
/// divides the other. Panics when called on a non-cyclic group, where only
/// the forward direction of the criterion is valid.
pub fn adjacent_cyclic_fast(group: &AbelianGroup, a: &Element, b: &Element) -> bool {
    assert!(group.is_cyclic(), "divisibility criterion requires a cyclic group");
    assert!(a != b, "adjacency is undefined on equal elements");
    let (oa, ob) = (group.element_order(a), group.element_order(b));
    oa % ob == 0 || ob % oa == 0
}

pub fn build_power_graph(group: &AbelianGroup, variant: Variant) -> PowerGraph {
    PowerGraph::build(group, variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_abelian_groups_in, GroupSpec};

    fn group(spec: &str) -> AbelianGroup {
        GroupSpec::new(spec).resolve().unwrap()
    }

    // vertex of the integer k in a proper/full power graph of a cyclic group
    fn int_vertex(pg: &PowerGraph, k: u64) -> usize {
        pg.vertex_of_integer(k).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let c6 = group("6");
        let pg = PowerGraph::build(&c6, Variant::Full);
        let e2 = pg.vertex_element(int_vertex(&pg, 2));
        let e4 = pg.vertex_element(int_vertex(&pg, 4));
        assert!(adjacent(&c6, &e2, &e4)); // 4 lies in <2>
        for r in 1..6 {
            assert!(adjacent(&c6, &c6.identity(), &c6.element(r)));
        }
        let v4 = group("2,2");
        assert!(!adjacent(&v4, &v4.element(2), &v4.element(1))); // (1,0) vs (0,1)
    }

    #[test]
    fn fast_path_examples() {
        let c6 = group("6");
        let pg = PowerGraph::build(&c6, Variant::Full);
        let elem = |k: u64| pg.vertex_element(int_vertex(&pg, k));
        // orders 3 and 6 divide: adjacent
        assert_eq!(c6.element_order(&elem(2)), 3);
        assert_eq!(c6.element_order(&elem(1)), 6);
        assert!(adjacent_cyclic_fast(&c6, &elem(2), &elem(1)));
        assert!(adjacent(&c6, &elem(2), &elem(1)));
        // orders 2 and 3 do not divide either way: non-adjacent
        assert_eq!(c6.element_order(&elem(3)), 2);
        assert!(!adjacent_cyclic_fast(&c6, &elem(3), &elem(2)));
        assert!(!adjacent(&c6, &elem(3), &elem(2)));

        let c12 = group("12");
        let pg12 = PowerGraph::build(&c12, Variant::Full);
        let a = pg12.vertex_element(int_vertex(&pg12, 3));
        let b = pg12.vertex_element(int_vertex(&pg12, 9));
        assert_eq!(c12.element_order(&a), 4);
        assert_eq!(c12.element_order(&b), 4);
        assert!(adjacent_cyclic_fast(&c12, &a, &b)); // shared subgroup {0,3,6,9}
        assert!(adjacent(&c12, &a, &b));
    }

    #[test]
    fn build_examples() {
        let p_c4 = PowerGraph::build(&group("4"), Variant::Full);
        assert_eq!(p_c4.vertex_count(), 4);
        assert!(p_c4.graph().is_complete()); // K4

        let ps_c4 = PowerGraph::build(&group("4"), Variant::Proper);
        assert_eq!(ps_c4.vertex_count(), 3);
        assert!(ps_c4.graph().is_complete()); // K3

        let ps_v4 = PowerGraph::build(&group("2,2"), Variant::Proper);
        assert_eq!(ps_v4.vertex_count(), 3);
        assert_eq!(ps_v4.edge_count(), 0);
    }

    #[test]
    fn proper_c6_structure() {
        // derived by a full pairwise adjacency scan: generators 1, 5 are
        // adjacent to everything, 2~4, and 3 is adjacent only to 1 and 5,
        // giving 8 edges in total.
        let ps = PowerGraph::build(&group("6"), Variant::Proper);
        assert_eq!(ps.vertex_count(), 5);
        assert_eq!(ps.edge_count(), 8);
        let vx = |k: u64| int_vertex(&ps, k);
        for other in [2u64, 3, 4, 5] {
            assert!(ps.graph().has_edge(vx(1), vx(other)));
            if other != 5 {
                assert!(ps.graph().has_edge(vx(5), vx(other)));
            }
        }
        assert!(ps.graph().has_edge(vx(2), vx(4)));
        assert!(!ps.graph().has_edge(vx(2), vx(3)));
        assert!(!ps.graph().has_edge(vx(3), vx(4)));
        assert_eq!(ps.graph().degree(vx(3)), 2);
        assert_eq!(ps.vertex_label(vx(5)), "5");
    }

    #[test]
    fn trivial_group_graphs() {
        let g = AbelianGroup::trivial();
        let full = PowerGraph::build(&g, Variant::Full);
        assert_eq!(full.vertex_count(), 1);
        assert_eq!(full.edge_count(), 0);
        let proper = PowerGraph::build(&g, Variant::Proper);
        assert_eq!(proper.vertex_count(), 0);
    }

    #[test]
    fn identity_dominates_full_graph() {
        for g in enumerate_abelian_groups_in(2, 64) {
            let pg = PowerGraph::build(&g, Variant::Full);
            assert_eq!(pg.graph().degree(0), g.order() as usize - 1, "{g}");
        }
    }

    #[test]
    fn adjacency_symmetric_and_irreflexive() {
        for g in enumerate_abelian_groups_in(2, 32) {
            let pg = PowerGraph::build(&g, Variant::Full);
            let n = pg.vertex_count();
            for u in 0..n {
                assert!(!pg.graph().has_edge(u, u));
                for v in 0..n {
                    assert_eq!(pg.graph().has_edge(u, v), pg.graph().has_edge(v, u));
                }
            }
        }
    }

    #[test]
    fn fast_path_matches_membership_on_cyclic_groups() {
        for n in 2..=100u64 {
            let g = AbelianGroup::cyclic(n).unwrap();
            let fast = PowerGraph::build_with(&g, Variant::Proper, AdjacencyStrategy::Auto);
            let slow = PowerGraph::build_with(&g, Variant::Proper, AdjacencyStrategy::Membership);
            assert_eq!(fast.graph(), slow.graph(), "C{n}");
        }
    }

    #[test]
    fn divisibility_follows_from_adjacency_up_to_40() {
        for g in enumerate_abelian_groups_in(2, 40) {
            let pg = PowerGraph::build(&g, Variant::Full);
            for (u, v) in pg.graph().edges() {
                let (a, b) = (pg.vertex_order(u), pg.vertex_order(v));
                assert!(a % b == 0 || b % a == 0, "{g}: edge {u}-{v}");
            }
        }
    }

    #[test]
    fn divisibility_converse_fails_in_c2_c2() {
        // (1,0) and (0,1) have orders 2 | 2 yet are non-adjacent
        let v4 = group("2,2");
        let pg = PowerGraph::build(&v4, Variant::Proper);
        let a = pg.vertex_of_rank(2).unwrap(); // (1,0)
        let b = pg.vertex_of_rank(1).unwrap(); // (0,1)
        assert_eq!(pg.vertex_order(a), 2);
        assert_eq!(pg.vertex_order(b), 2);
        assert!(!pg.graph().has_edge(a, b));
    }

    #[test]
    fn generator_degrees_in_proper_cyclic_graphs() {
        use crate::arith::{euler_phi, prime_power};
        for n in 2..=100u64 {
            let g = AbelianGroup::cyclic(n).unwrap();
            let pg = PowerGraph::build(&g, Variant::Proper);
            let full_degree = n as usize - 2;
            let count = (0..pg.vertex_count())
                .filter(|&v| pg.graph().degree(v) == full_degree)
                .count() as u64;
            if prime_power(n).is_some() {
                assert_eq!(count, n - 1, "C{n} should be complete");
            } else {
                assert_eq!(count, euler_phi(n), "C{n} generators");
                for v in 0..pg.vertex_count() {
                    let is_gen = pg.vertex_order(v) == n;
                    assert_eq!(pg.graph().degree(v) == full_degree, is_gen);
                }
            }
        }
    }
}

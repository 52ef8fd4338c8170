//! Breadth-first machinery: components, distances, eccentricities, diameter
//! and graph center.

use crate::error::Error;
use crate::graph::SimpleGraph;
use crate::invariants::Distance;

/// BFS distances from `src`; `None` marks unreachable vertices. Frontier
/// expansion works on whole bitset rows so complete graphs stay cheap.
pub fn bfs_distances(g: &SimpleGraph, src: usize) -> Vec<Option<u32>> {
    let n = g.n();
    let words = n.div_ceil(64);
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut visited = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    visited[src / 64] |= 1 << (src % 64);
    frontier[src / 64] |= 1 << (src % 64);
    let mut level = 0u32;
    let mut next = vec![0u64; words];

    loop {
        next.iter_mut().for_each(|w| *w = 0);
        for (w, &word) in frontier.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for (dst, src_word) in next.iter_mut().zip(g.row(v)) {
                    *dst |= src_word;
                }
            }
        }
        for (dst, vis) in next.iter_mut().zip(&visited) {
            *dst &= !vis;
        }
        if next.iter().all(|&w| w == 0) {
            return dist;
        }
        level += 1;
        for (w, &word) in next.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                dist[v] = Some(level);
            }
        }
        for (vis, nw) in visited.iter_mut().zip(&next) {
            *vis |= nw;
        }
        std::mem::swap(&mut frontier, &mut next);
    }
}

/// Connected components, ordered by smallest vertex index; vertices within a
/// component are sorted.
pub fn components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        for (v, d) in bfs_distances(g, start).iter().enumerate() {
            if d.is_some() {
                seen[v] = true;
                comp.push(v);
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    components(g).len() <= 1
}

/// Full distance matrix; `None` marks unreachable pairs. Errors on the empty
/// graph.
pub fn all_pairs_distances(g: &SimpleGraph) -> Result<Vec<Vec<Option<u32>>>, Error> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok((0..g.n()).map(|v| bfs_distances(g, v)).collect())
}

/// Per-vertex eccentricity; infinite on disconnected graphs.
pub fn eccentricities(g: &SimpleGraph) -> Result<Vec<Distance>, Error> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok((0..g.n())
        .map(|v| {
            let dist = bfs_distances(g, v);
            if dist.iter().any(|d| d.is_none()) {
                Distance::Infinite
            } else {
                Distance::Finite(dist.iter().map(|d| d.unwrap() as u64).max().unwrap_or(0))
            }
        })
        .collect())
}

/// Maximum eccentricity; infinite when disconnected, error when empty.
pub fn diameter(g: &SimpleGraph) -> Result<Distance, Error> {
    let eccs = eccentricities(g)?;
    Ok(eccs
        .into_iter()
        .max_by_key(|d| match d {
            Distance::Finite(v) => (0, *v),
            Distance::Infinite => (1, 0),
        })
        .unwrap_or(Distance::Finite(0)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterInfo {
    /// Vertices of minimum eccentricity, ascending.
    pub vertices: Vec<usize>,
    /// Whether the induced subgraph on the center is complete.
    pub is_complete: bool,
}

/// Center of a connected graph: all vertices of minimum eccentricity plus a
/// completeness flag for the induced subgraph. Disconnected graphs are a
/// domain error.
pub fn center(g: &SimpleGraph) -> Result<CenterInfo, Error> {
    let eccs = eccentricities(g)?;
    let mut min = None;
    for e in &eccs {
        match e {
            Distance::Infinite => return Err(Error::DisconnectedCenter),
            Distance::Finite(v) => {
                min = Some(min.map_or(*v, |m: u64| m.min(*v)));
            }
        }
    }
    let min = min.expect("non-empty");
    let vertices: Vec<usize> = eccs
        .iter()
        .enumerate()
        .filter(|(_, e)| **e == Distance::Finite(min))
        .map(|(v, _)| v)
        .collect();
    let is_complete = vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)));
    Ok(CenterInfo { vertices, is_complete })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{PowerGraph, Variant};
    use crate::group::GroupSpec;

    fn proper(spec: &str) -> PowerGraph {
        let g = GroupSpec::new(spec).resolve().unwrap();
        PowerGraph::build(&g, Variant::Proper)
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(proper("2,2").graph()).len(), 3);
        assert_eq!(components(proper("6").graph()).len(), 1);
        // P*(C3xC3): four subgroups of order 3, each inducing a K2
        let comps = components(proper("3,3").graph());
        assert_eq!(comps.len(), 4);
        for comp in comps {
            assert_eq!(comp.len(), 2);
        }
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(proper("4").graph()).unwrap(), Distance::Finite(1));
        assert_eq!(diameter(proper("6").graph()).unwrap(), Distance::Finite(2));
        assert_eq!(diameter(proper("2,2").graph()).unwrap(), Distance::Infinite);
        assert!(matches!(
            diameter(&SimpleGraph::new(0)),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn distances_in_proper_c6() {
        let pg = proper("6");
        let g = pg.graph();
        let two = pg.vertex_of_integer(2).unwrap();
        let three = pg.vertex_of_integer(3).unwrap();
        let d = all_pairs_distances(g).unwrap();
        assert_eq!(d[two][three], Some(2)); // via a generator
        assert_eq!(d[two][two], Some(0));
    }

    #[test]
    fn center_examples() {
        // P*(C6): generators 1 and 5 have eccentricity 1, everyone else 2
        let pg = proper("6");
        let info = center(pg.graph()).unwrap();
        let labels: Vec<String> = info.vertices.iter().map(|&v| pg.vertex_label(v)).collect();
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["1", "5"]);
        assert!(info.is_complete);

        // P*(C12): the four generators form an induced K4
        let pg = proper("12");
        let info = center(pg.graph()).unwrap();
        assert_eq!(info.vertices.len(), 4);
        assert!(info.is_complete);
        for &v in &info.vertices {
            assert_eq!(pg.vertex_order(v), 12);
        }

        // P*(C4) is complete: uniform eccentricity, center is everything
        let pg = proper("4");
        let info = center(pg.graph()).unwrap();
        assert_eq!(info.vertices, vec![0, 1, 2]);
        assert!(info.is_complete);

        assert!(matches!(
            center(proper("2,2").graph()),
            Err(Error::DisconnectedCenter)
        ));
    }

    #[test]
    fn radius_bound_holds_on_sweep() {
        use crate::group::enumerate_abelian_groups_in;
        for g in enumerate_abelian_groups_in(2, 48) {
            let pg = PowerGraph::build(&g, Variant::Proper);
            if pg.vertex_count() == 0 || !is_connected(pg.graph()) {
                continue;
            }
            let eccs = eccentricities(pg.graph()).unwrap();
            let vals: Vec<u64> = eccs
                .iter()
                .map(|e| match e {
                    Distance::Finite(v) => *v,
                    Distance::Infinite => unreachable!(),
                })
                .collect();
            let diam = *vals.iter().max().unwrap();
            let radius = *vals.iter().min().unwrap();
            assert!(radius * 2 >= diam, "{g}: radius {radius} diameter {diam}");
            assert_eq!(diameter(pg.graph()).unwrap(), Distance::Finite(diam));
        }
    }
}

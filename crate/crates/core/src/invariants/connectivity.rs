//! Exact vertex connectivity.
//!
//! Menger's theorem: for non-adjacent `s`, `t` the minimum vertex cut equals
//! the maximum number of internally vertex-disjoint `s`-`t` paths, computed
//! here as unit-capacity max flow on the node-split digraph (`v_in -> v_out`
//! with capacity 1). The graph connectivity is the minimum over non-adjacent
//! pairs, with the complete-graph convention `kappa(K_n) = n - 1`.

use crate::error::Error;
use crate::graph::SimpleGraph;
use crate::invariants::traversal::is_connected;

/// Unit-capacity flow network with BFS augmentation (Edmonds-Karp). Edges
/// are stored with their reverse twin at `idx ^ 1`.
struct FlowNet {
    adj: Vec<Vec<u32>>,
    to: Vec<u32>,
    cap: Vec<u8>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        let idx = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(1);
        self.to.push(u as u32);
        self.cap.push(0);
        self.adj[u].push(idx);
        self.adj[v].push(idx + 1);
    }

    /// Augments until `limit` is reached or no augmenting path remains.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut pred = vec![u32::MAX; self.adj.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = u32::MAX);
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            pred[s] = u32::MAX - 1;
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.to[e as usize] as usize;
                    if self.cap[e as usize] > 0 && pred[v] == u32::MAX {
                        pred[v] = e;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let e = pred[v] as usize;
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1] as usize;
            }
            flow += 1;
        }
        flow
    }
}

/// Internally disjoint `s`-`t` paths in `g`, capped at `limit`. Valid for
/// adjacent pairs too (the direct edge counts as one path).
fn disjoint_paths(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    // node split: in(v) = 2v, out(v) = 2v + 1
    let mut net = FlowNet::new(2 * g.n());
    for v in 0..g.n() {
        if v != s && v != t {
            net.add_edge(2 * v, 2 * v + 1);
        }
    }
    for (u, v) in g.edges() {
        net.add_edge(2 * u + 1, 2 * v);
        net.add_edge(2 * v + 1, 2 * u);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Exact vertex connectivity. Errors on graphs with fewer than two vertices;
/// returns 0 for disconnected input.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<usize, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    if !is_connected(g) {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    // kappa <= min degree seeds the cutoff; each flow stops once it can no
    // longer improve the running minimum.
    let mut best = g.min_degree();
    for s in 0..n {
        for t in (s + 1)..n {
            if g.has_edge(s, t) {
                continue;
            }
            let f = disjoint_paths(g, s, t, best);
            best = best.min(f);
        }
    }
    Ok(best)
}

/// Exhaustive oracle: smallest vertex subset whose removal disconnects the
/// graph or leaves a single vertex. Refuses graphs with more than 20
/// vertices. Must agree with [`vertex_connectivity`] on its domain.
pub fn vertex_connectivity_oracle(g: &SimpleGraph) -> Result<usize, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices);
    }
    if n > 20 {
        return Err(Error::OracleTooLarge(format!(
            "subset enumeration accepts at most 20 vertices, got {n}"
        )));
    }
    for k in 0..n {
        let mut found = false;
        for_each_subset(n, k, |subset| {
            if !found && removal_disconnects(g, subset) {
                found = true;
            }
        });
        if found {
            return Ok(k);
        }
    }
    unreachable!("removing n-1 vertices always leaves a single vertex");
}

fn removal_disconnects(g: &SimpleGraph, removed: &[usize]) -> bool {
    let n = g.n();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
    if remaining.len() <= 1 {
        return true;
    }
    // BFS restricted to surviving vertices
    let start = remaining[0];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if !gone[v] && !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count < remaining.len()
}

/// Calls `f` on every k-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        f(&subset);
        // rightmost position that can still be advanced
        let mut i = k;
        while i > 0 && subset[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        subset[i - 1] += 1;
        for j in i..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

use std::collections::VecDeque;

use super::EdgeVector;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `dim C(G) = m - n + c`.
pub fn cycle_space_dim(g: &Graph) -> usize {
    g.m() + g.components().1 - g.n()
}

/// Fundamental cycles of the BFS spanning forest.
///
/// Each component is searched from its lowest vertex with neighbors
/// expanded in ascending order. Every non-tree edge yields one vector: the
/// edge plus the tree path between its endpoints. Output order follows
/// non-tree edge ids.
pub fn cycle_space_basis(g: &Graph) -> Vec<EdgeVector> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut tree = vec![false; g.m()];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if parent[root] != usize::MAX {
            continue;
        }
        parent[root] = root;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.incident(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    parent_edge[w] = e;
                    depth[w] = depth[u] + 1;
                    tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (0..g.m())
        .filter(|&e| !tree[e])
        .map(|e| {
            let (mut a, mut b) = g.edge(e);
            let mut v = EdgeVector::zeros(g.m());
            v.set(e, true);
            while a != b {
                if depth[a] >= depth[b] {
                    v.set(parent_edge[a], true);
                    a = parent[a];
                } else {
                    v.set(parent_edge[b], true);
                    b = parent[b];
                }
            }
            v
        })
        .collect()
}

/// `∂(v)`: the edges at `v`.
pub fn star(g: &Graph, v: usize) -> EdgeVector {
    EdgeVector::from_ids(g.m(), g.incident(v).iter().map(|&(_, e)| e))
}

/// The `n` vertex stars, which generate the cut space.
pub fn cut_space_stars(g: &Graph) -> Vec<EdgeVector> {
    (0..g.n()).map(|v| star(g, v)).collect()
}

/// True iff every vertex has even degree in the edge subset `v`.
///
/// This is the degree notion of "even" characterising the cycle space,
/// not [`EdgeVector::has_even_support`].
pub fn is_even_subgraph(g: &Graph, v: &EdgeVector) -> Result<bool> {
    if v.host_m() != g.m() {
        return Err(Error::DimensionMismatch { left: g.m(), right: v.host_m() });
    }
    let mut odd = vec![false; g.n()];
    for e in v.ones_iter() {
        let (a, b) = g.edge(e);
        odd[a] ^= true;
        odd[b] ^= true;
    }
    Ok(odd.iter().all(|&o| !o))
}

//! Immutable simple undirected graphs with canonical edge indexing.
//!
//! Vertices are `0..n`. Edges are stored as pairs `(u, v)` with `u < v`,
//! sorted lexicographically; the position of a pair in that order is its
//! edge id. Two structurally equal graphs therefore index their edges the
//! same way, which keeps every GF(2) vector built over them comparable.

mod io;
mod vertex_set;

pub use io::{parse_edge_list, parse_graph6, to_dot, write_edge_list, write_graph6};
pub use vertex_set::VertexSet;

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // per-vertex (neighbor, edge id), sorted by neighbor
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds the canonical graph on `0..n` from an unordered pair list.
    ///
    /// Pairs are normalized to `(min, max)` first, so `(1, 0)` and `(0, 1)`
    /// in the same list count as a duplicate.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, edges))
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_sorted(n, edges)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &pairs).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &pairs).expect("valid path")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
    pub fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
            pairs.push((i, i + 5));
        }
        Self::from_edge_list(10, &pairs).expect("valid petersen")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge id)` pairs of `v` in ascending neighbor order.
    #[inline]
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `deg(v, S)`: number of neighbors of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.neighbors(v).filter(|&w| set.contains(w)).count()
    }

    /// External neighbourhood `N(X)`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in set.iter() {
            for w in self.neighbors(v) {
                if !set.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// `e(A)`: edges with both ends in `a`.
    pub fn edges_within(&self, a: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| a.contains(u) && a.contains(v))
            .count()
    }

    /// `e(A, B)` for disjoint `a`, `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.degree_into(v, b)).sum()
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().1 == 1
    }

    /// `SMALL(G)`: vertices with `deg(v) <= ln(n) / 10`, compared as reals.
    pub fn small_vertices(&self) -> VertexSet {
        let threshold = if self.n >= 1 { (self.n as f64).ln() / 10.0 } else { 0.0 };
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| self.degree(v) as f64 <= threshold))
    }

    /// Shortest path from `x` to `y` avoiding `forbidden`, as a vertex sequence.
    ///
    /// Ties are broken by expanding neighbors in ascending id order. Returns
    /// `None` when `y` is unreachable, or when `x` or `y` is forbidden.
    pub fn bfs_path(&self, x: usize, y: usize, forbidden: &VertexSet) -> Option<Vec<usize>> {
        if forbidden.contains(x) || forbidden.contains(y) {
            return None;
        }
        bfs_path_by(self.n, x, y, |u, visit| {
            for w in self.neighbors(u) {
                if !forbidden.contains(w) {
                    visit(w);
                }
            }
        })
    }

    /// Induced subgraph on `keep` with the edges in `drop_edges` removed.
    ///
    /// Kept vertices are relabelled densely in ascending order.
    pub fn restrict(&self, keep: &VertexSet, drop_edges: &[usize]) -> Restriction {
        let mut new_id = vec![usize::MAX; self.n];
        let vertex_map: Vec<usize> = keep.iter().collect();
        for (i, &v) in vertex_map.iter().enumerate() {
            new_id[v] = i;
        }
        let mut dropped = vec![false; self.m()];
        for &e in drop_edges {
            if e < dropped.len() {
                dropped[e] = true;
            }
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        // the old order restricted to kept pairs stays lexicographic after relabelling
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if !dropped[id] && new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
                edge_map.push(id);
            }
        }
        Restriction {
            graph: Graph::from_sorted(vertex_map.len(), edges),
            vertex_map,
            edge_map,
        }
    }

    pub fn is_path(&self, path: &[usize]) -> bool {
        let mut seen = VertexSet::new(self.n);
        for &v in path {
            if v >= self.n || !seen.insert(v) {
                return false;
            }
        }
        path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// True iff `path` visits every vertex of `within` exactly once, touches
    /// nothing else, and runs `x -> y` along edges.
    pub fn is_hamilton_path_of(&self, path: &[usize], within: &VertexSet, x: usize, y: usize) -> bool {
        path.len() == within.len()
            && path.first() == Some(&x)
            && path.last() == Some(&y)
            && path.iter().all(|&v| within.contains(v))
            && self.is_path(path)
    }

    pub fn is_hamilton_cycle(&self, order: &[usize]) -> bool {
        order.len() == self.n
            && self.n >= 3
            && self.is_path(order)
            && self.has_edge(order[0], order[self.n - 1])
    }

    /// Edge ids along a vertex sequence. Panics on a non-edge.
    pub fn path_edge_ids(&self, path: &[usize]) -> Vec<usize> {
        path.windows(2)
            .map(|w| self.edge_id(w[0], w[1]).expect("consecutive vertices must be adjacent"))
            .collect()
    }
}

/// Result of [`Graph::restrict`].
#[derive(Clone, Debug)]
pub struct Restriction {
    pub graph: Graph,
    /// new vertex id -> original vertex id
    pub vertex_map: Vec<usize>,
    /// new edge id -> original edge id
    pub edge_map: Vec<usize>,
}

impl Restriction {
    pub fn original_vertex(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    /// Original vertex id -> new id, if kept.
    pub fn local_vertex(&self, original: usize) -> Option<usize> {
        self.vertex_map.binary_search(&original).ok()
    }

    pub fn lift_path(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&v| self.vertex_map[v]).collect()
    }
}

/// Generic BFS shortest path over an implicit neighbor function.
pub(crate) fn bfs_path_by<F>(n: usize, x: usize, y: usize, mut expand: F) -> Option<Vec<usize>>
where
    F: FnMut(usize, &mut dyn FnMut(usize)),
{
    if x == y {
        return Some(vec![x]);
    }
    let mut parent = vec![usize::MAX; n];
    parent[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        let mut found = false;
        expand(u, &mut |w| {
            if parent[w] == usize::MAX {
                parent[w] = u;
                if w == y {
                    found = true;
                }
                queue.push_back(w);
            }
        });
        if found {
            let mut path = vec![y];
            let mut cur = y;
            while cur != x {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
    }
    None
}

//! Parity switchers: an even cycle `C = (v_1 .. v_2k)` with an odd number
//! of `R`-edges plus disjoint connector paths `P_i` from `v_i` to
//! `v_{2k-i+2}`. The union has two Hamilton paths from `v_1` to `v_{k+1}`
//! whose `R`-parities differ.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::EdgeVector;
use crate::graph::{bfs_path_by, Graph, VertexSet};
use crate::rng::rng_from_seed;

/// Default reshuffle budget of [`disjoint_pair_paths`].
pub const DEFAULT_LINKAGE_RETRIES: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParitySwitcher {
    cycle: Vec<usize>,
    cycle_vector: EdgeVector,
    /// `paths[j]` is `P_{j+2}`, running from `v_{j+2}` to `v_{2k-j}`.
    paths: Vec<Vec<usize>>,
    r_parity_of_cycle: bool,
}

impl ParitySwitcher {
    /// Validates and wraps a cycle with its connector paths.
    pub fn new(g: &Graph, r: &EdgeVector, cycle: Vec<usize>, paths: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidSwitcher(msg));
        if r.host_m() != g.m() {
            return Err(Error::DimensionMismatch { left: g.m(), right: r.host_m() });
        }
        let len = cycle.len();
        if len < 4 || len % 2 == 1 {
            return bad(format!("cycle length {len} must be even and at least 4"));
        }
        if !g.is_path(&cycle) || !g.has_edge(cycle[0], cycle[len - 1]) {
            return bad("cycle is not a simple cycle of the graph".into());
        }
        let mut ids = g.path_edge_ids(&cycle);
        ids.push(g.edge_id(cycle[len - 1], cycle[0]).expect("checked above"));
        let cycle_vector = EdgeVector::from_ids(g.m(), ids);
        let r_parity_of_cycle = cycle_vector.parity_unchecked(r);
        if !r_parity_of_cycle {
            return bad("cycle meets R in an even number of edges".into());
        }
        let k = len / 2;
        if paths.len() != k - 1 {
            return bad(format!("expected {} connector paths, found {}", k - 1, paths.len()));
        }
        let mut on_cycle = VertexSet::from_iter(g.n(), cycle.iter().copied());
        for (j, p) in paths.iter().enumerate() {
            let i = j + 2;
            let (a, b) = (cycle[i - 1], cycle[2 * k - i + 1]);
            if p.len() < 2 || p[0] != a || p[p.len() - 1] != b || !g.is_path(p) {
                return bad(format!("P_{i} must be a path from {a} to {b}"));
            }
            for e in g.path_edge_ids(p) {
                if cycle_vector.get(e) {
                    return bad(format!("P_{i} reuses a cycle edge"));
                }
            }
            for &v in &p[1..p.len() - 1] {
                if !on_cycle.insert(v) {
                    return bad(format!("P_{i} touches the cycle or another path at {v}"));
                }
            }
        }
        Ok(ParitySwitcher { cycle, cycle_vector, paths, r_parity_of_cycle })
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn cycle_vector(&self) -> &EdgeVector {
        &self.cycle_vector
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn r_parity_of_cycle(&self) -> bool {
        self.r_parity_of_cycle
    }

    /// Half the cycle length.
    pub fn k(&self) -> usize {
        self.cycle.len() / 2
    }

    /// `v_1` and `v_{k+1}`.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.cycle[0], self.cycle[self.k()])
    }

    /// Vertices of the switcher graph `W`.
    pub fn vertices(&self, n: usize) -> VertexSet {
        let mut w = VertexSet::from_iter(n, self.cycle.iter().copied());
        for p in &self.paths {
            for &v in p {
                w.insert(v);
            }
        }
        w
    }

    /// The two zig-zag Hamilton paths `(A, B)` of `W` from `v_1` to `v_{k+1}`.
    ///
    /// `A` leaves `v_1` towards `v_2`, `B` towards `v_2k`. Both then
    /// alternate between a connector path and a cycle edge.
    pub fn zigzag_paths(&self) -> (Vec<usize>, Vec<usize>) {
        (self.zigzag(true), self.zigzag(false))
    }

    fn zigzag(&self, low_first: bool) -> Vec<usize> {
        let k = self.k();
        let v = |i: usize| self.cycle[i - 1];
        let mut out = vec![v(1)];
        let mut low = low_first;
        for i in 2..=k {
            let p = &self.paths[i - 2];
            // enter P_i at v_i when on the low side, else at v_{2k-i+2}
            if low {
                out.extend(p.iter().copied());
            } else {
                out.extend(p.iter().rev().copied());
            }
            low = !low;
        }
        out.push(v(k + 1));
        out
    }
}

/// Both zig-zag paths, ordered `(even R-parity, odd R-parity)`.
pub fn hamilton_paths_of_switcher(g: &Graph, w: &ParitySwitcher, r: &EdgeVector) -> Result<(Vec<usize>, Vec<usize>)> {
    let w = ParitySwitcher::new(g, r, w.cycle.clone(), w.paths.clone())?;
    let (a, b) = w.zigzag_paths();
    let parity = |p: &[usize]| g.path_edge_ids(p).into_iter().filter(|&e| r.get(e)).count() % 2 == 1;
    let (pa, pb) = (parity(&a), parity(&b));
    debug_assert_ne!(pa, pb);
    Ok(if pa { (b, a) } else { (a, b) })
}

/// An even cycle with exactly one edge outside `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitcherCycle {
    /// `R`-path from `x` to `y`, closed by the non-`R` edge `yx`.
    pub order: Vec<usize>,
    pub vector: EdgeVector,
    pub non_r_edge: usize,
}

impl SwitcherCycle {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// `22 ln n / ln ln n` for `n >= 10`, no cap below.
pub fn switcher_cycle_cap(n: usize) -> Option<f64> {
    (n >= 10).then(|| {
        let ln = (n as f64).ln();
        22.0 * ln / ln.ln()
    })
}

/// First qualifying cycle of [`switcher_cycles`].
pub fn find_switcher_cycle(g: &Graph, r: &EdgeVector, protect: &VertexSet) -> Option<SwitcherCycle> {
    switcher_cycles(g, r, protect).next()
}

/// Qualifying even cycles, one per non-`R` seed edge `xy` in ascending id
/// order.
///
/// For each seed the shortest odd `R`-walk from `x` to `y` is found by BFS
/// on the parity double cover. A walk that repeats a vertex falls back to a
/// budgeted depth-first search for the shortest odd simple `R`-path. A
/// candidate is kept only if it respects the length cap and, for protected
/// `u`, `deg(u, V(C)) <= 2` when `u ∈ V(C)` and `<= 1` otherwise.
pub fn switcher_cycles<'a>(
    g: &'a Graph,
    r: &'a EdgeVector,
    protect: &'a VertexSet,
) -> impl Iterator<Item = SwitcherCycle> + 'a {
    let cap = switcher_cycle_cap(g.n());
    let max_len = cap.map_or(g.n(), |c| (c.floor() as usize).min(g.n()));
    (0..g.m())
        .filter(move |&e| r.host_m() == g.m() && !r.get(e))
        .filter_map(move |e| {
            let (x, y) = g.edge(e);
            let path = odd_r_path(g, r, x, y, max_len.saturating_sub(1))?;
            let mut vector = EdgeVector::from_ids(g.m(), g.path_edge_ids(&path));
            vector.set(e, true);
            let c = SwitcherCycle { order: path, vector, non_r_edge: e };
            (verify_cycle(g, r, &c, max_len) && protected_ok(g, protect, &c.order)).then_some(c)
        })
}

fn verify_cycle(g: &Graph, r: &EdgeVector, c: &SwitcherCycle, max_len: usize) -> bool {
    let len = c.order.len();
    len.is_multiple_of(2)
        && len >= 4
        && len <= max_len
        && g.is_path(&c.order)
        && g.edge_id(c.order[0], c.order[len - 1]) == Some(c.non_r_edge)
        && c.vector.ones_iter().filter(|&e| !r.get(e)).count() == 1
}

fn protected_ok(g: &Graph, protect: &VertexSet, order: &[usize]) -> bool {
    if protect.is_empty() {
        return true;
    }
    let on = VertexSet::from_iter(g.n(), order.iter().copied());
    protect.iter().all(|u| {
        let d = g.degree_into(u, &on);
        if on.contains(u) {
            d <= 2
        } else {
            d <= 1
        }
    })
}

/// Shortest odd simple `R`-path from `x` to `y` with at most `max_edges` edges.
fn odd_r_path(g: &Graph, r: &EdgeVector, x: usize, y: usize, max_edges: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let state = |v: usize, p: usize| 2 * v + p;
    let mut parent = vec![usize::MAX; 2 * n];
    let mut dist = vec![usize::MAX; 2 * n];
    let start = state(x, 0);
    parent[start] = start;
    dist[start] = 0;
    let goal = state(y, 1);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        if s == goal {
            break;
        }
        let (u, p) = (s / 2, s % 2);
        for &(w, e) in g.incident(u) {
            let t = state(w, 1 - p);
            if r.get(e) && parent[t] == usize::MAX {
                parent[t] = s;
                dist[t] = dist[s] + 1;
                queue.push_back(t);
            }
        }
    }
    if parent[goal] == usize::MAX || dist[goal] > max_edges {
        return None;
    }
    let mut walk = vec![y];
    let mut s = goal;
    while s != start {
        s = parent[s];
        walk.push(s / 2);
    }
    walk.reverse();
    let mut seen = vec![false; n];
    if walk.iter().all(|&v| !std::mem::replace(&mut seen[v], true)) {
        return Some(walk);
    }
    odd_simple_path_dfs(g, r, x, y, dist[goal], max_edges)
}

/// Iterative deepening over odd lengths, pruned by `R`-distance to `y`.
fn odd_simple_path_dfs(g: &Graph, r: &EdgeVector, x: usize, y: usize, from: usize, max_edges: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut to_y = vec![usize::MAX; n];
    to_y[y] = 0;
    let mut queue = VecDeque::from([y]);
    while let Some(u) = queue.pop_front() {
        for &(w, e) in g.incident(u) {
            if r.get(e) && to_y[w] == usize::MAX {
                to_y[w] = to_y[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut budget = 200_000u64;
    let mut on = vec![false; n];
    let mut path = vec![x];
    on[x] = true;
    let mut limit = from;
    while limit <= max_edges {
        if dfs(g, r, y, limit, &to_y, &mut on, &mut path, &mut budget) {
            return Some(path);
        }
        if budget == 0 {
            return None;
        }
        limit += 2;
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    g: &Graph,
    r: &EdgeVector,
    y: usize,
    limit: usize,
    to_y: &[usize],
    on: &mut [bool],
    path: &mut Vec<usize>,
    budget: &mut u64,
) -> bool {
    let u = *path.last().unwrap();
    let used = path.len() - 1;
    if u == y {
        return used == limit;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    for &(w, e) in g.incident(u) {
        if !r.get(e) || on[w] || to_y[w] == usize::MAX || used + 1 + to_y[w] > limit {
            continue;
        }
        on[w] = true;
        path.push(w);
        if dfs(g, r, y, limit, to_y, on, path, budget) {
            return true;
        }
        path.pop();
        on[w] = false;
    }
    false
}

/// Completes `cycle` to a switcher: connector paths `v_i -> v_{2k-i+2}`
/// avoiding the cycle edges, `v_1`, `v_{k+1}` and each other.
///
/// `Ok(None)` when the linkage search gives up.
pub fn build_switcher(
    g: &Graph,
    r: &EdgeVector,
    cycle: &SwitcherCycle,
    retries: usize,
    seed: u64,
) -> Result<Option<ParitySwitcher>> {
    let order = &cycle.order;
    let k = order.len() / 2;
    let mut keep = VertexSet::full(g.n());
    keep.remove(order[0]);
    keep.remove(order[k]);
    let drop: Vec<usize> = cycle.vector.ones_iter().collect();
    let sub = g.restrict(&keep, &drop);
    let local = |v: usize| sub.local_vertex(v).expect("kept");
    let pairs: Vec<(usize, usize)> = (2..=k).map(|i| (local(order[i - 1]), local(order[2 * k - i + 1]))).collect();
    let forbidden = VertexSet::new(sub.graph.n());
    let Some(paths) = disjoint_pair_paths(&sub.graph, &pairs, &forbidden, retries, seed)? else {
        return Ok(None);
    };
    let paths = paths.iter().map(|p| sub.lift_path(p)).collect();
    ParitySwitcher::new(g, r, order.clone(), paths).map(Some)
}

/// Pairwise vertex-disjoint paths `a_i -> b_i` avoiding `forbidden`.
///
/// Pairs are routed one at a time by BFS in the graph left over by the
/// earlier paths, with every other pair's endpoints blocked. The first
/// round expands neighbors in ascending order; when a pair fails it moves
/// to the front and the remaining order and the BFS tie-breaks are
/// reshuffled, up to `retries` rounds. `Ok(None)` means the budget ran out,
/// not that no system exists.
pub fn disjoint_pair_paths(
    g: &Graph,
    pairs: &[(usize, usize)],
    forbidden: &VertexSet,
    retries: usize,
    seed: u64,
) -> Result<Option<Vec<Vec<usize>>>> {
    let n = g.n();
    let mut endpoints = VertexSet::new(n);
    for &(a, b) in pairs {
        for v in [a, b] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if forbidden.contains(v) {
                return Err(Error::Precondition(format!("endpoint {v} is forbidden")));
            }
            if !endpoints.insert(v) {
                return Err(Error::Precondition(format!("endpoint {v} is shared")));
            }
        }
    }
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    let mut buf = Vec::new();
    for round in 0..=retries {
        let mut blocked = forbidden.clone();
        blocked.union_with(&endpoints);
        let mut paths: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
        let mut failed = None;
        for &i in &order {
            let (a, b) = pairs[i];
            blocked.remove(b);
            let found = bfs_path_by(n, a, b, |u, visit| {
                buf.clear();
                buf.extend(g.neighbors(u).filter(|&w| !blocked.contains(w)));
                if round > 0 {
                    buf.shuffle(&mut rng);
                }
                for &w in &buf {
                    visit(w);
                }
            });
            match found {
                Some(p) => {
                    for &v in &p {
                        blocked.insert(v);
                    }
                    paths[i] = p;
                }
                None => {
                    failed = Some(i);
                    break;
                }
            }
        }
        match failed {
            None => {
                assert!(verify_disjoint(g, pairs, forbidden, &paths), "linkage produced overlapping paths");
                return Ok(Some(paths));
            }
            Some(i) => {
                order.retain(|&j| j != i);
                order.shuffle(&mut rng);
                order.insert(0, i);
            }
        }
    }
    Ok(None)
}

fn verify_disjoint(g: &Graph, pairs: &[(usize, usize)], forbidden: &VertexSet, paths: &[Vec<usize>]) -> bool {
    let mut seen = VertexSet::new(g.n());
    pairs.iter().zip(paths).all(|(&(a, b), p)| {
        p.first() == Some(&a)
            && p.last() == Some(&b)
            && g.is_path(p)
            && p.iter().all(|&v| !forbidden.contains(v) && seen.insert(v))
    })
}

/// Structured record printed by the `switcher` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitcherCertificate {
    pub cycle: Vec<usize>,
    pub cycle_edge_ids: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
    pub path_edge_ids: Vec<Vec<usize>>,
    pub r_parity: u8,
    pub path_even: Vec<usize>,
    pub path_odd: Vec<usize>,
}

impl SwitcherCertificate {
    pub fn new(g: &Graph, w: &ParitySwitcher, r: &EdgeVector) -> Result<Self> {
        let (path_even, path_odd) = hamilton_paths_of_switcher(g, w, r)?;
        Ok(SwitcherCertificate {
            cycle: w.cycle.clone(),
            cycle_edge_ids: w.cycle_vector.ones_iter().collect(),
            paths: w.paths.clone(),
            path_edge_ids: w.paths.iter().map(|p| g.path_edge_ids(p)).collect(),
            r_parity: w.r_parity_of_cycle as u8,
            path_even,
            path_odd,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(g: &Graph, pairs: &[(usize, usize)]) -> EdgeVector {
        EdgeVector::from_ids(g.m(), pairs.iter().map(|&(u, v)| g.edge_id(u, v).unwrap()))
    }

    #[test]
    fn k5_minus_one_edge() {
        let k5 = Graph::complete(5);
        let mut r = EdgeVector::ones(k5.m());
        let e34 = k5.edge_id(3, 4).unwrap();
        r.set(e34, false);
        let c = find_switcher_cycle(&k5, &r, &VertexSet::new(5)).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.non_r_edge, e34);
        assert_eq!(c.vector.intersection_count(&r).unwrap(), 3);
        assert_eq!(c.vector.count_ones(), 4);
    }

    #[test]
    fn no_seed_edge() {
        let k5 = Graph::complete(5);
        assert!(find_switcher_cycle(&k5, &EdgeVector::ones(10), &VertexSet::new(5)).is_none());
    }

    #[test]
    fn c6_unique_cycle() {
        let c6 = Graph::cycle(6);
        let mut r = EdgeVector::ones(6);
        r.set(0, false);
        let c = find_switcher_cycle(&c6, &r, &VertexSet::new(6)).unwrap();
        assert_eq!(c.len(), 6);
        // an odd cycle gives no even candidate
        let c5 = Graph::cycle(5);
        let mut r5 = EdgeVector::ones(5);
        r5.set(0, false);
        assert!(find_switcher_cycle(&c5, &r5, &VertexSet::new(5)).is_none());
    }

    #[test]
    fn linkage_examples() {
        let k8 = Graph::complete(8);
        let paths = disjoint_pair_paths(&k8, &[(0, 1), (2, 3), (4, 5)], &VertexSet::new(8), 10, 0)
            .unwrap()
            .unwrap();
        assert!(paths.iter().all(|p| p.len() == 2));

        let c6 = Graph::cycle(6);
        let paths = disjoint_pair_paths(&c6, &[(0, 3), (1, 2)], &VertexSet::new(6), 10, 0).unwrap().unwrap();
        assert_eq!(paths[0], vec![0, 5, 4, 3]);
        assert_eq!(paths[1], vec![1, 2]);

        assert!(disjoint_pair_paths(&c6, &[(0, 3), (3, 2)], &VertexSet::new(6), 10, 0).is_err());
        assert!(disjoint_pair_paths(&c6, &[], &VertexSet::new(6), 10, 0).unwrap().unwrap().is_empty());
    }

    #[test]
    fn smallest_switcher() {
        // C = (0,1,2,3), P_2 = 1-4-3
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (3, 4)]).unwrap();
        let r = ids(&g, &[(0, 1)]);
        let w = ParitySwitcher::new(&g, &r, vec![0, 1, 2, 3], vec![vec![1, 4, 3]]).unwrap();
        let (a, b) = w.zigzag_paths();
        assert_eq!(a, vec![0, 1, 4, 3, 2]);
        assert_eq!(b, vec![0, 3, 4, 1, 2]);
        let ea = EdgeVector::from_ids(g.m(), g.path_edge_ids(&a));
        let eb = EdgeVector::from_ids(g.m(), g.path_edge_ids(&b));
        assert_eq!(&ea.xor(&eb).unwrap(), w.cycle_vector());

        let (even, odd) = hamilton_paths_of_switcher(&g, &w, &r).unwrap();
        assert_eq!((even, odd), (b, a));
        let cert = SwitcherCertificate::new(&g, &w, &r).unwrap();
        assert_eq!(cert.r_parity, 1);
    }

    #[test]
    fn built_switcher_on_k6() {
        let g = Graph::complete(6);
        let mut r = EdgeVector::ones(g.m());
        r.set(g.edge_id(0, 5).unwrap(), false);
        let c = find_switcher_cycle(&g, &r, &VertexSet::new(6)).unwrap();
        let w = build_switcher(&g, &r, &c, 10, 1).unwrap().unwrap();
        let (even, odd) = hamilton_paths_of_switcher(&g, &w, &r).unwrap();
        let ends = w.endpoints();
        assert_eq!((even[0], *even.last().unwrap()), ends);
        assert_eq!((odd[0], *odd.last().unwrap()), ends);
        assert_eq!(even.len(), w.vertices(6).len());
    }

    #[test]
    fn malformed_switchers_rejected() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (3, 4)]).unwrap();
        let even_r = ids(&g, &[(0, 1), (1, 2)]);
        assert!(ParitySwitcher::new(&g, &even_r, vec![0, 1, 2, 3], vec![vec![1, 4, 3]]).is_err());
        let r = ids(&g, &[(0, 1)]);
        assert!(ParitySwitcher::new(&g, &r, vec![0, 1, 2, 3], vec![]).is_err());
        assert!(ParitySwitcher::new(&g, &r, vec![0, 1, 2, 3], vec![vec![1, 2, 3]]).is_err());
        assert!(ParitySwitcher::new(&g, &r, vec![0, 1, 2], vec![]).is_err());
    }
}

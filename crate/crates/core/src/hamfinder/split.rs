use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rng::rng_from_seed;

/// Default resampling budget of [`lll_split`].
pub const DEFAULT_SPLIT_RETRIES: usize = 10_000;

/// A request to split `Y` into parts of sizes `a` and `b = |Y| - a`.
///
/// Every constrained vertex `v` must end with
/// `deg(v, A) >= a/(3|Y|) deg(v, Y)` and `deg(v, B) >= b/(3|Y|) deg(v, Y)`.
#[derive(Clone, Debug)]
pub struct SplitRequest {
    y: VertexSet,
    a: usize,
    b: usize,
    constrained: Option<VertexSet>,
}

impl SplitRequest {
    /// Floors apply to every vertex of the host graph.
    pub fn new(y: VertexSet, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a + b != y.len() {
            return Err(Error::Precondition(format!("split sizes {a} + {b} must be positive and sum to |Y| = {}", y.len())));
        }
        Ok(SplitRequest { y, a, b, constrained: None })
    }

    /// Balanced request, `a = floor(|Y| / 2)`.
    pub fn balanced(y: VertexSet) -> Result<Self> {
        let a = y.len() / 2;
        let b = y.len() - a;
        Self::new(y, a, b)
    }

    /// Restricts the floors to `vertices`.
    pub fn constrain(mut self, vertices: VertexSet) -> Self {
        self.constrained = Some(vertices);
        self
    }

    pub fn y(&self) -> &VertexSet {
        &self.y
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    /// True iff `v` meets both floors for the given degrees.
    pub fn floors_hold(&self, deg_a: usize, deg_y: usize) -> bool {
        let m = self.y.len();
        let deg_b = deg_y - deg_a;
        3 * m * deg_a >= self.a * deg_y && 3 * m * deg_b >= self.b * deg_y
    }

    fn is_constrained(&self, v: usize) -> bool {
        self.constrained.as_ref().is_none_or(|c| c.contains(v))
    }
}

/// The vertex left violating a floor when the budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitFailure {
    pub vertex: usize,
    pub deg_a: usize,
    pub deg_b: usize,
    pub deg_y: usize,
    pub resamples: usize,
}

impl fmt::Display for SplitFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} violates its floor (deg_A {}, deg_B {}, deg_Y {}) after {} resamples",
            self.vertex, self.deg_a, self.deg_b, self.deg_y, self.resamples
        )
    }
}

/// Degree-preserving random split of `Y`.
///
/// Starts from a uniform `a`-subset. While some constrained vertex `v`
/// violates a floor, one neighbor of `v` on its surplus side is swapped
/// with a member of the other side, which keeps both part sizes. The
/// partner is the best of 16 random candidates by the change in the number
/// of violated vertices, or a uniform one with probability 1/10. Every
/// `max(100, 10 |constrained|)` swaps the whole split is redrawn. The
/// floors are checked exactly on return.
pub fn lll_split(
    g: &Graph,
    req: &SplitRequest,
    retries: usize,
    seed: u64,
) -> std::result::Result<(VertexSet, VertexSet), SplitFailure> {
    let n = g.n();
    let mut rng = rng_from_seed(seed);
    let ys: Vec<usize> = req.y.iter().collect();
    let watched: Vec<usize> = (0..n).filter(|&v| req.is_constrained(v)).collect();
    let deg_y: Vec<usize> = (0..n).map(|v| g.degree_into(v, &req.y)).collect();
    let mut in_a = vec![false; n];
    let mut deg_a = vec![0usize; n];

    let redraw = |in_a: &mut Vec<bool>, deg_a: &mut Vec<usize>, rng: &mut _| {
        let mut order = ys.clone();
        order.shuffle(rng);
        in_a.iter_mut().for_each(|x| *x = false);
        for &v in &order[..req.a] {
            in_a[v] = true;
        }
        for (v, d) in deg_a.iter_mut().enumerate() {
            *d = g.neighbors(v).filter(|&w| in_a[w]).count();
        }
    };
    redraw(&mut in_a, &mut deg_a, &mut rng);

    let bad = |v: usize, deg_a: &[usize]| req.is_constrained(v) && !req.floors_hold(deg_a[v], deg_y[v]);
    let relabel = |w: usize, label: bool, in_a: &mut [bool], deg_a: &mut [usize]| {
        in_a[w] = label;
        for u in g.neighbors(w) {
            if label {
                deg_a[u] += 1;
            } else {
                deg_a[u] -= 1;
            }
        }
    };
    // violated vertices among N(w) ∪ N(z), duplicates counted twice on both sides
    let local_bad = |w: usize, z: usize, deg_a: &[usize]| {
        g.neighbors(w).chain(g.neighbors(z)).filter(|&u| bad(u, deg_a)).count()
    };

    let mut violated = Vec::new();
    let redraw_every = (10 * watched.len()).max(100);
    for round in 0..=retries {
        violated.clear();
        violated.extend(watched.iter().copied().filter(|&v| bad(v, &deg_a)));
        if violated.is_empty() {
            let a = VertexSet::from_iter(n, ys.iter().copied().filter(|&v| in_a[v]));
            let b = VertexSet::from_iter(n, ys.iter().copied().filter(|&v| !in_a[v]));
            return Ok((a, b));
        }
        if round == retries {
            break;
        }
        if round % redraw_every == redraw_every - 1 {
            redraw(&mut in_a, &mut deg_a, &mut rng);
            continue;
        }
        let v = violated[rng.gen_range(0..violated.len())];
        // v lacks neighbors on side `short`
        let short = 3 * ys.len() * deg_a[v] < req.a * deg_y[v];
        let movable: Vec<usize> = g.neighbors(v).filter(|&w| req.y.contains(w) && in_a[w] != short).collect();
        let Some(&w) = movable.choose(&mut rng) else { continue };
        let mut best: Option<(isize, usize)> = None;
        let tries = if rng.gen_range(0..10) == 0 { 1 } else { 16 };
        for _ in 0..tries {
            let z = ys[rng.gen_range(0..ys.len())];
            if in_a[z] != short || z == w || g.has_edge(v, z) {
                continue;
            }
            let before = local_bad(w, z, &deg_a) as isize;
            relabel(w, short, &mut in_a, &mut deg_a);
            relabel(z, !short, &mut in_a, &mut deg_a);
            let delta = local_bad(w, z, &deg_a) as isize - before;
            relabel(z, short, &mut in_a, &mut deg_a);
            relabel(w, !short, &mut in_a, &mut deg_a);
            if best.is_none_or(|(d, _)| delta < d) {
                best = Some((delta, z));
            }
        }
        if let Some((_, z)) = best {
            relabel(w, short, &mut in_a, &mut deg_a);
            relabel(z, !short, &mut in_a, &mut deg_a);
        }
    }
    let v = violated[0];
    Err(SplitFailure { vertex: v, deg_a: deg_a[v], deg_b: deg_y[v] - deg_a[v], deg_y: deg_y[v], resamples: retries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &Graph, req: &SplitRequest, a: &VertexSet, b: &VertexSet) {
        let (sa, sb) = req.sizes();
        assert_eq!((a.len(), b.len()), (sa, sb));
        assert!(a.is_disjoint(b));
        for v in 0..g.n() {
            if req.is_constrained(v) {
                assert!(req.floors_hold(g.degree_into(v, a), g.degree_into(v, req.y())));
            }
        }
    }

    #[test]
    fn k6_balanced() {
        let g = Graph::complete(6);
        let req = SplitRequest::new(VertexSet::full(6), 3, 3).unwrap();
        let (a, b) = lll_split(&g, &req, 100, 1).unwrap();
        check(&g, &req, &a, &b);
        for v in 0..6 {
            assert!(g.degree_into(v, &a) >= 2);
        }
    }

    #[test]
    fn star_center_needs_two_leaves_per_side() {
        let pairs: Vec<_> = (1..=10).map(|i| (0, i)).collect();
        let g = Graph::from_edge_list(11, &pairs).unwrap();
        let leaves = VertexSet::from_iter(11, 1..=10);
        let req = SplitRequest::new(leaves, 5, 5).unwrap();
        for seed in 0..20 {
            let (a, b) = lll_split(&g, &req, DEFAULT_SPLIT_RETRIES, seed).unwrap();
            check(&g, &req, &a, &b);
            assert!(g.degree_into(0, &a) >= 2 && g.degree_into(0, &b) >= 2);
        }
    }

    #[test]
    fn independent_target_is_vacuous() {
        let g = Graph::cycle(6);
        let y = VertexSet::from_iter(6, [0, 2, 4]);
        let req = SplitRequest::new(y.clone(), 1, 2).unwrap().constrain(y);
        let (a, b) = lll_split(&g, &req, 0, 3).unwrap();
        check(&g, &req, &a, &b);
        assert!(SplitRequest::new(VertexSet::full(4), 0, 4).is_err());
        assert!(SplitRequest::new(VertexSet::full(4), 1, 2).is_err());
    }

    #[test]
    fn unsatisfiable_reports_vertex() {
        // vertex 0 has a single neighbor in Y, so one side always misses it
        let g = Graph::path(3);
        let req = SplitRequest::new(VertexSet::from_iter(3, [1, 2]), 1, 1).unwrap();
        let err = lll_split(&g, &req, 50, 0).unwrap_err();
        assert_eq!(err.deg_y, 1);
    }
}

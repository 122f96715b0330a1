use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, VertexSet};
use crate::rng::{rng_from_seed, Rng64};

/// Result of a rotation-extension search.
#[derive(Clone, Debug)]
pub struct RotationOutcome {
    /// A verified Hamilton path, when found.
    pub path: Option<Vec<usize>>,
    /// Extensions plus rotations spent.
    pub steps: u64,
}

/// Hamilton path of `g` from `x` to `y`, or `None` when the budget runs
/// out first. `budget` counts extensions plus rotations.
pub fn rotation_extension_path(g: &Graph, x: usize, y: usize, budget: u64, seed: u64) -> Option<Vec<usize>> {
    let all = VertexSet::full(g.n());
    rotation_extension_within(g, &all, x, y, budget, &mut rng_from_seed(seed)).path
}

/// Hamilton path of `g[within]` from `x` to `y`.
///
/// Each attempt anchors one endpoint `a`, grows a Hamilton path of
/// `g[within] - b` from `a` and then rotates until the free end is a
/// neighbor of the other endpoint `b`, which is appended last.
/// Extensions pick the unvisited neighbor with the fewest unvisited
/// neighbors (random tie-break). Rotations pick a pivot uniformly among
/// those whose new end can make progress, falling back to any pivot.
/// Attempts get `budget / 10` steps each and alternate the anchor between
/// `x` and `y`.
pub fn rotation_extension_within(
    g: &Graph,
    within: &VertexSet,
    x: usize,
    y: usize,
    budget: u64,
    rng: &mut Rng64,
) -> RotationOutcome {
    let fail = |steps| RotationOutcome { path: None, steps };
    if x == y || x >= g.n() || y >= g.n() || !within.contains(x) || !within.contains(y) {
        return fail(0);
    }
    if within.len() == 2 {
        return RotationOutcome { path: g.has_edge(x, y).then(|| vec![x, y]), steps: 1 };
    }
    for v in within.iter() {
        let need = if v == x || v == y { 1 } else { 2 };
        if g.degree_into(v, within) < need {
            return fail(0);
        }
    }

    let per_attempt = (budget / 10).max(1);
    let mut search = Attempt::new(g, within);
    let mut used = 0;
    let mut round = 0u64;
    while used < budget {
        let cap = per_attempt.min(budget - used);
        let (a, b) = if round.is_multiple_of(2) { (x, y) } else { (y, x) };
        let (found, steps) = search.run(a, b, cap, rng);
        used += steps;
        if found {
            let mut path = std::mem::take(&mut search.path);
            if round % 2 == 1 {
                path.reverse();
            }
            assert!(g.is_hamilton_path_of(&path, within, x, y), "rotation-extension produced an invalid path");
            return RotationOutcome { path: Some(path), steps: used };
        }
        round += 1;
    }
    fail(used)
}

struct Attempt<'g> {
    g: &'g Graph,
    allowed: Vec<bool>,
    goal: usize,
    in_path: Vec<bool>,
    pos: Vec<usize>,
    // unvisited allowed neighbors, excluding the closing endpoint
    free_deg: Vec<u32>,
    path: Vec<usize>,
    preferred: Vec<usize>,
    fallback: Vec<usize>,
}

impl<'g> Attempt<'g> {
    fn new(g: &'g Graph, within: &VertexSet) -> Self {
        let n = g.n();
        let mut allowed = vec![false; n];
        for v in within.iter() {
            allowed[v] = true;
        }
        Attempt {
            g,
            allowed,
            goal: within.len() - 1,
            in_path: vec![false; n],
            pos: vec![0; n],
            free_deg: vec![0; n],
            path: Vec::with_capacity(n),
            preferred: Vec::new(),
            fallback: Vec::new(),
        }
    }

    fn reset(&mut self, a: usize, b: usize) {
        let g = self.g;
        self.path.clear();
        for v in 0..g.n() {
            self.in_path[v] = false;
            self.free_deg[v] = 0;
        }
        for v in 0..g.n() {
            if self.allowed[v] && v != b {
                for w in g.neighbors(v) {
                    if self.allowed[w] && w != b {
                        self.free_deg[v] += 1;
                    }
                }
            }
        }
        self.push(a);
    }

    fn push(&mut self, v: usize) {
        self.pos[v] = self.path.len();
        self.path.push(v);
        self.in_path[v] = true;
        let g = self.g;
        for w in g.neighbors(v) {
            if self.free_deg[w] > 0 {
                self.free_deg[w] -= 1;
            }
        }
    }

    fn run(&mut self, a: usize, b: usize, cap: u64, rng: &mut Rng64) -> (bool, u64) {
        let g = self.g;
        self.reset(a, b);
        let mut steps = 0;
        while steps < cap {
            steps += 1;
            let tip = *self.path.last().unwrap();
            if self.path.len() == self.goal {
                if g.has_edge(tip, b) {
                    self.path.push(b);
                    return (true, steps);
                }
                if !self.rotate(rng, |_, v| g.has_edge(v, b)) {
                    return (false, steps);
                }
                continue;
            }
            if let Some(w) = self.pick_extension(tip, b, rng) {
                self.push(w);
            } else if !self.rotate(rng, |s, v| s.free_deg[v] > 0) {
                return (false, steps);
            }
        }
        (false, steps)
    }

    fn pick_extension(&self, tip: usize, b: usize, rng: &mut Rng64) -> Option<usize> {
        let g = self.g;
        let mut best = None;
        let mut best_deg = u32::MAX;
        let mut ties = 0u32;
        for w in g.neighbors(tip) {
            if !self.allowed[w] || self.in_path[w] || w == b {
                continue;
            }
            let d = self.free_deg[w];
            if d < best_deg {
                best_deg = d;
                best = Some(w);
                ties = 1;
            } else if d == best_deg {
                ties += 1;
                if rng.gen_range(0..ties) == 0 {
                    best = Some(w);
                }
            }
        }
        best
    }

    /// Pósa rotation at the free end: for a path neighbor `path[i]` of the
    /// tip, reverse `path[i+1..]` so that `path[i+1]` becomes the tip.
    fn rotate<P>(&mut self, rng: &mut Rng64, prefer: P) -> bool
    where
        P: Fn(&Self, usize) -> bool,
    {
        let len = self.path.len();
        if len < 3 {
            return false;
        }
        let g = self.g;
        let tip = self.path[len - 1];
        self.preferred.clear();
        self.fallback.clear();
        for w in g.neighbors(tip) {
            if !self.in_path[w] {
                continue;
            }
            let i = self.pos[w];
            if i + 2 >= len {
                continue;
            }
            if prefer(self, self.path[i + 1]) {
                self.preferred.push(i);
            } else {
                self.fallback.push(i);
            }
        }
        let pool = if self.preferred.is_empty() { &self.fallback } else { &self.preferred };
        let Some(&i) = pool.choose(rng) else {
            return false;
        };
        self.path[i + 1..].reverse();
        for j in i + 1..len {
            self.pos[self.path[j]] = j;
        }
        true
    }
}

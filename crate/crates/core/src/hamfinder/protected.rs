use std::fmt;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::{lll_split, rotation_extension_within, SplitRequest, DEFAULT_SPLIT_RETRIES};
use crate::graph::{Graph, VertexSet};
use crate::rng::{rng_from_seed, sub_seed, Rng64};
use crate::switcher::{disjoint_pair_paths, DEFAULT_LINKAGE_RETRIES};

/// Pipeline stage of a protected Hamilton path construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathStage {
    Precondition,
    Escort,
    Split,
    Linkage,
    Closing,
}

impl fmt::Display for PathStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathStage::Precondition => "precondition",
            PathStage::Escort => "escort",
            PathStage::Split => "split",
            PathStage::Linkage => "linkage",
            PathStage::Closing => "closing",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageFailure {
    pub stage: PathStage,
    pub detail: String,
}

impl StageFailure {
    fn new(stage: PathStage, detail: impl Into<String>) -> Self {
        StageFailure { stage, detail: detail.into() }
    }
}

impl fmt::Display for StageFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.stage, self.detail)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ProtectedConfig {
    /// Rotation-extension steps for the closing path.
    pub path_budget: u64,
    pub split_retries: usize,
    pub linkage_retries: usize,
    /// Fresh split / linkage / closing rounds before giving up.
    pub attempts: usize,
}

impl Default for ProtectedConfig {
    fn default() -> Self {
        ProtectedConfig {
            path_budget: 1_000_000,
            split_retries: DEFAULT_SPLIT_RETRIES,
            linkage_retries: DEFAULT_LINKAGE_RETRIES,
            attempts: 4,
        }
    }
}

/// Hamilton path of `g[s]` from `x` to `y` that routes every low-degree
/// vertex of `s` through a dedicated pair of neighbors.
///
/// The protected set is `g.small_vertices()`.
pub fn hamilton_path_protected(
    g: &Graph,
    s: &VertexSet,
    x: usize,
    y: usize,
    seed: u64,
) -> Result<Vec<usize>, StageFailure> {
    hamilton_path_protected_with(g, s, x, y, &g.small_vertices(), &ProtectedConfig::default(), seed)
}

/// [`hamilton_path_protected`] with an explicit protected set.
///
/// With `s ∩ small = {u_1..u_t}`:
/// 1. pick distinct escorts `x_i, y_i ∈ N(u_i) ∩ s`, outside `small ∪ {x, y}`;
/// 2. split the rest of `s` (minus `x`, `y` and the escort triples) into `S1`, `S2`;
/// 3. link `y_t -> y` and `x_i -> y_{i-1}` by disjoint paths inside
///    `S1 ∪ {y_1, x_2, y_2, .., x_t, y_t, y}`;
/// 4. close with a rotation-extension path from `x` to `x_1` through all
///    remaining vertices;
/// 5. concatenate `x .. x_1 u_1 y_1 .. x_2 u_2 y_2 .. y_t .. y` and verify.
///
/// With no protected vertex in `s` only step 4 runs, from `x` to `y`.
pub fn hamilton_path_protected_with(
    g: &Graph,
    s: &VertexSet,
    x: usize,
    y: usize,
    small: &VertexSet,
    config: &ProtectedConfig,
    seed: u64,
) -> Result<Vec<usize>, StageFailure> {
    use PathStage::*;
    if x == y || x >= g.n() || y >= g.n() || !s.contains(x) || !s.contains(y) {
        return Err(StageFailure::new(Precondition, format!("endpoints {x}, {y} must be distinct members of S")));
    }
    if small.contains(x) || small.contains(y) {
        return Err(StageFailure::new(Precondition, "endpoints must not be protected"));
    }
    let mut inner = s.clone();
    inner.remove(x);
    inner.remove(y);
    let us: Vec<usize> = s.iter().filter(|&v| small.contains(v)).collect();
    if let Some(&u) = us.iter().find(|&&u| g.degree_into(u, &inner) < 2) {
        return Err(StageFailure::new(Precondition, format!("protected vertex {u} has fewer than 2 neighbors in S - {{x, y}}")));
    }

    let mut rng = rng_from_seed(seed);
    if us.is_empty() {
        return rotation_extension_within(g, s, x, y, config.path_budget, &mut rng)
            .path
            .ok_or_else(|| StageFailure::new(Closing, "rotation-extension budget exhausted"));
    }

    let candidates: Vec<Vec<usize>> = us
        .iter()
        .map(|&u| g.neighbors(u).filter(|&w| inner.contains(w) && !small.contains(w)).collect())
        .collect();
    let escorts = choose_escorts(&candidates, g.n(), &mut rng)
        .ok_or_else(|| StageFailure::new(Escort, "no system of distinct escort pairs"))?;

    let mut last = None;
    for attempt in 0..config.attempts.max(1) {
        match link_and_close(g, s, x, y, small, &us, &escorts, config, sub_seed(seed, attempt as u64)) {
            Ok(path) => return Ok(path),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Distinct pairs `(x_i, y_i)` from `candidates[i]`, by backtracking.
fn choose_escorts(candidates: &[Vec<usize>], n: usize, rng: &mut Rng64) -> Option<Vec<(usize, usize)>> {
    let mut shuffled: Vec<Vec<usize>> = candidates.to_vec();
    for c in &mut shuffled {
        c.shuffle(rng);
    }
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(candidates.len());
    let mut nodes = 0u32;
    fn go(
        i: usize,
        cands: &[Vec<usize>],
        used: &mut [bool],
        out: &mut Vec<(usize, usize)>,
        nodes: &mut u32,
    ) -> bool {
        if i == cands.len() {
            return true;
        }
        *nodes += 1;
        if *nodes > 100_000 {
            return false;
        }
        let c = &cands[i];
        for (j, &a) in c.iter().enumerate() {
            for &b in &c[j + 1..] {
                if used[a] || used[b] {
                    continue;
                }
                used[a] = true;
                used[b] = true;
                out.push((a, b));
                if go(i + 1, cands, used, out, nodes) {
                    return true;
                }
                out.pop();
                used[a] = false;
                used[b] = false;
            }
        }
        false
    }
    go(0, &shuffled, &mut used, &mut out, &mut nodes).then_some(out)
}

#[allow(clippy::too_many_arguments)]
fn link_and_close(
    g: &Graph,
    s: &VertexSet,
    x: usize,
    y: usize,
    small: &VertexSet,
    us: &[usize],
    escorts: &[(usize, usize)],
    config: &ProtectedConfig,
    seed: u64,
) -> Result<Vec<usize>, StageFailure> {
    use PathStage::*;
    let n = g.n();
    let t = us.len();
    let mut rest = s.clone();
    rest.remove(x);
    rest.remove(y);
    for (&u, &(a, b)) in us.iter().zip(escorts) {
        rest.remove(u);
        rest.remove(a);
        rest.remove(b);
    }

    let s1 = if rest.len() >= 2 {
        let constrained = VertexSet::from_iter(
            n,
            s.iter().filter(|&v| !small.contains(v) && g.degree_into(v, &rest) >= 2),
        );
        let req = SplitRequest::balanced(rest.clone()).expect("two or more vertices").constrain(constrained);
        lll_split(g, &req, config.split_retries, sub_seed(seed, 0))
            .map_err(|f| StageFailure::new(Split, f.to_string()))?
            .0
    } else {
        rest
    };

    let mut linkage_side = s1;
    for (i, &(a, b)) in escorts.iter().enumerate() {
        linkage_side.insert(b);
        if i > 0 {
            linkage_side.insert(a);
        }
    }
    linkage_side.insert(y);
    let mut pairs = vec![(escorts[t - 1].1, y)];
    pairs.extend((1..t).map(|i| (escorts[i].0, escorts[i - 1].1)));
    let paths = disjoint_pair_paths(g, &pairs, &linkage_side.complement(), config.linkage_retries, sub_seed(seed, 1))
        .map_err(|e| StageFailure::new(Linkage, e.to_string()))?
        .ok_or_else(|| StageFailure::new(Linkage, format!("no disjoint paths for {} pairs", pairs.len())))?;

    let mut w = s.clone();
    for &v in paths.iter().flatten().chain(us) {
        w.remove(v);
    }
    let mut rng = rng_from_seed(sub_seed(seed, 2));
    let mut path = rotation_extension_within(g, &w, x, escorts[0].0, config.path_budget, &mut rng)
        .path
        .ok_or_else(|| StageFailure::new(Closing, "rotation-extension budget exhausted"))?;

    for i in 0..t {
        path.push(us[i]);
        path.push(escorts[i].1);
        if i + 1 < t {
            path.extend(paths[i + 1].iter().rev().skip(1));
        } else {
            path.extend(paths[0].iter().skip(1));
        }
    }
    if !g.is_hamilton_path_of(&path, s, x, y) {
        return Err(StageFailure::new(Closing, "assembled path failed verification"));
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unprotected_reduces_to_rotation_extension() {
        let g = Graph::complete(7);
        let s = VertexSet::full(7);
        let p = hamilton_path_protected(&g, &s, 0, 6, 1).unwrap();
        assert!(g.is_hamilton_path_of(&p, &s, 0, 6));
    }

    #[test]
    fn degree_two_vertex_is_escorted() {
        // K8 on 0..8 plus vertex 8 adjacent to 2 and 5 only
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..8 {
            for b in a + 1..8 {
                pairs.push((a, b));
            }
        }
        pairs.push((2, 8));
        pairs.push((5, 8));
        let g = Graph::from_edge_list(9, &pairs).unwrap();
        let s = VertexSet::full(9);
        let small = VertexSet::from_iter(9, [8]);
        let p = hamilton_path_protected_with(&g, &s, 0, 7, &small, &ProtectedConfig::default(), 4).unwrap();
        assert!(g.is_hamilton_path_of(&p, &s, 0, 7));
        let at = p.iter().position(|&v| v == 8).unwrap();
        let mut hop = [p[at - 1], p[at + 1]];
        hop.sort();
        assert_eq!(hop, [2, 5]);
    }

    #[test]
    fn precondition_rejected() {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                pairs.push((a, b));
            }
        }
        pairs.push((0, 6));
        pairs.push((3, 6));
        let g = Graph::from_edge_list(7, &pairs).unwrap();
        let small = VertexSet::from_iter(7, [6]);
        let err = hamilton_path_protected_with(&g, &VertexSet::full(7), 0, 1, &small, &ProtectedConfig::default(), 0)
            .unwrap_err();
        assert_eq!(err.stage, PathStage::Precondition);
    }
}

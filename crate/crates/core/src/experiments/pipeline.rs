//! Constructive refutation: given `R`, build a Hamilton cycle of `G` that
//! meets `R` in an odd number of edges.
//!
//! S2a find an even cycle `C` with one non-`R` edge; S2b escort its SMALL
//! vertices, split the rest and link `v'_i` to `v'_{2k-i+2}` inside the
//! `B` side; S3 cover everything else by a protected Hamilton path from
//! `v'_1` to `v'_{k+1}`; S4 pick the switcher path of the other parity;
//! S5 glue and verify.

use std::fmt;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::gf2::EdgeVector;
use crate::graph::{Graph, VertexSet};
use crate::hamfinder::{
    hamilton_path_protected_with, lll_split, ProtectedConfig, SplitRequest, DEFAULT_SPLIT_RETRIES,
};
use crate::rng::{rng_from_seed, sub_seed, unit_f64};
use crate::spanning::{is_bipartition_form, normalize_hillclimb, HamiltonCycle, WitnessR};
use crate::switcher::{
    disjoint_pair_paths, hamilton_paths_of_switcher, switcher_cycles, ParitySwitcher, SwitcherCycle,
    DEFAULT_LINKAGE_RETRIES,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PipelineStage {
    S2a,
    S2b,
    S3,
    S4,
    S5,
}

impl fmt::Display for PipelineStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineFailure {
    pub stage: PipelineStage,
    pub detail: String,
    /// Switcher cycles tried before giving up.
    pub candidates_tried: usize,
}

impl fmt::Display for PipelineFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({} candidate cycles)", self.stage, self.detail, self.candidates_tried)
    }
}

fn fail(stage: PipelineStage, detail: impl Into<String>) -> PipelineFailure {
    PipelineFailure { stage, detail: detail.into(), candidates_tried: 0 }
}

#[derive(Clone, Copy, Debug)]
pub struct PipelineConfig {
    /// Switcher cycles to try, in seed-edge order.
    pub max_candidates: usize,
    pub split_retries: usize,
    pub linkage_retries: usize,
    pub protected: ProtectedConfig,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            max_candidates: 8,
            split_retries: DEFAULT_SPLIT_RETRIES,
            linkage_retries: DEFAULT_LINKAGE_RETRIES,
            protected: ProtectedConfig::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Refutation {
    /// Vertex order of the Hamilton cycle.
    pub cycle: Vec<usize>,
    pub vector: EdgeVector,
    pub switcher_cycle: SwitcherCycle,
    pub switcher: ParitySwitcher,
    /// `v'_1 .. v'_2k`.
    pub escorts: Vec<usize>,
    /// The S3 path from `v_1` to `v_{k+1}`.
    pub outer_path: Vec<usize>,
    pub candidates_tried: usize,
}

/// [`refutation_pipeline_with`] under the default configuration.
pub fn refutation_pipeline(g: &Graph, r: &EdgeVector, seed: u64) -> Result<Refutation, PipelineFailure> {
    refutation_pipeline_with(g, r, &PipelineConfig::default(), seed)
}

/// Runs S2a..S5, trying up to `max_candidates` switcher cycles.
///
/// The returned cycle has been checked to be a Hamilton cycle of `g` with
/// odd intersection with `r`; nothing unverified is ever returned.
pub fn refutation_pipeline_with(
    g: &Graph,
    r: &EdgeVector,
    config: &PipelineConfig,
    seed: u64,
) -> Result<Refutation, PipelineFailure> {
    use PipelineStage::*;
    if r.host_m() != g.m() {
        return Err(fail(S2a, format!("R indexes {} edges, G has {}", r.host_m(), g.m())));
    }
    if (0..g.m()).all(|e| r.get(e)) {
        return Err(fail(S2a, "no non-R edge"));
    }
    let small = g.small_vertices();
    let mut last = fail(S2a, "no even cycle with exactly one non-R edge meets the length and SMALL constraints");
    let mut tried = 0;
    for cand in switcher_cycles(g, r, &small).take(config.max_candidates.max(1)) {
        tried += 1;
        match build(g, r, &small, cand, config, sub_seed(seed, tried as u64)) {
            Ok(mut out) => {
                out.candidates_tried = tried;
                return Ok(out);
            }
            Err(e) => last = e,
        }
    }
    last.candidates_tried = tried;
    Err(last)
}

fn build(
    g: &Graph,
    r: &EdgeVector,
    small: &VertexSet,
    cand: SwitcherCycle,
    config: &PipelineConfig,
    seed: u64,
) -> Result<Refutation, PipelineFailure> {
    use PipelineStage::*;
    let n = g.n();
    let cycle = cand.order.clone();
    let len = cycle.len();
    let k = len / 2;

    // escorts v'_i
    let mut rng = rng_from_seed(sub_seed(seed, 0));
    let mut used = VertexSet::from_iter(n, cycle.iter().copied());
    let mut escorts = cycle.clone();
    for (i, &v) in cycle.iter().enumerate() {
        if small.contains(v) {
            let mut options: Vec<usize> = g.neighbors(v).filter(|&w| !small.contains(w) && !used.contains(w)).collect();
            options.shuffle(&mut rng);
            let &w = options.first().ok_or_else(|| fail(S2b, format!("no escort for SMALL cycle vertex {v}")))?;
            used.insert(w);
            escorts[i] = w;
        }
    }
    let u_set = used;

    // split Y = V - (SMALL ∪ U) into A' and the rest
    let mut y = u_set.complement();
    y.difference_with(small);
    if y.len() < 2 {
        return Err(fail(S2b, "too few vertices left to split"));
    }
    let a = (n / 2).min(y.len() - 1);
    let constrained =
        VertexSet::from_iter(n, (0..n).filter(|&v| !small.contains(v) && g.degree_into(v, &y) >= 2));
    let req = SplitRequest::new(y.clone(), a, y.len() - a)
        .map_err(|e| fail(S2b, e.to_string()))?
        .constrain(constrained);
    let (a_prime, _) =
        lll_split(g, &req, config.split_retries, sub_seed(seed, 1)).map_err(|f| fail(S2b, format!("split: {f}")))?;

    // B = (B' - Z) ∪ {v'_i}, with B' = V - (A' ∪ SMALL) and Z = SMALL ∪ N(SMALL)
    let mut z = g.neighborhood(small);
    z.union_with(small);
    let mut b = a_prime.complement();
    b.difference_with(&z);
    for &w in &escorts {
        b.insert(w);
    }

    // G_1 = G[B] - v'_1 - v'_{k+1} without the cycle and escort edges
    let mut keep = b;
    keep.remove(escorts[0]);
    keep.remove(escorts[k]);
    let mut drop = cand.vector.ones_iter().collect::<Vec<_>>();
    for (&v, &w) in cycle.iter().zip(&escorts) {
        if v != w {
            drop.push(g.edge_id(v, w).expect("escorts are neighbors"));
        }
    }
    let g1 = g.restrict(&keep, &drop);
    let local = |v: usize| g1.local_vertex(v).expect("escorts lie in B");
    let pairs: Vec<(usize, usize)> = (2..=k).map(|i| (local(escorts[i - 1]), local(escorts[2 * k - i + 1]))).collect();
    let linked = disjoint_pair_paths(&g1.graph, &pairs, &VertexSet::new(g1.graph.n()), config.linkage_retries, sub_seed(seed, 2))
        .map_err(|e| fail(S2b, format!("linkage: {e}")))?
        .ok_or_else(|| fail(S2b, format!("linkage: no disjoint paths for {} pairs", pairs.len())))?;

    let paths: Vec<Vec<usize>> = (2..=k)
        .zip(&linked)
        .map(|(i, p)| {
            let (s, t) = (i - 1, 2 * k - i + 1);
            let mut full = Vec::with_capacity(p.len() + 2);
            if escorts[s] != cycle[s] {
                full.push(cycle[s]);
            }
            full.extend(g1.lift_path(p));
            if escorts[t] != cycle[t] {
                full.push(cycle[t]);
            }
            full
        })
        .collect();
    let switcher = ParitySwitcher::new(g, r, cycle.clone(), paths).map_err(|e| fail(S2b, e.to_string()))?;

    // S3 on V - W, where W = V(C) ∪ V(P'_i) - {v'_1, v'_{k+1}}
    let mut w = switcher.vertices(n);
    w.remove(escorts[0]);
    w.remove(escorts[k]);
    let rest = w.complement();
    let inner = hamilton_path_protected_with(g, &rest, escorts[0], escorts[k], small, &config.protected, sub_seed(seed, 3))
        .map_err(|e| fail(S3, e.to_string()))?;
    let mut outer = Vec::with_capacity(inner.len() + 2);
    if escorts[0] != cycle[0] {
        outer.push(cycle[0]);
    }
    outer.extend(inner);
    if escorts[k] != cycle[k] {
        outer.push(cycle[k]);
    }

    // S4
    let outer_odd = g.path_edge_ids(&outer).into_iter().filter(|&e| r.get(e)).count() % 2 == 1;
    let (even, odd) = hamilton_paths_of_switcher(g, &switcher, r).map_err(|e| fail(S4, e.to_string()))?;
    let inner_path = if outer_odd { even } else { odd };

    // S5
    let mut order = outer.clone();
    order.extend(inner_path[1..inner_path.len() - 1].iter().rev());
    let h = HamiltonCycle::new(g, &order).ok_or_else(|| fail(S5, "concatenation is not a Hamilton cycle"))?;
    if !h.vector().parity_unchecked(r) {
        return Err(fail(S5, "concatenation meets R evenly"));
    }
    Ok(Refutation {
        cycle: order,
        vector: h.vector().clone(),
        switcher_cycle: cand,
        switcher,
        escorts,
        outer_path: outer,
        candidates_tried: 0,
    })
}

/// A random `R` shaped like a real witness.
///
/// Keeps each edge with probability 1/2, hill-climbs to `deg_R >= deg_G / 2`
/// and rejects results that are a bipartition cut or all of `E(G)`. Up to
/// 20 draws, each from `sub_seed(seed, i)`.
pub fn synthetic_r(g: &Graph, seed: u64) -> Option<WitnessR> {
    (0..20).find_map(|i| {
        let mut rng = rng_from_seed(sub_seed(seed, i));
        let raw = EdgeVector::from_bools(&(0..g.m()).map(|_| unit_f64(&mut rng) < 0.5).collect::<Vec<_>>());
        let (v, _) = normalize_hillclimb(g, &raw);
        if v.count_ones() == g.m() || is_bipartition_form(g, &v) {
            return None;
        }
        let mut w = WitnessR::from_vector(g, v, false);
        w.normalized = true;
        Some(w)
    })
}

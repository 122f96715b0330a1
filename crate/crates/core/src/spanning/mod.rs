//! Does `C_n(G) = C(G)`? Hamilton cycle enumeration, the exact and sampled
//! spanning decisions, and dual witnesses.

mod enumerate;
mod witness;

pub use enumerate::{enumerate_hamilton_cycles, for_each_hamilton_cycle, HamiltonCycle, SearchEnd, SearchStats};
pub use witness::{
    extract_witness, extract_witness_from_span, is_bipartition_form, normalize_exact, normalize_hillclimb,
    normalize_witness, NormalizeMode, NormalizeStats, WitnessR, EXACT_NORMALIZE_MAX_N,
};

use std::fmt;
use std::ops::ControlFlow;

use rand::seq::IteratorRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::gf2::{cycle_space_dim, Gf2Basis, InsertOutcome};
use crate::graph::{write_graph6, Graph, VertexSet};
use crate::hamfinder::rotation_extension_within;
use crate::rng::{rng_from_seed, sub_seed, Rng64};

/// Default node-expansion budget of [`decide_spanning_exact`].
pub const DEFAULT_EXACT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    SpannedExact,
    SpannedConfirmed,
    NotSpanned,
    TriviallySpanned,
    Inconclusive,
}

impl VerdictKind {
    pub fn is_spanned(self) -> bool {
        matches!(self, VerdictKind::SpannedExact | VerdictKind::SpannedConfirmed | VerdictKind::TriviallySpanned)
    }

    /// Exit code of the `span` subcommand: 0 spanned, 1 not, 2 unknown.
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictKind::NotSpanned => 1,
            VerdictKind::Inconclusive => 2,
            _ => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::SpannedExact => "spanned_exact",
            VerdictKind::SpannedConfirmed => "spanned_confirmed",
            VerdictKind::NotSpanned => "not_spanned",
            VerdictKind::TriviallySpanned => "trivially_spanned",
            VerdictKind::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct SpanVerdict {
    pub kind: VerdictKind,
    pub rank_reached: usize,
    pub dim_cycle_space: usize,
    pub witness: Option<WitnessR>,
    /// Hamilton cycles whose vectors were independent when inserted.
    pub certificate: Vec<HamiltonCycle>,
}

impl SpanVerdict {
    fn new(kind: VerdictKind, basis: &Gf2Basis, dim: usize, certificate: Vec<HamiltonCycle>) -> Self {
        SpanVerdict { kind, rank_reached: basis.rank(), dim_cycle_space: dim, witness: None, certificate }
    }
}

/// Exact decision by full enumeration.
///
/// Hamilton vectors are inserted as they stream in and the search stops
/// as soon as the rank reaches `dim C(G)`. A completed search below full
/// rank yields `NotSpanned` with a witness re-verified against a second
/// pass over every Hamilton cycle. `budget` caps the search nodes of the
/// first pass; running out gives `Inconclusive`.
pub fn decide_spanning_exact(g: &Graph, budget: Option<u64>) -> SpanVerdict {
    let dim = cycle_space_dim(g);
    let mut basis = Gf2Basis::new(g.m());
    if dim == 0 {
        return SpanVerdict::new(VerdictKind::TriviallySpanned, &basis, 0, Vec::new());
    }
    let budget = budget.unwrap_or(DEFAULT_EXACT_BUDGET);
    let mut certificate = Vec::new();
    let stats = for_each_hamilton_cycle(g, Some(budget), |h| {
        if let Ok(InsertOutcome::Extended { .. }) = basis.insert(h.vector()) {
            certificate.push(h);
        }
        if basis.rank() == dim {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    match stats.end {
        SearchEnd::Stopped => return SpanVerdict::new(VerdictKind::SpannedExact, &basis, dim, certificate),
        SearchEnd::BudgetExhausted => return SpanVerdict::new(VerdictKind::Inconclusive, &basis, dim, certificate),
        SearchEnd::Complete => {}
    }

    let mut witness = extract_witness_from_span(g, &basis).expect("rank below dim leaves an odd dual vector");
    // the second pass retraces the first, so it needs exactly as many nodes
    let mut even = true;
    let check = for_each_hamilton_cycle(g, Some(stats.expansions), |h| {
        if h.vector().parity_unchecked(&witness.vector) {
            even = false;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if check.end != SearchEnd::Complete || !even {
        return SpanVerdict::new(VerdictKind::Inconclusive, &basis, dim, certificate);
    }
    witness.even_with_all_hamilton = true;
    SpanVerdict { witness: Some(witness), ..SpanVerdict::new(VerdictKind::NotSpanned, &basis, dim, certificate) }
}

/// Knobs of [`confirm_spanning_sampled`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SampledConfig {
    /// Hamilton cycles to attempt; `None` means `dim + 50`.
    pub samples: Option<usize>,
    /// Rotation-extension steps per attempt; `None` means `20_000 + 200 n`.
    pub steps_per_sample: Option<u64>,
}

/// One-sided spanning check from sampled Hamilton cycles.
///
/// Each attempt picks a uniformly random edge `xy`, searches a Hamilton
/// `x -> y` path by rotation-extension and closes it with `xy`. Attempt `i`
/// uses the sub-seed `sub_seed(seed, i)`. Returns `SpannedConfirmed` once
/// the sampled vectors reach `dim C(G)`, otherwise `Inconclusive`; never
/// `NotSpanned`.
pub fn confirm_spanning_sampled(g: &Graph, samples: usize, seed: u64) -> SpanVerdict {
    confirm_spanning_sampled_with(g, SampledConfig { samples: Some(samples), steps_per_sample: None }, seed)
}

pub fn confirm_spanning_sampled_with(g: &Graph, config: SampledConfig, seed: u64) -> SpanVerdict {
    let dim = cycle_space_dim(g);
    let mut basis = Gf2Basis::new(g.m());
    if dim == 0 {
        return SpanVerdict::new(VerdictKind::TriviallySpanned, &basis, 0, Vec::new());
    }
    let mut certificate = Vec::new();
    if g.n() < 3 || g.min_degree() < 2 || !g.is_connected() {
        return SpanVerdict::new(VerdictKind::Inconclusive, &basis, dim, certificate);
    }
    let samples = config.samples.unwrap_or(dim + 50);
    let steps = config.steps_per_sample.unwrap_or(20_000 + 200 * g.n() as u64);
    let all = VertexSet::full(g.n());
    for i in 0..samples {
        let mut rng = rng_from_seed(sub_seed(seed, i as u64));
        let (x, y) = g.edge(rng.gen_range(0..g.m()));
        let Some(path) = rotation_extension_within(g, &all, x, y, steps, &mut rng).path else {
            continue;
        };
        let order = scramble(g, path, g.n(), &mut rng);
        let h = HamiltonCycle::new(g, &order).expect("scrambling keeps a closable Hamilton path");
        if let Ok(InsertOutcome::Extended { .. }) = basis.insert(h.vector()) {
            certificate.push(h);
            if basis.rank() == dim {
                return SpanVerdict::new(VerdictKind::SpannedConfirmed, &basis, dim, certificate);
            }
        }
    }
    SpanVerdict::new(VerdictKind::Inconclusive, &basis, dim, certificate)
}

/// Random walk on Hamilton paths with a fixed start: `rotations` uniform
/// Pósa rotations, then more until the free end is adjacent to the start
/// (at most `10 n` extra). Falls back to the input path, which closes.
fn scramble(g: &Graph, mut path: Vec<usize>, rotations: usize, rng: &mut Rng64) -> Vec<usize> {
    let n = path.len();
    let mut pos = vec![0; g.n()];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = i;
    }
    let start = path.clone();
    for step in 0..rotations + 10 * n {
        let tip = path[n - 1];
        if step >= rotations && g.has_edge(tip, path[0]) {
            return path;
        }
        let pivots = g.neighbors(tip).map(|w| pos[w]).filter(|&i| i + 2 < n);
        let Some(i) = pivots.choose(rng) else { break };
        path[i + 1..].reverse();
        for j in i + 1..n {
            pos[path[j]] = j;
        }
    }
    start
}

/// Structured record printed by the `span` and `witness` subcommands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanCertificate {
    pub graph6: String,
    pub verdict: VerdictKind,
    pub rank: usize,
    pub dim: usize,
    pub witness_hex: Option<String>,
    pub witness_size: Option<usize>,
    pub even_with_all_hamilton: Option<bool>,
    pub odd_with_some_cycle: Option<bool>,
    pub normalized: Option<bool>,
    pub bipartition_form: Option<bool>,
    pub cycles: Vec<Vec<usize>>,
}

impl SpanCertificate {
    pub fn new(g: &Graph, verdict: &SpanVerdict) -> Self {
        let w = verdict.witness.as_ref();
        SpanCertificate {
            graph6: write_graph6(g),
            verdict: verdict.kind,
            rank: verdict.rank_reached,
            dim: verdict.dim_cycle_space,
            witness_hex: w.map(|w| w.vector.to_hex()),
            witness_size: w.map(|w| w.size),
            even_with_all_hamilton: w.map(|w| w.even_with_all_hamilton),
            odd_with_some_cycle: w.map(|w| w.odd_with_some_cycle),
            normalized: w.map(|w| w.normalized),
            bipartition_form: w.map(|w| is_bipartition_form(g, &w.vector)),
            cycles: verdict.certificate.iter().map(|h| h.order().to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_examples() {
        let tri = decide_spanning_exact(&Graph::complete(3), None);
        assert_eq!((tri.kind, tri.rank_reached, tri.dim_cycle_space), (VerdictKind::SpannedExact, 1, 1));

        let k4 = decide_spanning_exact(&Graph::complete(4), None);
        assert_eq!((k4.kind, k4.rank_reached, k4.dim_cycle_space), (VerdictKind::NotSpanned, 2, 3));
        let w = k4.witness.unwrap();
        assert!(w.even_with_all_hamilton && w.odd_with_some_cycle);

        let k5 = decide_spanning_exact(&Graph::complete(5), None);
        assert_eq!((k5.kind, k5.rank_reached, k5.dim_cycle_space), (VerdictKind::SpannedExact, 6, 6));
        assert_eq!(k5.certificate.len(), 6);
    }

    #[test]
    fn trivial_and_non_hamiltonian() {
        assert_eq!(decide_spanning_exact(&Graph::path(6), None).kind, VerdictKind::TriviallySpanned);
        let p = decide_spanning_exact(&Graph::petersen(), None);
        assert_eq!(p.kind, VerdictKind::NotSpanned);
        assert_eq!(p.rank_reached, 0);
        assert!(p.witness.is_some());
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let v = decide_spanning_exact(&Graph::complete(7), Some(3));
        assert_eq!(v.kind, VerdictKind::Inconclusive);
    }

    #[test]
    fn sampled_examples() {
        let c5 = confirm_spanning_sampled(&Graph::cycle(5), 1, 1);
        assert_eq!(c5.kind, VerdictKind::SpannedConfirmed);
        let k5 = confirm_spanning_sampled(&Graph::complete(5), 20, 7);
        assert_eq!((k5.kind, k5.rank_reached), (VerdictKind::SpannedConfirmed, 6));
        let p = confirm_spanning_sampled(&Graph::petersen(), 30, 7);
        assert_eq!(p.kind, VerdictKind::Inconclusive);
    }

    #[test]
    fn certificate_json() {
        let k4 = Graph::complete(4);
        let cert = SpanCertificate::new(&k4, &decide_spanning_exact(&k4, None));
        let back: SpanCertificate = serde_json::from_str(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        assert_eq!(cert.verdict, VerdictKind::NotSpanned);
        assert_eq!(cert.bipartition_form, Some(false));
    }
}

//! Seeded Monte Carlo campaigns over a grid of `(n, f)` cells.

use std::io::{Read, Write};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{refutation_pipeline, sample_gnp, synthetic_r, ModelParams, PipelineStage};
use crate::error::{Error, Result};
use crate::rng::{sub_seed, trial_seed};
use crate::spanning::{confirm_spanning_sampled_with, decide_spanning_exact, SampledConfig, SpanVerdict, VerdictKind};
use crate::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Hamiltonian {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpanMode {
    Exact,
    Sampled,
}

/// One CSV row. Column order is the field order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub m: usize,
    pub min_degree: usize,
    pub small_count: usize,
    pub hamiltonian: Hamiltonian,
    pub verdict: VerdictKind,
    pub rank: usize,
    pub dim: usize,
    pub switcher_found: bool,
    pub refutation_ok: Option<bool>,
    pub ms_sample: f64,
    pub ms_span: f64,
    pub ms_refute: f64,
}

impl TrialRecord {
    /// Equality ignoring the timing columns.
    pub fn same_outcome(&self, other: &TrialRecord) -> bool {
        let strip = |t: &TrialRecord| TrialRecord { ms_sample: 0.0, ms_span: 0.0, ms_refute: 0.0, ..t.clone() };
        strip(self) == strip(other)
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub ns: Vec<usize>,
    pub fs: Vec<f64>,
    /// Fixed edge probability replacing the `fs` axis.
    pub p: Option<f64>,
    pub trials: usize,
    pub master_seed: u64,
    pub mode: SpanMode,
    /// Exact mode: search-node budget. Sampled mode: Hamilton cycles to
    /// draw, `dim + 50` when `None`.
    pub budget: Option<u64>,
    /// Also run the refutation pipeline on a synthetic `R`.
    pub refute: bool,
    pub allow_even_n: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            ns: vec![101],
            fs: vec![3.0],
            p: None,
            trials: 10,
            master_seed: 0,
            mode: SpanMode::Sampled,
            budget: None,
            refute: false,
            allow_even_n: false,
            threads: None,
        }
    }
}

impl CampaignConfig {
    /// The grid in row-major `(n, f)` order; the position is the cell index.
    pub fn cells(&self) -> Result<Vec<ModelParams>> {
        let mut out = Vec::new();
        for &n in &self.ns {
            match self.p {
                Some(p) => out.push(ModelParams::with_p(n, p, 0, self.allow_even_n)?),
                None => {
                    for &f in &self.fs {
                        out.push(ModelParams::new(n, f, 0, self.allow_even_n)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Runs every trial of every cell and returns the records in
/// `(cell, trial)` order.
///
/// Trial `t` of cell `c` samples its graph from
/// `trial_seed(master_seed, c, t)`; the spanning check and the refutation
/// use fixed sub-seeds of that seed. The records (timings aside) do not
/// depend on the worker count. Failing trials are recorded, never fatal.
pub fn run_experiment(config: &CampaignConfig) -> Result<Vec<TrialRecord>> {
    let cells = config.cells()?;
    let jobs: Vec<ModelParams> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, params)| {
            (0..config.trials).map(move |t| params.reseeded(trial_seed(config.master_seed, c as u64, t as u64)))
        })
        .collect();
    let run = || jobs.par_iter().map(|params| run_trial(params, config)).collect::<Vec<_>>();
    match config.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))
            .map(|pool| pool.install(run)),
        None => Ok(run()),
    }
}

fn ms_since(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn run_trial(params: &ModelParams, config: &CampaignConfig) -> TrialRecord {
    let seed = params.seed();
    let t = Instant::now();
    let g = sample_gnp(params);
    let ms_sample = ms_since(t);

    let t = Instant::now();
    let verdict = match config.mode {
        SpanMode::Exact => decide_spanning_exact(&g, config.budget),
        SpanMode::Sampled => {
            let sc = SampledConfig { samples: config.budget.map(|b| b as usize), steps_per_sample: None };
            confirm_spanning_sampled_with(&g, sc, sub_seed(seed, 1))
        }
    };
    let ms_span = ms_since(t);

    let t = Instant::now();
    let (switcher_found, refutation_ok) = if config.refute {
        match synthetic_r(&g, sub_seed(seed, 2)) {
            Some(r) => match refutation_pipeline(&g, &r.vector, sub_seed(seed, 3)) {
                Ok(_) => (true, Some(true)),
                Err(e) => (e.stage != PipelineStage::S2a, Some(false)),
            },
            None => (false, None),
        }
    } else {
        (false, None)
    };
    let ms_refute = ms_since(t);

    TrialRecord {
        seed,
        n: g.n(),
        p: params.p(),
        m: g.m(),
        min_degree: g.min_degree(),
        small_count: g.small_vertices().len(),
        hamiltonian: hamiltonicity(&g, &verdict),
        verdict: verdict.kind,
        rank: verdict.rank_reached,
        dim: verdict.dim_cycle_space,
        switcher_found,
        refutation_ok,
        ms_sample,
        ms_span,
        ms_refute,
    }
}

fn hamiltonian_free(g: &Graph) -> bool {
    g.n() >= 3 && (g.min_degree() < 2 || !g.is_connected())
}

fn hamiltonicity(g: &Graph, v: &SpanVerdict) -> Hamiltonian {
    if !v.certificate.is_empty() {
        Hamiltonian::Yes
    } else if hamiltonian_free(g) || v.kind == VerdictKind::NotSpanned || v.kind == VerdictKind::TriviallySpanned {
        // an exact NotSpanned with no certificate enumerated zero cycles
        Hamiltonian::No
    } else {
        Hamiltonian::Unknown
    }
}

pub fn write_trials_csv<W: Write>(out: W, records: &[TrialRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

pub fn read_trials_csv<R: Read>(input: R) -> Result<Vec<TrialRecord>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|row| row.map_err(|e| Error::Io(e.to_string())))
        .collect()
}

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::rng_from_seed;

/// Largest `n` accepted by [`CheckMode::Exact`].
pub const EXACT_EXPANDER_MAX_N: usize = 20;

/// Parameters of the `c`-expander and robust expansion `P_α(n0, d)` checks.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpanderParams {
    pub c: f64,
    /// `(n0, d, α)`; `None` skips the `P_α` check.
    pub p_alpha: Option<(usize, f64, f64)>,
}

impl ExpanderParams {
    pub fn new(c: f64, n0: usize, d: f64, alpha: f64) -> Result<Self> {
        if !(d >= 3.0 && d < n0 as f64) {
            return Err(Error::OutOfRange(format!("need 3 <= d < n0, got d = {d}, n0 = {n0}")));
        }
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::OutOfRange(format!("need 0 <= alpha < 1, got {alpha}")));
        }
        Ok(ExpanderParams { p_alpha: Some((n0, d, alpha)), ..Self::expansion(c)? })
    }

    /// Only the `c`-expander conditions.
    pub fn expansion(c: f64) -> Result<Self> {
        if c.is_nan() || c <= 0.0 {
            return Err(Error::OutOfRange(format!("need c > 0, got {c}")));
        }
        Ok(ExpanderParams { c, p_alpha: None })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Exact,
    Sample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    /// Verified over every instance.
    Pass,
    /// Sampling or a heuristic adversary found nothing; not a proof.
    NoCounterexampleFound,
    /// A concrete, re-checkable counterexample.
    Violation { x: Vec<usize>, y: Vec<usize>, detail: String },
    Skipped,
}

impl CheckOutcome {
    pub fn is_violation(&self) -> bool {
        matches!(self, CheckOutcome::Violation { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpanderReport {
    /// `|N(X)| >= c|X|` for `|X| < n/(2c)`.
    pub e1: CheckOutcome,
    /// An edge between any disjoint `X, Y` of size `>= n/(2c)`.
    pub e2: CheckOutcome,
    /// `|N_{G-F}(X)| >= 2d|X|` for `|X| <= n0` against a greedy deletion set `F`.
    pub p_alpha: CheckOutcome,
    pub mode: CheckMode,
    /// Always true when `P_α` runs: `F` comes from a greedy adversary, so
    /// its "pass" is heuristic even in exact mode.
    pub p_alpha_heuristic: bool,
}

/// Checks expansion properties exhaustively (`n <= 20`) or by random
/// refutation attempts.
///
/// `N(X)` is the external neighbourhood. For `P_α` each `x ∈ X` may lose
/// `floor(α deg(x))` edges; the adversary deletes the edges towards the
/// external neighbors with the fewest edges from `X` first, as long as
/// every endpoint in `X` still has allowance.
pub fn expander_check(g: &Graph, params: &ExpanderParams, mode: CheckMode, seed: u64) -> Result<ExpanderReport> {
    let n = g.n();
    if mode == CheckMode::Exact && n > EXACT_EXPANDER_MAX_N {
        return Err(Error::Precondition(format!("exact expander check needs n <= {EXACT_EXPANDER_MAX_N}, got {n}")));
    }
    let small_bound = n as f64 / (2.0 * params.c);
    let big = small_bound.ceil().max(1.0) as usize;
    let p_alpha = params.p_alpha;
    // E1 sizes stay below `big`, E2 uses exactly `big`
    let max_needed = big.max(p_alpha.map_or(0, |(n0, _, _)| n0));
    let sets: Box<dyn Iterator<Item = Vec<usize>>> = match mode {
        CheckMode::Exact => Box::new(all_subsets(n, max_needed)),
        CheckMode::Sample => Box::new(sampled_subsets(g, seed, 10_000)),
    };

    let mut e1 = None;
    let mut e2 = None;
    let mut pa = None;
    let mut in_x = vec![false; n];
    for x in sets {
        if x.is_empty() || x.len() > max_needed {
            continue;
        }
        for &v in &x {
            in_x[v] = true;
        }
        let outside: Vec<usize> = external(g, &x, &in_x);
        if e1.is_none() && (x.len() as f64) < small_bound && (outside.len() as f64) < params.c * x.len() as f64 {
            e1 = Some(CheckOutcome::Violation {
                x: x.clone(),
                y: outside.clone(),
                detail: format!("|N(X)| = {} < {} * {}", outside.len(), params.c, x.len()),
            });
        }
        if e2.is_none() && x.len() == big && 2 * big <= n {
            let mut blocked = in_x.clone();
            for &w in &outside {
                blocked[w] = true;
            }
            let y: Vec<usize> = (0..n).filter(|&v| !blocked[v]).take(big).collect();
            if y.len() == big {
                e2 = Some(CheckOutcome::Violation { x: x.clone(), y, detail: "no edge between X and Y".into() });
            }
        }
        if let Some((n0, d, alpha)) = p_alpha {
            if pa.is_none() && x.len() <= n0 {
                let (survivors, deleted) = greedy_deletion(g, &x, &in_x, alpha);
                if (survivors as f64) < 2.0 * d * x.len() as f64 {
                    pa = Some(CheckOutcome::Violation {
                        x: x.clone(),
                        y: deleted.iter().flat_map(|&(a, b)| [a, b]).collect(),
                        detail: format!("|N_(G-F)(X)| = {survivors} < 2 * {d} * {}; y lists F as endpoint pairs", x.len()),
                    });
                }
            }
        }
        for &v in &x {
            in_x[v] = false;
        }
        if e1.is_some() && e2.is_some() && (pa.is_some() || p_alpha.is_none()) {
            break;
        }
    }
    let clean = match mode {
        CheckMode::Exact => CheckOutcome::Pass,
        CheckMode::Sample => CheckOutcome::NoCounterexampleFound,
    };
    Ok(ExpanderReport {
        e1: e1.unwrap_or_else(|| clean.clone()),
        e2: e2.unwrap_or_else(|| clean.clone()),
        p_alpha: match p_alpha {
            None => CheckOutcome::Skipped,
            Some(_) => pa.unwrap_or(CheckOutcome::NoCounterexampleFound),
        },
        mode,
        p_alpha_heuristic: p_alpha.is_some(),
    })
}

fn external(g: &Graph, x: &[usize], in_x: &[bool]) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for &v in x {
        for w in g.neighbors(v) {
            if !in_x[w] && !seen[w] {
                seen[w] = true;
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Surviving external neighbors and the deleted edges.
fn greedy_deletion(g: &Graph, x: &[usize], in_x: &[bool], alpha: f64) -> (usize, Vec<(usize, usize)>) {
    let outside = external(g, x, in_x);
    let mut allowance = vec![0usize; g.n()];
    for &v in x {
        allowance[v] = (alpha * g.degree(v) as f64).floor() as usize;
    }
    let mut by_count: Vec<(usize, usize)> = outside
        .iter()
        .map(|&w| (g.neighbors(w).filter(|&v| in_x[v]).count(), w))
        .collect();
    by_count.sort_unstable();
    let mut deleted = Vec::new();
    let mut survivors = 0;
    for (_, w) in by_count {
        let sources: Vec<usize> = g.neighbors(w).filter(|&v| in_x[v]).collect();
        if sources.iter().all(|&v| allowance[v] > 0) {
            for v in sources {
                allowance[v] -= 1;
                deleted.push((v.min(w), v.max(w)));
            }
        } else {
            survivors += 1;
        }
    }
    (survivors, deleted)
}

fn all_subsets(n: usize, max_size: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1u32 << n))
        .filter(move |mask| mask.count_ones() as usize <= max_size)
        .map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

/// Random sets of every size plus greedily grown low-expansion sets.
fn sampled_subsets(g: &Graph, seed: u64, count: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    let mut rng = rng_from_seed(seed);
    let n = g.n();
    let mut all: Vec<usize> = (0..n).collect();
    (0..count).filter_map(move |i| {
        if n == 0 {
            return None;
        }
        if i % 2 == 0 {
            let size = rng.gen_range(1..=n);
            all.shuffle(&mut rng);
            let mut x = all[..size].to_vec();
            x.sort_unstable();
            Some(x)
        } else {
            // grow from a random vertex, always adding the candidate that
            // enlarges N(X) the least
            let target = rng.gen_range(1..=n);
            let mut in_x = vec![false; n];
            let start = rng.gen_range(0..n);
            let mut x = vec![start];
            in_x[start] = true;
            while x.len() < target {
                let frontier = external(g, &x, &in_x);
                let pool: Vec<usize> = if frontier.is_empty() { (0..n).filter(|&v| !in_x[v]).collect() } else { frontier };
                let best = pool
                    .iter()
                    .copied()
                    .min_by_key(|&w| (g.neighbors(w).filter(|&u| !in_x[u]).count(), rng.gen::<u32>()))?;
                in_x[best] = true;
                x.push(best);
            }
            x.sort_unstable();
            Some(x)
        }
    })
}

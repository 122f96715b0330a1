//! The random model near the threshold, property reports, the refutation
//! pipeline and seeded Monte Carlo campaigns.

mod campaign;
mod pipeline;
mod properties;

pub use campaign::{read_trials_csv, run_experiment, write_trials_csv, CampaignConfig, Hamiltonian, SpanMode, TrialRecord};
pub use pipeline::{
    refutation_pipeline, refutation_pipeline_with, synthetic_r, PipelineConfig, PipelineFailure, PipelineStage,
    Refutation,
};
pub use properties::{property_report, property_report_with, PropertyCheck, PropertyConfig, PropertyReport, Violation};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{rng_from_seed, unit_f64};

/// `(ln n + 2 ln ln n + f) / n`, clamped to `[0, 1]`.
pub fn threshold_p(n: usize, f: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("threshold needs n >= 3, got {n}")));
    }
    let ln = (n as f64).ln();
    Ok(((ln + 2.0 * ln.ln() + f) / n as f64).clamp(0.0, 1.0))
}

/// One cell of the random model `G(n, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    n: usize,
    f: Option<f64>,
    p: f64,
    seed: u64,
}

impl ModelParams {
    /// Threshold-parametrized cell. Even `n` is refused unless `allow_even`.
    pub fn new(n: usize, f: f64, seed: u64, allow_even: bool) -> Result<Self> {
        Self::check_n(n, allow_even)?;
        Ok(ModelParams { n, f: Some(f), p: threshold_p(n, f)?, seed })
    }

    /// Cell with an explicit edge probability.
    pub fn with_p(n: usize, p: f64, seed: u64, allow_even: bool) -> Result<Self> {
        Self::check_n(n, allow_even)?;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange(format!("p = {p} is not a probability")));
        }
        Ok(ModelParams { n, f: None, p, seed })
    }

    fn check_n(n: usize, allow_even: bool) -> Result<()> {
        if n < 3 {
            return Err(Error::OutOfRange(format!("n = {n} is below 3")));
        }
        if n.is_multiple_of(2) && !allow_even {
            return Err(Error::OutOfRange(format!("n = {n} is even; pass the even-n override to allow it")));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Threshold offset, when the cell was built from one.
    pub fn f(&self) -> Option<f64> {
        self.f
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn reseeded(self, seed: u64) -> Self {
        ModelParams { seed, ..self }
    }
}

/// Samples `G(n, p)`.
///
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order and pair
/// number `i` is kept iff the `i`-th draw of `unit_f64` on the seeded
/// stream is below `p`. The result depends on `(n, p, seed)` only.
pub fn sample_gnp(params: &ModelParams) -> Graph {
    let n = params.n;
    let mut rng = rng_from_seed(params.seed);
    let mut edges = Vec::with_capacity((params.p * (n * (n - 1) / 2) as f64) as usize + 16);
    for u in 0..n {
        for v in u + 1..n {
            if unit_f64(&mut rng) < params.p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_sorted(n, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TailKind {
    Lower,
    Upper,
}

/// Chernoff bound for `X ~ Bin`: `exp(-(r ln r - r + 1) E[X])` for
/// `P(X <= r E[X])` with `0 < r < 1` (lower) or `P(X >= r E[X])` with
/// `r > 1` (upper).
pub fn chernoff_tail(kind: TailKind, mean: f64, ratio: f64) -> Result<f64> {
    let ok = match kind {
        TailKind::Lower => ratio > 0.0 && ratio < 1.0,
        TailKind::Upper => ratio > 1.0 && ratio.is_finite(),
    };
    if !ok || mean.is_nan() || mean < 0.0 {
        return Err(Error::OutOfRange(format!("ratio {ratio} invalid for a {kind:?} tail (mean {mean})")));
    }
    Ok((-(ratio * ratio.ln() - ratio + 1.0) * mean).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_values() {
        let p = threshold_p(101, 3.0).unwrap();
        let ln = 101f64.ln();
        assert!((p - (ln + 2.0 * ln.ln() + 3.0) / 101.0).abs() < 1e-15);
        assert!((p - 0.1057).abs() < 5e-5);
        let f = 101.0 - ln - 2.0 * ln.ln();
        assert_eq!(threshold_p(101, f + 1.0).unwrap(), 1.0);
        assert!(threshold_p(101, -1.0).unwrap() < threshold_p(101, 1.0).unwrap());
        assert!(threshold_p(2, 0.0).is_err());
    }

    #[test]
    fn model_validation() {
        assert!(ModelParams::new(10, 3.0, 0, false).is_err());
        assert!(ModelParams::new(10, 3.0, 0, true).is_ok());
        assert!(ModelParams::with_p(11, 1.5, 0, false).is_err());
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(sample_gnp(&ModelParams::with_p(9, 0.0, 1, false).unwrap()).m(), 0);
        assert_eq!(sample_gnp(&ModelParams::with_p(9, 1.0, 1, false).unwrap()).m(), 36);
        let params = ModelParams::new(11, 3.0, 42, false).unwrap();
        assert_eq!(sample_gnp(&params), sample_gnp(&params));
        assert_ne!(sample_gnp(&params), sample_gnp(&params.reseeded(43)));
    }

    #[test]
    fn chernoff_values() {
        let n = 1000f64;
        let b = chernoff_tail(TailKind::Lower, n.ln(), 0.1).unwrap();
        let exponent = 0.1 * 0.1f64.ln() - 0.1 + 1.0;
        assert!((exponent - 0.6697).abs() < 1e-4);
        assert!((b - n.powf(-exponent)).abs() < 1e-12);
        assert!(b <= n.powf(-0.6));
        assert!(chernoff_tail(TailKind::Lower, 5.0, 1.0 - 1e-9).unwrap() > 0.999_999);
        let u = chernoff_tail(TailKind::Upper, 10.0, 2.0).unwrap();
        assert!((u - (-3.862_943_611_198_906f64).exp()).abs() < 1e-12);
        assert!(chernoff_tail(TailKind::Upper, 10.0, 0.5).is_err());
        assert!(chernoff_tail(TailKind::Lower, 10.0, 1.0).is_err());
    }
}

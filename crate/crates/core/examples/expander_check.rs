//! Expansion checks: exhaustive for tiny graphs, sampled otherwise.

use hamspan::experiments::{sample_gnp, ModelParams};
use hamspan::hamfinder::{expander_check, CheckMode, ExpanderParams};
use hamspan::Graph;

fn main() -> hamspan::Result<()> {
    let k = Graph::complete(12);
    let r = expander_check(&k, &ExpanderParams::new(2.0, 4, 3.0, 0.2)?, CheckMode::Exact, 0)?;
    println!("K12 exact: e1 {:?}, e2 {:?}, p_alpha {:?}", r.e1, r.e2, r.p_alpha);

    let c = Graph::cycle(12);
    let r = expander_check(&c, &ExpanderParams::expansion(2.0)?, CheckMode::Exact, 0)?;
    println!("C12 exact: e1 {:?}", r.e1);

    let g = sample_gnp(&ModelParams::with_p(300, 0.1, 2, true)?);
    let r = expander_check(&g, &ExpanderParams::expansion(2.0)?, CheckMode::Sample, 2)?;
    println!("G(300, 0.1) sampled: e1 {:?}, e2 {:?}", r.e1, r.e2);
    Ok(())
}

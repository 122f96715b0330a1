//! One-sided spanning confirmation from sampled Hamilton cycles.
//!
//!     cargo run --release --example span_sampled -- 201 2.0 3

use std::time::Instant;

use hamspan::experiments::{sample_gnp, ModelParams};
use hamspan::gf2::cycle_space_dim;
use hamspan::spanning::{confirm_spanning_sampled_with, SampledConfig};

fn main() -> hamspan::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(101, |s| s.parse().expect("n"));
    let f: f64 = args.get(1).map_or(3.0, |s| s.parse().expect("f"));
    let seed: u64 = args.get(2).map_or(5, |s| s.parse().expect("seed"));

    let g = sample_gnp(&ModelParams::new(n, f, seed, false)?);
    println!("n = {n}, m = {}, min degree {}, dim C = {}", g.m(), g.min_degree(), cycle_space_dim(&g));

    let t = Instant::now();
    let v = confirm_spanning_sampled_with(&g, SampledConfig::default(), seed);
    println!("{} rank {}/{} in {:?}", v.kind, v.rank_reached, v.dim_cycle_space, t.elapsed());
    if g.min_degree() < 3 {
        println!("(min degree below 3: a full-rank certificate is not expected)");
    }
    for h in &v.certificate {
        assert!(g.is_hamilton_cycle(h.order()));
    }

    // a starved sampler can only say inconclusive
    let few = confirm_spanning_sampled_with(&g, SampledConfig { samples: Some(5), ..Default::default() }, seed);
    println!("with 5 samples: {} rank {}", few.kind, few.rank_reached);
    Ok(())
}

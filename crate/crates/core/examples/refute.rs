//! End-to-end: given R that pairs oddly with some cycle, build a Hamilton
//! cycle that meets R oddly.
//!
//!     cargo run --release --example refute -- 201 7

use std::time::Instant;

use hamspan::experiments::{refutation_pipeline, sample_gnp, synthetic_r, ModelParams};
use hamspan::switcher::switcher_cycle_cap;

fn main() -> hamspan::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(101, |s| s.parse().expect("n"));
    let seed: u64 = args.get(1).map_or(3, |s| s.parse().expect("seed"));

    let g = sample_gnp(&ModelParams::new(n, 3.0, seed, false)?);
    let w = synthetic_r(&g, seed).expect("synthetic R");
    println!("n = {n}, m = {}, |R| = {}", g.m(), w.size);

    let t = Instant::now();
    match refutation_pipeline(&g, &w.vector, seed) {
        Ok(h) => {
            let hits = h.vector.intersection_count(&w.vector)?;
            println!("Hamilton cycle meeting R in {hits} edges, found in {:?}", t.elapsed());
            println!("switcher cycle length {} (cap {:.1}), k = {}", h.switcher_cycle.len(), switcher_cycle_cap(n).unwrap(), h.switcher.k());
            println!("escorts {:?}", h.escorts);
            assert!(g.is_hamilton_cycle(&h.cycle) && hits % 2 == 1);
        }
        Err(f) => println!("stopped at {}: {}", f.stage, f.detail),
    }

    // R = E has no non-R edge to start from
    let all = hamspan::EdgeVector::ones(g.m());
    if let Err(f) = refutation_pipeline(&g, &all, seed) {
        println!("R = E: {} ({})", f.stage, f.detail);
    }
    Ok(())
}

//! Sample G(n, p) near the Hamilton threshold and look at its low end.
//!
//!     cargo run --release --example gnp_sample -- 1001 0.5 7

use hamspan::experiments::{sample_gnp, threshold_p, ModelParams};
use hamspan::graph::write_graph6;

fn main() -> hamspan::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(301, |s| s.parse().expect("n"));
    let f: f64 = args.get(1).map_or(0.0, |s| s.parse().expect("f"));
    let seed: u64 = args.get(2).map_or(1, |s| s.parse().expect("seed"));

    let params = ModelParams::new(n, f, seed, false)?;
    let g = sample_gnp(&params);
    println!("p = {:.6} (threshold_p = {:.6})", params.p(), threshold_p(n, f)?);
    println!("n = {}, m = {}, expected m = {:.1}", g.n(), g.m(), params.p() * (n * (n - 1) / 2) as f64);
    println!("min degree {}, max degree {}", g.min_degree(), g.max_degree());
    println!("connected: {}", g.is_connected());

    let small = g.small_vertices();
    println!("{} small vertices: {:?}", small.len(), small.iter().collect::<Vec<_>>());

    let mut hist = [0usize; 6];
    for v in 0..n {
        hist[g.degree(v).min(5)] += 1;
    }
    for (d, c) in hist.iter().enumerate() {
        let label = if d == 5 { ">=5".to_string() } else { d.to_string() };
        println!("  deg {label:>3}: {c}");
    }

    // the same seed always gives the same graph
    assert_eq!(write_graph6(&g), write_graph6(&sample_gnp(&params)));
    Ok(())
}

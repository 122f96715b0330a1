//! Hamilton paths that pass low-degree vertices through reserved escorts.

use hamspan::experiments::{sample_gnp, ModelParams};
use hamspan::hamfinder::{hamilton_path_protected_with, ProtectedConfig};
use hamspan::VertexSet;

fn main() -> hamspan::Result<()> {
    let g = sample_gnp(&ModelParams::new(301, 1.0, 4, false)?);
    let all = VertexSet::full(g.n());

    // treat the lowest-degree vertices as protected
    let mut by_deg: Vec<usize> = (0..g.n()).collect();
    by_deg.sort_by_key(|&v| g.degree(v));
    let small = VertexSet::from_iter(g.n(), by_deg.iter().copied().take(4));
    println!("protected: {:?}", small.iter().map(|v| (v, g.degree(v))).collect::<Vec<_>>());

    let (x, y) = (by_deg[g.n() - 1], by_deg[g.n() - 2]);
    match hamilton_path_protected_with(&g, &all, x, y, &small, &ProtectedConfig::default(), 7) {
        Ok(path) => {
            assert!(g.is_hamilton_path_of(&path, &all, x, y));
            for u in small.iter() {
                let i = path.iter().position(|&w| w == u).unwrap();
                println!("  {} -> {u} -> {}", path[i - 1], path[i + 1]);
            }
        }
        Err(f) => println!("failed at {f}"),
    }
    Ok(())
}

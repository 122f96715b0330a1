//! Hamilton paths between chosen endpoints by rotation-extension.

use std::time::Instant;

use hamspan::experiments::{sample_gnp, ModelParams};
use hamspan::hamfinder::rotation_extension_path;

fn main() -> hamspan::Result<()> {
    let n = 200;
    let p = 5.0 * (n as f64).ln() / n as f64;
    let g = sample_gnp(&ModelParams::with_p(n, p, 11, true)?);
    let small = g.small_vertices();
    let (x, y) = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| !small.contains(x) && !small.contains(y) && !g.has_edge(x, y))
        .unwrap();

    let t = Instant::now();
    match rotation_extension_path(&g, x, y, 200_000, 1) {
        Some(path) => {
            assert!(g.is_path(&path) && path.len() == n);
            println!("path {x} -> {y} with {} vertices in {:?}", path.len(), t.elapsed());
            println!("starts {:?} ... ends {:?}", &path[..5], &path[n - 5..]);
        }
        None => println!("budget ran out"),
    }

    // a path graph has exactly one Hamilton path between its ends
    let line = hamspan::Graph::path(6);
    println!("P6: {:?}", rotation_extension_path(&line, 0, 5, 1000, 0));
    println!("P6 wrong ends: {:?}", rotation_extension_path(&line, 0, 3, 1000, 0));
    Ok(())
}

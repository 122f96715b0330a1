//! Splitting a vertex set in two while every vertex keeps a fair share of
//! its neighbors on both sides.

use hamspan::experiments::{sample_gnp, ModelParams};
use hamspan::hamfinder::{lll_split, SplitRequest, DEFAULT_SPLIT_RETRIES};
use hamspan::VertexSet;

fn main() -> hamspan::Result<()> {
    let g = sample_gnp(&ModelParams::new(401, 2.0, 3, false)?);
    let y = VertexSet::from_iter(g.n(), (0..g.n()).filter(|v| v % 3 != 0));
    // a vertex with a single neighbor in Y cannot see both sides
    let watched = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| g.degree_into(v, &y) >= 2));
    let req = SplitRequest::balanced(y.clone())?.constrain(watched.clone());
    let (a, b) = req.sizes();
    println!("|Y| = {}, target sizes {a} + {b}", y.len());

    match lll_split(&g, &req, DEFAULT_SPLIT_RETRIES, 9) {
        Ok((sa, sb)) => {
            assert_eq!((sa.len(), sb.len()), (a, b));
            let worst = (0..g.n())
                .filter(|&v| watched.contains(v))
                .map(|v| g.degree_into(v, &sa) as f64 / g.degree_into(v, &y) as f64)
                .fold(f64::INFINITY, f64::min);
            println!("split found, smallest share of Y-neighbors inside A: {worst:.3}");
        }
        Err(f) => println!("no split: {f}"),
    }

    if let Err(f) = lll_split(&g, &SplitRequest::balanced(y)?, 50, 9) {
        println!("floors on every vertex: {f}");
    }
    Ok(())
}

//! Exact spanning decision on small graphs.
//!
//! Even order plus an odd cycle means the full edge set pairs evenly with
//! every Hamilton cycle but oddly with a triangle, so K6 is not spanned.

use hamspan::spanning::{decide_spanning_exact, SpanCertificate};
use hamspan::Graph;

fn main() {
    let wheel = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)])
        .expect("wheel");
    for (name, g) in [
        ("K5", Graph::complete(5)),
        ("K6", Graph::complete(6)),
        ("W7", wheel),
        ("petersen", Graph::petersen()),
    ] {
        let v = decide_spanning_exact(&g, None);
        println!("{name:>9}: {} rank {}/{}, {} certificate cycles", v.kind, v.rank_reached, v.dim_cycle_space, v.certificate.len());
        if let Some(w) = &v.witness {
            println!("           witness |R| = {}, hex {}", w.size, w.vector.to_hex());
        }
        if name == "K5" {
            println!("{}", SpanCertificate::new(&g, &v).to_json());
        }
    }

    let tight = decide_spanning_exact(&Graph::complete(9), Some(20));
    println!("K9 with a 20 node budget: {} ({}/{})", tight.kind, tight.rank_reached, tight.dim_cycle_space);
}

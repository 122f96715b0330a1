//! Cycle space, cut space and incremental GF(2) rank.

use hamspan::gf2::{cut_space_stars, cycle_space_basis, cycle_space_dim, is_even_subgraph};
use hamspan::{Gf2Basis, Graph};

fn main() -> hamspan::Result<()> {
    for (name, g) in [("K5", Graph::complete(5)), ("petersen", Graph::petersen()), ("C7", Graph::cycle(7))] {
        let (_, c) = g.components();
        let basis = cycle_space_basis(&g);
        println!("{name}: n = {}, m = {}, components = {c}, dim C = {}", g.n(), g.m(), cycle_space_dim(&g));
        assert_eq!(basis.len(), cycle_space_dim(&g));

        for z in &basis {
            assert!(is_even_subgraph(&g, z)?);
        }
        // stars pair evenly with every cycle
        for s in cut_space_stars(&g) {
            assert!(basis.iter().all(|z| !z.intersection_parity(&s).unwrap()));
        }

        let rank = Gf2Basis::from_vectors(g.m(), basis.iter().chain(basis.iter()))?.rank();
        println!("  rank of basis twice over: {rank}");
        let cut_rank = Gf2Basis::from_vectors(g.m(), &cut_space_stars(&g))?.rank();
        println!("  cut space rank: {cut_rank} (n - c = {})", g.n() - c);
    }
    Ok(())
}

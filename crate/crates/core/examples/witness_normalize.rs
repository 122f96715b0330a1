//! Witnesses and their normalization inside the cut-space coset.

use hamspan::spanning::{
    decide_spanning_exact, enumerate_hamilton_cycles, is_bipartition_form, normalize_hillclimb, normalize_witness,
    NormalizeMode,
};
use hamspan::Graph;

fn main() {
    // two triangles sharing a vertex pair, n = 6
    let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
    let v = decide_spanning_exact(&g, None);
    println!("prism: {} rank {}/{}", v.kind, v.rank_reached, v.dim_cycle_space);
    let w = v.witness.expect("even prism is not spanned");
    println!("raw witness: |R| = {} bipartition form = {}", w.size, is_bipartition_form(&g, &w.vector));

    let (climbed, stats) = normalize_hillclimb(&g, &w.vector);
    println!("hillclimb: {} -> {} in {} flips", stats.size_before, stats.size_after, stats.flips);

    let exact = normalize_witness(&g, &w, NormalizeMode::Exact);
    println!("exact: |R| = {} bipartition form = {}", exact.size, is_bipartition_form(&g, &exact.vector));
    assert!(exact.size >= climbed.count_ones());

    // normalization keeps both witness properties
    let hs = enumerate_hamilton_cycles(&g, None);
    assert!(exact.verify_against(&hs));
    assert!(exact.odd_with_some_cycle);
    println!("{} Hamilton cycles, all meet R evenly", hs.len());
}

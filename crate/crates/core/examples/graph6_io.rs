//! graph6, edge lists and DOT.

use hamspan::gf2::EdgeVector;
use hamspan::graph::{parse_edge_list, parse_graph6, to_dot, write_edge_list, write_graph6};
use hamspan::Graph;

fn main() -> hamspan::Result<()> {
    let g = Graph::petersen();
    let g6 = write_graph6(&g);
    println!("petersen as graph6: {g6}");
    assert_eq!(parse_graph6(&g6)?, g);

    let text = write_edge_list(&g);
    println!("edge list:\n{text}");
    assert_eq!(parse_edge_list(&text)?, g);

    // edge ids are lexicographic ranks of the sorted pairs
    for (id, &(u, v)) in g.edges().iter().enumerate().take(4) {
        println!("edge {id} = {u}-{v}, edge_id({v}, {u}) = {:?}", g.edge_id(v, u));
    }

    let outer = EdgeVector::from_ids(g.m(), (0..5).map(|i| g.edge_id(i, (i + 1) % 5).unwrap()));
    println!("{}", to_dot(&g, Some(&outer)));

    match parse_graph6("not graph6!") {
        Ok(_) => unreachable!(),
        Err(e) => println!("bad input: {e}"),
    }
    Ok(())
}

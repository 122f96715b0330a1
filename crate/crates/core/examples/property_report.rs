//! Structural property report of a graph, exact on tiny inputs.

use hamspan::experiments::{property_report, property_report_with, sample_gnp, ModelParams, PropertyConfig};
use hamspan::Graph;

fn main() -> hamspan::Result<()> {
    // the edge-count upper bounds are sparse-graph statements, K11 breaks P5
    let k = Graph::complete(11);
    let rep = property_report(&k, None);
    for c in &rep.checks {
        println!("K11 {:<14} exact {:<5} holds {}", c.name, c.exact, c.holds);
    }

    let g = sample_gnp(&ModelParams::new(301, 0.0, 6, false)?);
    let rep = property_report_with(&g, None, &PropertyConfig { samples: 2000, seed: 6, ..Default::default() });
    println!("G(301) all hold: {}", rep.all_hold());
    for c in rep.checks.iter().filter(|c| !c.holds) {
        println!("  {} violated: {:?}", c.name, c.violation);
    }
    assert!(rep.reverify(&g, None));
    println!("{}", rep.to_json().lines().take(12).collect::<Vec<_>>().join("\n"));
    Ok(())
}

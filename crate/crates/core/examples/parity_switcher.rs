//! Parity switchers: a short even cycle plus connector paths giving two
//! Hamilton paths whose intersections with R differ in parity.

use hamspan::experiments::{sample_gnp, synthetic_r, ModelParams};
use hamspan::switcher::{build_switcher, switcher_cycle_cap, switcher_cycles, SwitcherCertificate, DEFAULT_LINKAGE_RETRIES};

fn main() -> hamspan::Result<()> {
    let g = sample_gnp(&ModelParams::new(101, 3.0, 8, false)?);
    let r = synthetic_r(&g, 1).expect("synthetic R").vector;
    println!("n = {}, m = {}, |R| = {}, cycle cap {:.2}", g.n(), g.m(), r.count_ones(), switcher_cycle_cap(g.n()).unwrap());

    let small = g.small_vertices();
    for (i, c) in switcher_cycles(&g, &r, &small).take(5).enumerate() {
        print!("candidate {i}: length {} via non-R edge {}", c.len(), c.non_r_edge);
        match build_switcher(&g, &r, &c, DEFAULT_LINKAGE_RETRIES, i as u64)? {
            Some(w) => {
                let cert = SwitcherCertificate::new(&g, &w, &r)?;
                let even = r.intersection_count(&hamspan::gf2::EdgeVector::from_ids(g.m(), g.path_edge_ids(&cert.path_even)))?;
                let odd = r.intersection_count(&hamspan::gf2::EdgeVector::from_ids(g.m(), g.path_edge_ids(&cert.path_odd)))?;
                println!(", k = {}, |W| = {}, R-counts {even} / {odd}", w.k(), w.vertices(g.n()).len());
                println!("{}", cert.to_json());
                break;
            }
            None => println!(", linkage failed"),
        }
    }
    Ok(())
}

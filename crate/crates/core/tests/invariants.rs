mod common;

use proptest::prelude::*;

use common::*;
use hamspan::experiments::{
    property_report_with, read_trials_csv, refutation_pipeline, sample_gnp, synthetic_r, write_trials_csv, Hamiltonian,
    ModelParams, PropertyConfig, TrialRecord,
};
use hamspan::gf2::{cut_space_stars, cycle_space_basis};
use hamspan::graph::{parse_edge_list, parse_graph6, write_graph6};
use hamspan::spanning::{normalize_hillclimb, VerdictKind};
use hamspan::{EdgeVector, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut es = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        es.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edge_list(n, &es).unwrap()
        })
    })
}

fn arb_record() -> impl Strategy<Value = TrialRecord> {
    let verdicts = prop_oneof![
        Just(VerdictKind::SpannedExact),
        Just(VerdictKind::SpannedConfirmed),
        Just(VerdictKind::NotSpanned),
        Just(VerdictKind::TriviallySpanned),
        Just(VerdictKind::Inconclusive),
    ];
    let ham = prop_oneof![Just(Hamiltonian::Yes), Just(Hamiltonian::No), Just(Hamiltonian::Unknown)];
    (any::<u64>(), 1usize..2000, 0.0f64..1.0, 0usize..100_000, 0usize..50, 0usize..50, ham, verdicts, any::<bool>())
        .prop_flat_map(|(seed, n, p, m, d, s, h, v, sw)| {
            (0usize..5000, 0usize..5000, proptest::option::of(any::<bool>()), 0.0f64..1e4).prop_map(
                move |(rank, dim, ok, ms)| TrialRecord {
                    seed,
                    n,
                    p,
                    m,
                    min_degree: d,
                    small_count: s,
                    hamiltonian: h,
                    verdict: v,
                    rank,
                    dim,
                    switcher_found: sw,
                    refutation_ok: ok,
                    ms_sample: ms,
                    ms_span: ms / 2.0,
                    ms_refute: 0.0,
                },
            )
        })
}

proptest! {
    #[test]
    fn handshake(g in arb_graph(14)) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn edge_order_does_not_matter(g in arb_graph(12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut pairs: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| if seed % 2 == 0 { (v, u) } else { (u, v) }).collect();
        pairs.shuffle(&mut hamspan::rng::rng_from_seed(seed));
        prop_assert_eq!(Graph::from_edge_list(g.n(), &pairs).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&hamspan::graph::write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn cuts_are_orthogonal_to_cycles(g in arb_graph(12)) {
        let cycles = cycle_space_basis(&g);
        prop_assert_eq!(cycles.len(), g.m() + components(&g) - g.n());
        for s in cut_space_stars(&g) {
            for z in &cycles {
                prop_assert!(!z.intersection_parity(&s).unwrap());
            }
        }
    }

    #[test]
    fn hillclimb_keeps_parities(g in arb_graph(12), bits in proptest::collection::vec(any::<bool>(), 66)) {
        let r = EdgeVector::from_bools(&bits[..g.m()]);
        let (out, stats) = normalize_hillclimb(&g, &r);
        let flips_cap: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert!(stats.flips <= flips_cap);
        prop_assert_eq!(stats.size_after, out.count_ones());
        for v in 0..g.n() {
            let deg_r = g.incident(v).iter().filter(|&&(_, e)| out.get(e)).count();
            prop_assert!(2 * deg_r >= g.degree(v));
        }
        for z in cycle_space_basis(&g) {
            prop_assert_eq!(z.intersection_parity(&out).unwrap(), z.intersection_parity(&r).unwrap());
        }
    }

    #[test]
    fn csv_round_trip(records in proptest::collection::vec(arb_record(), 0..20)) {
        let mut buf = Vec::new();
        write_trials_csv(&mut buf, &records).unwrap();
        let back = read_trials_csv(buf.as_slice()).unwrap();
        prop_assert_eq!(back.len(), records.len());
        for (a, b) in back.iter().zip(&records) {
            prop_assert!(a.same_outcome(b));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pipeline_successes_reverify(seed in any::<u64>()) {
        let g = sample_gnp(&ModelParams::new(61, 3.0, seed, false).unwrap());
        if let Some(w) = synthetic_r(&g, seed) {
            if let Ok(h) = refutation_pipeline(&g, &w.vector, seed) {
                // recount from the vertex order alone
                let n = g.n();
                let mut seen = vec![false; n];
                let mut hits = 0;
                prop_assert_eq!(h.cycle.len(), n);
                for i in 0..n {
                    let (u, v) = (h.cycle[i], h.cycle[(i + 1) % n]);
                    prop_assert!(!std::mem::replace(&mut seen[u], true));
                    let e = g.edge_id(u, v);
                    prop_assert!(e.is_some());
                    hits += w.vector.get(e.unwrap()) as usize;
                }
                prop_assert_eq!(hits % 2, 1);
            }
        }
    }

    #[test]
    fn property_violations_recount(seed in any::<u64>()) {
        let g = sample_gnp(&ModelParams::new(201, -1.0, seed, false).unwrap());
        let rep = property_report_with(&g, None, &PropertyConfig { samples: 300, seed, ..Default::default() });
        prop_assert!(rep.reverify(&g, None));
        let ln = (g.n() as f64).ln();
        let bound = |a: usize| a as f64 * ln / ln.ln();
        let within = |a: &[usize]| g.edges().iter().filter(|(u, v)| a.contains(u) && a.contains(v)).count();
        let between = |a: &[usize], b: &[usize]| {
            g.edges().iter().filter(|(u, v)| (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))).count()
        };
        for c in &rep.checks {
            let Some(v) = &c.violation else { continue };
            match c.name.as_str() {
                "P1" => prop_assert!(g.degree(v.vertex.unwrap()) as f64 > 10.0 * ln),
                "P4" => prop_assert!(within(&v.set_a) as f64 > bound(v.set_a.len())),
                "P5" => prop_assert!(between(&v.set_a, &v.set_b) as f64 > bound(v.set_a.len())),
                "P6" => {
                    let mean = (v.set_a.len() * v.set_b.len()) as f64 * rep.p_used;
                    let e = between(&v.set_a, &v.set_b) as f64;
                    prop_assert!(e < 0.999 * mean || e > 1.001 * mean);
                }
                "min_degree_3" => prop_assert!(g.degree(v.vertex.unwrap()) < 3),
                _ => {}
            }
        }
    }
}

#[test]
fn gnp_edge_count_within_three_sigma() {
    let n = 101;
    let params = ModelParams::new(n, 3.0, 0, false).unwrap();
    let pairs = (n * (n - 1) / 2) as f64;
    let trials = 1000;
    let total: usize = (0..trials).map(|t| sample_gnp(&params.reseeded(t)).m()).sum();
    let mean = total as f64 / trials as f64;
    let expected = pairs * params.p();
    // standard error of the mean of 1000 binomial draws
    let se = (pairs * params.p() * (1.0 - params.p()) / trials as f64).sqrt();
    assert!((mean - expected).abs() <= 3.0 * se, "mean {mean} vs {expected} (se {se})");
}

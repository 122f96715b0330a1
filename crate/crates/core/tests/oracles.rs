mod common;

use common::*;
use hamspan::gf2::{cycle_space_basis, cycle_space_dim, is_even_subgraph};
use hamspan::graph::VertexSet;
use hamspan::hamfinder::{hamilton_path_protected_with, lll_split, rotation_extension_path, ProtectedConfig, SplitRequest};
use hamspan::spanning::{decide_spanning_exact, enumerate_hamilton_cycles, extract_witness, VerdictKind};
use hamspan::switcher::disjoint_pair_paths;
use hamspan::{EdgeVector, Graph};

fn vector_mask(v: &EdgeVector) -> u128 {
    mask(&v.ones_iter().collect::<Vec<_>>())
}

#[test]
fn enumeration_matches_permutations() {
    for seed in 0..120 {
        let n = 3 + (seed as usize % 6);
        let g = random_graph(n, 0.6, seed);
        let mut got: Vec<Vec<usize>> =
            enumerate_hamilton_cycles(&g, None).iter().map(|h| h.vector().ones_iter().collect()).collect();
        got.sort();
        assert_eq!(got, hamilton_edge_sets(&g), "seed {seed}, n {n}");
    }
}

#[test]
fn exact_rank_matches_batch_elimination() {
    for seed in 0..150 {
        let n = 4 + (seed as usize % 5);
        let g = random_graph(n, 0.65, 1000 + seed);
        let hs = hamilton_edge_sets(&g);
        let oracle_rank = rank(&hs.iter().map(|s| mask(s)).collect::<Vec<_>>());
        let dim = g.m() + components(&g) - n;
        let v = decide_spanning_exact(&g, None);
        assert_eq!(v.dim_cycle_space, dim);
        assert_eq!(v.rank_reached, oracle_rank, "seed {seed}");
        let expected = if dim == 0 {
            VerdictKind::TriviallySpanned
        } else if oracle_rank == dim {
            VerdictKind::SpannedExact
        } else {
            VerdictKind::NotSpanned
        };
        assert_eq!(v.kind, expected, "seed {seed}");
        if let Some(w) = &v.witness {
            let r = vector_mask(&w.vector);
            assert!(even_with_all(r, &hs));
            let cycles: Vec<u128> = cycle_space_basis(&g).iter().map(vector_mask).collect();
            assert!(cycles.iter().any(|z| (z & r).count_ones() % 2 == 1));
        }
    }
}

#[test]
fn witness_from_full_list_is_a_witness() {
    let g = Graph::complete(6);
    let hs = enumerate_hamilton_cycles(&g, None);
    let w = extract_witness(&g, &hs).expect("K6 is not spanned");
    assert!(w.even_with_all_hamilton && w.odd_with_some_cycle);
    assert!(even_with_all(vector_mask(&w.vector), &hamilton_edge_sets(&g)));
}

#[test]
fn cycle_basis_has_full_rank() {
    for seed in 0..200 {
        let n = 2 + (seed as usize % 11);
        let g = random_graph(n, 0.4, 7000 + seed);
        let basis = cycle_space_basis(&g);
        assert_eq!(basis.len(), cycle_space_dim(&g));
        assert_eq!(rank(&basis.iter().map(vector_mask).collect::<Vec<_>>()), basis.len());
        assert_eq!(basis.len(), g.m() - incidence_rank(&g));
        for z in &basis {
            assert!(is_even_subgraph(&g, z).unwrap());
        }
    }
}

#[test]
fn bfs_paths_are_shortest() {
    for seed in 0..100 {
        let g = random_graph(8, 0.35, 300 + seed);
        let forbidden = [5usize];
        let fs = VertexSet::from_iter(8, forbidden);
        let got = g.bfs_path(0, 7, &fs);
        let want = distance(&g, 0, 7, &forbidden);
        assert_eq!(got.as_ref().map(|p| p.len() - 1), want, "seed {seed}");
        if let Some(p) = got {
            assert!(g.is_path(&p) && !p.contains(&5));
        }
    }
}

/// Brute force over all ways of routing two pairs through the remaining vertices.
fn two_pairs_linkable(g: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    use itertools::Itertools;
    let others: Vec<usize> = (0..g.n()).filter(|v| ![a, b, c, d].contains(v)).collect();
    let paths = |s: usize, t: usize, pool: &[usize]| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for k in 0..=pool.len() {
            for mid in pool.iter().copied().permutations(k) {
                let p: Vec<usize> = std::iter::once(s).chain(mid).chain(std::iter::once(t)).collect();
                if g.is_path(&p) {
                    out.push(p);
                }
            }
        }
        out
    };
    paths(a, b, &others).iter().any(|p| {
        let rest: Vec<usize> = others.iter().copied().filter(|v| !p.contains(v)).collect();
        !paths(c, d, &rest).is_empty()
    })
}

#[test]
fn linkage_agrees_with_brute_force_when_found() {
    let mut found = 0;
    for seed in 0..150 {
        let g = random_graph(8, 0.4, 900 + seed);
        let pairs = [(0, 1), (2, 3)];
        let got = disjoint_pair_paths(&g, &pairs, &VertexSet::new(8), 50, seed).unwrap();
        let exists = two_pairs_linkable(&g, pairs[0], pairs[1]);
        if let Some(paths) = got {
            found += 1;
            assert!(exists, "seed {seed}: found paths the oracle rules out");
            for (p, &(a, b)) in paths.iter().zip(&pairs) {
                assert!(g.is_path(p) && p[0] == a && p[p.len() - 1] == b);
            }
            assert!(paths[0].iter().all(|v| !paths[1].contains(v)));
        }
    }
    assert!(found > 20);
}

#[test]
fn rotation_paths_on_small_graphs() {
    for seed in 0..60 {
        let g = random_graph(9, 0.7, 5000 + seed);
        if let Some(p) = rotation_extension_path(&g, 0, 8, 20_000, seed) {
            assert!(g.is_hamilton_path_of(&p, &VertexSet::full(9), 0, 8));
        }
    }
    // every Hamilton path of the complete graph is easy to find
    let k = Graph::complete(10);
    assert!(rotation_extension_path(&k, 3, 7, 1000, 1).is_some());
}

#[test]
fn split_floors_hold_on_return() {
    for seed in 0..20 {
        let g = random_graph(120, 0.15, 40 + seed);
        let y = VertexSet::from_iter(120, 20..120);
        let watched = VertexSet::from_iter(120, (0..120).filter(|&v| g.degree_into(v, &y) >= 2));
        let req = SplitRequest::balanced(y.clone()).unwrap().constrain(watched.clone());
        let (a, b) = lll_split(&g, &req, 10_000, seed).expect("split");
        assert_eq!(a.len() + b.len(), 100);
        for v in watched.iter() {
            let (da, dy) = (g.degree_into(v, &a), g.degree_into(v, &y));
            assert!(3 * 100 * da >= 50 * dy && 3 * 100 * (dy - da) >= 50 * dy, "seed {seed} v {v}");
        }
    }
}

#[test]
fn protected_paths_visit_everything() {
    for seed in 0..10 {
        let g = random_graph(60, 0.2, 60 + seed);
        let all = VertexSet::full(60);
        let mut by_deg: Vec<usize> = (0..60).collect();
        by_deg.sort_by_key(|&v| g.degree(v));
        let small = VertexSet::from_iter(60, by_deg[..2].iter().copied());
        let (x, y) = (by_deg[59], by_deg[58]);
        if let Ok(p) = hamilton_path_protected_with(&g, &all, x, y, &small, &ProtectedConfig::default(), seed) {
            assert!(g.is_hamilton_path_of(&p, &all, x, y));
            for u in small.iter() {
                let i = p.iter().position(|&w| w == u).unwrap();
                assert!(!small.contains(p[i - 1]) && !small.contains(p[i + 1]));
            }
        }
    }
}

//! Independent brute-force oracles. Nothing here calls the search or
//! elimination code under test.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;

use hamspan::rng::rng_from_seed;
use hamspan::Graph;

/// Every Hamilton cycle as a sorted list of edge ids, by permuting
/// `1..n` behind vertex 0 and keeping one direction.
pub fn hamilton_edge_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rest in (1..n).permutations(n - 1) {
        if rest[0] > rest[n - 2] {
            continue;
        }
        let order: Vec<usize> = std::iter::once(0).chain(rest).collect();
        let ids: Option<Vec<usize>> = (0..n).map(|i| g.edge_id(order[i], order[(i + 1) % n])).collect();
        if let Some(mut ids) = ids {
            ids.sort_unstable();
            out.push(ids);
        }
    }
    out.sort();
    out
}

pub fn mask(ids: &[usize]) -> u128 {
    ids.iter().fold(0u128, |acc, &e| acc | 1u128 << e)
}

/// Rank over GF(2) of rows packed in `u128` (so `m <= 128`).
pub fn rank(rows: &[u128]) -> usize {
    let mut pivots: Vec<u128> = Vec::new();
    for &r in rows {
        let mut x = r;
        for &p in &pivots {
            x = x.min(x ^ p);
        }
        if x != 0 {
            pivots.push(x);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

/// Rank of the vertex-edge incidence matrix.
pub fn incidence_rank(g: &Graph) -> usize {
    let rows: Vec<u128> = (0..g.n()).map(|v| mask(&g.incident(v).iter().map(|&(_, e)| e).collect::<Vec<_>>())).collect();
    rank(&rows)
}

/// Components by union-find.
pub fn components(g: &Graph) -> usize {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..g.n()).filter(|&v| find(&mut parent, v) == v).count()
}

/// Whether `r` (as an edge mask) meets every listed edge set evenly.
pub fn even_with_all(r: u128, sets: &[Vec<usize>]) -> bool {
    sets.iter().all(|s| (mask(s) & r).count_ones().is_multiple_of(2))
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Graph with vertex set `0..n` and edges chosen by the bits of `code`
/// over the lexicographic pair order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Bipartite by 2-colouring.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut colour = vec![None; g.n()];
    for s in 0..g.n() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let c = colour[u].unwrap();
            for w in g.neighbors(u) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(d) if d == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Shortest path length from `x` to `y` avoiding `forbidden`, by
/// repeated frontier relaxation.
pub fn distance(g: &Graph, x: usize, y: usize, forbidden: &[usize]) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[x] = 0;
    for _ in 0..g.n() {
        for &(u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if dist[a] != usize::MAX && !forbidden.contains(&b) && dist[a] + 1 < dist[b] {
                    dist[b] = dist[a] + 1;
                }
            }
        }
    }
    (dist[y] != usize::MAX).then_some(dist[y])
}

//! Dual witnesses: edge sets `R` meeting every Hamilton cycle evenly but
//! some cycle oddly.

use serde::{Deserialize, Serialize};

use super::HamiltonCycle;
use crate::gf2::{cycle_space_basis, star, EdgeVector, Gf2Basis};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessR {
    pub vector: EdgeVector,
    /// Every Hamilton cycle meets `vector` in an even number of edges.
    pub even_with_all_hamilton: bool,
    /// Some fundamental cycle meets `vector` in an odd number of edges.
    pub odd_with_some_cycle: bool,
    pub normalized: bool,
    pub size: usize,
}

impl WitnessR {
    /// Wraps an arbitrary edge set, recomputing the odd-cycle flag. The
    /// Hamilton flag is taken from the caller.
    pub fn from_vector(g: &Graph, vector: EdgeVector, even_with_all_hamilton: bool) -> WitnessR {
        let odd_with_some_cycle = cycle_space_basis(g).iter().any(|z| z.parity_unchecked(&vector));
        let size = vector.count_ones();
        WitnessR { vector, even_with_all_hamilton, odd_with_some_cycle, normalized: false, size }
    }

    /// Checks the even-pairing condition against `hamiltons`.
    pub fn verify_against(&self, hamiltons: &[HamiltonCycle]) -> bool {
        hamiltons.iter().all(|h| !h.vector().parity_unchecked(&self.vector))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormalizeMode {
    /// Maximize `|R|` over its whole cut-space coset (`n <= 24`).
    Exact,
    /// Flip single stars while they enlarge `R`.
    Hillclimb,
}

/// Largest `n` accepted by [`NormalizeMode::Exact`].
pub const EXACT_NORMALIZE_MAX_N: usize = 24;

/// Witness from a complete list of Hamilton cycles, or `None` when their
/// span already equals the cycle space.
pub fn extract_witness(g: &Graph, hamiltons: &[HamiltonCycle]) -> Option<WitnessR> {
    let span = Gf2Basis::from_vectors(g.m(), hamiltons.iter().map(|h| h.vector()))
        .expect("cycles share the host graph");
    let mut w = extract_witness_from_span(g, &span)?;
    w.even_with_all_hamilton = w.verify_against(hamiltons);
    Some(w)
}

/// Witness from a basis of the Hamilton span.
///
/// Searches the orthogonal complement of the span: its basis vectors in
/// increasing support order, then their pairwise sums, keeping the
/// smallest vector that pairs oddly with some fundamental cycle. The
/// returned `even_with_all_hamilton` only reflects the span rows; callers
/// holding the full cycle list should re-verify.
pub fn extract_witness_from_span(g: &Graph, span: &Gf2Basis) -> Option<WitnessR> {
    let cycles = cycle_space_basis(g);
    if cycles.is_empty() {
        return None;
    }
    let odd = |x: &EdgeVector| cycles.iter().any(|z| z.parity_unchecked(x));
    let mut kernel = span.orthogonal_complement();
    kernel.sort_by_key(|x| (x.count_ones(), x.lowest_one()));

    let mut best: Option<EdgeVector> = kernel.iter().find(|x| odd(x)).cloned();
    // no kernel vector pairs oddly <=> the span is the whole cycle space
    let bound = best.as_ref()?.count_ones();
    if bound > 1 {
        let mut best_size = bound;
        for i in 0..kernel.len() {
            for j in i + 1..kernel.len() {
                let mut x = kernel[i].clone();
                x.xor_unchecked(&kernel[j]);
                let size = x.count_ones();
                if size > 0 && size < best_size && odd(&x) {
                    best_size = size;
                    best = Some(x);
                }
            }
        }
    }
    let vector = best?;
    let even = span.rows().iter().all(|r| !r.parity_unchecked(&vector));
    let size = vector.count_ones();
    Some(WitnessR {
        vector,
        even_with_all_hamilton: even,
        odd_with_some_cycle: true,
        normalized: false,
        size,
    })
}

/// Statistics of a hillclimb normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizeStats {
    pub flips: usize,
    pub size_before: usize,
    pub size_after: usize,
}

/// Moves `r` within its cut-space coset `r + <stars>` to a large member.
///
/// Adding a cut never changes the pairing with any cycle, so both witness
/// flags carry over unchanged. Exact mode falls back to hillclimb above
/// [`EXACT_NORMALIZE_MAX_N`] vertices.
pub fn normalize_witness(g: &Graph, r: &WitnessR, mode: NormalizeMode) -> WitnessR {
    let vector = match mode {
        NormalizeMode::Exact if g.n() <= EXACT_NORMALIZE_MAX_N => normalize_exact(g, &r.vector),
        _ => normalize_hillclimb(g, &r.vector).0,
    };
    WitnessR {
        size: vector.count_ones(),
        vector,
        normalized: true,
        ..r.clone()
    }
}

/// Flips `∂(v)` while `deg_R(v) < deg_G(v) / 2`, scanning vertices in
/// ascending order until a full pass makes no flip.
///
/// Each flip grows `|R|` by `deg_G(v) - 2 deg_R(v) >= 1`, so there are at
/// most `m` flips.
pub fn normalize_hillclimb(g: &Graph, r: &EdgeVector) -> (EdgeVector, NormalizeStats) {
    let mut out = r.clone();
    let size_before = r.count_ones();
    let mut deg_r: Vec<usize> = (0..g.n())
        .map(|v| g.incident(v).iter().filter(|&&(_, e)| out.get(e)).count())
        .collect();
    let mut flips = 0;
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            if 2 * deg_r[v] < g.degree(v) {
                for &(w, e) in g.incident(v) {
                    if out.get(e) {
                        deg_r[w] -= 1;
                    } else {
                        deg_r[w] += 1;
                    }
                    out.flip(e);
                }
                deg_r[v] = g.degree(v) - deg_r[v];
                flips += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let size_after = out.count_ones();
    (out, NormalizeStats { flips, size_before, size_after })
}

/// Maximum-support member of the coset, one component at a time.
///
/// Within a component on `c` vertices the `2^(c-1)` cuts are walked in
/// Gray-code order (the lowest vertex stays on one side), updating `|R|`
/// incrementally per star flip.
pub fn normalize_exact(g: &Graph, r: &EdgeVector) -> EdgeVector {
    assert!(g.n() <= EXACT_NORMALIZE_MAX_N, "exact normalization needs n <= {EXACT_NORMALIZE_MAX_N}");
    let (label, count) = g.components();
    let mut out = r.clone();
    for comp in 0..count {
        let verts: Vec<usize> = (0..g.n()).filter(|&v| label[v] == comp).collect();
        let free = &verts[1..];
        if free.is_empty() {
            continue;
        }
        let mut cur = out.clone();
        let mut size = cur.count_ones() as i64;
        let mut best_size = size;
        let mut best_code = 0u32;
        for i in 1u32..(1 << free.len()) {
            let bit = i.trailing_zeros() as usize;
            let v = free[bit];
            for &(_, e) in g.incident(v) {
                size += if cur.get(e) { -1 } else { 1 };
                cur.flip(e);
            }
            if size > best_size {
                best_size = size;
                best_code = i ^ (i >> 1);
            }
        }
        for (bit, &v) in free.iter().enumerate() {
            if best_code >> bit & 1 == 1 {
                out.xor_unchecked(&star(g, v));
            }
        }
    }
    out
}

/// True iff `r = E_G(A, V \ A)` for some vertex set `A`.
///
/// Solves `side(u) + side(v) = [uv ∈ r]` over the edges of `g` by BFS
/// 2-colouring each component of `g`; a conflict means no such `A`.
pub fn is_bipartition_form(g: &Graph, r: &EdgeVector) -> bool {
    if r.host_m() != g.m() {
        return false;
    }
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        stack.push(s);
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for &(w, e) in g.incident(u) {
                let want = su ^ r.get(e);
                match side[w] {
                    None => {
                        side[w] = Some(want);
                        stack.push(w);
                    }
                    Some(sw) if sw != want => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spanning::enumerate_hamilton_cycles;

    fn ids(g: &Graph, pairs: &[(usize, usize)]) -> EdgeVector {
        EdgeVector::from_ids(g.m(), pairs.iter().map(|&(u, v)| g.edge_id(u, v).unwrap()))
    }

    #[test]
    fn k4_triangle_is_a_witness() {
        let k4 = Graph::complete(4);
        let hs = enumerate_hamilton_cycles(&k4, None);
        let tri = ids(&k4, &[(0, 1), (0, 2), (1, 2)]);
        for h in &hs {
            assert_eq!(h.vector().intersection_count(&tri).unwrap(), 2);
        }
        assert!(tri.intersection_parity(&tri).unwrap());

        let w = extract_witness(&k4, &hs).unwrap();
        assert!(w.even_with_all_hamilton && w.odd_with_some_cycle);
        assert!(w.verify_against(&hs));
    }

    #[test]
    fn no_witness_when_spanned_or_acyclic() {
        let c5 = Graph::cycle(5);
        let hs = enumerate_hamilton_cycles(&c5, None);
        assert!(extract_witness(&c5, &hs).is_none());
        assert!(extract_witness(&Graph::path(5), &[]).is_none());
    }

    #[test]
    fn hillclimb_flips_vertex_three() {
        let k4 = Graph::complete(4);
        let tri = ids(&k4, &[(0, 1), (0, 2), (1, 2)]);
        let (out, stats) = normalize_hillclimb(&k4, &tri);
        assert_eq!(out, EdgeVector::ones(6));
        assert_eq!(stats, NormalizeStats { flips: 1, size_before: 3, size_after: 6 });
        let hs = enumerate_hamilton_cycles(&k4, None);
        assert!(hs.iter().all(|h| !h.vector().intersection_parity(&out).unwrap()));

        let (again, stats) = normalize_hillclimb(&k4, &out);
        assert_eq!(again, out);
        assert_eq!(stats.flips, 0);
    }

    #[test]
    fn exact_dominates_hillclimb() {
        let g = Graph::petersen();
        let r = EdgeVector::from_ids(g.m(), [0, 3, 7]);
        let exact = normalize_exact(&g, &r);
        let (hill, _) = normalize_hillclimb(&g, &r);
        assert!(exact.count_ones() >= hill.count_ones());
        let diff = exact.xor(&r).unwrap();
        assert!(is_bipartition_form(&g, &diff));
    }

    #[test]
    fn bipartition_examples() {
        let k4 = Graph::complete(4);
        assert!(is_bipartition_form(&k4, &ids(&k4, &[(0, 2), (0, 3), (1, 2), (1, 3)])));
        assert!(!is_bipartition_form(&k4, &ids(&k4, &[(0, 1), (0, 2), (1, 2)])));
        let c6 = Graph::cycle(6);
        assert!(!is_bipartition_form(&c6, &ids(&c6, &[(0, 1), (2, 3), (4, 5)])));
        assert!(is_bipartition_form(&c6, &ids(&c6, &[(0, 1), (2, 3)])));
        assert!(is_bipartition_form(&c6, &EdgeVector::zeros(6)));
    }
}

//! Structural properties of `G(n, p)` near the threshold, checked on a
//! concrete graph.
//!
//! Pointwise properties are always exact. Set-quantified ones are exact
//! (bitmask enumeration) up to `exact_max_n` and otherwise refuted by
//! sampling random and greedily built sets. Every violation carries its
//! sets and is re-checked by the same counting predicate that
//! [`PropertyReport::reverify`] uses.

use std::collections::VecDeque;

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::gf2::EdgeVector;
use crate::graph::{Graph, VertexSet};
use crate::rng::{rng_from_seed, sub_seed, Rng64};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyConfig {
    /// Sampled set (pairs) per set-quantified property.
    pub samples: usize,
    /// Largest `n` checked by exhaustive enumeration (capped at 16).
    pub exact_max_n: usize,
    /// Edge probability for the two-sided density check; `None` uses `m / C(n, 2)`.
    pub p: Option<f64>,
    /// The constant `δ` of the half-degree check.
    pub half_degree_delta: f64,
    pub seed: u64,
}

impl Default for PropertyConfig {
    fn default() -> Self {
        PropertyConfig { samples: 10_000, exact_max_n: 14, p: None, half_degree_delta: 0.1, seed: 0 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: Option<usize>,
    pub set_a: Vec<usize>,
    pub set_b: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub name: String,
    /// Exhaustive (`true`) or sampled refutation (`false`).
    pub exact: bool,
    /// No set satisfies the size constraints at this `n`.
    pub vacuous: bool,
    pub holds: bool,
    pub params: String,
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub n: usize,
    pub m: usize,
    pub p_used: f64,
    pub half_degree_delta: f64,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn get(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    /// Re-evaluates every reported violation from raw counts.
    pub fn reverify(&self, g: &Graph, r: Option<&EdgeVector>) -> bool {
        let ctx = Ctx::new(g, r, self.p_used, self.half_degree_delta);
        self.checks
            .iter()
            .filter_map(|c| c.violation.as_ref().map(|v| (c.name.as_str(), v)))
            .all(|(name, v)| ctx.violates(name, v))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// [`property_report_with`] under the default configuration.
pub fn property_report(g: &Graph, r: Option<&EdgeVector>) -> PropertyReport {
    property_report_with(g, r, &PropertyConfig::default())
}

/// Checks `P1`..`P6`, the half-degree and robust-edge properties, the
/// small-set expansion of `G - SMALL` and `δ(G) >= 3`.
///
/// The robust-edge check needs `r` and is skipped (reported vacuous)
/// without it.
pub fn property_report_with(g: &Graph, r: Option<&EdgeVector>, config: &PropertyConfig) -> PropertyReport {
    let n = g.n();
    let pairs = (n * n.saturating_sub(1) / 2).max(1);
    let p = config.p.unwrap_or(g.m() as f64 / pairs as f64);
    let r = r.filter(|r| r.host_m() == g.m());
    let ctx = Ctx::new(g, r, p, config.half_degree_delta);
    let exact = n <= config.exact_max_n.min(16);
    let dense = exact.then(|| Dense::new(g));
    let mut rng = rng_from_seed(sub_seed(config.seed, 0x9e));

    let mut checks = vec![ctx.p1(), ctx.p2(), ctx.p3()];
    let set_checks: [(&str, SetCheck<'_>); 6] = [
        ("P4", Ctx::p4),
        ("P5", Ctx::p5),
        ("P6", Ctx::p6),
        ("half_degree", Ctx::half_degree),
        ("robust_edge", Ctx::robust_edge),
        ("expansion", Ctx::expansion),
    ];
    for (name, check) in set_checks {
        let (vacuous, params, violation) = check(&ctx, dense.as_ref(), config.samples, &mut rng);
        checks.push(PropertyCheck {
            name: name.into(),
            exact: exact && name != "expansion",
            vacuous,
            holds: violation.is_none(),
            params,
            violation,
        });
    }
    checks.push(ctx.min_degree());
    PropertyReport { n, m: g.m(), p_used: p, half_degree_delta: config.half_degree_delta, checks }
}

type SetCheck<'g> = fn(&Ctx<'g>, Option<&Dense>, usize, &mut Rng64) -> (bool, String, Option<Violation>);

struct Ctx<'a> {
    g: &'a Graph,
    r: Option<&'a EdgeVector>,
    n: usize,
    ln: f64,
    lnln: f64,
    p: f64,
    delta: f64,
    small: VertexSet,
}

fn set(n: usize, items: &[usize]) -> Option<VertexSet> {
    let s = VertexSet::from_iter(n, items.iter().copied().filter(|&v| v < n));
    (s.len() == items.len()).then_some(s)
}

fn pointwise(name: &str, params: String, violation: Option<Violation>) -> PropertyCheck {
    PropertyCheck { name: name.into(), exact: true, vacuous: false, holds: violation.is_none(), params, violation }
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, r: Option<&'a EdgeVector>, p: f64, delta: f64) -> Self {
        let n = g.n();
        let ln = (n.max(3) as f64).ln();
        Ctx { g, r, n, ln, lnln: ln.ln(), p, delta, small: g.small_vertices() }
    }

    fn p1_bound(&self) -> f64 {
        10.0 * self.ln
    }

    fn small_closure(&self) -> VertexSet {
        let mut z = self.g.neighborhood(&self.small);
        z.union_with(&self.small);
        z
    }

    fn p3_len(&self) -> usize {
        (0.3 * self.ln / self.lnln).floor() as usize
    }

    fn small_set_max(&self) -> usize {
        ((self.n as f64 * self.lnln * self.lnln / self.ln).floor() as usize).min(self.n)
    }

    fn sparse_bound(&self, a: usize) -> f64 {
        a as f64 * self.ln / self.lnln
    }

    fn p5_b(&self, a: usize) -> usize {
        (a as f64 * self.ln.sqrt()).ceil() as usize
    }

    fn p6_min(&self) -> usize {
        ((self.n as f64 * self.lnln.powf(1.5) / self.ln).ceil() as usize).max(1)
    }

    fn half_a_min(&self) -> usize {
        ((self.n as f64 * self.lnln * self.lnln / self.ln.sqrt()).ceil() as usize).max(1)
    }

    fn half_b(&self) -> usize {
        ((0.5 + self.delta) * self.n as f64).ceil() as usize
    }

    fn robust_size(&self) -> usize {
        (2 * self.n).div_ceil(5)
    }

    fn p1(&self) -> PropertyCheck {
        let bound = self.p1_bound();
        let v = (0..self.n).max_by_key(|&v| self.g.degree(v)).filter(|&v| self.g.degree(v) as f64 > bound);
        let violation = v.map(|v| Violation {
            vertex: Some(v),
            detail: format!("deg({v}) = {} > {bound:.3}", self.g.degree(v)),
            ..Default::default()
        });
        pointwise("P1", format!("max degree <= 10 ln n = {bound:.3}"), violation)
    }

    fn p2(&self) -> PropertyCheck {
        let z = self.small_closure();
        let bound = (self.n as f64).sqrt();
        let violation = (z.len() as f64 > bound).then(|| Violation {
            set_a: z.iter().collect(),
            detail: format!("|SMALL ∪ N(SMALL)| = {} > {bound:.3}", z.len()),
            ..Default::default()
        });
        pointwise("P2", format!("|SMALL ∪ N(SMALL)| <= sqrt n = {bound:.3}"), violation)
    }

    /// Shortest path (or cycle) of length `1..=L` joining SMALL vertices.
    fn p3(&self) -> PropertyCheck {
        let len = self.p3_len();
        let params = format!("no SMALL-SMALL path of length 1..={len}");
        let mut best: Option<Vec<usize>> = None;
        if len >= 1 {
            for s in self.small.iter() {
                let found = self.short_small_path(s, len);
                if let Some(p) = found {
                    if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                        best = Some(p);
                    }
                }
            }
        }
        let violation = best.map(|p| Violation {
            detail: format!("path of length {} between SMALL vertices", p.len() - 1),
            set_a: p,
            ..Default::default()
        });
        pointwise("P3", params, violation)
    }

    fn short_small_path(&self, s: usize, len: usize) -> Option<Vec<usize>> {
        let g = self.g;
        let mut parent = vec![usize::MAX; self.n];
        let mut dist = vec![usize::MAX; self.n];
        parent[s] = s;
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if dist[u] >= len {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    if self.small.contains(w) {
                        let mut p = vec![w];
                        let mut x = w;
                        while x != s {
                            x = parent[x];
                            p.push(x);
                        }
                        return Some(p);
                    }
                    queue.push_back(w);
                }
            }
        }
        // cycles through s: two first hops meeting again within the budget
        if len >= 3 {
            let nbrs: Vec<usize> = g.neighbors(s).collect();
            for (i, &a) in nbrs.iter().enumerate() {
                let mut forbidden = VertexSet::new(self.n);
                forbidden.insert(s);
                for &b in &nbrs[i + 1..] {
                    if let Some(p) = g.bfs_path(a, b, &forbidden) {
                        if p.len() < len {
                            let mut cyc = vec![s];
                            cyc.extend(p);
                            cyc.push(s);
                            return Some(cyc);
                        }
                    }
                }
            }
        }
        None
    }

    fn min_degree(&self) -> PropertyCheck {
        let v = (0..self.n).find(|&v| self.g.degree(v) < 3);
        let violation = v.map(|v| Violation {
            vertex: Some(v),
            detail: format!("deg({v}) = {}", self.g.degree(v)),
            ..Default::default()
        });
        pointwise("min_degree_3", "δ(G) >= 3".into(), violation)
    }

    // -- predicates shared by search and re-verification --

    fn violates(&self, name: &str, v: &Violation) -> bool {
        let n = self.n;
        let (Some(a), Some(b)) = (set(n, &v.set_a), set(n, &v.set_b)) else {
            return name == "P3" && self.p3_violates(&v.set_a);
        };
        match name {
            "P1" => v.vertex.is_some_and(|x| x < n && self.g.degree(x) as f64 > self.p1_bound()),
            "P2" => a == self.small_closure() && a.len() as f64 > (n as f64).sqrt(),
            "P3" => self.p3_violates(&v.set_a),
            "P4" => self.p4_violates(&a),
            "P5" => self.p5_violates(&a, &b),
            "P6" => self.p6_violates(&a, &b),
            "half_degree" => self.half_violates(&a, &b),
            "robust_edge" => self.robust_violates(&a, &b),
            "expansion" => self.expansion_violates(&a),
            "min_degree_3" => v.vertex.is_some_and(|x| x < n && self.g.degree(x) < 3),
            _ => false,
        }
    }

    fn p3_violates(&self, p: &[usize]) -> bool {
        let (Some(&s), Some(&t)) = (p.first(), p.last()) else { return false };
        let len = p.len() - 1;
        if len == 0 || len > self.p3_len() || !self.small.contains(s) || !self.small.contains(t) {
            return false;
        }
        if s == t {
            len >= 3 && self.g.has_edge(p[len - 1], s) && self.g.is_path(&p[..len])
        } else {
            self.g.is_path(p)
        }
    }

    fn p4_violates(&self, a: &VertexSet) -> bool {
        (1..=self.small_set_max()).contains(&a.len()) && self.g.edges_within(a) as f64 > self.sparse_bound(a.len())
    }

    fn p5_violates(&self, a: &VertexSet, b: &VertexSet) -> bool {
        (1..=self.small_set_max()).contains(&a.len())
            && b.len() == self.p5_b(a.len())
            && a.is_disjoint(b)
            && self.g.edges_between(a, b) as f64 > self.sparse_bound(a.len())
    }

    fn p6_violates(&self, a: &VertexSet, b: &VertexSet) -> bool {
        let s = self.p6_min();
        if a.len() < s || b.len() < s || !a.is_disjoint(b) {
            return false;
        }
        let e = self.g.edges_between(a, b) as f64;
        let mean = (a.len() * b.len()) as f64 * self.p;
        e < 0.999 * mean || e > 1.001 * mean
    }

    fn half_fails(&self, u: usize, b: &VertexSet) -> bool {
        (self.g.degree_into(u, b) as f64) < (1.0 + self.delta) * self.g.degree(u) as f64 / 2.0
    }

    fn half_violates(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.len() >= self.half_a_min()
            && b.len() == self.half_b()
            && a.is_disjoint(b)
            && a.iter().all(|u| self.half_fails(u, b))
    }

    fn r_between(&self, r: &EdgeVector, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter()
            .flat_map(|u| self.g.incident(u).iter())
            .filter(|&&(w, e)| r.get(e) && b.contains(w))
            .count()
    }

    fn robust_violates(&self, a: &VertexSet, b: &VertexSet) -> bool {
        let s = self.robust_size();
        match self.r {
            Some(r) => a.len() == s && b.len() == s && a.is_disjoint(b) && self.r_between(r, a, b) == 0,
            None => false,
        }
    }

    fn expansion_need(&self, x: usize) -> f64 {
        x as f64 * self.ln.sqrt()
    }

    fn external_in_h(&self, x: &VertexSet) -> usize {
        let mut nb = self.g.neighborhood(x);
        nb.difference_with(&self.small);
        nb.difference_with(x);
        nb.len()
    }

    fn expansion_violates(&self, x: &VertexSet) -> bool {
        (1..=self.small_set_max()).contains(&x.len())
            && x.is_disjoint(&self.small)
            && (self.external_in_h(x) as f64) < self.expansion_need(x.len())
    }

    // -- searches --

    fn p4(&self, dense: Option<&Dense>, samples: usize, rng: &mut Rng64) -> (bool, String, Option<Violation>) {
        let amax = self.small_set_max();
        let params = format!("e(A) <= |A| ln n / ln ln n for 1 <= |A| <= {amax}");
        if amax == 0 {
            return (true, params, None);
        }
        let witness = |a: Vec<usize>| Violation {
            detail: format!("e(A) = {} with |A| = {}", self.g.edges_within(&set(self.n, &a).unwrap()), a.len()),
            set_a: a,
            ..Default::default()
        };
        if let Some(d) = dense {
            let hit = d.masks().find(|&m| {
                let k = m.count_ones() as usize;
                k <= amax && d.within(m) as f64 > self.sparse_bound(k)
            });
            return (false, params, hit.map(|m| witness(d.vec(m))));
        }
        for i in 0..samples {
            let found = if i % 10 == 0 {
                let start = rng.gen_range(0..self.n);
                self.greedy_dense(start, amax, |a| self.p4_violates(a))
            } else {
                let k = rng.gen_range(1..=amax);
                let a = self.random_set(rng, k);
                self.p4_violates(&a).then_some(a)
            };
            if let Some(a) = found {
                return (false, params, Some(witness(a.iter().collect())));
            }
        }
        (false, params, None)
    }

    /// Grows a dense set from `start`, testing each prefix with `stop`.
    fn greedy_dense(&self, start: usize, max: usize, mut stop: impl FnMut(&VertexSet) -> bool) -> Option<VertexSet> {
        let mut a = VertexSet::new(self.n);
        let mut cnt = vec![0usize; self.n];
        let mut next = start;
        for _ in 0..max {
            a.insert(next);
            for w in self.g.neighbors(next) {
                cnt[w] += 1;
            }
            if stop(&a) {
                return Some(a);
            }
            match (0..self.n).filter(|&v| !a.contains(v)).max_by_key(|&v| cnt[v]) {
                Some(v) => next = v,
                None => break,
            }
        }
        None
    }

    fn random_set(&self, rng: &mut Rng64, k: usize) -> VertexSet {
        VertexSet::from_iter(self.n, sample(rng, self.n, k.min(self.n)))
    }

    fn random_set_in(&self, rng: &mut Rng64, pool: &[usize], k: usize) -> VertexSet {
        VertexSet::from_iter(self.n, sample(rng, pool.len(), k.min(pool.len())).into_iter().map(|i| pool[i]))
    }

    /// The `k` vertices outside `a` ranked first by `key` (ties by id).
    fn top_outside(&self, a: &VertexSet, k: usize, key: impl Fn(usize) -> i64) -> Option<VertexSet> {
        let mut rest: Vec<usize> = (0..self.n).filter(|&v| !a.contains(v)).collect();
        if rest.len() < k {
            return None;
        }
        rest.sort_by_key(|&v| (key(v), v));
        Some(VertexSet::from_iter(self.n, rest.into_iter().take(k)))
    }

    fn p5(&self, dense: Option<&Dense>, samples: usize, rng: &mut Rng64) -> (bool, String, Option<Violation>) {
        let amax = self.small_set_max();
        let params = format!("e(A, B) <= |A| ln n / ln ln n for |A| <= {amax}, |B| = ceil(|A| sqrt ln n)");
        let feasible: Vec<usize> = (1..=amax).filter(|&a| a + self.p5_b(a) <= self.n).collect();
        if feasible.is_empty() {
            return (true, params, None);
        }
        let best_b = |a: &VertexSet| {
            let b = self.p5_b(a.len());
            self.top_outside(a, b, |v| -(self.g.degree_into(v, a) as i64))
        };
        let check = |a: &VertexSet| best_b(a).filter(|b| self.p5_violates(a, b)).map(|b| (a.clone(), b));
        let found = if let Some(d) = dense {
            d.masks()
                .filter(|&m| feasible.contains(&(m.count_ones() as usize)))
                .find_map(|m| check(&set(self.n, &d.vec(m)).unwrap()))
        } else {
            let top = *feasible.last().unwrap();
            (0..samples).find_map(|i| {
                if i % 10 == 0 {
                    let start = rng.gen_range(0..self.n);
                    let mut hit = None;
                    self.greedy_dense(start, top, |a| {
                        hit = check(a);
                        hit.is_some()
                    });
                    hit
                } else {
                    let k = feasible[rng.gen_range(0..feasible.len())];
                    check(&self.random_set(rng, k))
                }
            })
        };
        (false, params, found.map(|(a, b)| self.pair_violation(a, b)))
    }

    fn pair_violation(&self, a: VertexSet, b: VertexSet) -> Violation {
        Violation {
            detail: format!("|A| = {}, |B| = {}, e(A, B) = {}", a.len(), b.len(), self.g.edges_between(&a, &b)),
            set_a: a.iter().collect(),
            set_b: b.iter().collect(),
            vertex: None,
        }
    }

    fn p6(&self, dense: Option<&Dense>, samples: usize, rng: &mut Rng64) -> (bool, String, Option<Violation>) {
        let s = self.p6_min();
        let params = format!("0.999 |A||B| p <= e(A, B) <= 1.001 |A||B| p for |A|, |B| >= {s}, p = {:.6}", self.p);
        if 2 * s > self.n {
            return (true, params, None);
        }
        let found = if let Some(d) = dense {
            d.disjoint_pairs(s).find_map(|(ma, mb)| {
                let e = d.between(ma, mb) as f64;
                let mean = (ma.count_ones() * mb.count_ones()) as f64 * self.p;
                (e < 0.999 * mean || e > 1.001 * mean)
                    .then(|| (set(self.n, &d.vec(ma)).unwrap(), set(self.n, &d.vec(mb)).unwrap()))
            })
        } else {
            (0..samples).find_map(|i| {
                let ka = rng.gen_range(s..=self.n - s);
                let a = self.random_set(rng, ka);
                let kb = rng.gen_range(s..=self.n - ka);
                let b = if i % 2 == 0 {
                    let pool: Vec<usize> = (0..self.n).filter(|&v| !a.contains(v)).collect();
                    self.random_set_in(rng, &pool, kb)
                } else {
                    // the kb vertices with fewest neighbors in A
                    self.top_outside(&a, kb, |v| self.g.degree_into(v, &a) as i64)?
                };
                self.p6_violates(&a, &b).then_some((a, b))
            })
        };
        (false, params, found.map(|(a, b)| self.pair_violation(a, b)))
    }

    fn half_degree(&self, dense: Option<&Dense>, samples: usize, rng: &mut Rng64) -> (bool, String, Option<Violation>) {
        let (amin, b) = (self.half_a_min(), self.half_b());
        let params = format!(
            "some u in A has deg(u, B) >= (1 + {})deg(u)/2 for |A| >= {amin}, |B| = {b}",
            self.delta
        );
        if amin + b > self.n {
            return (true, params, None);
        }
        // for a fixed B the worst A is every failing vertex outside B
        let check = |bset: VertexSet| {
            let a = VertexSet::from_iter(self.n, (0..self.n).filter(|&u| !bset.contains(u) && self.half_fails(u, &bset)));
            self.half_violates(&a, &bset).then_some((a, bset))
        };
        let found = if let Some(d) = dense {
            d.masks().filter(|m| m.count_ones() as usize == b).find_map(|m| check(set(self.n, &d.vec(m)).unwrap()))
        } else {
            (0..samples).find_map(|i| {
                if i % 2 == 0 {
                    check(self.random_set(rng, b))
                } else {
                    let a0 = self.random_set(rng, amin);
                    check(self.top_outside(&a0, b, |v| self.g.degree_into(v, &a0) as i64)?)
                }
            })
        };
        (false, params, found.map(|(a, bset)| self.pair_violation(a, bset)))
    }

    fn robust_edge(&self, dense: Option<&Dense>, samples: usize, rng: &mut Rng64) -> (bool, String, Option<Violation>) {
        let s = self.robust_size();
        let params = format!("e_R(A, B) > 0 for disjoint |A| = |B| = {s}");
        let Some(r) = self.r else {
            return (true, format!("{params} (no R given)"), None);
        };
        if 2 * s > self.n {
            return (true, params, None);
        }
        let rdeg = |v: usize, a: &VertexSet| self.g.incident(v).iter().filter(|&&(w, e)| r.get(e) && a.contains(w)).count();
        let check = |a: VertexSet| {
            let b = self.top_outside(&a, s, |v| rdeg(v, &a) as i64)?;
            self.robust_violates(&a, &b).then_some((a, b))
        };
        let found = if let Some(d) = dense {
            d.masks().filter(|m| m.count_ones() as usize == s).find_map(|m| check(set(self.n, &d.vec(m)).unwrap()))
        } else {
            (0..samples).find_map(|i| {
                if i % 10 == 0 {
                    let start = rng.gen_range(0..self.n);
                    let mut hit = None;
                    self.greedy_dense(start, s, |a| {
                        if a.len() == s {
                            hit = check(a.clone());
                        }
                        a.len() == s
                    });
                    hit
                } else {
                    check(self.random_set(rng, s))
                }
            })
        };
        (false, params, found.map(|(a, b)| self.pair_violation(a, b)))
    }

    fn expansion(&self, dense: Option<&Dense>, samples: usize, rng: &mut Rng64) -> (bool, String, Option<Violation>) {
        let xmax = self.small_set_max();
        let params = format!("|N(X)| >= |X| sqrt ln n in G - SMALL for 1 <= |X| <= {xmax} (sampled)");
        let pool: Vec<usize> = (0..self.n).filter(|&v| !self.small.contains(v)).collect();
        let top = xmax.min(pool.len());
        if top == 0 {
            return (true, params, None);
        }
        let _ = dense;
        let found = (0..samples).find_map(|i| {
            if i % 10 == 0 {
                let start = pool[rng.gen_range(0..pool.len())];
                self.greedy_tight(start, top, |x| self.expansion_violates(x))
            } else {
                let k = rng.gen_range(1..=top);
                let x = self.random_set_in(rng, &pool, k);
                self.expansion_violates(&x).then_some(x)
            }
        });
        let violation = found.map(|x| Violation {
            detail: format!("|X| = {}, |N(X)| = {}", x.len(), self.external_in_h(&x)),
            set_a: x.iter().collect(),
            ..Default::default()
        });
        (false, params, violation)
    }

    /// Grows `X` inside `G - SMALL` adding the vertex with fewest new neighbors.
    fn greedy_tight(&self, start: usize, max: usize, mut stop: impl FnMut(&VertexSet) -> bool) -> Option<VertexSet> {
        let mut x = VertexSet::new(self.n);
        let mut nb = VertexSet::new(self.n);
        let mut next = start;
        for _ in 0..max {
            x.insert(next);
            for w in self.g.neighbors(next) {
                nb.insert(w);
            }
            if stop(&x) {
                return Some(x);
            }
            let cand = nb
                .iter()
                .filter(|&v| !x.contains(v) && !self.small.contains(v))
                .min_by_key(|&v| self.g.neighbors(v).filter(|&w| !nb.contains(w) && !x.contains(w)).count());
            match cand {
                Some(v) => next = v,
                None => break,
            }
        }
        None
    }
}

/// Bitmask view for exhaustive checks on small graphs.
struct Dense {
    n: usize,
    adj: Vec<u64>,
}

impl Dense {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n()).map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect();
        Dense { n: g.n(), adj }
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn masks(&self) -> impl Iterator<Item = u64> {
        1..=self.full()
    }

    fn vec(&self, m: u64) -> Vec<usize> {
        (0..self.n).filter(|&v| m >> v & 1 == 1).collect()
    }

    fn within(&self, m: u64) -> u32 {
        self.vec(m).iter().map(|&v| (self.adj[v] & m).count_ones()).sum::<u32>() / 2
    }

    fn between(&self, a: u64, b: u64) -> u32 {
        let mut total = 0;
        let mut rest = a;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            total += (self.adj[v] & b).count_ones();
            rest &= rest - 1;
        }
        total
    }

    /// Disjoint `(A, B)` with both sides of size at least `s`.
    fn disjoint_pairs(&self, s: usize) -> impl Iterator<Item = (u64, u64)> + '_ {
        let full = self.full();
        self.masks().filter(move |a| a.count_ones() as usize >= s).flat_map(move |a| {
            let comp = full ^ a;
            let mut sub = comp;
            let mut done = false;
            std::iter::from_fn(move || {
                while !done {
                    let cur = sub;
                    if sub == 0 {
                        done = true;
                    } else {
                        sub = (sub - 1) & comp;
                    }
                    if cur.count_ones() as usize >= s {
                        return Some((a, cur));
                    }
                }
                None
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_no_small_vertices() {
        let g = Graph::complete(7);
        let rep = property_report(&g, None);
        assert!(rep.get("P2").unwrap().holds);
        assert!(rep.get("P3").unwrap().holds);
        assert!(rep.get("min_degree_3").unwrap().holds);
        assert!(rep.get("P1").unwrap().holds);
        assert!(rep.reverify(&g, None));
    }

    #[test]
    fn adjacent_small_vertices_fail_p3() {
        // degree-1 vertices are SMALL once ln n / 10 >= 1
        let n = 30_000;
        let g = Graph::from_edge_list(n, &[(0, 1)]).unwrap();
        let ctx = Ctx::new(&g, None, 0.0, 0.1);
        assert_eq!(ctx.p3_len(), 1);
        let v = ctx.p3().violation.unwrap();
        assert_eq!(v.set_a.len(), 2);
        assert!(ctx.violates("P3", &v));
        let tiny = Graph::from_edge_list(62, &[(0, 1)]).unwrap();
        assert!(Ctx::new(&tiny, None, 0.0, 0.1).p3().holds);
    }

    #[test]
    fn exact_mode_reverifies() {
        let g = Graph::from_edge_list(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 5), (5, 6), (6, 7)]).unwrap();
        let rep = property_report(&g, Some(&EdgeVector::ones(g.m())));
        assert!(rep.checks.iter().filter(|c| c.name != "expansion").all(|c| c.exact));
        assert!(!rep.get("min_degree_3").unwrap().holds);
        assert!(rep.reverify(&g, Some(&EdgeVector::ones(g.m()))));
    }

    #[test]
    fn dense_pairs_are_disjoint() {
        let d = Dense { n: 4, adj: vec![0; 4] };
        let pairs: Vec<_> = d.disjoint_pairs(2).collect();
        assert!(pairs.iter().all(|&(a, b)| a & b == 0 && a.count_ones() >= 2 && b.count_ones() >= 2));
        // 6 choices of A, each with exactly one complementary B
        assert_eq!(pairs.len(), 6);
    }
}

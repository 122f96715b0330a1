use std::ops::ControlFlow;

use crate::gf2::EdgeVector;
use crate::graph::Graph;

/// A Hamilton cycle in canonical form.
///
/// `order` starts at vertex 0 and `order[1] < order[n - 1]`, so each cycle
/// of the host graph has exactly one representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonCycle {
    order: Vec<usize>,
    vector: EdgeVector,
}

impl HamiltonCycle {
    /// Canonicalizes and validates a cyclic vertex sequence.
    pub fn new(g: &Graph, order: &[usize]) -> Option<HamiltonCycle> {
        if !g.is_hamilton_cycle(order) {
            return None;
        }
        let n = order.len();
        let start = order.iter().position(|&v| v == 0)?;
        let mut canon: Vec<usize> = (0..n).map(|i| order[(start + i) % n]).collect();
        if canon[1] > canon[n - 1] {
            canon[1..].reverse();
        }
        let mut ids: Vec<usize> = g.path_edge_ids(&canon);
        ids.push(g.edge_id(canon[n - 1], canon[0])?);
        let vector = EdgeVector::from_ids(g.m(), ids);
        Some(HamiltonCycle { order: canon, vector })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn vector(&self) -> &EdgeVector {
        &self.vector
    }
}

/// How a search over Hamilton cycles ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchEnd {
    /// Every Hamilton cycle was visited.
    Complete,
    /// The visitor asked to stop.
    Stopped,
    /// The node-expansion budget ran out first.
    BudgetExhausted,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchStats {
    pub end: SearchEnd,
    pub expansions: u64,
    pub cycles: u64,
}

/// Streams every Hamilton cycle of `g` in canonical form to `visit`.
///
/// Backtracking from vertex 0 with three prunings that never discard a
/// cycle: every unvisited vertex must keep two usable neighbors, a vertex
/// whose only two options include the path tip must be the next vertex,
/// and the unvisited vertices must stay reachable from the tip. `budget`
/// caps the number of search nodes expanded.
pub fn for_each_hamilton_cycle<F>(g: &Graph, budget: Option<u64>, visit: F) -> SearchStats
where
    F: FnMut(HamiltonCycle) -> ControlFlow<()>,
{
    let n = g.n();
    let mut search = Search {
        g,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        budget: budget.unwrap_or(u64::MAX),
        expansions: 0,
        cycles: 0,
        visit,
        scratch: vec![0; n],
        queue: Vec::with_capacity(n),
    };
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return SearchStats { end: SearchEnd::Complete, expansions: 0, cycles: 0 };
    }
    search.visited[0] = true;
    search.path.push(0);
    let end = match search.extend() {
        Step::Continue => SearchEnd::Complete,
        Step::Stop => SearchEnd::Stopped,
        Step::OutOfBudget => SearchEnd::BudgetExhausted,
    };
    SearchStats { end, expansions: search.expansions, cycles: search.cycles }
}

/// Collects the Hamilton cycles of `g`, at most `limit` of them.
pub fn enumerate_hamilton_cycles(g: &Graph, limit: Option<usize>) -> Vec<HamiltonCycle> {
    let mut out = Vec::new();
    for_each_hamilton_cycle(g, None, |c| {
        out.push(c);
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

enum Step {
    Continue,
    Stop,
    OutOfBudget,
}

struct Search<'g, F> {
    g: &'g Graph,
    visited: Vec<bool>,
    path: Vec<usize>,
    budget: u64,
    expansions: u64,
    cycles: u64,
    visit: F,
    scratch: Vec<u32>,
    queue: Vec<usize>,
}

impl<F> Search<'_, F>
where
    F: FnMut(HamiltonCycle) -> ControlFlow<()>,
{
    fn extend(&mut self) -> Step {
        if self.expansions >= self.budget {
            return Step::OutOfBudget;
        }
        self.expansions += 1;
        let g = self.g;
        let n = g.n();
        let tip = *self.path.last().unwrap();

        if self.path.len() == n {
            if self.path[1] < self.path[n - 1] && g.has_edge(tip, 0) {
                self.cycles += 1;
                let cycle = HamiltonCycle::new(g, &self.path).expect("search only emits valid cycles");
                if (self.visit)(cycle).is_break() {
                    return Step::Stop;
                }
            }
            return Step::Continue;
        }

        let forced = match self.prune(tip) {
            None => return Step::Continue,
            Some(f) => f,
        };
        let candidates: Vec<usize> = match forced {
            Some(w) => vec![w],
            None => g.neighbors(tip).filter(|&w| !self.visited[w]).collect(),
        };
        for w in candidates {
            self.visited[w] = true;
            self.path.push(w);
            let step = self.extend();
            self.path.pop();
            self.visited[w] = false;
            match step {
                Step::Continue => {}
                other => return other,
            }
        }
        Step::Continue
    }

    /// `None` to cut the branch, `Some(Some(w))` when `w` must come next.
    fn prune(&mut self, tip: usize) -> Option<Option<usize>> {
        let g = self.g;
        let n = g.n();
        let depth = self.path.len();
        let remaining = n - depth;

        // the closing vertex must be a neighbor of 0 above path[1]
        if depth >= 2 {
            let second = self.path[1];
            if !g.neighbors(0).any(|w| !self.visited[w] && w > second) {
                return None;
            }
        }

        let mut forced = None;
        let mut need_tip = 0;
        let mut need_start = 0;
        for w in 0..n {
            if self.visited[w] {
                continue;
            }
            let mut avail = 0;
            let mut touches_tip = false;
            let mut touches_start = false;
            for u in g.neighbors(w) {
                if !self.visited[u] {
                    avail += 1;
                } else if u == tip {
                    avail += 1;
                    touches_tip = true;
                } else if u == 0 {
                    avail += 1;
                    touches_start = true;
                }
            }
            if avail < 2 {
                return None;
            }
            if depth >= 2 && avail == 2 {
                // squeezed between tip and start while other vertices remain
                if touches_tip && touches_start && remaining > 1 {
                    return None;
                }
                if touches_tip {
                    need_tip += 1;
                    forced = Some(w);
                }
                if touches_start {
                    need_start += 1;
                }
            }
        }
        if depth >= 2 && remaining > 1 && (need_tip > 1 || need_start > 1) {
            return None;
        }

        // all unvisited vertices reachable from the tip through unvisited vertices
        self.queue.clear();
        for s in self.scratch.iter_mut() {
            *s = 0;
        }
        self.scratch[tip] = 1;
        self.queue.push(tip);
        let mut reached = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for w in g.neighbors(u) {
                if !self.visited[w] && self.scratch[w] == 0 {
                    self.scratch[w] = 1;
                    reached += 1;
                    self.queue.push(w);
                }
            }
        }
        if reached < remaining {
            return None;
        }
        Some(forced)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_complete_graphs() {
        assert_eq!(enumerate_hamilton_cycles(&Graph::complete(3), None).len(), 1);
        assert_eq!(enumerate_hamilton_cycles(&Graph::complete(4), None).len(), 3);
        assert_eq!(enumerate_hamilton_cycles(&Graph::complete(5), None).len(), 12);
        assert_eq!(enumerate_hamilton_cycles(&Graph::complete(6), None).len(), 60);
    }

    #[test]
    fn petersen_has_none() {
        assert!(enumerate_hamilton_cycles(&Graph::petersen(), None).is_empty());
    }

    #[test]
    fn canonical_form() {
        let c = HamiltonCycle::new(&Graph::complete(4), &[2, 1, 0, 3]).unwrap();
        assert_eq!(c.order(), &[0, 1, 2, 3]);
        assert_eq!(c.vector().count_ones(), 4);
        assert!(HamiltonCycle::new(&Graph::path(4), &[0, 1, 2, 3]).is_none());
    }

    #[test]
    fn limit_and_budget() {
        assert_eq!(enumerate_hamilton_cycles(&Graph::complete(6), Some(5)).len(), 5);
        let stats = for_each_hamilton_cycle(&Graph::complete(8), Some(10), |_| ControlFlow::Continue(()));
        assert_eq!(stats.end, SearchEnd::BudgetExhausted);
    }
}

use std::collections::VecDeque;

use super::{Matching, UNMATCHED};
use crate::error::{precondition, Error};
use crate::graph::SimpleGraph;

/// Edmonds' augmenting-path search with blossom contraction, restricted to
/// the vertices marked `active`.
pub(super) struct Blossom<'g> {
    g: &'g SimpleGraph,
    active: Vec<bool>,
    pub(super) mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    pub(super) fn new(g: &'g SimpleGraph, active: Vec<bool>) -> Self {
        let n = g.n();
        Blossom {
            g,
            active,
            mate: vec![UNMATCHED; n],
            parent: vec![UNMATCHED; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Greedy start, then augment from every free vertex in ascending order.
    pub(super) fn solve(&mut self) {
        let n = self.g.n();
        for u in 0..n {
            if !self.active[u] || self.mate[u] != UNMATCHED {
                continue;
            }
            if let Some(&v) = self.g.neighbors(u).iter().find(|&&v| self.active[v] && self.mate[v] == UNMATCHED) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
        for root in 0..n {
            if self.active[root] && self.mate[root] == UNMATCHED {
                self.augment_from(root);
            }
        }
    }

    pub(super) fn with_mate(g: &'g SimpleGraph, active: Vec<bool>, mate: Vec<usize>) -> Self {
        let mut b = Blossom::new(g, active);
        b.mate = mate;
        b
    }

    /// Searches for an augmenting path from the free vertex `root` and
    /// applies it. Returns whether one was found.
    pub(super) fn augment_from(&mut self, root: usize) -> bool {
        let Some(mut v) = self.find_path(root) else { return false };
        while v != UNMATCHED {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
        true
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == UNMATCHED {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = UNMATCHED);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.neighbors(v).len() {
                let to = self.g.neighbors(v)[idx];
                if !self.active[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != UNMATCHED && self.parent[self.mate[to]] != UNMATCHED) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.active[i] && self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == UNMATCHED {
                    self.parent[to] = v;
                    if self.mate[to] == UNMATCHED {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    pub(super) fn into_matching(self) -> Matching {
        Matching { mate: self.mate }
    }
}

/// A maximum-cardinality matching.
pub fn max_matching(g: &SimpleGraph) -> Matching {
    let mut b = Blossom::new(g, vec![true; g.n()]);
    b.solve();
    b.into_matching()
}

/// A maximum matching of `g - removed`, indexed like `g`.
pub fn max_matching_without(g: &SimpleGraph, removed: usize) -> Matching {
    let mut active = vec![true; g.n()];
    active[removed] = false;
    let mut b = Blossom::new(g, active);
    b.solve();
    b.into_matching()
}

/// `true` iff deleting any single vertex leaves a perfect matching.
pub fn is_factor_critical(g: &SimpleGraph) -> bool {
    let n = g.n();
    n % 2 == 1 && (0..n).all(|v| max_matching_without(g, v).size() == (n - 1) / 2)
}

/// A perfect matching of `g - avoid`.
pub fn near_perfect_matching(g: &SimpleGraph, avoid: usize) -> Result<Matching, Error> {
    if avoid >= g.n() {
        return Err(precondition(format!("vertex {avoid} out of range")));
    }
    let m = max_matching_without(g, avoid);
    if 2 * m.size() + 1 != g.n() {
        return Err(precondition(format!("no perfect matching after removing {avoid}")));
    }
    Ok(m)
}

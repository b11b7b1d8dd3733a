//! Exhaustive search over the move rule, for small boards.
//!
//! Every move empties one vertex, so the reachable states form a DAG and a
//! single set of dead states is enough memoization.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::distance::Metric;
use crate::game::{Configuration, Move, Plan};
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Upper bound on the number of distinct states a search may expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Stackable(Plan),
    NotStackable,
    Inconclusive { explored: u64 },
}

impl Outcome {
    /// `None` when the budget ran out.
    pub fn decision(&self) -> Option<bool> {
        match self {
            Outcome::Stackable(_) => Some(true),
            Outcome::NotStackable => Some(false),
            Outcome::Inconclusive { .. } => None,
        }
    }

    pub fn plan(&self) -> Option<&Plan> {
        match self {
            Outcome::Stackable(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("search budget exhausted after {explored} states")]
pub struct BudgetExhausted {
    pub explored: u64,
}

struct Search {
    n: usize,
    dist: Vec<usize>,
    target: usize,
    size: u32,
    dead: HashSet<Box<[u32]>>,
    explored: u64,
    budget: u64,
    path: Vec<Move>,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

impl Search {
    fn run(&mut self, state: &mut [u32]) -> Step {
        if state[self.target] == self.size {
            return Step::Found;
        }
        if self.dead.contains(&*state) {
            return Step::Dead;
        }
        if self.explored >= self.budget {
            return Step::OutOfBudget;
        }
        self.explored += 1;
        let n = self.n;
        for from in 0..n {
            let cups = state[from];
            if cups == 0 {
                continue;
            }
            for to in 0..n {
                if to == from || state[to] == 0 || self.dist[from * n + to] != cups as usize {
                    continue;
                }
                state[from] = 0;
                state[to] += cups;
                self.path.push(Move::new(from, to));
                let step = self.run(state);
                state[to] -= cups;
                state[from] = cups;
                match step {
                    Step::Found => return Step::Found,
                    Step::OutOfBudget => return Step::OutOfBudget,
                    Step::Dead => {
                        self.path.pop();
                    }
                }
            }
        }
        self.dead.insert(state.to_vec().into_boxed_slice());
        Step::Dead
    }
}

/// Decides whether `c` can be stacked onto `target` under `metric`.
///
/// Moves are tried in ascending `(from, to)` order, and the first plan found
/// is returned. A target that starts empty is allowed.
pub fn decide_on<M: Metric + ?Sized>(metric: &M, c: &Configuration, target: usize, budget: Budget) -> Outcome {
    let n = metric.n();
    assert_eq!(c.n(), n, "configuration length must match the board");
    assert!(target < n, "target out of range");
    let size = u32::try_from(c.size()).expect("cup total fits in u32");
    let mut dist = vec![0; n * n];
    for u in 0..n {
        for v in 0..n {
            dist[u * n + v] = metric.dist(u, v);
        }
    }
    let mut state: Vec<u32> = c.counts().iter().map(|&x| x as u32).collect();
    let mut search =
        Search { n, dist, target, size, dead: HashSet::new(), explored: 0, budget: budget.0, path: Vec::new() };
    match search.run(&mut state) {
        Step::Found => {
            let ones = c.counts().iter().all(|&x| x == 1);
            let initial = (!ones).then(|| c.counts().to_vec());
            Outcome::Stackable(Plan { n, target, moves: search.path, initial })
        }
        Step::Dead => Outcome::NotStackable,
        Step::OutOfBudget => Outcome::Inconclusive { explored: search.explored },
    }
}

pub fn decide(g: &Graph, c: &Configuration, r: usize, budget: Budget) -> Outcome {
    decide_on(g, c, r, budget)
}

/// The witness plan, `None` if no plan exists.
pub fn plan(g: &Graph, c: &Configuration, r: usize, budget: Budget) -> Result<Option<Plan>, BudgetExhausted> {
    match decide(g, c, r, budget) {
        Outcome::Stackable(p) => Ok(Some(p)),
        Outcome::NotStackable => Ok(None),
        Outcome::Inconclusive { explored } => Err(BudgetExhausted { explored }),
    }
}

/// All-ones decision for every target; each target gets its own budget.
pub fn stackable(g: &Graph, budget: Budget) -> Vec<Outcome> {
    let ones = Configuration::ones(g.n());
    (0..g.n()).into_par_iter().map(|r| decide(g, &ones, r, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::verify_plan;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn star(m: usize) -> Graph {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        graph(m + 1, &edges)
    }

    fn ones_decision(g: &Graph, r: usize) -> Option<bool> {
        decide(g, &Configuration::ones(g.n()), r, Budget::default()).decision()
    }

    #[test]
    fn star_center_and_leaf() {
        let g = star(3);
        assert_eq!(ones_decision(&g, 0), Some(true));
        assert_eq!(ones_decision(&g, 1), Some(false));
    }

    #[test]
    fn paths_are_stackable() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        for r in 0..5 {
            assert_eq!(ones_decision(&g, r), Some(true));
        }
    }

    #[test]
    fn k42_from_the_big_side() {
        let edges: Vec<_> = (0..4).flat_map(|a| (4..6).map(move |b| (a, b))).collect();
        let g = graph(6, &edges);
        assert_eq!(ones_decision(&g, 0), Some(false));
        assert_eq!(ones_decision(&g, 4), Some(true));
    }

    #[test]
    fn p4_plan_verifies() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let p = plan(&g, &Configuration::ones(4), 0, Budget::default()).unwrap().unwrap();
        assert_eq!(p.moves.len(), 3);
        assert!(verify_plan(&g, &p).is_accept());
    }

    #[test]
    fn single_vertex() {
        let g = graph(1, &[]);
        let p = plan(&g, &Configuration::ones(1), 0, Budget::default()).unwrap().unwrap();
        assert!(p.moves.is_empty());
    }

    #[test]
    fn c4_plan_verifies() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let p = plan(&g, &Configuration::ones(4), 0, Budget::default()).unwrap().unwrap();
        assert!(verify_plan(&g, &p).is_accept());
    }

    #[test]
    fn budget_is_reported() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let out = decide(&g, &Configuration::ones(5), 0, Budget(1));
        assert!(matches!(out, Outcome::Inconclusive { explored: 1 }));
    }

    #[test]
    fn already_concentrated() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let c = Configuration::concentrated(3, 2, 3);
        let out = decide(&g, &c, 2, Budget(0));
        assert_eq!(out.plan().map(|p| p.moves.len()), Some(0));
    }

    #[test]
    fn empty_target_is_searched() {
        // 1 cup at each end of P_3 and none in the middle: nothing can move.
        let g = graph(3, &[(0, 1), (1, 2)]);
        let c = Configuration::from_counts(vec![1, 0, 1]);
        assert_eq!(decide(&g, &c, 1, Budget::default()).decision(), Some(false));
    }

    #[test]
    fn c6_and_cube_are_stackable() {
        let c6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(stackable(&c6, Budget::default()).iter().all(|o| o.decision() == Some(true)));
        let q3: Vec<_> = (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v)
            .collect();
        let q3 = graph(8, &q3);
        assert!(stackable(&q3, Budget::default()).iter().all(|o| o.decision() == Some(true)));
    }
}

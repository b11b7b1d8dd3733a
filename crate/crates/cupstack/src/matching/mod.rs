//! Maximum matchings, the Gallai-Edmonds decomposition and maximum-weight
//! bipartite assignment.

mod blossom;
mod gallai_edmonds;
mod hungarian;

pub use blossom::{is_factor_critical, max_matching, max_matching_without, near_perfect_matching};
pub use gallai_edmonds::{gallai_edmonds, GallaiEdmonds};
pub use hungarian::{hungarian_max_weight, Assignment, WeightedBipartite};

use serde::{Serialize, Serializer};

use crate::error::{precondition, Error};
use crate::graph::SimpleGraph;

const UNMATCHED: usize = usize::MAX;

/// A set of vertex-disjoint edges, stored as a mate array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { mate: vec![UNMATCHED; n] }
    }

    /// Fails if two edges share a vertex or an edge is missing from `g`.
    pub fn from_edges(g: &SimpleGraph, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut m = Matching::empty(g.n());
        for &(u, v) in edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(precondition(format!("({u}, {v}) is not an edge")));
            }
            if m.mate[u] != UNMATCHED || m.mate[v] != UNMATCHED {
                return Err(precondition(format!("edges share a vertex at ({u}, {v})")));
            }
            m.join(u, v);
        }
        Ok(m)
    }

    pub(crate) fn join(&mut self, u: usize, v: usize) {
        self.mate[u] = v;
        self.mate[v] = u;
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        match self.mate[v] {
            UNMATCHED => None,
            u => Some(u),
        }
    }

    pub fn is_matched(&self, v: usize) -> bool {
        self.mate[v] != UNMATCHED
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|&&u| u != UNMATCHED).count() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len()).filter(|&u| self.mate[u] != UNMATCHED && u < self.mate[u]).map(|u| (u, self.mate[u])).collect()
    }

    pub fn is_valid_in(&self, g: &SimpleGraph) -> bool {
        self.mate.len() == g.n()
            && (0..g.n()).all(|u| match self.mate(u) {
                None => true,
                Some(v) => self.mate(v) == Some(u) && g.has_edge(u, v),
            })
    }

    pub fn saturates(&self, vertices: &[usize]) -> bool {
        vertices.iter().all(|&v| self.is_matched(v))
    }

    /// Copies the edges of `other`, whose vertex `i` is `map[i]` here.
    pub(crate) fn absorb(&mut self, other: &Matching, map: &[usize]) {
        for (u, v) in other.edges() {
            self.join(map[u], map[v]);
        }
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.edges().serialize(s)
    }
}

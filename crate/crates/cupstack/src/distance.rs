//! Shortest-path metrics.

use std::collections::VecDeque;

use crate::graph::{Graph, SimpleGraph};

/// Anything the move rule can be checked against.
pub trait Metric {
    fn n(&self) -> usize;
    fn dist(&self, u: usize, v: usize) -> usize;
}

/// Unreachable pairs in a disconnected graph.
pub const INFINITE: usize = usize::MAX;

/// All-pairs BFS distances, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &SimpleGraph) -> Self {
        let n = g.n();
        let mut data = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut data[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == u32::MAX {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, data }
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        match self.data[u * self.n + v] {
            u32::MAX => INFINITE,
            d => d as usize,
        }
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).map(move |v| self.get(u, v))
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.row(v).max().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    pub fn shell(&self, v: usize, k: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| self.get(v, w) == k).collect()
    }
}

impl Metric for DistanceMatrix {
    fn n(&self) -> usize {
        self.n
    }

    fn dist(&self, u: usize, v: usize) -> usize {
        self.get(u, v)
    }
}

impl Metric for Graph {
    fn n(&self) -> usize {
        SimpleGraph::n(self)
    }

    fn dist(&self, u: usize, v: usize) -> usize {
        self.distances().get(u, v)
    }
}

/// The `d`-cube on bitmask vertices; distance is Hamming distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hypercube {
    pub dim: u32,
}

impl Hypercube {
    pub fn new(dim: u32) -> Self {
        assert!(dim < usize::BITS, "cube dimension too large");
        Hypercube { dim }
    }
}

impl Metric for Hypercube {
    fn n(&self) -> usize {
        1usize << self.dim
    }

    fn dist(&self, u: usize, v: usize) -> usize {
        (u ^ v).count_ones() as usize
    }
}

impl<M: Metric + ?Sized> Metric for &M {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn dist(&self, u: usize, v: usize) -> usize {
        (**self).dist(u, v)
    }
}

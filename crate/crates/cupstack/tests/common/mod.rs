//! Test helpers shared by the integration suites.
#![allow(dead_code)]

use std::collections::HashSet;

use cupstack::{Graph, SimpleGraph};
use rand::Rng;
use rayon::prelude::*;

/// A graph on at most 11 vertices as adjacency bitmasks.
pub type Adj = Vec<u16>;

fn code(adj: &Adj, order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c <<= 1;
            if adj[order[i]] >> order[j] & 1 == 1 {
                c |= 1;
            }
        }
    }
    c
}

/// Stable colour refinement seeded by degree. Colours are assigned from
/// sorted signatures, so the result does not depend on vertex numbering.
fn refine(adj: &Adj) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = colour.iter().collect::<HashSet<_>>().len();
        colour = next;
        if distinct.len() == before {
            return colour;
        }
    }
}

fn permute_cells(cells: &mut [Vec<usize>], at: usize, order: &mut Vec<usize>, best: &mut u64, adj: &Adj) {
    if at == cells.len() {
        *best = (*best).max(code(adj, order));
        return;
    }
    let len = cells[at].len();
    // Heap's algorithm over this cell, recursing into the next one.
    let mut c = vec![0usize; len];
    let base = order.len();
    order.extend_from_slice(&cells[at]);
    permute_cells(cells, at + 1, order, best, adj);
    let mut i = 0;
    while i < len {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            order.swap(base + j, base + i);
            permute_cells(cells, at + 1, order, best, adj);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    order.truncate(base);
}

/// Canonical code: the largest upper-triangle code over orderings that list
/// colour classes in colour order.
pub fn canonical(adj: &Adj) -> u64 {
    let colour = refine(adj);
    let k = colour.iter().max().map_or(0, |&m| m + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (v, &c) in colour.iter().enumerate() {
        cells[c].push(v);
    }
    let mut best = 0;
    permute_cells(&mut cells, 0, &mut Vec::with_capacity(adj.len()), &mut best, adj);
    best
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending the previous level with a new vertex of nonzero degree
/// reaches every class.
pub fn connected_graphs(n: usize) -> Vec<Adj> {
    assert!((1..=10).contains(&n));
    let mut level: Vec<Adj> = vec![vec![0]];
    for size in 2..=n {
        let candidates: Vec<Vec<(u64, Adj)>> = level
            .par_iter()
            .map(|g| {
                (1u16..1 << (size - 1))
                    .map(|nbrs| {
                        let mut h = g.clone();
                        for (u, a) in h.iter_mut().enumerate() {
                            if nbrs >> u & 1 == 1 {
                                *a |= 1 << (size - 1);
                            }
                        }
                        h.push(nbrs);
                        (canonical(&h), h)
                    })
                    .collect()
            })
            .collect();
        let mut seen = HashSet::new();
        level = candidates.into_iter().flatten().filter(|(c, _)| seen.insert(*c)).map(|(_, h)| h).collect();
    }
    level
}

pub fn to_graph(adj: &Adj) -> Graph {
    let mut edges = Vec::new();
    for (u, &a) in adj.iter().enumerate() {
        for v in u + 1..adj.len() {
            if a >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(adj.len(), &edges).unwrap()
}

pub fn adjacency(g: &SimpleGraph) -> Adj {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u16, |a, &u| a | 1 << u)).collect()
}

/// Maximum matching size by exhaustive branching on the lowest vertex.
pub fn brute_matching_size(adj: &Adj, alive: u16) -> usize {
    if alive == 0 {
        return 0;
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    let mut best = brute_matching_size(adj, rest);
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        best = best.max(1 + brute_matching_size(adj, rest & !(1 << u)));
    }
    best
}

/// Whether some matching covers every vertex of `must` (all within 16
/// vertices), by branching on the lowest uncovered vertex of `must`.
pub fn brute_saturating(adj: &Adj, alive: u16, must: u16) -> bool {
    let need = must & alive;
    if need == 0 {
        return true;
    }
    let v = need.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if brute_saturating(adj, rest & !(1 << u), must) {
            return true;
        }
    }
    false
}

/// A connected random graph: a random spanning tree plus extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Any random graph, possibly disconnected.
pub fn random_simple<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

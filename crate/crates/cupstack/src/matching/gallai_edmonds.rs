use rayon::prelude::*;
use serde::Serialize;

use super::blossom::Blossom;
use super::{max_matching, Matching, UNMATCHED};
use crate::graph::SimpleGraph;

/// The `(I, A, Z)` structure of a graph's maximum matchings.
///
/// `I` holds the vertices some maximum matching misses, `A` their
/// neighbours outside `I`, and `Z` everything else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    /// Components of the subgraph induced by `I`, ordered by least vertex.
    #[serde(rename = "I")]
    pub inessential: Vec<Vec<usize>>,
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "Z")]
    pub z: Vec<usize>,
    /// The maximum matching the probes started from.
    #[serde(skip)]
    pub matching: Matching,
}

/// Vertex `v` is inessential iff a maximum matching of `g - v` is as large
/// as one of `g`. Starting from a maximum matching `M`, that holds when `v`
/// is free in `M`, or when its mate has an augmenting path in `g - v`.
pub fn gallai_edmonds(g: &SimpleGraph) -> GallaiEdmonds {
    let n = g.n();
    let matching = max_matching(g);
    let inessential: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|v| match matching.mate(v) {
            None => true,
            Some(u) => {
                let mut mate = matching.mate.clone();
                mate[u] = UNMATCHED;
                mate[v] = UNMATCHED;
                let mut active = vec![true; n];
                active[v] = false;
                Blossom::with_mate(g, active, mate).augment_from(u)
            }
        })
        .collect();
    let i_vertices: Vec<usize> = (0..n).filter(|&v| inessential[v]).collect();
    let inessential_components =
        g.induced(&i_vertices).components().into_iter().map(|c| c.into_iter().map(|i| i_vertices[i]).collect()).collect();
    let a: Vec<usize> =
        (0..n).filter(|&v| !inessential[v] && g.neighbors(v).iter().any(|&w| inessential[w])).collect();
    let mut in_a = vec![false; n];
    a.iter().for_each(|&v| in_a[v] = true);
    let z = (0..n).filter(|&v| !inessential[v] && !in_a[v]).collect();
    GallaiEdmonds { inessential: inessential_components, a, z, matching }
}

//! Deciding stackability onto a target of eccentricity two, and turning a
//! matching that covers the far shell into a plan.
//!
//! A target `r` with eccentricity two is stackable iff `G - r` has a matching
//! covering `N_2(r)`. Such a matching exists iff some maximum matching of
//! `G - r` covers it, and the maximum matchings are described by the
//! Gallai-Edmonds structure: `Z` is matched perfectly, every `A` vertex is
//! matched into a distinct `I` component, and each remaining component is
//! matched up to one vertex of our choice. Components lying entirely inside
//! `N_2(r)` must therefore receive an `A` partner, and a weighted bipartite
//! assignment finds partners for as many of them as possible.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{precondition, Error};
use crate::game::{Move, Plan};
use crate::graph::Graph;
use crate::matching::{
    gallai_edmonds, hungarian_max_weight, max_matching, near_perfect_matching, Matching, WeightedBipartite,
};

/// Intermediate data of a decision, kept for inspection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ecc2Audit {
    /// Components of the inessential vertices of `G - r`, in host numbering.
    pub components: Vec<Vec<usize>>,
    /// Components contained in the far shell; these must be matched to `A`.
    pub far_components: Vec<usize>,
    pub a: Vec<usize>,
    pub z: Vec<usize>,
    /// `(component index, a)` pairs that are edges of the contracted graph.
    pub contracted_edges: Vec<(usize, usize)>,
    /// Assignment weights, components by `A` padded with dummy columns.
    pub weights: Vec<Vec<i64>>,
    /// Component matched to each `A` vertex, aligned with `a`.
    pub assigned: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ecc2Witness {
    pub target: usize,
    pub decision: bool,
    /// A matching covering `N_2(r)`, present iff `decision`.
    pub matching: Option<Matching>,
    /// `None` when the target dominates the graph.
    pub audit: Option<Ecc2Audit>,
}

/// Decides whether the all-ones configuration stacks onto `r`.
pub fn ecc2_decide(g: &Graph, r: usize) -> Result<Ecc2Witness, Error> {
    if r >= g.n() {
        return Err(precondition(format!("target {r} out of range")));
    }
    let ecc = g.eccentricity(r);
    if ecc != 2 {
        return Err(precondition(format!("target {r} has eccentricity {ecc}, not 2")));
    }
    let n = g.n();
    let far: Vec<bool> = (0..n).map(|v| g.dist(r, v) == 2).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| v != r).collect();
    let sub = g.induced(&rest);
    let ge = gallai_edmonds(&sub);
    let host = |v: usize| rest[v];

    let mut m = Matching::empty(n);

    // Z has a perfect matching.
    let z_graph = sub.induced(&ge.z);
    let z_map: Vec<usize> = ge.z.iter().map(|&v| host(v)).collect();
    m.absorb(&max_matching(&z_graph), &z_map);

    let components: Vec<Vec<usize>> =
        ge.inessential.iter().map(|c| c.iter().map(|&v| host(v)).collect()).collect();
    let a: Vec<usize> = ge.a.iter().map(|&v| host(v)).collect();
    let k = components.len();
    let is_far: Vec<bool> = components.iter().map(|c| c.iter().all(|&v| far[v])).collect();

    let mut comp_of = vec![usize::MAX; n];
    for (i, c) in components.iter().enumerate() {
        c.iter().for_each(|&v| comp_of[v] = i);
    }
    let mut contracted_edges = Vec::new();
    for (j, &av) in a.iter().enumerate() {
        let mut seen: Vec<usize> = g.neighbors(av).iter().map(|&w| comp_of[w]).filter(|&c| c != usize::MAX).collect();
        seen.sort_unstable();
        seen.dedup();
        contracted_edges.extend(seen.into_iter().map(|c| (c, j)));
    }

    // Rows are components, columns are A followed by k - |A| dummies.
    let heavy = k as i64 + 1;
    let mut weights = vec![vec![0i64; k]; k];
    for &(c, j) in &contracted_edges {
        weights[c][j] = if is_far[c] { heavy } else { 1 };
    }
    let mut assigned = vec![usize::MAX; a.len()];
    let mut partner = vec![None; k];
    if !a.is_empty() {
        let inst = WeightedBipartite::new(weights.clone()).expect("square by construction");
        let sol = hungarian_max_weight(&inst);
        for (c, &j) in sol.right_of.iter().enumerate() {
            if j < a.len() && weights[c][j] > 0 {
                assigned[j] = c;
                partner[c] = Some(a[j]);
            }
        }
    }

    for (c, comp) in components.iter().enumerate() {
        let avoid = match partner[c] {
            Some(av) => {
                let y = *comp.iter().find(|&&v| g.has_edge(av, v)).expect("contracted edge has a host edge");
                m.join(av, y);
                y
            }
            None => comp.iter().copied().find(|&v| !far[v]).unwrap_or(comp[0]),
        };
        let local = g.induced(comp);
        let idx = comp.iter().position(|&v| v == avoid).unwrap();
        let near = near_perfect_matching(&local, idx).expect("inessential components are factor-critical");
        m.absorb(&near, comp);
    }

    let decision = (0..n).all(|v| !far[v] || m.is_matched(v));
    let audit = Ecc2Audit {
        far_components: (0..k).filter(|&c| is_far[c]).collect(),
        components,
        a,
        z: z_map,
        contracted_edges,
        weights,
        assigned,
    };
    Ok(Ecc2Witness { target: r, decision, matching: decision.then_some(m), audit: Some(audit) })
}

/// Every target of a graph of diameter at most two. Targets adjacent to
/// everything are decided directly.
pub fn diam2_decide(g: &Graph) -> Result<Vec<Ecc2Witness>, Error> {
    let d = g.diameter();
    if d > 2 {
        return Err(precondition(format!("graph has diameter {d}, more than 2")));
    }
    (0..g.n())
        .into_par_iter()
        .map(|r| {
            if g.eccentricity(r) <= 1 {
                Ok(Ecc2Witness { target: r, decision: true, matching: Some(Matching::empty(g.n())), audit: None })
            } else {
                ecc2_decide(g, r)
            }
        })
        .collect()
}

/// Stacks along a matching that covers `N_2(r)`.
///
/// Each matched edge with an endpoint `y` in `N_2(r)` moves its partner onto
/// `y`, then `y` jumps two to `r`; when both endpoints are far, `y` is the
/// larger one. All other vertices then move straight to `r`.
pub fn plan_from_matching(g: &Graph, r: usize, m: &Matching) -> Result<Plan, Error> {
    let n = g.n();
    if r >= n || m.n() != n || !m.is_valid_in(g) {
        return Err(precondition("matching is not a matching of the graph"));
    }
    if g.eccentricity(r) > 2 {
        return Err(precondition(format!("target {r} has eccentricity above 2")));
    }
    if m.is_matched(r) {
        return Err(precondition("the target must not be matched"));
    }
    let far = |v: usize| g.dist(r, v) == 2;
    if let Some(v) = (0..n).find(|&v| far(v) && !m.is_matched(v)) {
        return Err(precondition(format!("vertex {v} at distance 2 is not matched")));
    }
    let mut moves = Vec::with_capacity(n.saturating_sub(1));
    let mut done = vec![false; n];
    done[r] = true;
    for (u, v) in m.edges() {
        let (x, y) = match (far(u), far(v)) {
            (_, true) => (u, v),
            (true, false) => (v, u),
            (false, false) => continue,
        };
        moves.push(Move::new(x, y));
        moves.push(Move::new(y, r));
        done[x] = true;
        done[y] = true;
    }
    moves.extend((0..n).filter(|&v| !done[v]).map(|v| Move::new(v, r)));
    Ok(Plan::new(n, r, moves))
}

//! Checking stacking partitions: a cover of `V - r` by subgraphs that each
//! stack their share of the cups onto a staging vertex whose distance to the
//! target equals the share.

use crate::distance::{DistanceMatrix, Metric, INFINITE};
use crate::game::Configuration;
use crate::graph::{Graph, SimpleGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub vertices: Vec<usize>,
    /// Cups assigned to this part, aligned with `vertices`.
    pub cups: Vec<u64>,
    pub staging: usize,
    /// Subgraph edges; `None` means the subgraph induced by `vertices`.
    pub edges: Option<Vec<(usize, usize)>>,
}

impl Part {
    pub fn induced(vertices: Vec<usize>, cups: Vec<u64>, staging: usize) -> Self {
        Part { vertices, cups, staging, edges: None }
    }

    pub fn size(&self) -> u64 {
        self.cups.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackingPartition {
    pub target: usize,
    pub parts: Vec<Part>,
}

/// One part re-indexed to `0..vertices.len()`, ready for a feasibility check.
#[derive(Clone, Debug)]
pub struct PartBoard {
    pub vertices: Vec<usize>,
    pub metric: PartMetric,
    pub config: Configuration,
    pub staging: usize,
}

/// Distances inside a part, with every pair whose subgraph distance differs
/// from the host distance made unreachable. Moves between such pairs are
/// therefore never legal.
#[derive(Clone, Debug)]
pub struct PartMetric {
    n: usize,
    dist: Vec<usize>,
}

impl Metric for PartMetric {
    fn n(&self) -> usize {
        self.n
    }

    fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PartitionViolation {
    #[error("part {part}: {detail}")]
    Malformed { part: usize, detail: String },
    #[error("property 1: vertex {0} is not covered by any part")]
    Uncovered(usize),
    #[error("property 2: vertex {vertex} gets {assigned} cups from the parts but holds {held}")]
    CupMismatch { vertex: usize, assigned: u64, held: u64 },
    #[error("property 2: parts {first} and {second} both assign cups to vertex {vertex}")]
    Overlap { first: usize, second: usize, vertex: usize },
    #[error("property 3: part {part} holds {size} cups but its staging vertex is at distance {dist}")]
    StagingDistance { part: usize, size: u64, dist: usize },
    #[error("property 3: part {part} cannot stack onto its staging vertex")]
    Infeasible { part: usize },
    #[error("part {part}: feasibility check was inconclusive")]
    Inconclusive { part: usize },
}

/// Checks the four partition properties for configuration `c` on `g`.
///
/// `feasible` decides whether a part can stack its cups onto its staging
/// vertex; it returns `None` when it cannot tell. Moves whose subgraph
/// distance differs from the host distance are excluded by [`PartMetric`].
pub fn verify_partition<F>(
    g: &Graph,
    c: &Configuration,
    p: &StackingPartition,
    mut feasible: F,
) -> Result<(), PartitionViolation>
where
    F: FnMut(&PartBoard) -> Option<bool>,
{
    let n = g.n();
    let r = p.target;
    let mut covered = vec![false; n];
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut assigned = vec![0u64; n];
    let mut boards = Vec::with_capacity(p.parts.len());
    for (i, part) in p.parts.iter().enumerate() {
        let board = part_board(g, r, part).map_err(|detail| PartitionViolation::Malformed { part: i, detail })?;
        for (&v, &d) in part.vertices.iter().zip(&part.cups) {
            covered[v] = true;
            if d > 0 {
                if let Some(first) = owner[v] {
                    return Err(PartitionViolation::Overlap { first, second: i, vertex: v });
                }
                owner[v] = Some(i);
                assigned[v] += d;
            }
        }
        boards.push(board);
    }
    if let Some(v) = (0..n).find(|&v| v != r && !covered[v]) {
        return Err(PartitionViolation::Uncovered(v));
    }
    for v in (0..n).filter(|&v| v != r) {
        if assigned[v] != c.get(v) {
            return Err(PartitionViolation::CupMismatch { vertex: v, assigned: assigned[v], held: c.get(v) });
        }
    }
    for (i, (part, board)) in p.parts.iter().zip(&boards).enumerate() {
        let dist = g.dist(part.staging, r);
        if dist as u64 != part.size() {
            return Err(PartitionViolation::StagingDistance { part: i, size: part.size(), dist });
        }
        match feasible(board) {
            Some(true) => {}
            Some(false) => return Err(PartitionViolation::Infeasible { part: i }),
            None => return Err(PartitionViolation::Inconclusive { part: i }),
        }
    }
    Ok(())
}

fn part_board(g: &Graph, r: usize, part: &Part) -> Result<PartBoard, String> {
    let n = g.n();
    let k = part.vertices.len();
    if k == 0 {
        return Err("empty vertex set".into());
    }
    if part.cups.len() != k {
        return Err(format!("{} cup entries for {} vertices", part.cups.len(), k));
    }
    let mut index = vec![usize::MAX; n];
    for (i, &v) in part.vertices.iter().enumerate() {
        if v >= n {
            return Err(format!("vertex {v} out of range"));
        }
        if v == r {
            return Err("contains the target".into());
        }
        if index[v] != usize::MAX {
            return Err(format!("vertex {v} listed twice"));
        }
        index[v] = i;
    }
    let staging = index
        .get(part.staging)
        .copied()
        .filter(|&s| s != usize::MAX)
        .ok_or_else(|| format!("staging vertex {} not in the part", part.staging))?;
    let sub = match &part.edges {
        None => g.induced(&part.vertices),
        Some(edges) => {
            let mut h = SimpleGraph::empty(k);
            for &(u, v) in edges {
                let (iu, iv) = (index.get(u).copied(), index.get(v).copied());
                match (iu, iv) {
                    (Some(a), Some(b)) if a != usize::MAX && b != usize::MAX && g.has_edge(u, v) => {
                        h.add_edge(a, b).map_err(|e| e.to_string())?;
                    }
                    _ => return Err(format!("edge ({u}, {v}) is not a host edge inside the part")),
                }
            }
            h
        }
    };
    let local = DistanceMatrix::new(&sub);
    let mut dist = vec![INFINITE; k * k];
    for a in 0..k {
        for b in 0..k {
            let d = local.get(a, b);
            if d == g.dist(part.vertices[a], part.vertices[b]) {
                dist[a * k + b] = d;
            }
        }
    }
    Ok(PartBoard {
        vertices: part.vertices.clone(),
        metric: PartMetric { n: k, dist },
        config: Configuration::from_counts(part.cups.clone()),
        staging,
    })
}

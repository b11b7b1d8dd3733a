//! Named graph families: generators with vertex labels, and the planners
//! that stack them.

mod dense;
mod grid;
mod paths;

pub use dense::{kneser_plan, kneser_stackable, multipartite_decide, multipartite_plan, KneserReport};
pub use grid::{grid_vertex, plan_grid};
pub use paths::{
    plan_cycle, plan_dominating, plan_ham_ecc2, plan_path, plan_path_endpoint, plan_spider, stack_onto, stack_onto_end,
    tree_ecc2_decide,
};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error};
use crate::game::{Move, Plan};
use crate::graph::{Graph, SimpleGraph};

/// Largest cube the generator builds as an explicit graph.
pub const MAX_CUBE_GRAPH_DIM: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    /// Leg lengths; the root is vertex 0.
    Spider { legs: Vec<usize> },
    Complete { n: usize },
    Multipartite { parts: Vec<usize> },
    Kneser { m: usize, k: usize },
    Petersen,
    /// `m` columns by `k` rows.
    Grid { m: usize, k: usize },
    Cube { d: u32 },
    /// `k`-subsets of `[m]`, adjacent when they share exactly `s` elements.
    Johnson { m: usize, k: usize, s: usize },
}

impl FamilySpec {
    /// Builds a spec from a family name and its integer parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self, Error> {
        let want = |count: usize| {
            if params.len() == count {
                Ok(())
            } else {
                Err(precondition(format!("{name} takes {count} parameter(s), got {}", params.len())))
            }
        };
        let spec = match name {
            "path" => want(1).map(|_| FamilySpec::Path { n: params[0] }),
            "cycle" => want(1).map(|_| FamilySpec::Cycle { n: params[0] }),
            "spider" => Ok(FamilySpec::Spider { legs: params.to_vec() }),
            "complete" => want(1).map(|_| FamilySpec::Complete { n: params[0] }),
            "multipartite" => Ok(FamilySpec::Multipartite { parts: params.to_vec() }),
            "kneser" => want(2).map(|_| FamilySpec::Kneser { m: params[0], k: params[1] }),
            "petersen" => want(0).map(|_| FamilySpec::Petersen),
            "grid" => want(2).map(|_| FamilySpec::Grid { m: params[0], k: params[1] }),
            "cube" => want(1).map(|_| FamilySpec::Cube { d: params[0] as u32 }),
            "johnson" => want(3).map(|_| FamilySpec::Johnson { m: params[0], k: params[1], s: params[2] }),
            _ => Err(precondition(format!("unknown family `{name}`"))),
        }?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let fail = |msg: String| Err(precondition(msg));
        match self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if *n == 0 => fail("need at least one vertex".into()),
            FamilySpec::Cycle { n } if *n < 3 => fail("a cycle needs n >= 3".into()),
            FamilySpec::Spider { legs } if legs.is_empty() || legs.contains(&0) => {
                fail("a spider needs at least one leg, each of length >= 1".into())
            }
            FamilySpec::Multipartite { parts } if parts.len() < 2 || parts.contains(&0) => {
                fail("a complete multipartite graph needs at least two nonempty parts".into())
            }
            FamilySpec::Kneser { m, k } if *k == 0 || *m < 2 * k + 1 => {
                fail(format!("Kneser graphs need k >= 1 and m >= 2k + 1, got m={m}, k={k}"))
            }
            FamilySpec::Grid { m, k } if *m == 0 || *k == 0 => fail("grid dimensions must be positive".into()),
            FamilySpec::Cube { d } if *d > MAX_CUBE_GRAPH_DIM => {
                fail(format!("cube graphs are generated up to d = {MAX_CUBE_GRAPH_DIM}"))
            }
            FamilySpec::Johnson { m, k, s } if *k == 0 || k > m || s >= k => {
                fail(format!("Johnson graphs need 1 <= k <= m and s < k, got m={m}, k={k}, s={s}"))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Spider { .. } => "spider",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Multipartite { .. } => "multipartite",
            FamilySpec::Kneser { .. } => "kneser",
            FamilySpec::Petersen => "petersen",
            FamilySpec::Grid { .. } => "grid",
            FamilySpec::Cube { .. } => "cube",
            FamilySpec::Johnson { .. } => "johnson",
        }
    }
}

/// A generated graph with its spec and one label per vertex.
#[derive(Clone, Debug)]
pub struct Family {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub labels: Vec<String>,
}

/// The sidecar written next to a generated graph file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelFile {
    #[serde(flatten)]
    pub spec: FamilySpec,
    pub labels: Vec<String>,
}

/// `k`-subsets of `{1, ..., m}` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    (1..=m).combinations(k).collect()
}

fn subset_label(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().join(","))
}

fn subset_graph(m: usize, k: usize, adjacent: impl Fn(usize) -> bool) -> (SimpleGraph, Vec<String>) {
    let sets = subsets(m, k);
    let masks: Vec<u64> = sets.iter().map(|s| s.iter().fold(0u64, |acc, &e| acc | 1 << (e - 1))).collect();
    let mut g = SimpleGraph::empty(sets.len());
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if adjacent((masks[i] & masks[j]).count_ones() as usize) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    (g, sets.iter().map(|s| subset_label(s)).collect())
}

pub fn generate(spec: &FamilySpec) -> Result<Family, Error> {
    spec.validate()?;
    let index_labels = |n: usize| (0..n).map(|v| v.to_string()).collect::<Vec<_>>();
    let (g, labels) = match spec {
        FamilySpec::Path { n } => {
            let e: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            (SimpleGraph::from_edges(*n, &e)?, index_labels(*n))
        }
        FamilySpec::Cycle { n } => {
            let e: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            (SimpleGraph::from_edges(*n, &e)?, index_labels(*n))
        }
        FamilySpec::Spider { legs } => {
            let n = 1 + legs.iter().sum::<usize>();
            let mut g = SimpleGraph::empty(n);
            let mut labels = vec!["root".to_string(); n];
            for (i, leg) in paths::spider_legs(legs).iter().enumerate() {
                let mut prev = 0;
                for (j, &v) in leg.iter().enumerate() {
                    g.add_edge(prev, v)?;
                    labels[v] = format!("leg{}.{}", i + 1, j + 1);
                    prev = v;
                }
            }
            (g, labels)
        }
        FamilySpec::Complete { n } => {
            let e: Vec<_> = (0..*n).tuple_combinations().collect();
            (SimpleGraph::from_edges(*n, &e)?, index_labels(*n))
        }
        FamilySpec::Multipartite { parts } => {
            let part_of: Vec<usize> = parts.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat(i).take(a)).collect();
            let n = part_of.len();
            let e: Vec<_> = (0..n).tuple_combinations().filter(|&(u, v)| part_of[u] != part_of[v]).collect();
            let mut within = vec![0; parts.len()];
            let labels = part_of
                .iter()
                .map(|&p| {
                    within[p] += 1;
                    format!("p{}.{}", p + 1, within[p])
                })
                .collect();
            (SimpleGraph::from_edges(n, &e)?, labels)
        }
        FamilySpec::Kneser { m, k } => subset_graph(*m, *k, |common| common == 0),
        FamilySpec::Petersen => subset_graph(5, 2, |common| common == 0),
        FamilySpec::Johnson { m, k, s } => subset_graph(*m, *k, |common| common == *s),
        FamilySpec::Grid { m, k } => {
            let mut g = SimpleGraph::empty(m * k);
            let mut labels = Vec::with_capacity(m * k);
            for y in 0..*k {
                for x in 0..*m {
                    let v = grid_vertex(*m, x, y);
                    if x + 1 < *m {
                        g.add_edge(v, v + 1)?;
                    }
                    if y + 1 < *k {
                        g.add_edge(v, v + m)?;
                    }
                    labels.push(format!("({x},{y})"));
                }
            }
            (g, labels)
        }
        FamilySpec::Cube { d } => {
            let n = 1usize << d;
            let mut g = SimpleGraph::empty(n);
            for u in 0..n {
                for b in 0..*d {
                    let v = u ^ (1 << b);
                    if u < v {
                        g.add_edge(u, v)?;
                    }
                }
            }
            let labels = (0..n).map(|u| if *d == 0 { "0".into() } else { format!("{u:0w$b}", w = *d as usize) }).collect();
            (g, labels)
        }
    };
    Ok(Family { spec: spec.clone(), graph: Graph::try_from(g)?, labels })
}

/// What a family planner says about one target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDecision {
    Stackable(Plan),
    NotStackable,
    /// The family has no planner for this target.
    Unsupported(String),
    /// A case the theory leaves open.
    Open(String),
}

/// Runs the planner that belongs to `spec` on target `r`.
pub fn plan_for(family: &Family, r: usize) -> Result<FamilyDecision, Error> {
    let n = family.graph.n();
    if r >= n {
        return Err(precondition(format!("target {r} out of range")));
    }
    let ok = |p: Plan| Ok(FamilyDecision::Stackable(p));
    match &family.spec {
        FamilySpec::Path { n } => ok(plan_path(*n, r)?),
        FamilySpec::Cycle { n } => ok(plan_cycle(*n, r)?),
        FamilySpec::Spider { legs } if r == 0 => ok(plan_spider(legs, 0)?),
        FamilySpec::Spider { .. } => Ok(FamilyDecision::Unsupported("spider plans only target the root".into())),
        FamilySpec::Complete { .. } => ok(plan_dominating(&family.graph, r)?),
        FamilySpec::Multipartite { parts } => Ok(match multipartite_plan(parts, r)? {
            Some(p) => FamilyDecision::Stackable(p),
            None => FamilyDecision::NotStackable,
        }),
        FamilySpec::Kneser { m, k } => kneser_plan(*m, *k, r),
        FamilySpec::Petersen => kneser_plan(5, 2, r),
        FamilySpec::Grid { m, k } => ok(plan_grid(*m, *k, r % m, r / m)?),
        FamilySpec::Cube { d } => {
            // Translate the plan onto 0 by the automorphism v -> v xor r.
            let base = crate::cube::plan_cube(*d)?;
            if !base.complete() {
                return Ok(FamilyDecision::Open(format!("no complete plan for Q^{d}")));
            }
            let moves = base.plan.moves.iter().map(|mv| Move::new(mv.from ^ r, mv.to ^ r)).collect();
            ok(Plan::new(n, r, moves))
        }
        FamilySpec::Johnson { .. } => Ok(FamilyDecision::Unsupported("no planner for Johnson graphs".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(name: &str, params: &[usize]) -> Family {
        generate(&FamilySpec::parse(name, params).unwrap()).unwrap()
    }

    #[test]
    fn sizes() {
        let g = gen("grid", &[9, 8]).graph;
        assert_eq!((g.n(), g.edge_count()), (72, 127));
        let p = gen("kneser", &[5, 2]).graph;
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(gen("petersen", &[]).graph, p);
        let s = gen("spider", &[1, 2, 2]);
        assert_eq!(s.graph.n(), 6);
        assert_eq!(s.labels[3], "leg2.2");
        let q = gen("cube", &[4]).graph;
        assert!((0..16).all(|u| (0..16).all(|v| q.dist(u, v) == (u ^ v).count_ones() as usize)));
    }

    #[test]
    fn johnson_5_4_3() {
        // Any two 4-subsets of [5] share three elements, so this is K_5.
        let j = gen("johnson", &[5, 4, 3]);
        assert_eq!(j.graph.n(), 5);
        assert_eq!(j.graph.edge_count(), 10);
        assert_eq!(j.labels[0], "{1,2,3,4}");
    }

    #[test]
    fn kneser_diameters() {
        assert_eq!(gen("kneser", &[8, 3]).graph.diameter(), 2);
        assert_eq!(gen("kneser", &[7, 3]).graph.diameter(), 3);
    }

    #[test]
    fn bad_parameters() {
        assert!(FamilySpec::parse("kneser", &[4, 2]).is_err());
        assert!(FamilySpec::parse("cycle", &[2]).is_err());
        assert!(FamilySpec::parse("grid", &[3]).is_err());
        assert!(FamilySpec::parse("wheel", &[3]).is_err());
        assert!(generate(&FamilySpec::Johnson { m: 4, k: 2, s: 1 }).is_ok());
        assert!(generate(&FamilySpec::Johnson { m: 4, k: 2, s: 0 }).is_err());
    }

    #[test]
    fn label_file_round_trip() {
        let f = gen("multipartite", &[2, 1]);
        let file = LabelFile { spec: f.spec.clone(), labels: f.labels.clone() };
        let json = serde_json::to_string(&file).unwrap();
        assert_eq!(json, r#"{"family":"multipartite","parts":[2,1],"labels":["p1.1","p1.2","p2.1"]}"#);
        assert_eq!(serde_json::from_str::<LabelFile>(&json).unwrap(), file);
    }
}

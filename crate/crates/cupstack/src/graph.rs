//! Undirected simple graphs, the text file format and vertex labels.

use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::distance::DistanceMatrix;
use crate::error::{Error, ParseError};

/// A simple undirected graph on vertices `0..n`, possibly disconnected.
///
/// Adjacency lists are kept sorted, so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns `true` if the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, Error> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `keep`. Vertex `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edge in range");
                }
            }
        }
        g
    }
}

/// A connected simple graph with a lazily computed distance matrix.
#[derive(Debug)]
pub struct Graph {
    inner: SimpleGraph,
    dist: OnceLock<DistanceMatrix>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph { inner: self.inner.clone(), dist: OnceLock::new() }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

impl Eq for Graph {}

impl std::ops::Deref for Graph {
    type Target = SimpleGraph;

    fn deref(&self) -> &SimpleGraph {
        &self.inner
    }
}

impl TryFrom<SimpleGraph> for Graph {
    type Error = Error;

    fn try_from(g: SimpleGraph) -> Result<Self, Error> {
        if g.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let comps = g.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected { components: comps.len() });
        }
        Ok(Graph { inner: g, dist: OnceLock::new() })
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        SimpleGraph::from_edges(n, edges)?.try_into()
    }

    pub fn as_simple(&self) -> &SimpleGraph {
        &self.inner
    }

    pub fn into_simple(self) -> SimpleGraph {
        self.inner
    }

    /// All-pairs shortest path distances, computed on first use.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| DistanceMatrix::new(&self.inner))
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.distances().get(u, v)
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.distances().eccentricity(v)
    }

    pub fn diameter(&self) -> usize {
        self.distances().diameter()
    }

    /// Vertices at exactly distance `k` from `v`, ascending.
    pub fn shell(&self, v: usize, k: usize) -> Vec<usize> {
        self.distances().shell(v, k)
    }
}

/// Parses the line-oriented graph format.
///
/// ```text
/// # comment
/// n 4
/// e 0 1
/// e 1 2
/// ```
///
/// Blank lines and `#` comments are ignored, the first remaining line must
/// be the header, and the result must be connected.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut g: Option<SimpleGraph> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ParseError { line: line_no, message };
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let nums: Vec<&str> = tokens.collect();
        let parse_num = |s: &str| {
            s.parse::<usize>().map_err(|_| err(format!("expected a non-negative integer, found `{s}`")))
        };
        match (&mut g, tag) {
            (None, "n") => {
                if nums.len() != 1 {
                    return Err(err("header takes exactly one count".into()));
                }
                g = Some(SimpleGraph::empty(parse_num(nums[0])?));
            }
            (None, _) => return Err(err(format!("expected header `n <count>`, found `{line}`"))),
            (Some(_), "n") => return Err(err("duplicate header".into())),
            (Some(graph), "e") => {
                if nums.len() != 2 {
                    return Err(err("edge takes exactly two endpoints".into()));
                }
                let (u, v) = (parse_num(nums[0])?, parse_num(nums[1])?);
                graph.add_edge(u, v).map_err(|e| err(e.to_string()))?;
            }
            (Some(_), other) => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    let g = g.ok_or(ParseError { line: last_line.max(1), message: "missing header `n <count>`".into() })?;
    Graph::try_from(g).map_err(|e| ParseError { line: last_line.max(1), message: e.to_string() })
}

/// Writes a graph in the text format, edges in lexicographic order.
pub fn to_text(g: &SimpleGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    writeln!(out, "n {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Graphviz export. `labels` may be shorter than the vertex count.
pub fn to_dot(g: &SimpleGraph, labels: &[String]) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match labels.get(v) {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\"")).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

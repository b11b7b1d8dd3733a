//! Paths, cycles, spiders, dominating targets and Hamiltonian paths.

use crate::ecc2::plan_from_matching;
use crate::error::{precondition, Error};
use crate::game::{Move, Plan};
use crate::graph::Graph;
use crate::matching::Matching;

/// Stacks every vertex of `line` onto `line[0]`.
///
/// `line` must be a geodesic: its `i`-th and `j`-th vertices at distance
/// `|i - j|`. The last vertex is stacked onto itself recursively from the
/// other end, then jumps `len - 1` back to the start.
pub fn stack_onto_end(line: &[usize]) -> Vec<Move> {
    // Index map i -> start + sign * i on `line`, flipped at every level.
    let mut jumps = Vec::with_capacity(line.len().saturating_sub(1));
    let (mut start, mut sign, mut len) = (0isize, 1isize, line.len() as isize);
    while len >= 2 {
        let at = |i: isize| line[(start + sign * i) as usize];
        jumps.push(Move::new(at(len - 1), at(0)));
        start += sign * (len - 1);
        sign = -sign;
        len -= 1;
    }
    jumps.reverse();
    jumps
}

/// Stacks every vertex of the geodesic `line` onto `line[at]`: each side
/// goes onto its far end and jumps in.
pub fn stack_onto(line: &[usize], at: usize) -> Vec<Move> {
    let target = line[at];
    let mut moves = stack_onto_end(&line[..at]);
    if at > 0 {
        moves.push(Move::new(line[0], target));
    }
    let right: Vec<usize> = line[at + 1..].iter().rev().copied().collect();
    moves.extend(stack_onto_end(&right));
    if let Some(&far) = right.first() {
        moves.push(Move::new(far, target));
    }
    moves
}

/// `P_n` onto its endpoint 0, in exactly `n - 1` moves.
pub fn plan_path_endpoint(n: usize) -> Plan {
    let line: Vec<usize> = (0..n).collect();
    Plan::new(n, 0, stack_onto_end(&line))
}

pub fn plan_path(n: usize, r: usize) -> Result<Plan, Error> {
    if r >= n {
        return Err(precondition(format!("target {r} out of range for P_{n}")));
    }
    let line: Vec<usize> = (0..n).collect();
    Ok(Plan::new(n, r, stack_onto(&line, r)))
}

/// Removes `r` from `C_n` and stacks the two arcs, the longer one ending at
/// distance `n / 2`.
pub fn plan_cycle(n: usize, r: usize) -> Result<Plan, Error> {
    if n < 3 {
        return Err(precondition("a cycle needs at least 3 vertices"));
    }
    if r >= n {
        return Err(precondition(format!("target {r} out of range for C_{n}")));
    }
    let forward = n / 2;
    let backward = n - 1 - forward;
    let mut line: Vec<usize> = (1..=backward).rev().map(|i| (r + n - i) % n).collect();
    let at = line.len();
    line.push(r);
    line.extend((1..=forward).map(|i| (r + i) % n));
    Ok(Plan::new(n, r, stack_onto(&line, at)))
}

/// Vertex numbering of a spider: root 0, then each leg from the root out.
pub(crate) fn spider_legs(legs: &[usize]) -> Vec<Vec<usize>> {
    let mut next = 1;
    legs.iter()
        .map(|&len| {
            let leg: Vec<usize> = (next..next + len).collect();
            next += len;
            leg
        })
        .collect()
}

/// Each leg stacks onto its leaf, which then jumps to the root.
pub fn plan_spider(legs: &[usize], r: usize) -> Result<Plan, Error> {
    if legs.contains(&0) {
        return Err(precondition("spider legs must be nonempty"));
    }
    if r != 0 {
        return Err(precondition("spider plans only target the root"));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut moves = Vec::with_capacity(n - 1);
    for leg in spider_legs(legs) {
        let out: Vec<usize> = leg.iter().rev().copied().collect();
        moves.extend(stack_onto_end(&out));
        moves.push(Move::new(out[0], 0));
    }
    Ok(Plan::new(n, 0, moves))
}

/// A tree with `ecc(r) = 2` stacks onto `r` iff every neighbour of `r` has
/// degree at most 2, i.e. the tree is a spider rooted at `r`.
pub fn tree_ecc2_decide(g: &Graph, r: usize) -> Result<bool, Error> {
    if r >= g.n() {
        return Err(precondition(format!("target {r} out of range")));
    }
    if g.edge_count() + 1 != g.n() {
        return Err(precondition("not a tree"));
    }
    let ecc = g.eccentricity(r);
    if ecc != 2 {
        return Err(precondition(format!("target {r} has eccentricity {ecc}, not 2")));
    }
    Ok(g.neighbors(r).iter().all(|&v| g.degree(v) <= 2))
}

/// Every other vertex moves straight onto a target adjacent to all of them.
pub fn plan_dominating(g: &Graph, r: usize) -> Result<Plan, Error> {
    if r >= g.n() || g.degree(r) + 1 != g.n() {
        return Err(precondition(format!("vertex {r} does not dominate the graph")));
    }
    let moves = (0..g.n()).filter(|&v| v != r).map(|v| Move::new(v, r)).collect();
    Ok(Plan::new(g.n(), r, moves))
}

/// Plan for an eccentricity-two target from a Hamiltonian path.
///
/// The two pieces of the path on either side of `r` are matched along the
/// path, leaving out the vertex next to `r` when a piece has odd length.
pub fn plan_ham_ecc2(g: &Graph, r: usize, path: &[usize]) -> Result<Plan, Error> {
    let n = g.n();
    let mut seen = vec![false; n];
    if path.len() != n || path.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(precondition("not a permutation of the vertices"));
    }
    if let Some(w) = path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(precondition(format!("({}, {}) is not an edge", w[0], w[1])));
    }
    if r >= n || g.eccentricity(r) != 2 {
        return Err(precondition(format!("target {r} does not have eccentricity 2")));
    }
    let at = path.iter().position(|&v| v == r).unwrap();
    // Both pieces listed starting next to r.
    let before: Vec<usize> = path[..at].iter().rev().copied().collect();
    let after = &path[at + 1..];
    let mut pairs = Vec::new();
    for piece in [&before[..], after] {
        let skip = piece.len() % 2;
        pairs.extend(piece[skip..].chunks(2).map(|c| (c[0], c[1])));
    }
    let m = Matching::from_edges(g, &pairs)?;
    plan_from_matching(g, r, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::verify_plan;
    use crate::oracle::{self, Budget};
    use crate::Configuration;

    fn path_graph(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn pairs(p: &Plan) -> Vec<(usize, usize)> {
        p.moves.iter().map(|m| (m.from, m.to)).collect()
    }

    #[test]
    fn endpoint_recursion() {
        assert!(plan_path_endpoint(1).moves.is_empty());
        assert_eq!(pairs(&plan_path_endpoint(3)), vec![(1, 2), (2, 0)]);
        assert_eq!(pairs(&plan_path_endpoint(4)), vec![(2, 1), (1, 3), (3, 0)]);
        for n in 1..=10 {
            let p = plan_path_endpoint(n);
            assert_eq!(p.moves.len(), n - 1);
            assert!(verify_plan(&path_graph(n), &p).is_accept());
        }
    }

    #[test]
    fn oracle_agrees_paths_stack_onto_an_end() {
        for n in 1..=10 {
            let d = oracle::decide(&path_graph(n), &Configuration::ones(n), 0, Budget::default());
            assert_eq!(d.decision(), Some(true));
        }
    }

    #[test]
    fn path_middle() {
        let p = plan_path(5, 2).unwrap();
        assert_eq!(pairs(&p), vec![(1, 0), (0, 2), (3, 4), (4, 2)]);
        assert!(verify_plan(&path_graph(5), &p).is_accept());
    }

    #[test]
    fn cycles() {
        let p = plan_cycle(4, 0).unwrap();
        assert_eq!(p.moves.len(), 3);
        assert!(verify_plan(&cycle_graph(4), &p).is_accept());
        for n in 3..=12 {
            for r in 0..n {
                assert!(verify_plan(&cycle_graph(n), &plan_cycle(n, r).unwrap()).is_accept(), "C_{n} r={r}");
            }
        }
    }

    #[test]
    fn spider_root() {
        let legs = [1, 2, 2];
        let p = plan_spider(&legs, 0).unwrap();
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert!(verify_plan(&g, &p).is_accept());
        assert!(plan_spider(&legs, 1).is_err());
    }

    #[test]
    fn dominating() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(plan_dominating(&k4, 2).unwrap().moves.len(), 3);
        assert!(plan_dominating(&path_graph(3), 0).is_err());
    }

    #[test]
    fn hamiltonian_path_plans() {
        let c5 = cycle_graph(5);
        for r in 0..5 {
            let p = plan_ham_ecc2(&c5, r, &[0, 1, 2, 3, 4]).unwrap();
            assert!(verify_plan(&c5, &p).is_accept());
        }
        // K_4 minus the edge 0-2; vertex 0 has degree 2.
        let g = Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = plan_ham_ecc2(&g, 0, &[0, 1, 2, 3]).unwrap();
        assert!(verify_plan(&g, &p).is_accept());
        assert!(plan_ham_ecc2(&c5, 0, &[0, 2, 1, 3, 4]).is_err());
    }
}

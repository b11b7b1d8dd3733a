//! Grids `P_m x P_k`, vertex `(x, y)` numbered `y * m + x`.
//!
//! The target splits the grid into up to four quadrants that share it as a
//! corner. The interior of each quadrant (off the two axes through the
//! target) is cut into lines parallel to its longer side; each line stacks
//! onto the vertex at distance equal to its length, which then jumps to the
//! target. A square quadrant cannot place its last line that way, so that
//! line takes the far end of one axis with it. What remains of each of the
//! four axis rays is a straight line that stacks onto its far end.

use super::paths::{plan_path, stack_onto, stack_onto_end};
use crate::error::{precondition, Error};
use crate::game::{Move, Plan};

struct Quadrant {
    dx: isize,
    dy: isize,
    /// Columns and rows, both counting the axis through the target.
    width: usize,
    height: usize,
}

pub fn grid_vertex(m: usize, x: usize, y: usize) -> usize {
    y * m + x
}

pub fn plan_grid(m: usize, k: usize, x: usize, y: usize) -> Result<Plan, Error> {
    if m == 0 || k == 0 {
        return Err(precondition("grid dimensions must be positive"));
    }
    if x >= m || y >= k {
        return Err(precondition(format!("({x}, {y}) is outside the {m}x{k} grid")));
    }
    if k == 1 {
        return plan_path(m, x);
    }
    if m == 1 {
        return plan_path(k, y).map(|p| Plan::new(k, y, p.moves));
    }
    let r = grid_vertex(m, x, y);
    let at = |u: usize, v: usize, q: &Quadrant| {
        let gx = x as isize + q.dx * u as isize;
        let gy = y as isize + q.dy * v as isize;
        grid_vertex(m, gx as usize, gy as usize)
    };
    // Free rays: +x, -x, +y, -y.
    let mut ray = [m - 1 - x, x, k - 1 - y, y];
    let quadrants = [
        Quadrant { dx: 1, dy: 1, width: m - x, height: k - y },
        Quadrant { dx: -1, dy: 1, width: x + 1, height: k - y },
        Quadrant { dx: -1, dy: -1, width: x + 1, height: y + 1 },
        Quadrant { dx: 1, dy: -1, width: m - x, height: y + 1 },
    ];
    // A square quadrant takes the end of its vertical ray when it is the
    // first quadrant around that ray counterclockwise, else its horizontal
    // ray. Each ray is claimed at most once.
    let claims = [2usize, 1, 3, 0];
    let mut moves = Vec::with_capacity(m * k - 1);
    for (q, &claim) in quadrants.iter().zip(&claims) {
        let (w, h) = (q.width, q.height);
        if w < 2 || h < 2 {
            continue;
        }
        let rows = w > h || (w == h && claim >= 2);
        let (long, short) = if rows { (w, h) } else { (h, w) };
        let cell = |along: usize, across: usize| if rows { at(along, across, q) } else { at(across, along, q) };
        for across in 1..short {
            let mut line: Vec<usize> = (1..long).map(|along| cell(along, across)).collect();
            let mut staging = long - 1 - across;
            if staging == 0 {
                // Square quadrant, last line: borrow the end of the axis.
                line.insert(0, cell(0, across));
                staging = 1;
                ray[claim] -= 1;
            } else {
                staging -= 1;
            }
            moves.extend(stack_onto(&line, staging));
            moves.push(Move::new(line[staging], r));
        }
    }
    let dirs = [(1isize, 0isize), (-1, 0), (0, 1), (0, -1)];
    for (&(dx, dy), &len) in dirs.iter().zip(&ray) {
        let out: Vec<usize> = (1..=len as isize)
            .rev()
            .map(|i| grid_vertex(m, (x as isize + dx * i) as usize, (y as isize + dy * i) as usize))
            .collect();
        moves.extend(stack_onto_end(&out));
        if let Some(&far) = out.first() {
            moves.push(Move::new(far, r));
        }
    }
    Ok(Plan::new(m * k, r, moves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::game::verify_plan;

    #[test]
    fn all_targets_small_grids() {
        for m in 1..=7 {
            for k in 1..=7 {
                let g = generate(&FamilySpec::Grid { m, k }).unwrap().graph;
                for y in 0..k {
                    for x in 0..m {
                        let p = plan_grid(m, k, x, y).unwrap();
                        assert_eq!(p.moves.len(), m * k - 1);
                        let v = verify_plan(&g, &p);
                        assert!(v.is_accept(), "{m}x{k} at ({x},{y}): {v:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(plan_grid(3, 3, 3, 0).is_err());
    }
}

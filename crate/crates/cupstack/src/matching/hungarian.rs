use crate::error::{precondition, Error};

/// A square weight matrix; row `i` is left vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedBipartite {
    weights: Vec<Vec<i64>>,
}

impl WeightedBipartite {
    pub fn new(weights: Vec<Vec<i64>>) -> Result<Self, Error> {
        let n = weights.len();
        if weights.iter().any(|row| row.len() != n) {
            return Err(precondition("weight matrix must be square"));
        }
        Ok(WeightedBipartite { weights })
    }

    pub fn side(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, left: usize, right: usize) -> i64 {
        self.weights[left][right]
    }
}

/// `right_of[i]` is the right vertex matched to left vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub right_of: Vec<usize>,
    pub weight: i64,
}

/// Maximum-weight perfect matching by the potential-based Hungarian method,
/// `O(n^3)`.
pub fn hungarian_max_weight(inst: &WeightedBipartite) -> Assignment {
    let n = inst.side();
    if n == 0 {
        return Assignment { right_of: Vec::new(), weight: 0 };
    }
    // Minimise negated weights; rows and columns are 1-based, 0 is a sentinel.
    let cost = |i: usize, j: usize| -inst.weight(i - 1, j - 1);
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost(i0, j) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut right_of = vec![0; n];
    for j in 1..=n {
        right_of[row_of[j] - 1] = j - 1;
    }
    let weight = right_of.iter().enumerate().map(|(i, &j)| inst.weight(i, j)).sum();
    Assignment { right_of, weight }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(w: Vec<Vec<i64>>) -> i64 {
        hungarian_max_weight(&WeightedBipartite::new(w).unwrap()).weight
    }

    #[test]
    fn small_instances() {
        assert_eq!(solve(vec![vec![2, 1], vec![1, 2]]), 4);
        assert_eq!(solve(vec![vec![5]]), 5);
        assert_eq!(solve(vec![vec![1, 2, 3], vec![2, 4, 6], vec![3, 6, 9]]), 14);
        assert_eq!(solve(vec![]), 0);
    }

    #[test]
    fn assignment_is_a_permutation() {
        let a = hungarian_max_weight(&WeightedBipartite::new(vec![vec![0, 7, 1], vec![3, 0, 0], vec![0, 5, 2]]).unwrap());
        let mut seen = a.right_of.clone();
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1, 2]);
        assert_eq!(a.weight, 12);
    }

    #[test]
    fn rejects_ragged() {
        assert!(WeightedBipartite::new(vec![vec![1, 2], vec![3]]).is_err());
    }
}

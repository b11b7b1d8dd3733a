//! The revolving-door ordering of `k`-subsets: consecutive subsets, and the
//! last and first, differ by swapping one element.

use crate::error::{precondition, Error};

fn build(m: u32, k: u32) -> Vec<u64> {
    if k == 0 {
        return vec![0];
    }
    if k == m {
        return vec![(1u64 << m) - 1];
    }
    let mut out = build(m - 1, k);
    let top = 1u64 << (m - 1);
    out.extend(build(m - 1, k - 1).into_iter().rev().map(|s| s | top));
    out
}

fn binomial(m: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

/// All `k`-subsets of `[m]` as a Hamilton cycle of `J(m, k, k - 1)`.
pub fn revolving_door(m: u32, k: u32) -> Result<Vec<u64>, Error> {
    if k == 0 || m < k + 1 || m >= 64 {
        return Err(precondition(format!("need 1 <= k < m < 64, got m={m}, k={k}")));
    }
    if binomial(m as u64, k as u64) < 3 {
        return Err(precondition(format!("C({m},{k}) < 3 subsets do not form a cycle")));
    }
    Ok(build(m, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_cycle(seq: &[u64], k: u32) -> bool {
        (0..seq.len()).all(|i| (seq[i] & seq[(i + 1) % seq.len()]).count_ones() == k - 1)
    }

    #[test]
    fn small_cycles() {
        let c = revolving_door(5, 4).unwrap();
        assert_eq!(c.len(), 5);
        assert!(is_cycle(&c, 4));
        let c = revolving_door(6, 4).unwrap();
        assert_eq!(c.len(), 15);
        assert!(is_cycle(&c, 4));
        let mut c = revolving_door(9, 4).unwrap();
        assert!(is_cycle(&c, 4));
        c.sort_unstable();
        c.dedup();
        assert_eq!(c.len(), 126);
        assert!(c.iter().all(|s| s.count_ones() == 4));
    }

    #[test]
    fn degenerate() {
        assert!(revolving_door(4, 4).is_err());
        assert!(revolving_door(2, 1).is_err());
        assert!(revolving_door(3, 1).is_ok());
    }
}

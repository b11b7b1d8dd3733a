//! Symmetric chain decomposition of the subsets of `[n]` by bracketing.
//!
//! Subsets are bitmasks, bit `i` standing for element `i + 1`. Reading the
//! characteristic string left to right, each 0 opens a bracket that the next
//! free 1 closes. The unmatched positions always read `1...10...0`; the chain
//! through a set keeps the matched pairs fixed and slides that boundary.

use serde::Serialize;

use crate::error::{precondition, Error};

/// Unmatched positions of `set` as `(ones, zeros)`, each ascending.
fn unmatched(n: u32, set: u64) -> (Vec<u32>, Vec<u32>) {
    let mut open = Vec::new();
    let mut ones = Vec::new();
    for i in 0..n {
        if set >> i & 1 == 0 {
            open.push(i);
        } else if open.pop().is_none() {
            ones.push(i);
        }
    }
    (ones, open)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainDecomposition {
    pub n: u32,
    /// Each chain from its smallest set up.
    pub chains: Vec<Vec<u64>>,
}

pub fn scd(n: u32) -> ChainDecomposition {
    assert!(n < 64, "subsets are stored as 64-bit masks");
    let mut chains = Vec::new();
    for bottom in 0..1u64 << n {
        let (ones, zeros) = unmatched(n, bottom);
        if !ones.is_empty() {
            continue;
        }
        let mut chain = vec![bottom];
        let mut set = bottom;
        for &z in &zeros {
            set |= 1 << z;
            chain.push(set);
        }
        chains.push(chain);
    }
    ChainDecomposition { n, chains }
}

/// The set just below `set` on its chain, for `|set| > n / 2`.
pub fn phi(n: u32, set: u64) -> Result<u64, Error> {
    if 2 * set.count_ones() <= n {
        return Err(precondition(format!("|X| = {} is not above n/2 for n = {n}", set.count_ones())));
    }
    let (ones, _) = unmatched(n, set);
    let last = *ones.last().expect("a set above the middle has an unmatched 1");
    Ok(set & !(1 << last))
}

/// Elements of a subset mask, 1-based and ascending.
pub fn elements(set: u64) -> Vec<u32> {
    (0..64).filter(|&i| set >> i & 1 == 1).map(|i| i + 1).collect()
}

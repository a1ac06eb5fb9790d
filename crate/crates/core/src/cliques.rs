//! Exact clique counting.

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of `K_r` subgraphs of `g`, exact.
///
/// `r = 0` counts the empty clique once, `r = 1` counts vertices, `r = 2`
/// counts edges. Arithmetic is checked; overflow is reported, never wrapped
/// (for graphs within the 64-vertex capacity every count fits in a `u64`).
pub fn count_cliques(g: &Graph, r: usize) -> Result<u64> {
    match r {
        0 => Ok(1),
        1 => Ok(g.order() as u64),
        _ => count_in_mask(g.rows(), g.full_mask(), r),
    }
}

/// Number of `r`-cliques of the induced subgraph on `mask`.
///
/// Recursion with two shortcuts: a candidate set smaller than the remaining
/// demand is pruned, and a candidate set that already induces a clique
/// contributes a closed-form binomial.
pub fn count_in_mask(adj: &[u64], mask: u64, r: usize) -> Result<u64> {
    if r == 0 {
        return Ok(1);
    }
    if (mask.count_ones() as usize) < r {
        return Ok(0);
    }
    if is_clique(adj, mask) {
        return binomial(u64::from(mask.count_ones()), r as u64);
    }
    let mut total: u64 = 0;
    let mut cand = mask;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        // cliques whose lowest vertex is v: recurse on later common neighbors
        let sub = count_in_mask(adj, adj[v] & cand, r - 1)?;
        total = total
            .checked_add(sub)
            .ok_or(Error::Overflow("counting cliques"))?;
    }
    Ok(total)
}

/// Does `mask` induce a complete graph?
#[inline]
pub fn is_clique(adj: &[u64], mask: u64) -> bool {
    let want = mask.count_ones() - 1;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if (adj[v] & mask).count_ones() != want {
            return false;
        }
    }
    true
}

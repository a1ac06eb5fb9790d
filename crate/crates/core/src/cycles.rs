//! Exact circumference, longest path and Hamiltonian cycles via subset
//! dynamic programming over vertex masks.
//!
//! Cycles live inside single blocks, so the circumference of a graph is the
//! maximum over its 2-connected blocks. Each block is additionally shrunk by
//! false-twin reduction (an independent set of vertices with a common
//! neighborhood `N` can contribute at most `|N|` vertices to any cycle)
//! before the exponential DP runs, which keeps the large join-with-
//! independent-set constructions inside the feasible envelope.

use crate::blocks::blocks_of;
use crate::error::{Error, Result};
use crate::graph::{low_bits, Graph};

/// Default cap on the vertex count a single subset DP may process.
pub const DEFAULT_DP_LIMIT: usize = 24;

/// Length of a longest cycle of `g`; 0 when `g` is a forest.
pub fn circumference(g: &Graph) -> Result<usize> {
    circumference_with_limit(g, DEFAULT_DP_LIMIT)
}

/// As [`circumference`] with an explicit DP size limit.
pub fn circumference_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    let (blocks, _) = blocks_of(g);
    let mut best = 0;
    for &block in &blocks {
        if block.count_ones() < 3 {
            continue; // cut edges carry no cycle
        }
        let reduced = twin_reduce_for_cycles(g, block);
        let c = reduced.count_ones() as usize;
        if c > limit {
            return Err(Error::Capacity {
                what: "cycle DP block size (after twin reduction)",
                requested: c,
                limit,
            });
        }
        if c > best {
            let (sub, _) = g.induced_with_map(reduced);
            best = best.max(longest_cycle_local(sub.rows()));
        }
    }
    Ok(best)
}

/// Shrinks every independent false-twin class of the induced subgraph on
/// `mask` down to the size of its common neighborhood. Exact for cycle
/// lengths: a cycle enters and leaves the class only through the common
/// neighborhood, so it can use at most `|N|` class members.
fn twin_reduce_for_cycles(g: &Graph, mask: u64) -> u64 {
    let mut kept = mask;
    loop {
        let mut changed = false;
        let mut classes: Vec<(u64, u64)> = Vec::new(); // (neighborhood, members)
        let mut m = kept;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let nb = g.neighbors(v) & kept;
            match classes.iter_mut().find(|(key, _)| *key == nb) {
                Some((_, members)) => *members |= 1 << v,
                None => classes.push((nb, 1 << v)),
            }
        }
        for (nb, members) in classes {
            let allow = nb.count_ones();
            let have = members.count_ones();
            if have > allow {
                // drop the highest-index extras
                let mut drop = have - allow;
                let mut mm = members;
                let mut to_drop = 0u64;
                while drop > 0 {
                    let v = 63 - mm.leading_zeros();
                    to_drop |= 1 << v;
                    mm &= !(1u64 << v);
                    drop -= 1;
                }
                kept &= !to_drop;
                changed = true;
            }
        }
        if !changed {
            return kept;
        }
    }
}

/// Longest cycle of a compact-labeled graph, by a start-at-minimum-vertex
/// path DP. `dp[mask]` holds the possible end vertices of simple paths that
/// cover exactly `mask` and start at the lowest bit of `mask`.
fn longest_cycle_local(adj: &[u64]) -> usize {
    let c = adj.len();
    if c < 3 {
        return 0;
    }
    let mut dp = vec![0u64; 1 << c];
    for v in 0..c {
        dp[1 << v] = 1 << v;
    }
    let mut best = 0;
    for mask in 1usize..(1 << c) {
        if mask.count_ones() < 2 {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let mut ends = 0u64;
        let mut rest = (mask as u64) & !(1 << start);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if dp[mask & !(1 << v)] & adj[v] != 0 {
                ends |= 1 << v;
            }
        }
        dp[mask] = ends;
        if mask.count_ones() >= 3 && ends & adj[start] != 0 {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// A maximum-order path of `g` as a vertex sequence. Deterministic: among
/// optima the DP reconstruction always picks the lowest-index choice first.
pub fn longest_path(g: &Graph) -> Result<Vec<usize>> {
    longest_path_with_limit(g, DEFAULT_DP_LIMIT)
}

/// As [`longest_path`] with an explicit per-component DP size limit.
pub fn longest_path_with_limit(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    let mut best: Vec<usize> = Vec::new();
    for comp in g.components() {
        let c = comp.count_ones() as usize;
        if c <= best.len() {
            continue;
        }
        if c > limit {
            return Err(Error::Capacity {
                what: "path DP component size",
                requested: c,
                limit,
            });
        }
        let (sub, map) = g.induced_with_map(comp);
        let local = longest_path_local(sub.rows());
        if local.len() > best.len() {
            best = local.into_iter().map(|v| map[v]).collect();
        }
    }
    Ok(best)
}

/// Longest path of a compact-labeled graph, reconstructed.
/// `dp[mask]` = possible path ends over all paths covering exactly `mask`.
fn longest_path_local(adj: &[u64]) -> Vec<usize> {
    let c = adj.len();
    if c == 0 {
        return Vec::new();
    }
    let mut dp = vec![0u64; 1 << c];
    for v in 0..c {
        dp[1 << v] = 1 << v;
    }
    let mut best_mask = 1usize;
    for mask in 1usize..(1 << c) {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut ends = 0u64;
        let mut rest = mask as u64;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if dp[mask & !(1 << v)] & adj[v] != 0 {
                ends |= 1 << v;
            }
        }
        dp[mask] = ends;
        if ends != 0 && mask.count_ones() > best_mask.count_ones() {
            best_mask = mask;
        }
    }
    // walk back from the lowest-index end
    let mut mask = best_mask;
    let mut cur = dp[mask].trailing_zeros() as usize;
    let mut path = Vec::with_capacity(mask.count_ones() as usize);
    loop {
        path.push(cur);
        mask &= !(1 << cur);
        if mask == 0 {
            break;
        }
        cur = (dp[mask] & adj[cur]).trailing_zeros() as usize;
    }
    path.reverse();
    path
}

/// A Hamiltonian cycle of `g` as a vertex sequence, if one exists.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    hamiltonian_cycle_with_limit(g, DEFAULT_DP_LIMIT)
}

pub fn hamiltonian_cycle_with_limit(g: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let c = g.order();
    if c > limit {
        return Err(Error::Capacity {
            what: "Hamiltonian cycle DP size",
            requested: c,
            limit,
        });
    }
    if c < 3 {
        return Ok(None);
    }
    let adj = g.rows();
    let mut dp = vec![0u64; 1 << c];
    for v in 0..c {
        dp[1 << v] = 1 << v;
    }
    for mask in 1usize..(1 << c) {
        if mask.count_ones() < 2 || mask & 1 == 0 {
            continue; // only masks containing vertex 0 can complete the cycle
        }
        let mut ends = 0u64;
        let mut rest = (mask as u64) & !1;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if dp[mask & !(1 << v)] & adj[v] != 0 {
                ends |= 1 << v;
            }
        }
        dp[mask] = ends;
    }
    let full = low_bits(c) as usize;
    let closers = dp[full] & adj[0];
    if closers == 0 {
        return Ok(None);
    }
    // reconstruct 0 .. end, then the closing edge end-0 is implicit
    let mut cur = closers.trailing_zeros() as usize;
    let mut mask = full;
    let mut seq = Vec::with_capacity(c);
    while mask != 1 {
        seq.push(cur);
        mask &= !(1 << cur);
        cur = (dp[mask] & adj[cur]).trailing_zeros() as usize;
    }
    seq.push(0);
    seq.reverse();
    Ok(Some(seq))
}

/// Search-pruning primitive: with the edge `uv` present in `adj`, is there a
/// cycle of length at least `k` through `uv`? Exact; considers only the
/// component of `u` (callers restrict to the component touched by an edge
/// insertion). `scratch` is reused across calls.
pub(crate) fn has_cycle_at_least_through(
    adj: &[u64],
    comp: u64,
    u: usize,
    v: usize,
    k: usize,
    scratch: &mut Vec<u64>,
) -> bool {
    let c = comp.count_ones() as usize;
    if c < k {
        return false;
    }
    // compact relabel of the component
    let mut map = [0usize; 64];
    let mut local = [0u64; 64];
    let mut idx_of = [usize::MAX; 64];
    let mut m = comp;
    let mut i = 0;
    while m != 0 {
        let w = m.trailing_zeros() as usize;
        m &= m - 1;
        map[i] = w;
        idx_of[w] = i;
        i += 1;
    }
    for (li, &gw) in map[..c].iter().enumerate() {
        let mut row = adj[gw] & comp;
        let mut lrow = 0u64;
        while row != 0 {
            let gx = row.trailing_zeros() as usize;
            row &= row - 1;
            lrow |= 1 << idx_of[gx];
        }
        local[li] = lrow;
    }
    let (lu, lv) = (idx_of[u], idx_of[v]);
    let size = 1usize << c;
    scratch.clear();
    scratch.resize(size, 0);
    scratch[1 << lu] = 1 << lu;
    // dp over masks containing lu: ends of paths starting at lu
    for mask in 1usize..size {
        if mask & (1 << lu) == 0 || mask.count_ones() < 2 {
            continue;
        }
        let mut ends = 0u64;
        let mut rest = (mask as u64) & !(1 << lu);
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if scratch[mask & !(1 << w)] & local[w] != 0 {
                ends |= 1 << w;
            }
        }
        scratch[mask] = ends;
        if mask.count_ones() as usize >= k && ends & (1 << lv) != 0 {
            return true;
        }
    }
    false
}

//! Canonical codes for isomorph rejection: equitable partition refinement
//! plus exhaustive individualization over the refined cells, taking the
//! lexicographically least adjacency string over the explored labelings.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order cap for canonical codes. The search only dedups graphs at
/// or below the search capacity, which this covers.
pub const DEFAULT_CANON_LIMIT: usize = 12;

/// Canonical byte string: equal codes iff the graphs are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    canonical_code_with_limit(g, DEFAULT_CANON_LIMIT)
}

/// As [`canonical_code`] with an explicit order cap.
pub fn canonical_code_with_limit(g: &Graph, limit: usize) -> Result<Vec<u8>> {
    let n = g.order();
    if n > limit {
        return Err(Error::Capacity {
            what: "canonical code order",
            requested: n,
            limit,
        });
    }
    if n == 0 {
        return Ok(vec![0]);
    }
    // initial partition: one cell per degree value, ascending
    let mut by_degree: Vec<(usize, u64)> = Vec::new();
    for v in 0..n {
        let d = g.degree(v);
        match by_degree.iter_mut().find(|(deg, _)| *deg == d) {
            Some((_, cell)) => *cell |= 1 << v,
            None => by_degree.push((d, 1 << v)),
        }
    }
    by_degree.sort_by_key(|&(d, _)| d);
    let mut cells: Vec<u64> = by_degree.into_iter().map(|(_, c)| c).collect();
    refine(g, &mut cells);
    let mut best: Option<Vec<u8>> = None;
    search(g, cells, &mut best);
    Ok(best.expect("at least one labeling is explored"))
}

/// Convenience: isomorphism test through canonical codes.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let limit = a.order().max(DEFAULT_CANON_LIMIT);
    Ok(canonical_code_with_limit(a, limit)? == canonical_code_with_limit(b, limit)?)
}

/// Refines to the coarsest equitable partition: every vertex of a cell sees
/// the same number of neighbors in every cell. Subcells are ordered by their
/// count signatures, which keeps the ordering isomorphism-invariant.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let snapshot = cells.clone();
        let mut next: Vec<u64> = Vec::with_capacity(cells.len());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            // signature of v: neighbor counts against every current cell
            let mut groups: Vec<(Vec<u32>, u64)> = Vec::new();
            let mut m = cell;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let sig: Vec<u32> = snapshot
                    .iter()
                    .map(|&c| (g.neighbors(v) & c).count_ones())
                    .collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, members)) => *members |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            if groups.len() > 1 {
                changed = true;
                groups.sort_by(|a, b| a.0.cmp(&b.0));
            }
            next.extend(groups.into_iter().map(|(_, members)| members));
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn search(g: &Graph, cells: Vec<u64>, best: &mut Option<Vec<u8>>) {
    let target = cells.iter().position(|c| c.count_ones() > 1);
    let Some(t) = target else {
        let code = code_for_labeling(g, &cells);
        match best {
            Some(b) if *b <= code => {}
            _ => *best = Some(code),
        }
        return;
    };
    let cell = cells[t];
    let candidates = if is_interchangeable_cell(g, cell) {
        // every member is automorphic to every other: one branch suffices
        1u64 << cell.trailing_zeros()
    } else {
        cell
    };
    let mut m = candidates;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let mut child: Vec<u64> = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..t]);
        child.push(1 << v);
        child.push(cell & !(1u64 << v));
        child.extend_from_slice(&cells[t + 1..]);
        refine(g, &mut child);
        search(g, child, best);
    }
}

/// A cell whose members all share the same neighborhood outside the cell and
/// induce a clique or an independent set: any transposition inside it is an
/// automorphism.
fn is_interchangeable_cell(g: &Graph, cell: u64) -> bool {
    let mut outside: Option<u64> = None;
    let mut inside_degrees_ok = true;
    let size = cell.count_ones();
    let mut m = cell;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let out = g.neighbors(v) & !cell;
        match outside {
            Some(o) if o != out => return false,
            None => outside = Some(out),
            _ => {}
        }
        let din = (g.neighbors(v) & cell).count_ones();
        if din != 0 && din != size - 1 {
            inside_degrees_ok = false;
        }
    }
    inside_degrees_ok
}

/// Adjacency bits, upper triangle column-major, under the discrete labeling.
fn code_for_labeling(g: &Graph, cells: &[u64]) -> Vec<u8> {
    let n = cells.len();
    let perm: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
    let mut out = Vec::with_capacity(1 + n * (n - 1) / 2 / 8 + 1);
    out.push(n as u8);
    let mut acc = 0u8;
    let mut used = 0;
    for col in 1..n {
        for row in 0..col {
            acc <<= 1;
            if g.has_edge(perm[row], perm[col]) {
                acc |= 1;
            }
            used += 1;
            if used == 8 {
                out.push(acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(acc << (8 - used));
    }
    out
}

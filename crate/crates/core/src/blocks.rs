//! Block decomposition (maximal 2-connected subgraphs and cut-edges) via
//! Hopcroft–Tarjan lowpoint DFS.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The block decomposition of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Vertex mask per block, ordered by discovery.
    pub blocks: Vec<u64>,
    /// Mask of cut vertices.
    pub cut_vertices: u64,
    /// True when no block is a single edge.
    pub is_strict: bool,
}

impl BlockCutTree {
    /// Indices of blocks containing vertex `v`.
    pub fn blocks_containing(&self, v: usize) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| *b & (1 << v) != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Decomposes a connected graph of order >= 2 into its block-cut tree.
pub fn block_cut_decompose(g: &Graph) -> Result<BlockCutTree> {
    if g.order() < 2 {
        return Err(Error::Precondition(format!(
            "block decomposition needs order >= 2, got {}",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Precondition(
            "block decomposition needs a connected graph".into(),
        ));
    }
    let (blocks, cut_vertices) = blocks_of(g);
    let is_strict = blocks.iter().all(|b| b.count_ones() != 2);
    Ok(BlockCutTree {
        blocks,
        cut_vertices,
        is_strict,
    })
}

/// Blocks and cut vertices of an arbitrary graph (all components; isolated
/// vertices yield no block).
pub(crate) fn blocks_of(g: &Graph) -> (Vec<u64>, u64) {
    let n = g.order();
    let mut state = Dfs {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cut_vertices: 0,
    };
    for root in 0..n {
        if state.disc[root] == usize::MAX {
            let children = state.visit(root, usize::MAX);
            // a DFS root is a cut vertex iff it has >= 2 tree children
            if children >= 2 {
                state.cut_vertices |= 1 << root;
            } else {
                state.cut_vertices &= !(1u64 << root);
            }
        }
    }
    (state.blocks, state.cut_vertices)
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<u64>,
    cut_vertices: u64,
}

impl Dfs<'_> {
    /// Returns the number of DFS tree children of `v`. Recursion depth is
    /// bounded by the 64-vertex capacity.
    fn visit(&mut self, v: usize, parent: usize) -> usize {
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        let mut children = 0;
        let mut cand = self.g.neighbors(v);
        while cand != 0 {
            let to = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if to == parent {
                continue;
            }
            if self.disc[to] == usize::MAX {
                self.edge_stack.push((v, to));
                children += 1;
                self.visit(to, v);
                self.low[v] = self.low[v].min(self.low[to]);
                if self.low[to] >= self.disc[v] {
                    // v separates the subtree at `to`: pop one block
                    let mut mask = 0u64;
                    while let Some(&(a, b)) = self.edge_stack.last() {
                        if self.disc[a] >= self.disc[to] {
                            mask |= (1 << a) | (1 << b);
                            self.edge_stack.pop();
                        } else {
                            break;
                        }
                    }
                    // the (v, to) tree edge itself
                    if let Some(&(a, b)) = self.edge_stack.last() {
                        if (a, b) == (v, to) {
                            self.edge_stack.pop();
                        }
                    }
                    mask |= (1 << v) | (1 << to);
                    self.blocks.push(mask);
                    self.cut_vertices |= 1 << v; // provisional for roots, fixed by caller
                }
            } else if self.disc[to] < self.disc[v] {
                self.edge_stack.push((v, to));
                self.low[v] = self.low[v].min(self.disc[to]);
            }
        }
        children
    }
}

/// Is `g` 2-connected (order >= 3, connected, no cut vertex)?
pub fn is_biconnected(g: &Graph) -> bool {
    if g.order() < 3 || !g.is_connected() {
        return false;
    }
    let (blocks, _) = blocks_of(g);
    blocks.len() == 1 && blocks[0] == g.full_mask()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let two = Graph::complete(3).unwrap().replicate(2).unwrap();
        let bowtie = two.identify(0, 3).unwrap();
        let t = block_cut_decompose(&bowtie).unwrap();
        assert_eq!(t.blocks.len(), 2);
        assert_eq!(t.cut_vertices.count_ones(), 1);
        assert!(t.is_strict);
    }

    #[test]
    fn path_gives_edge_blocks() {
        let p3 = Graph::path(3).unwrap();
        let t = block_cut_decompose(&p3).unwrap();
        assert_eq!(t.blocks.len(), 2);
        assert_eq!(t.cut_vertices, 0b010);
        assert!(!t.is_strict);
    }

    #[test]
    fn cycle_is_one_block() {
        let c6 = Graph::cycle(6).unwrap();
        let t = block_cut_decompose(&c6).unwrap();
        assert_eq!(t.blocks, vec![c6.full_mask()]);
        assert_eq!(t.cut_vertices, 0);
        assert!(t.is_strict);
    }

    #[test]
    fn preconditions() {
        assert!(block_cut_decompose(&Graph::independent(1).unwrap()).is_err());
        assert!(block_cut_decompose(&Graph::independent(3).unwrap()).is_err());
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let g = Graph::from_edges(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 0), // triangle
                (2, 3), // bridge
                (3, 4),
                (4, 5),
                (5, 3), // triangle
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 6), // bridge + triangle
            ],
        )
        .unwrap();
        let t = block_cut_decompose(&g).unwrap();
        for (u, v) in g.edges() {
            let containing = t
                .blocks
                .iter()
                .filter(|b| {
                    let (sub, map) = g.induced_with_map(**b);
                    map.iter()
                        .position(|&x| x == u)
                        .zip(map.iter().position(|&x| x == v))
                        .map(|(lu, lv)| sub.has_edge(lu, lv))
                        .unwrap_or(false)
                })
                .count();
            assert_eq!(containing, 1, "edge ({u},{v})");
        }
        // sum(|B| - 1) = order - 1 for connected graphs
        let s: usize = t.blocks.iter().map(|b| b.count_ones() as usize - 1).sum();
        assert_eq!(s, g.order() - 1);
        assert!(!t.is_strict);
        assert_eq!(t.cut_vertices.count_ones(), 4); // 2, 3, 5, 6
    }

    #[test]
    fn biconnectivity() {
        assert!(is_biconnected(&Graph::cycle(5).unwrap()));
        assert!(is_biconnected(&Graph::complete(4).unwrap()));
        assert!(!is_biconnected(&Graph::path(4).unwrap()));
        assert!(!is_biconnected(&Graph::complete(2).unwrap()));
        let two = Graph::complete(3).unwrap().replicate(2).unwrap();
        assert!(!is_biconnected(&two.identify(0, 3).unwrap()));
    }
}

//! Seeded random instance generators for the property checks. A generator
//! is a pure function of its seed: identical seeds give identical graphs.

use crate::blocks::{block_cut_decompose, is_biconnected, BlockCutTree};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// What to generate. Bounds ride along with the kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    /// A graph on `n` vertices that is free for `(k, s)`, by rejection.
    FreeGraph { n: usize, k: usize, s: usize },
    /// A strict block tree whose blocks are odd cliques or odd cycles of
    /// order 3..=9, at most `max_blocks` of them, total order `<= max_order`.
    BlockTree { max_blocks: usize, max_order: usize },
    /// A 2-connected graph on exactly `n` vertices.
    TwoConnected { n: usize },
}

/// A generated instance; the block tree rides along when the kind builds one.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub block_tree: Option<BlockCutTree>,
}

/// Generates one instance, deterministically from `seed`.
pub fn random_instance(kind: InstanceKind, seed: u64) -> Result<Instance> {
    match kind {
        InstanceKind::FreeGraph { n, k, s } => Ok(Instance {
            graph: random_free_graph(seed, n, k, s)?,
            block_tree: None,
        }),
        InstanceKind::BlockTree {
            max_blocks,
            max_order,
        } => {
            let (graph, tree) = random_block_tree(seed, max_blocks, max_order)?;
            Ok(Instance {
                graph,
                block_tree: Some(tree),
            })
        }
        InstanceKind::TwoConnected { n } => Ok(Instance {
            graph: random_two_connected(seed, n)?,
            block_tree: None,
        }),
    }
}

fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("n within capacity");
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Rejection-samples a free graph: edge probability decays after every
/// rejection, so the loop terminates fast even for tight `(k, s)`.
pub fn random_free_graph(seed: u64, n: usize, k: usize, s: usize) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::Capacity {
            what: "free-graph order",
            requested: n,
            limit: MAX_ORDER,
        });
    }
    if k < 3 {
        return Err(Error::Precondition(format!("need k >= 3, got k={k}")));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut p = 0.5;
    loop {
        let g = random_graph(&mut rng, n, p);
        match crate::is_free(&g, k, s) {
            Ok(true) => return Ok(g),
            Ok(false) | Err(Error::Capacity { .. }) => {}
            Err(e) => return Err(e),
        }
        p = (p * 0.85).max(0.005);
    }
}

/// Builds a strict block tree: odd cliques and odd cycles (orders 3, 5, 7,
/// 9) glued one at a time at uniformly chosen attachment vertices.
pub fn random_block_tree(
    seed: u64,
    max_blocks: usize,
    max_order: usize,
) -> Result<(Graph, BlockCutTree)> {
    if max_order < 3 {
        return Err(Error::Precondition(format!(
            "block trees need max_order >= 3, got {max_order}"
        )));
    }
    if max_order > MAX_ORDER {
        return Err(Error::Capacity {
            what: "block-tree order",
            requested: max_order,
            limit: MAX_ORDER,
        });
    }
    let max_blocks = max_blocks.clamp(1, 6);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let sizes = [3usize, 5, 7, 9];
    let g = loop {
        let count = rng.random_range(1..=max_blocks);
        let mut g = random_block(&mut rng, &sizes);
        let mut ok = g.order() <= max_order;
        for _ in 1..count {
            if !ok {
                break;
            }
            let block = random_block(&mut rng, &sizes);
            if g.order() + block.order() - 1 > max_order {
                ok = false;
                break;
            }
            let attach = rng.random_range(0..g.order());
            let merged = g.union(&block)?;
            g = merged.identify(attach, g.order())?;
        }
        if ok {
            break g;
        }
    };
    let tree = block_cut_decompose(&g)?;
    Ok((g, tree))
}

fn random_block<R: Rng>(rng: &mut R, sizes: &[usize]) -> Graph {
    let size = sizes[rng.random_range(0..sizes.len())];
    if rng.random_bool(0.5) {
        Graph::complete(size).expect("size within capacity")
    } else {
        Graph::cycle(size).expect("size within capacity")
    }
}

/// Rejection-samples a 2-connected graph on exactly `n >= 3` vertices.
pub fn random_two_connected(seed: u64, n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "2-connected graphs need n >= 3, got {n}"
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::Capacity {
            what: "2-connected order",
            requested: n,
            limit: MAX_ORDER,
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut p = 0.5;
    loop {
        let g = random_graph(&mut rng, n, p);
        if is_biconnected(&g) {
            return Ok(g);
        }
        // densify: sparse samples are the usual rejection cause
        p = (p * 1.1).min(0.95);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = random_block_tree(42, 6, 30).unwrap();
        let b = random_block_tree(42, 6, 30).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1.blocks, b.1.blocks);
        let fa = random_free_graph(42, 10, 5, 3).unwrap();
        let fb = random_free_graph(42, 10, 5, 3).unwrap();
        assert_eq!(fa, fb);
        assert_ne!(
            random_free_graph(42, 10, 5, 3).unwrap(),
            random_free_graph(43, 10, 5, 3).unwrap()
        );
    }

    #[test]
    fn free_graphs_are_free() {
        for seed in 0..25 {
            let g = random_free_graph(seed, 10, 5, 3).unwrap();
            assert!(crate::is_free(&g, 5, 3).unwrap());
        }
    }

    #[test]
    fn block_trees_are_strict_with_small_odd_blocks() {
        for seed in 0..25 {
            let (g, tree) = random_block_tree(seed, 6, 40).unwrap();
            assert!(g.order() <= 40);
            assert!(tree.is_strict);
            assert!(tree.blocks.len() <= 6);
            for b in &tree.blocks {
                let size = b.count_ones() as usize;
                assert!(size % 2 == 1 && (3..=9).contains(&size));
            }
        }
    }

    #[test]
    fn two_connected_instances_are_one_block() {
        for seed in 0..25 {
            let g = random_two_connected(seed, 8).unwrap();
            assert_eq!(g.order(), 8);
            let tree = block_cut_decompose(&g).unwrap();
            assert_eq!(tree.blocks.len(), 1);
        }
    }
}

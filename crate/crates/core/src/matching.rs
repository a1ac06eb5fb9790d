//! Exact maximum matching (Edmonds' blossom algorithm on bit-mask adjacency).

use crate::graph::Graph;

pub(crate) const UNMATCHED: usize = usize::MAX;

/// A set of pairwise-disjoint edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        Self { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Mask of the vertices covered by the matching.
    pub fn covered_mask(&self) -> u64 {
        self.edges
            .iter()
            .fold(0u64, |m, &(u, v)| m | (1 << u) | (1 << v))
    }

    /// Every pair is an edge of `g` and no vertex repeats.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = 0u64;
        for &(u, v) in &self.edges {
            if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
                return false;
            }
            let pair = (1u64 << u) | (1u64 << v);
            if seen & pair != 0 {
                return false;
            }
            seen |= pair;
        }
        true
    }
}

/// Maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = max_matching_mates(g.rows());
    let mut edges = Vec::new();
    for (v, &m) in mate.iter().enumerate() {
        if m != UNMATCHED && v < m {
            edges.push((v, m));
        }
    }
    Matching::new(edges)
}

/// ν(g): size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    max_matching_mates(g.rows())
        .iter()
        .filter(|&&m| m != UNMATCHED)
        .count()
        / 2
}

/// Runs the blossom algorithm to completion; `mate[v]` is v's partner or
/// `UNMATCHED`.
pub(crate) fn max_matching_mates(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![UNMATCHED; n];
    // greedy seed cuts the number of augmenting phases roughly in half
    for v in 0..n {
        if mate[v] == UNMATCHED {
            let mut cand = adj[v];
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if mate[u] == UNMATCHED {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
            }
        }
    }
    let mut scratch = BlossomScratch::new(n);
    for v in 0..n {
        if mate[v] == UNMATCHED {
            scratch.try_augment(adj, v, &mut mate);
        }
    }
    mate
}

/// One augmenting phase: looks for a single augmenting path from any free
/// vertex and applies it. Returns whether the matching grew.
#[cfg(test)]
pub(crate) fn augment_once(adj: &[u64], mate: &mut [usize]) -> bool {
    let n = adj.len();
    let mut scratch = BlossomScratch::new(n);
    for v in 0..n {
        if mate[v] == UNMATCHED && scratch.try_augment(adj, v, mate) {
            return true;
        }
    }
    false
}

pub(crate) struct BlossomScratch {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: std::collections::VecDeque<usize>,
}

impl BlossomScratch {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: vec![UNMATCHED; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: std::collections::VecDeque::new(),
        }
    }

    /// BFS alternating tree from `root`, contracting blossoms on the fly.
    pub(crate) fn try_augment(&mut self, adj: &[u64], root: usize, mate: &mut [usize]) -> bool {
        let n = adj.len();
        self.parent.iter_mut().for_each(|p| *p = UNMATCHED);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used.iter_mut().for_each(|u| *u = false);
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            let mut cand = adj[v];
            while cand != 0 {
                let to = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != UNMATCHED && self.parent[mate[to]] != UNMATCHED) {
                    // odd cycle: contract the blossom at its base
                    let curbase = self.lca(mate, v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(mate, v, curbase, to);
                    self.mark_path(mate, to, curbase, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = curbase;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == UNMATCHED {
                    self.parent[to] = v;
                    if mate[to] == UNMATCHED {
                        self.augment_along(mate, to);
                        return true;
                    }
                    self.used[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        false
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let n = mate.len();
        let mut on_path = vec![false; n];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if mate[a] == UNMATCHED {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn augment_along(&self, mate: &mut [usize], mut v: usize) {
        while v != UNMATCHED {
            let pv = self.parent[v];
            let ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }
}

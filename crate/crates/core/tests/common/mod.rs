//! Brute-force oracles for the integration suites. Everything here is
//! independent of the library's algorithmic paths: plain subset/DFS
//! enumeration, nothing shared with the implementations under test.
#![allow(dead_code)] // each test target uses its own subset

use extremal_lab::Graph;

/// Longest simple cycle by DFS over all cycles with canonical start.
pub fn brute_circumference(g: &Graph) -> usize {
    fn dfs(g: &Graph, start: usize, cur: usize, visited: u64, len: usize, best: &mut usize) {
        let mut cand = g.neighbors(cur);
        while cand != 0 {
            let next = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if next == start && len >= 3 {
                *best = (*best).max(len);
            } else if next > start && visited & (1 << next) == 0 {
                dfs(g, start, next, visited | (1 << next), len + 1, best);
            }
        }
    }
    let mut best = 0;
    for s in 0..g.order() {
        dfs(g, s, s, 1 << s, 1, &mut best);
    }
    best
}

/// Maximum matching size by branching on the lowest available vertex.
pub fn brute_matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, avail: u64) -> usize {
        if avail == 0 {
            return 0;
        }
        let v = avail.trailing_zeros() as usize;
        let without = avail & !(1u64 << v);
        let mut best = rec(g, without);
        let mut cand = g.neighbors(v) & without;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            best = best.max(1 + rec(g, without & !(1u64 << u)));
        }
        best
    }
    rec(g, g.full_mask())
}

/// Clique count by enumerating every r-subset.
pub fn brute_count_cliques(g: &Graph, r: usize) -> u64 {
    fn rec(g: &Graph, start: usize, left: usize, chosen: &mut Vec<usize>, acc: &mut u64) {
        if left == 0 {
            let complete = chosen
                .iter()
                .enumerate()
                .all(|(i, &u)| chosen[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if complete {
                *acc += 1;
            }
            return;
        }
        for v in start..g.order() {
            chosen.push(v);
            rec(g, v + 1, left - 1, chosen, acc);
            chosen.pop();
        }
    }
    if r == 0 {
        return 1;
    }
    let mut acc = 0;
    rec(g, 0, r, &mut Vec::new(), &mut acc);
    acc
}

/// Freeness from the brute-force invariants only.
pub fn brute_is_free(g: &Graph, k: usize, s: usize) -> bool {
    brute_circumference(g) < k && brute_matching_number(g) <= s
}

/// All labeled graphs on `n` vertices, streamed to a visitor.
pub fn for_each_labeled_graph(n: usize, mut visit: impl FnMut(&Graph)) {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 24, "exhaustive enumeration envelope");
    for code in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| (code >> i) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        visit(&g);
    }
}

/// Exact extremal value by enumerating every labeled graph.
pub fn brute_extremal(n: usize, k: usize, s: usize, r: usize) -> u64 {
    let mut best = 0;
    for_each_labeled_graph(n, |g| {
        if brute_is_free(g, k, s) {
            best = best.max(brute_count_cliques(g, r));
        }
    });
    best
}

/// Deterministic scrambled graph for fixtures: edge (u,v) present when the
/// mixing hash of (seed,u,v) clears the threshold.
pub fn hashed_graph(seed: u64, n: usize, density_pct: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let mut x = seed
                .wrapping_mul(0x9e3779b97f4a7c15)
                .wrapping_add(((u as u64) << 32) | v as u64);
            x ^= x >> 29;
            x = x.wrapping_mul(0xbf58476d1ce4e5b9);
            x ^= x >> 32;
            if x % 100 < density_pct {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

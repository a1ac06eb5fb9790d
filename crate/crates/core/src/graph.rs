//! Undirected simple graphs on at most 64 vertices, one adjacency word per
//! vertex. All composition operations are pure; `Graph` values are immutable
//! once built and cheap to clone.

use crate::error::{Error, Result};

/// Hard vertex capacity: one `u64` adjacency word per vertex.
pub const MAX_ORDER: usize = 64;

/// Which primitive graph to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimitiveKind {
    /// Complete graph `K_t`.
    Clique,
    /// Edgeless graph `I_t`.
    Independent,
}

/// An undirected simple graph with bit-mask adjacency rows.
///
/// Invariants, enforced by every constructor:
/// - adjacency is symmetric,
/// - no self-loops,
/// - all neighbor bits lie below `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, [", self.order, self.edge_count())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, "])")
    }
}

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Empty graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph order",
                requested: order,
                limit: MAX_ORDER,
            });
        }
        Ok(Self {
            order,
            adj: vec![0; order],
        })
    }

    /// `K_t` or `I_t`.
    pub fn primitive(kind: PrimitiveKind, t: usize) -> Result<Self> {
        let mut g = Self::empty(t)?;
        if kind == PrimitiveKind::Clique {
            let all = low_bits(t);
            for v in 0..t {
                g.adj[v] = all & !bit(v);
            }
        }
        Ok(g)
    }

    /// Complete graph `K_t`.
    pub fn complete(t: usize) -> Result<Self> {
        Self::primitive(PrimitiveKind::Clique, t)
    }

    /// Edgeless graph `I_t`.
    pub fn independent(t: usize) -> Result<Self> {
        Self::primitive(PrimitiveKind::Independent, t)
    }

    /// Cycle `C_t` (`t >= 3`).
    pub fn cycle(t: usize) -> Result<Self> {
        if t < 3 {
            return Err(Error::Precondition(format!(
                "cycle needs at least 3 vertices, got {t}"
            )));
        }
        let mut g = Self::empty(t)?;
        for v in 0..t {
            g.add_edge(v, (v + 1) % t);
        }
        Ok(g)
    }

    /// Path `P_t` on `t` vertices.
    pub fn path(t: usize) -> Result<Self> {
        let mut g = Self::empty(t)?;
        for v in 1..t {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for &(u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(Error::Precondition(format!(
                    "edge ({u},{v}) invalid for order {order}"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency masks, validating the invariants.
    pub fn from_masks(adj: Vec<u64>) -> Result<Self> {
        let order = adj.len();
        if order > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph order",
                requested: order,
                limit: MAX_ORDER,
            });
        }
        let valid = low_bits(order);
        for (v, &row) in adj.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::Precondition(format!(
                    "adjacency row {v} has bits at or above order {order}"
                )));
            }
            if row & bit(v) != 0 {
                return Err(Error::Precondition(format!("self-loop at vertex {v}")));
            }
        }
        for u in 0..order {
            for v in (u + 1)..order {
                if (adj[u] >> v) & 1 != (adj[v] >> u) & 1 {
                    return Err(Error::Precondition(format!(
                        "adjacency not symmetric at ({u},{v})"
                    )));
                }
            }
        }
        Ok(Self { order, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.order && v < self.order && u != v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline(always)]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighbor bit mask of `v`.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// The adjacency rows.
    #[inline(always)]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        self.adj[u] & bit(v) != 0
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            let mut above = self.adj[u] & !low_bits(u + 1);
            std::iter::from_fn(move || {
                if above == 0 {
                    None
                } else {
                    let v = above.trailing_zeros() as usize;
                    above &= above - 1;
                    Some((u, v))
                }
            })
        })
    }

    /// Mask with a bit for every vertex.
    #[inline(always)]
    pub fn full_mask(&self) -> u64 {
        low_bits(self.order)
    }

    /// Disjoint union; vertices of `other` are re-indexed after `self`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order + other.order;
        if order > MAX_ORDER {
            return Err(Error::Capacity {
                what: "union order",
                requested: order,
                limit: MAX_ORDER,
            });
        }
        let mut adj = Vec::with_capacity(order);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|r| r << self.order));
        Ok(Graph { order, adj })
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.union(other)?;
        let left = low_bits(self.order);
        let right = low_bits(g.order) & !left;
        for v in 0..self.order {
            g.adj[v] |= right;
        }
        for v in self.order..g.order {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Disjoint union of `m` copies of `self`.
    pub fn replicate(&self, m: usize) -> Result<Graph> {
        let order = self
            .order
            .checked_mul(m)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(Error::Capacity {
                what: "replicate order",
                requested: self.order.saturating_mul(m),
                limit: MAX_ORDER,
            })?;
        let mut adj = Vec::with_capacity(order);
        for i in 0..m {
            adj.extend(self.adj.iter().map(|r| r << (i * self.order)));
        }
        Ok(Graph { order, adj })
    }

    /// Merges `u` and `v` into a single vertex adjacent to
    /// `N(u) ∪ N(v) ∖ {u,v}`. The merged vertex sits at `min(u,v)` and every
    /// vertex above `max(u,v)` shifts down by one.
    fn merge_vertices(&self, u: usize, v: usize) -> Graph {
        let (keep, drop) = (u.min(v), u.max(v));
        let merged = (self.adj[u] | self.adj[v]) & !bit(u) & !bit(v);
        let mut adj = Vec::with_capacity(self.order - 1);
        for w in 0..self.order {
            if w == drop {
                continue;
            }
            let mut row = if w == keep { merged } else { self.adj[w] };
            if w != keep && row & bit(drop) != 0 {
                row = (row & !bit(drop)) | bit(keep);
            }
            // squeeze out the dropped bit position
            let low = row & low_bits(drop);
            let high = row & !low_bits(drop + 1);
            adj.push(low | (high >> 1));
        }
        Graph {
            order: self.order - 1,
            adj,
        }
    }

    /// Contracts the edge `uv`: deletes it and identifies its ends.
    pub fn contract(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.order || v >= self.order || u == v {
            return Err(Error::Precondition(format!(
                "contract: vertices ({u},{v}) invalid for order {}",
                self.order
            )));
        }
        if !self.has_edge(u, v) {
            return Err(Error::Precondition(format!(
                "contract: {u}{v} is not an edge"
            )));
        }
        Ok(self.merge_vertices(u, v))
    }

    /// Identifies the nonadjacent vertices `u` and `v`.
    pub fn identify(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.order || v >= self.order || u == v {
            return Err(Error::Precondition(format!(
                "identify: vertices ({u},{v}) invalid for order {}",
                self.order
            )));
        }
        if self.has_edge(u, v) {
            return Err(Error::Precondition(format!(
                "identify: {u}{v} is an edge; use contract"
            )));
        }
        Ok(self.merge_vertices(u, v))
    }

    /// Vertex mask of the connected component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        debug_assert!(v < self.order);
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[w];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Masks of all connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut remaining = self.full_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.component_of(v);
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.component_of(0) == self.full_mask()
    }

    /// Induced subgraph on `mask`, plus the local-to-global vertex map.
    pub fn induced_with_map(&self, mask: u64) -> (Graph, Vec<usize>) {
        debug_assert_eq!(mask & !self.full_mask(), 0);
        let mut map = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            map.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        let mut adj = vec![0u64; map.len()];
        for (i, &gi) in map.iter().enumerate() {
            let mut row = self.adj[gi] & mask;
            while row != 0 {
                let gj = row.trailing_zeros() as usize;
                row &= row - 1;
                // gj's local index = rank of gj within mask
                let j = (mask & low_bits(gj)).count_ones() as usize;
                adj[i] |= bit(j);
            }
        }
        (
            Graph {
                order: map.len(),
                adj,
            },
            map,
        )
    }

    /// Induced subgraph on `mask`.
    pub fn induced(&self, mask: u64) -> Graph {
        self.induced_with_map(mask).0
    }
}

//! Executable checkers for the structural facts the constructions rest on:
//! the binomial convexity inequality, near-perfect matchings of strict block
//! trees with odd Hamiltonian blocks, the block-cut star matching
//! comparison, longest-path/longest-cycle degree bounds, contraction
//! closure of freeness, the stability partition, and the potential tuple.
//!
//! The structural facts are proven theorems: a failing check indicates a bug
//! in this crate, and the reports exist to catch exactly that.

use crate::binom::binomial_u128;
use crate::blocks::{is_biconnected, BlockCutTree};
use crate::cliques::count_cliques;
use crate::cycles::{circumference, hamiltonian_cycle, longest_path};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::matching::{matching_number, Matching};
use serde::{Deserialize, Serialize};

// ---------------------------------------------------------------------------
// Binomial inequality
// ---------------------------------------------------------------------------

/// Outcome of one binomial inequality evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BinomOutcome {
    /// Inequality holds with equality.
    Holds,
    /// Inequality holds strictly.
    HoldsStrictly,
    /// The hypotheses are not satisfied; nothing was evaluated.
    PreconditionFailed,
    /// The inequality failed. This refutes a proven statement, so it can
    /// only mean an arithmetic bug; sweeps assert it never appears.
    Violated,
}

/// Checks `C(x,r) + C(y,r) >= C(w,r) + C(z,r)` under the hypotheses
/// `r >= 2`, `x + y = w + z`, `x >= w`, `x >= z`, `x >= r`.
///
/// Evaluated in checked 128-bit arithmetic; arguments are expected to stay
/// within the range where `C(x, r)` fits a `u128`.
pub fn binom_inequality_check(r: u64, w: u64, x: u64, y: u64, z: u64) -> BinomOutcome {
    if r < 2 || x + y != w + z || x < w || x < z || x < r {
        return BinomOutcome::PreconditionFailed;
    }
    let c =
        |n: u64| binomial_u128(n as u128, r as u128).expect("binomial argument exceeds u128 range");
    let lhs = c(x) + c(y);
    let rhs = c(w) + c(z);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => BinomOutcome::Violated,
        std::cmp::Ordering::Equal => BinomOutcome::Holds,
        std::cmp::Ordering::Greater => BinomOutcome::HoldsStrictly,
    }
}

// ---------------------------------------------------------------------------
// Near-perfect matchings of strict odd-Hamiltonian block trees
// ---------------------------------------------------------------------------

/// A near-perfect matching of `g` avoiding `v`, built by peeling block
/// leaves: the leaf block is matched along its Hamiltonian cycle with either
/// its cut vertex or the avoided vertex left out, then the rest recurses.
///
/// Preconditions: `tree` is the strict block decomposition of `g` and every
/// block is Hamiltonian of odd order. Violations name the offending block.
pub fn near_perfect_matching_excluding(
    g: &Graph,
    tree: &BlockCutTree,
    v: usize,
) -> Result<Matching> {
    if v >= g.order() {
        return Err(Error::Precondition(format!(
            "vertex {v} out of range for order {}",
            g.order()
        )));
    }
    if !tree.is_strict {
        return Err(Error::Precondition(
            "block tree is not strict (contains a cut-edge block)".into(),
        ));
    }
    // one Hamiltonian cycle per block, in global labels
    let mut cycles: Vec<Vec<usize>> = Vec::with_capacity(tree.blocks.len());
    for (i, &mask) in tree.blocks.iter().enumerate() {
        if mask.count_ones() % 2 == 0 {
            return Err(Error::Precondition(format!(
                "block {i} has even order {}",
                mask.count_ones()
            )));
        }
        let (sub, map) = g.induced_with_map(mask);
        match hamiltonian_cycle(&sub)? {
            Some(cyc) => cycles.push(cyc.into_iter().map(|x| map[x]).collect()),
            None => return Err(Error::Precondition(format!("block {i} is not Hamiltonian"))),
        }
    }
    let mut remaining: Vec<usize> = (0..tree.blocks.len()).collect();
    let mut edges = Vec::new();
    let mut avoid = v;
    while remaining.len() > 1 {
        // a block leaf shares exactly one vertex with the rest
        let (pos, cut) = remaining
            .iter()
            .enumerate()
            .find_map(|(pos, &bi)| {
                let others = remaining
                    .iter()
                    .filter(|&&bj| bj != bi)
                    .fold(0u64, |acc, &bj| acc | tree.blocks[bj]);
                let shared = tree.blocks[bi] & others;
                (shared.count_ones() == 1).then(|| (pos, shared.trailing_zeros() as usize))
            })
            .ok_or_else(|| Error::Precondition("block masks do not form a block tree".into()))?;
        let bi = remaining.remove(pos);
        let fmask = tree.blocks[bi];
        if fmask & (1 << avoid) != 0 && avoid != cut {
            // leave `avoid` out inside the leaf; the rest must then drop `cut`
            pair_odd_cycle_excluding(&cycles[bi], avoid, &mut edges);
            avoid = cut;
        } else {
            // perfect matching of the leaf minus its cut vertex
            pair_odd_cycle_excluding(&cycles[bi], cut, &mut edges);
        }
    }
    let last = remaining[0];
    pair_odd_cycle_excluding(&cycles[last], avoid, &mut edges);
    Ok(Matching::new(edges))
}

/// Pairs up an odd cycle's vertices, skipping `skip`.
fn pair_odd_cycle_excluding(cycle: &[usize], skip: usize, out: &mut Vec<(usize, usize)>) {
    let len = cycle.len();
    debug_assert!(len % 2 == 1);
    let pos = cycle
        .iter()
        .position(|&x| x == skip)
        .expect("skip vertex lies on the block cycle");
    let mut i = 1;
    while i + 1 < len + 1 {
        let a = cycle[(pos + i) % len];
        let b = cycle[(pos + i + 1) % len];
        out.push((a, b));
        i += 2;
    }
}

// ---------------------------------------------------------------------------
// Block-cut star
// ---------------------------------------------------------------------------

/// Builds the block-cut star of the given blocks: the lowest-index vertex of
/// every block is identified into a single center (vertex 0 of the result).
pub fn block_cut_star_of(blocks: &[Graph]) -> Result<Graph> {
    if blocks.is_empty() {
        return Err(Error::Precondition("need at least one block".into()));
    }
    let mut order = 1usize;
    for (i, b) in blocks.iter().enumerate() {
        if b.order() < 2 {
            return Err(Error::Precondition(format!(
                "block {i} has order {} < 2",
                b.order()
            )));
        }
        if !b.is_connected() {
            return Err(Error::Precondition(format!("block {i} is disconnected")));
        }
        order += b.order() - 1;
    }
    if order > MAX_ORDER {
        return Err(Error::Capacity {
            what: "block-cut star order",
            requested: order,
            limit: MAX_ORDER,
        });
    }
    let mut g = Graph::empty(order)?;
    let mut base = 1usize;
    for b in blocks {
        let map = |x: usize| if x == 0 { 0 } else { base + x - 1 };
        for (u, v) in b.edges() {
            g.add_edge(map(u), map(v));
        }
        base += b.order() - 1;
    }
    Ok(g)
}

/// ν comparison between a block tree and its star, in one record.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StarComparison {
    pub nu_tree: usize,
    pub nu_star: usize,
    pub pass: bool,
}

/// Compares the matching number of `g` against the block-cut star built
/// from `g`'s blocks.
pub fn star_matching_check(g: &Graph, tree: &BlockCutTree) -> Result<StarComparison> {
    let blocks: Vec<Graph> = tree.blocks.iter().map(|&m| g.induced(m)).collect();
    let star = block_cut_star_of(&blocks)?;
    let nu_tree = matching_number(g);
    let nu_star = matching_number(&star);
    Ok(StarComparison {
        nu_tree,
        nu_star,
        pass: nu_tree >= nu_star,
    })
}

// ---------------------------------------------------------------------------
// Longest-path / long-cycle degree bounds
// ---------------------------------------------------------------------------

/// One half of the degree-bound report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartCheck {
    pub ran: bool,
    pub skip_reason: Option<String>,
    pub pass: bool,
    pub detail: String,
}

impl PartCheck {
    fn skipped(reason: &str) -> Self {
        PartCheck {
            ran: false,
            skip_reason: Some(reason.to_string()),
            pass: true,
            detail: String::new(),
        }
    }
}

/// Report of the two path/cycle degree bounds on one instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeBoundReport {
    /// Longest path vs `min(n, d(u) + d(v) + 1)` on connected inputs.
    pub path_bound: PartCheck,
    /// Circumference vs `min(|E(P)| + 1, d_P(u) + d_P(v))` on 2-connected
    /// inputs.
    pub cycle_bound: PartCheck,
    /// The longest path the checks used.
    pub path: Vec<usize>,
}

impl DegreeBoundReport {
    pub fn pass(&self) -> bool {
        self.path_bound.pass && self.cycle_bound.pass
    }
}

/// Checks the longest-path degree bound (connected graphs) and the long-
/// cycle degree bound (2-connected graphs), with witnesses.
pub fn dirac_kopylov_check(g: &Graph) -> Result<DegreeBoundReport> {
    if g.order() == 0 {
        return Ok(DegreeBoundReport {
            path_bound: PartCheck::skipped("empty graph"),
            cycle_bound: PartCheck::skipped("empty graph"),
            path: Vec::new(),
        });
    }
    let path = longest_path(g)?;
    let path_bound = if g.is_connected() {
        let (u, v) = (path[0], *path.last().unwrap());
        let bound = g.order().min(g.degree(u) + g.degree(v) + 1);
        let pass = path.len() >= bound;
        PartCheck {
            ran: true,
            skip_reason: None,
            pass,
            detail: format!(
                "|P|={} >= min(n={}, d({u})+d({v})+1={})",
                path.len(),
                g.order(),
                g.degree(u) + g.degree(v) + 1
            ),
        }
    } else {
        PartCheck::skipped("not connected")
    };
    let cycle_bound = if is_biconnected(g) {
        let (u, v) = (path[0], *path.last().unwrap());
        let on_path = path.iter().fold(0u64, |m, &w| m | (1 << w));
        let dp_u = (g.neighbors(u) & on_path).count_ones() as usize;
        let dp_v = (g.neighbors(v) & on_path).count_ones() as usize;
        let m_edges = path.len() - 1;
        let bound = (m_edges + 1).min(dp_u + dp_v);
        let circ = circumference(g)?;
        PartCheck {
            ran: true,
            skip_reason: None,
            pass: circ >= bound,
            detail: format!(
                "circumference={circ} >= min(|E(P)|+1={}, d_P({u})+d_P({v})={})",
                m_edges + 1,
                dp_u + dp_v
            ),
        }
    } else {
        PartCheck::skipped("not 2-connected")
    };
    Ok(DegreeBoundReport {
        path_bound,
        cycle_bound,
        path,
    })
}

// ---------------------------------------------------------------------------
// Contraction closure
// ---------------------------------------------------------------------------

/// Report of contracting every edge of a free graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContractionReport {
    pub edges_checked: usize,
    /// Edges whose contraction broke freeness; always empty unless the
    /// implementation is buggy.
    pub violations: Vec<(usize, usize)>,
}

impl ContractionReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Contracts each edge of a free graph and verifies the result stays free.
pub fn contraction_closure_check(g: &Graph, k: usize, s: usize) -> Result<ContractionReport> {
    if !crate::is_free(g, k, s)? {
        return Err(Error::Precondition(format!(
            "input graph is not free for k={k}, s={s}"
        )));
    }
    let mut violations = Vec::new();
    let mut checked = 0;
    for (u, v) in g.edges().collect::<Vec<_>>() {
        let contracted = g.contract(u, v)?;
        checked += 1;
        if !crate::is_free(&contracted, k, s)? {
            violations.push((u, v));
        }
    }
    Ok(ContractionReport {
        edges_checked: checked,
        violations,
    })
}

// ---------------------------------------------------------------------------
// Stability partition
// ---------------------------------------------------------------------------

/// The three-part stability partition: `X` a (p-1)-clique, `Y` independent
/// with neighborhood exactly `X`, `Z` the rest with minimum degree `p` and
/// no neighbors in `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityPartition {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl StabilityPartition {
    /// `t0 = |Z|`.
    pub fn t0(&self) -> usize {
        self.z.count_ones() as usize
    }
}

/// Validates the three partition clauses for `g` at parameter `p`.
pub fn validate_partition(g: &Graph, p: usize, part: &StabilityPartition) -> Result<()> {
    let full = g.full_mask();
    if part.x | part.y | part.z != full
        || part.x & part.y != 0
        || part.x & part.z != 0
        || part.y & part.z != 0
    {
        return Err(Error::Precondition("X, Y, Z do not partition V".into()));
    }
    if part.x.count_ones() as usize != p - 1 || !crate::cliques::is_clique(g.rows(), part.x) {
        return Err(Error::Precondition(format!(
            "X is not a (p-1)-clique for p={p}"
        )));
    }
    let mut m = part.y;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if g.neighbors(v) != part.x {
            return Err(Error::Precondition(format!(
                "vertex {v} in Y does not have neighborhood exactly X"
            )));
        }
    }
    let mut m = part.z;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if g.degree(v) < p {
            return Err(Error::Precondition(format!(
                "vertex {v} in Z has degree {} < p={p}",
                g.degree(v)
            )));
        }
        if g.neighbors(v) & part.y != 0 {
            return Err(Error::Precondition(format!(
                "vertex {v} in Z has a neighbor in Y"
            )));
        }
    }
    Ok(())
}

/// Searches for a stability partition: among all (p-1)-cliques `X` that
/// yield a valid split, one maximizing `|Y|` wins; ties go to the
/// lexicographically least vertex list of `X`. Returns `None` when no clique
/// works (absence is a legitimate answer on arbitrary graphs).
pub fn stability_decompose(g: &Graph, p: usize) -> Result<Option<StabilityPartition>> {
    if p < 3 {
        return Err(Error::Precondition(format!("need p >= 3, got p={p}")));
    }
    let mut candidates: Vec<u64> = Vec::new();
    collect_cliques(g.rows(), g.full_mask(), p - 1, &mut candidates);
    let mut best: Option<(usize, Vec<usize>, StabilityPartition)> = None;
    for xmask in candidates {
        let mut y = 0u64;
        for v in 0..g.order() {
            if xmask & (1 << v) == 0 && g.neighbors(v) == xmask {
                y |= 1 << v;
            }
        }
        let z = g.full_mask() & !xmask & !y;
        let part = StabilityPartition { x: xmask, y, z };
        if validate_partition(g, p, &part).is_err() {
            continue;
        }
        let ysize = y.count_ones() as usize;
        let xlist: Vec<usize> = mask_vertices(xmask);
        let better = match &best {
            None => true,
            Some((by, bx, _)) => ysize > *by || (ysize == *by && xlist < *bx),
        };
        if better {
            best = Some((ysize, xlist, part));
        }
    }
    Ok(best.map(|(_, _, part)| part))
}

fn mask_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn collect_cliques(adj: &[u64], cand: u64, size: usize, out: &mut Vec<u64>) {
    fn rec(adj: &[u64], cand: u64, size: usize, cur: u64, out: &mut Vec<u64>) {
        if size == 0 {
            out.push(cur);
            return;
        }
        if (cand.count_ones() as usize) < size {
            return;
        }
        let mut m = cand;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            rec(adj, adj[v] & m, size - 1, cur | (1 << v), out);
        }
    }
    rec(adj, cand, size, 0, out);
}

// ---------------------------------------------------------------------------
// Potential tuple
// ---------------------------------------------------------------------------

/// Which potential tuple to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhiVariant {
    /// `(e, k3, c(Z) + |Y|)`.
    Triple,
    /// `(e, k3, c(Z) + |Y|, c(Z))`.
    Quadruple,
}

/// The potential tuple; compared lexicographically, leftmost field first.
/// Only tuples of the same variant are meaningfully comparable (the derived
/// ordering treats a missing fourth field as smallest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PhiPotential {
    pub e: u64,
    pub k3: u64,
    pub cz_plus_y: u64,
    pub cz: Option<u64>,
}

/// Evaluates the potential of `g` under a valid stability partition.
pub fn phi_potential(
    g: &Graph,
    part: &StabilityPartition,
    variant: PhiVariant,
) -> Result<PhiPotential> {
    let p = part.x.count_ones() as usize + 1;
    validate_partition(g, p, part)?;
    let cz = g.induced(part.z).components().len() as u64;
    Ok(PhiPotential {
        e: g.edge_count() as u64,
        k3: count_cliques(g, 3)?,
        cz_plus_y: cz + u64::from(part.y.count_ones()),
        cz: match variant {
            PhiVariant::Triple => None,
            PhiVariant::Quadruple => Some(cz),
        },
    })
}

/// Edges inside `Z` whose two ends are each adjacent to every vertex of `X`.
pub fn exceptional_edges(g: &Graph, part: &StabilityPartition) -> Result<Vec<(usize, usize)>> {
    let p = part.x.count_ones() as usize + 1;
    validate_partition(g, p, part)?;
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let pair = (1u64 << u) | (1u64 << v);
        if pair & part.z == pair
            && g.neighbors(u) & part.x == part.x
            && g.neighbors(v) & part.x == part.x
        {
            out.push((u, v));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Line-oriented reports
// ---------------------------------------------------------------------------

/// Which checker a report line came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    DiracKopylov,
    Binom,
    NearPerfect,
    Star,
    Contraction,
    Stability,
}

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::DiracKopylov => "dirac-kopylov",
            LemmaId::Binom => "binom",
            LemmaId::NearPerfect => "near-perfect",
            LemmaId::Star => "star",
            LemmaId::Contraction => "contraction",
            LemmaId::Stability => "stability",
        }
    }

    pub fn parse(text: &str) -> Option<LemmaId> {
        match text {
            "dirac-kopylov" => Some(LemmaId::DiracKopylov),
            "binom" => Some(LemmaId::Binom),
            "near-perfect" => Some(LemmaId::NearPerfect),
            "star" => Some(LemmaId::Star),
            "contraction" => Some(LemmaId::Contraction),
            "stability" => Some(LemmaId::Stability),
            _ => None,
        }
    }
}

/// One line of a lemma-check run: id, seed, instance, verdict, witness.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub seed: u64,
    /// graph6 of the instance, or "-" for purely numeric checks.
    pub instance: String,
    pub pass: bool,
    /// Free-form witness: matched edges, failing tuple, partition sizes.
    pub witness: String,
}

impl std::fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "lemma={} seed={} instance={} result={} witness={}",
            self.lemma.name(),
            self.seed,
            self.instance,
            if self.pass { "pass" } else { "fail" },
            if self.witness.is_empty() {
                "-"
            } else {
                &self.witness
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::block_cut_decompose;
    use crate::graph::Graph;

    #[test]
    fn binom_examples() {
        assert_eq!(
            binom_inequality_check(2, 2, 3, 1, 2),
            BinomOutcome::HoldsStrictly
        );
        assert_eq!(binom_inequality_check(2, 2, 2, 2, 2), BinomOutcome::Holds);
        assert_eq!(
            binom_inequality_check(3, 5, 4, 3, 2),
            BinomOutcome::PreconditionFailed
        );
        // x + y != w + z
        assert_eq!(
            binom_inequality_check(2, 1, 3, 1, 2),
            BinomOutcome::PreconditionFailed
        );
    }

    #[test]
    fn near_perfect_on_single_triangle() {
        let k3 = Graph::complete(3).unwrap();
        let tree = block_cut_decompose(&k3).unwrap();
        for v in 0..3 {
            let m = near_perfect_matching_excluding(&k3, &tree, v).unwrap();
            assert!(m.is_valid_for(&k3));
            assert_eq!(m.size(), 1);
            assert_eq!(m.covered_mask(), k3.full_mask() & !(1 << v));
        }
    }

    #[test]
    fn near_perfect_on_bowtie_center() {
        let two = Graph::complete(3).unwrap().replicate(2).unwrap();
        let bowtie = two.identify(0, 3).unwrap();
        let tree = block_cut_decompose(&bowtie).unwrap();
        let center = tree.cut_vertices.trailing_zeros() as usize;
        let m = near_perfect_matching_excluding(&bowtie, &tree, center).unwrap();
        assert!(m.is_valid_for(&bowtie));
        assert_eq!(m.size(), 2);
        assert_eq!(m.covered_mask(), bowtie.full_mask() & !(1 << center));
    }

    #[test]
    fn near_perfect_on_three_c5_path_tree() {
        // three C5 blocks arranged in a path
        let mut g = Graph::cycle(5).unwrap();
        for _ in 0..2 {
            let extension = Graph::cycle(5).unwrap();
            let attach = g.order() - 1;
            let merged = g.union(&extension).unwrap();
            g = merged.identify(attach, attach + 1).unwrap();
        }
        assert_eq!(g.order(), 13);
        let tree = block_cut_decompose(&g).unwrap();
        assert_eq!(tree.blocks.len(), 3);
        // an end-block vertex of degree 2 that is not a cut vertex
        let end_block = tree
            .blocks
            .iter()
            .find(|b| (*b & tree.cut_vertices).count_ones() == 1)
            .unwrap();
        let v = mask_vertices(end_block & !tree.cut_vertices)[0];
        let m = near_perfect_matching_excluding(&g, &tree, v).unwrap();
        assert!(m.is_valid_for(&g));
        assert_eq!(m.size(), 6);
        assert_eq!(m.covered_mask(), g.full_mask() & !(1 << v));
    }

    #[test]
    fn near_perfect_rejects_bad_blocks() {
        // even block
        let c4 = Graph::cycle(4).unwrap();
        let tree = block_cut_decompose(&c4).unwrap();
        assert!(near_perfect_matching_excluding(&c4, &tree, 0).is_err());
        // non-strict tree
        let p3 = Graph::path(3).unwrap();
        let tree = block_cut_decompose(&p3).unwrap();
        assert!(near_perfect_matching_excluding(&p3, &tree, 0).is_err());
    }

    #[test]
    fn star_examples() {
        let k3 = Graph::complete(3).unwrap();
        let bowtie = block_cut_star_of(&[k3.clone(), k3.clone()]).unwrap();
        assert_eq!(bowtie.order(), 5);
        assert_eq!(matching_number(&bowtie), 2);

        let k2 = Graph::complete(2).unwrap();
        assert_eq!(block_cut_star_of(std::slice::from_ref(&k2)).unwrap(), k2);

        let star =
            block_cut_star_of(&[Graph::cycle(4).unwrap(), Graph::cycle(5).unwrap()]).unwrap();
        assert_eq!(star.order(), 8);
        assert_eq!(matching_number(&star), 4);
    }

    #[test]
    fn degree_bound_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let rep = dirac_kopylov_check(&c5).unwrap();
        assert!(rep.pass());
        assert!(rep.path_bound.ran && rep.cycle_bound.ran);

        let k4 = Graph::complete(4).unwrap();
        assert!(dirac_kopylov_check(&k4).unwrap().pass());

        // disconnected: both parts skip, overall pass
        let g = Graph::complete(3).unwrap().replicate(2).unwrap();
        let rep = dirac_kopylov_check(&g).unwrap();
        assert!(!rep.path_bound.ran && !rep.cycle_bound.ran);
        assert!(rep.pass());

        // connected but not 2-connected: only the path bound runs
        let p5 = Graph::path(5).unwrap();
        let rep = dirac_kopylov_check(&p5).unwrap();
        assert!(rep.path_bound.ran && !rep.cycle_bound.ran);
        assert!(rep.pass());
    }

    #[test]
    fn contraction_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let rep = contraction_closure_check(&c4, 5, 2).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.edges_checked, 4);

        let k4 = Graph::complete(4).unwrap();
        assert!(contraction_closure_check(&k4, 5, 2).unwrap().pass());

        // precondition: K5 is not free at k=5
        assert!(contraction_closure_check(&Graph::complete(5).unwrap(), 5, 2).is_err());
    }

    #[test]
    fn stability_on_the_reference_construction() {
        use crate::construct::{build_construction, Family};
        use crate::params::derive_params;
        let params = derive_params(10, 5, 3, 2).unwrap();
        let g = build_construction(Family::G1, &params).unwrap();
        let part = stability_decompose(&g, 3).unwrap().unwrap();
        assert_eq!(part.x, 0b11); // apex and the inner K1
        assert_eq!(part.y.count_ones(), 5);
        assert_eq!(part.z.count_ones(), 3);
        validate_partition(&g, 3, &part).unwrap();
    }

    #[test]
    fn stability_absent_on_independent_sets() {
        let g = Graph::independent(8).unwrap();
        assert!(stability_decompose(&g, 3).unwrap().is_none());
    }

    #[test]
    fn stability_on_plain_join() {
        // K_{p-1} ∨ I_m: X = the clique, Y = everything else, Z empty
        let p = 4;
        let g = Graph::complete(p - 1)
            .unwrap()
            .join(&Graph::independent(6).unwrap())
            .unwrap();
        let part = stability_decompose(&g, p).unwrap().unwrap();
        assert_eq!(part.x, 0b111);
        assert_eq!(part.y.count_ones(), 6);
        assert_eq!(part.z, 0);
    }

    #[test]
    fn phi_on_reference_construction() {
        use crate::construct::{build_construction, Family};
        use crate::params::derive_params;
        let params = derive_params(10, 5, 3, 2).unwrap();
        let g = build_construction(Family::G1, &params).unwrap();
        let part = stability_decompose(&g, 3).unwrap().unwrap();
        let phi = phi_potential(&g, &part, PhiVariant::Triple).unwrap();
        assert_eq!(
            phi,
            PhiPotential {
                e: 17,
                k3: 9,
                cz_plus_y: 6,
                cz: None
            }
        );
        let phi4 = phi_potential(&g, &part, PhiVariant::Quadruple).unwrap();
        assert_eq!(phi4.cz, Some(1));
        // lexicographic comparison, leftmost first
        let bigger = PhiPotential {
            e: 18,
            k3: 0,
            cz_plus_y: 0,
            cz: None,
        };
        assert!(bigger > phi);
    }

    #[test]
    fn exceptional_edge_examples() {
        use crate::construct::{build_construction, Family};
        use crate::params::derive_params;
        // G6 has exactly one exceptional edge (the K2 joined to all of X)
        let params = derive_params(12, 8, 5, 2).unwrap();
        let g = build_construction(Family::G6, &params).unwrap();
        let part = stability_decompose(&g, 4).unwrap().unwrap();
        assert_eq!(exceptional_edges(&g, &part).unwrap().len(), 1);

        // G1's Z-components each touch a single X vertex: none exceptional
        let params = derive_params(10, 5, 3, 2).unwrap();
        let g = build_construction(Family::G1, &params).unwrap();
        let part = stability_decompose(&g, 3).unwrap().unwrap();
        assert!(exceptional_edges(&g, &part).unwrap().is_empty());

        // Z empty
        let g = Graph::complete(2)
            .unwrap()
            .join(&Graph::independent(5).unwrap())
            .unwrap();
        let part = stability_decompose(&g, 3).unwrap().unwrap();
        assert_eq!(part.z, 0);
        assert!(exceptional_edges(&g, &part).unwrap().is_empty());
    }

    #[test]
    fn report_lines_render() {
        let rep = LemmaReport {
            lemma: LemmaId::Contraction,
            seed: 7,
            instance: "Bw".into(),
            pass: true,
            witness: String::new(),
        };
        assert_eq!(
            rep.to_string(),
            "lemma=contraction seed=7 instance=Bw result=pass witness=-"
        );
    }
}

// ---------------------------------------------------------------------------
// Seeded check drivers (shared by the CLI and the acceptance suite)
// ---------------------------------------------------------------------------

/// One-trial drivers that generate a seeded instance, run a checker, and
/// fold the outcome into a report line.
pub mod drivers {
    use super::*;
    use crate::generators::{random_block_tree, random_free_graph, random_two_connected};
    use crate::graph6;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn report(
        lemma: LemmaId,
        seed: u64,
        g: Option<&Graph>,
        pass: bool,
        witness: String,
    ) -> LemmaReport {
        LemmaReport {
            lemma,
            seed,
            instance: g.map_or_else(|| "-".to_string(), graph6::encode),
            pass,
            witness,
        }
    }

    /// Degree-bound checks on one seeded instance: even trials draw a
    /// 2-connected graph, odd trials a strict block tree (connected with cut
    /// vertices), so both halves of the checker are exercised.
    pub fn degree_bound_trial(seed: u64, n_max: usize) -> Result<LemmaReport> {
        let g = if seed.is_multiple_of(2) {
            let mut rng = ChaCha12Rng::seed_from_u64(seed ^ 0x9e37);
            let n = rng.random_range(3..=n_max.max(3));
            random_two_connected(seed, n)?
        } else {
            random_block_tree(seed, 3, n_max.max(3))?.0
        };
        let rep = dirac_kopylov_check(&g)?;
        let witness = format!(
            "path_len={} path_bound={} cycle_bound={}",
            rep.path.len(),
            if rep.path_bound.ran {
                rep.path_bound.detail.as_str()
            } else {
                "skipped"
            },
            if rep.cycle_bound.ran {
                rep.cycle_bound.detail.as_str()
            } else {
                "skipped"
            },
        );
        Ok(report(
            LemmaId::DiracKopylov,
            seed,
            Some(&g),
            rep.pass(),
            witness,
        ))
    }

    /// Near-perfect matchings on one seeded block tree, checked for every
    /// vertex of the instance.
    pub fn near_perfect_trial(
        seed: u64,
        max_blocks: usize,
        max_order: usize,
    ) -> Result<LemmaReport> {
        let (g, tree) = random_block_tree(seed, max_blocks, max_order)?;
        let mut pass = true;
        let mut detail = String::new();
        for v in 0..g.order() {
            let m = near_perfect_matching_excluding(&g, &tree, v)?;
            let ok = m.is_valid_for(&g)
                && m.size() * 2 == g.order() - 1
                && m.covered_mask() == g.full_mask() & !(1 << v);
            if !ok {
                pass = false;
                detail = format!("failed for v={v}");
                break;
            }
        }
        if pass {
            detail = format!(
                "order={} blocks={} all_vertices_ok",
                g.order(),
                tree.blocks.len()
            );
        }
        Ok(report(LemmaId::NearPerfect, seed, Some(&g), pass, detail))
    }

    /// Matching comparison against the block-cut star on one seeded tree.
    pub fn star_trial(seed: u64, max_blocks: usize, max_order: usize) -> Result<LemmaReport> {
        let (g, tree) = random_block_tree(seed, max_blocks, max_order)?;
        let cmp = star_matching_check(&g, &tree)?;
        Ok(report(
            LemmaId::Star,
            seed,
            Some(&g),
            cmp.pass,
            format!("nu_tree={} nu_star={}", cmp.nu_tree, cmp.nu_star),
        ))
    }

    /// Contraction closure on one seeded free graph drawn from the
    /// `k in 5..=7, s in 2..=4` grid.
    pub fn contraction_trial(seed: u64, n_max: usize) -> Result<LemmaReport> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed ^ 0x51ab);
        let k = rng.random_range(5..=7);
        let s = rng.random_range(2..=4);
        let n = rng.random_range(4..=n_max.max(4));
        let g = random_free_graph(seed, n, k, s)?;
        let rep = contraction_closure_check(&g, k, s)?;
        let witness = if rep.pass() {
            format!("k={k} s={s} edges_checked={}", rep.edges_checked)
        } else {
            format!("k={k} s={s} violations={:?}", rep.violations)
        };
        Ok(report(
            LemmaId::Contraction,
            seed,
            Some(&g),
            rep.pass(),
            witness,
        ))
    }

    /// Stability partition on one seeded construction grid point: the
    /// decomposition must exist with `|X| = p-1`.
    pub fn stability_trial(seed: u64) -> Result<LemmaReport> {
        use crate::construct::{build_construction, family_applicable, min_valid_n, Family};
        use crate::params::derive_params;
        let mut rng = ChaCha12Rng::seed_from_u64(seed ^ 0x57ab);
        let k = rng.random_range(5..=10usize);
        let p = (k - 1) / 2 + 1;
        let s = p + rng.random_range(0..=4usize);
        let params0 = derive_params(1, k, s, 2)?;
        let applicable: Vec<Family> = Family::ALL
            .into_iter()
            .filter(|&f| family_applicable(f, &params0).is_ok())
            .collect();
        let family = applicable[rng.random_range(0..applicable.len())];
        let min_n = min_valid_n(family, &params0)?;
        let n = (min_n + rng.random_range(0..=10usize)).min(crate::graph::MAX_ORDER);
        let params = derive_params(n, k, s, 2)?;
        let g = build_construction(family, &params)?;
        let found = stability_decompose(&g, p)?;
        let (pass, witness) = match found {
            Some(part) => (
                part.x.count_ones() as usize == p - 1,
                format!(
                    "{} |X|={} |Y|={} |Z|={}",
                    crate::construct::construction_id(family, &params),
                    part.x.count_ones(),
                    part.y.count_ones(),
                    part.z.count_ones()
                ),
            ),
            None => (false, "no partition found".to_string()),
        };
        Ok(report(LemmaId::Stability, seed, Some(&g), pass, witness))
    }

    /// Exhaustive binomial-inequality sweep over `[0, limit]^5`, one report
    /// line per `r`. Every precondition-satisfying tuple must hold, strictly
    /// whenever `x > w` and `x > z`.
    pub fn binom_sweep(limit: u64) -> Vec<LemmaReport> {
        let mut out = Vec::new();
        for r in 2..=limit {
            let mut checked = 0u64;
            let mut strict = 0u64;
            let mut pass = true;
            let mut first_failure = String::new();
            for x in r..=limit {
                for w in 0..=x {
                    for z in 0..=x {
                        let sum = w + z;
                        if sum < x {
                            continue;
                        }
                        let y = sum - x;
                        if y > limit {
                            continue;
                        }
                        checked += 1;
                        let outcome = binom_inequality_check(r, w, x, y, z);
                        let ok = match outcome {
                            BinomOutcome::HoldsStrictly => {
                                strict += 1;
                                true
                            }
                            BinomOutcome::Holds => !(x > w && x > z),
                            _ => false,
                        };
                        if !ok && pass {
                            pass = false;
                            first_failure = format!("r={r} w={w} x={x} y={y} z={z} -> {outcome:?}");
                        }
                    }
                }
            }
            let witness = if pass {
                format!("checked={checked} strict={strict}")
            } else {
                first_failure
            };
            out.push(LemmaReport {
                lemma: LemmaId::Binom,
                seed: r,
                instance: "-".to_string(),
                pass,
                witness,
            });
        }
        out
    }
}

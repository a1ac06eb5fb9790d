//! Exact extremal values on small vertex counts by pruned enumeration.
//!
//! Both forbidden properties survive edge deletion, so the free family is
//! downward closed, and clique counts only grow under edge addition: some
//! edge-maximal free graph attains the maximum. A DFS over the candidate
//! edges in colex order (all pairs within the first m vertices precede any
//! pair touching vertex m), branching include/exclude and pruning an include
//! the moment it breaks freeness, therefore visits every edge-maximal free
//! graph.
//!
//! Two optional, value-preserving prunes sit on top:
//!
//! - isomorph rejection at vertex-closure depths: when exactly the edges
//!   within the first m vertices are decided, two states whose decided
//!   graphs are isomorphic have isomorphic extension spaces (a permutation
//!   of the first m vertices maps decided pairs to decided pairs), so one
//!   representative suffices;
//! - a potential bound: the clique count of "current edges plus all
//!   undecided pairs" bounds every extension, so a branch whose potential
//!   falls below a known achievable value is dead.
//!
//! Parallelism splits the tree at a fixed depth into independent subtasks;
//! every subtask is explored serially and the fold is order-fixed, so value
//! and node counts never depend on the worker count.

use crate::canon::canonical_code_with_limit;
use crate::cliques::count_in_mask;
use crate::construct::{evaluate_theorem, matching_turan_value};
use crate::cycles::has_cycle_at_least_through;
use crate::error::{Error, Result};
use crate::graph::{low_bits, Graph};
use crate::graph6;
use crate::matching::{BlossomScratch, UNMATCHED};
use crate::params::FamilyParams;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Hard cap on the search order; the default cap is lower.
pub const HARD_MAX_N: usize = 12;
/// Default cap on the search order.
pub const DEFAULT_MAX_N: usize = 10;

const MAXN: usize = HARD_MAX_N;

/// Options for [`extremal_search`].
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Isomorph rejection at vertex-closure depths. `None` picks the
    /// default: on for `n >= 8`.
    pub canonical_dedup: Option<bool>,
    /// Worker count for the subtask phase; 0 or 1 runs serially.
    pub jobs: usize,
    /// The DFS tree splits into independent subtasks after this many edge
    /// decisions.
    pub split_depth: usize,
    /// Isomorph rejection applies at vertex-closure depths up to this.
    pub dedup_depth: usize,
    /// Order cap for this run (hard cap [`HARD_MAX_N`]).
    pub max_n: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            canonical_dedup: None,
            jobs: 1,
            split_depth: 12,
            dedup_depth: 15,
            max_n: DEFAULT_MAX_N,
        }
    }
}

/// Exact extremal value for one parameter tuple, with witness and search
/// statistics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchRecord {
    pub params: FamilyParams,
    /// `max N(K_r, G)` over all free n-vertex graphs.
    pub value: u64,
    /// graph6 of a maximizing free graph.
    pub witness: String,
    pub nodes_explored: u64,
    pub maximal_graphs_seen: u64,
    /// Seconds; the only field allowed to vary between identical runs.
    pub wall_time: f64,
    /// `value - theorem_value`, when the theorem names an applicable family.
    pub theorem_gap: Option<i64>,
    /// True when some theorem-named family was skipped because `n` is below
    /// its minimal order (the gap then compares against a partial max).
    pub below_construction_threshold: bool,
}

impl SearchRecord {
    pub fn key(&self) -> (usize, usize, usize, usize) {
        (self.params.n, self.params.k, self.params.s, self.params.r)
    }

    /// Decodes the witness and re-checks everything the record claims.
    pub fn verify(&self) -> Result<()> {
        let g = graph6::decode(&self.witness)?;
        if g.order() != self.params.n {
            return Err(Error::Integrity(format!(
                "witness order {} != n={}",
                g.order(),
                self.params.n
            )));
        }
        if !crate::is_free(&g, self.params.k, self.params.s)? {
            return Err(Error::Integrity(format!(
                "witness {} is not free for k={}, s={}",
                self.witness, self.params.k, self.params.s
            )));
        }
        let count = crate::count_cliques(&g, self.params.r)?;
        if count != self.value {
            return Err(Error::Integrity(format!(
                "witness clique count {count} != recorded value {}",
                self.value
            )));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// DFS engine
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct State {
    adj: [u64; MAXN],
    /// Current edges plus every undecided pair.
    potential: [u64; MAXN],
    /// A maximum matching of the current graph.
    mate: [usize; MAXN],
    nu: usize,
    /// `N(K_r)` of the current graph.
    count: u64,
    /// `N(K_r)` of the potential graph: an upper bound for every extension.
    bound: u64,
    depth: usize,
}

#[derive(Clone)]
struct Snapshot {
    st: State,
    voluntary: Vec<usize>,
}

/// Shared, read-only description of one search.
#[derive(Clone)]
struct Task {
    n: usize,
    r: usize,
    k: usize,
    s: usize,
    check_cycles: bool,
    /// Known achievable value; branches that cannot reach it are dead.
    lb: u64,
    edges: Vec<(usize, usize)>,
}

impl Task {
    fn initial_state(&self) -> State {
        let mut potential = [0u64; MAXN];
        let full = low_bits(self.n);
        for (v, row) in potential.iter_mut().enumerate().take(self.n) {
            *row = full & !(1 << v);
        }
        let bound = count_in_mask(&potential[..self.n], full, self.r)
            .expect("counts on <= 12 vertices fit u64");
        State {
            adj: [0; MAXN],
            potential,
            mate: [UNMATCHED; MAXN],
            nu: 0,
            count: 0,
            bound,
            depth: 0,
        }
    }
}

struct Engine {
    task: Task,
    blossom: BlossomScratch,
    scratch: Vec<u64>,
    voluntary: Vec<usize>,
    nodes: u64,
    maximal: u64,
    best: Option<(u64, [u64; MAXN])>,
}

struct SubResult {
    nodes: u64,
    maximal: u64,
    best: Option<(u64, [u64; MAXN])>,
}

impl Engine {
    fn new(task: Task) -> Self {
        let n = task.n;
        Engine {
            task,
            blossom: BlossomScratch::new(n),
            scratch: Vec::new(),
            voluntary: Vec::new(),
            nodes: 0,
            maximal: 0,
            best: None,
        }
    }

    /// Adds edge `(u, v)` if the graph stays free, updating matching and
    /// clique count. Returns the undo information, or `None` when pruned.
    fn try_include(
        &mut self,
        st: &mut State,
        u: usize,
        v: usize,
    ) -> Option<([usize; MAXN], usize, u64)> {
        st.adj[u] |= 1 << v;
        st.adj[v] |= 1 << u;
        if self.task.check_cycles {
            let comp = component_of(&st.adj[..self.task.n], u);
            if comp.count_ones() as usize >= self.task.k
                && has_cycle_at_least_through(
                    &st.adj[..self.task.n],
                    comp,
                    u,
                    v,
                    self.task.k,
                    &mut self.scratch,
                )
            {
                st.adj[u] &= !(1 << v);
                st.adj[v] &= !(1 << u);
                return None;
            }
        }
        let saved_mate = st.mate;
        let saved_nu = st.nu;
        if st.mate[u] == UNMATCHED && st.mate[v] == UNMATCHED {
            st.mate[u] = v;
            st.mate[v] = u;
            st.nu += 1;
        } else {
            // the old matching is maximum in G, so one augmenting phase
            // decides whether G + e gained
            let n = self.task.n;
            let mut grew = false;
            for root in 0..n {
                if st.mate[root] == UNMATCHED
                    && self
                        .blossom
                        .try_augment(&st.adj[..n], root, &mut st.mate[..n])
                {
                    grew = true;
                    break;
                }
            }
            if grew {
                st.nu += 1;
            }
        }
        if st.nu > self.task.s {
            st.mate = saved_mate;
            st.nu = saved_nu;
            st.adj[u] &= !(1 << v);
            st.adj[v] &= !(1 << u);
            return None;
        }
        let common = st.adj[u] & st.adj[v];
        let delta = count_in_mask(&st.adj[..self.task.n], common, self.task.r - 2)
            .expect("counts on <= 12 vertices fit u64");
        st.count += delta;
        Some((saved_mate, saved_nu, delta))
    }

    fn undo_include(&self, st: &mut State, u: usize, v: usize, undo: ([usize; MAXN], usize, u64)) {
        st.count -= undo.2;
        st.mate = undo.0;
        st.nu = undo.1;
        st.adj[u] &= !(1 << v);
        st.adj[v] &= !(1 << u);
    }

    fn floor(&self) -> u64 {
        self.best
            .as_ref()
            .map_or(self.task.lb, |(b, _)| (*b).max(self.task.lb))
    }

    fn dfs(&mut self, st: &mut State) {
        if st.depth == self.task.edges.len() {
            self.handle_leaf(st);
            return;
        }
        let (u, v) = self.task.edges[st.depth];
        if let Some(undo) = self.try_include(st, u, v) {
            st.depth += 1;
            self.nodes += 1;
            self.dfs(st);
            st.depth -= 1;
            self.undo_include(st, u, v, undo);
            self.exclude_and_recurse(st, u, v, true);
        } else {
            self.exclude_and_recurse(st, u, v, false);
        }
    }

    fn exclude_and_recurse(&mut self, st: &mut State, u: usize, v: usize, voluntary: bool) {
        let common = st.potential[u] & st.potential[v];
        let delta = count_in_mask(&st.potential[..self.task.n], common, self.task.r - 2)
            .expect("counts on <= 12 vertices fit u64");
        st.potential[u] &= !(1 << v);
        st.potential[v] &= !(1 << u);
        st.bound -= delta;
        if st.bound >= self.floor() {
            if voluntary {
                self.voluntary.push(st.depth);
            }
            st.depth += 1;
            self.nodes += 1;
            self.dfs(st);
            st.depth -= 1;
            if voluntary {
                self.voluntary.pop();
            }
        }
        st.bound += delta;
        st.potential[u] |= 1 << v;
        st.potential[v] |= 1 << u;
    }

    fn handle_leaf(&mut self, st: &State) {
        let better = match &self.best {
            None => true,
            Some((b, _)) => st.count > *b,
        };
        if better {
            self.best = Some((st.count, st.adj));
        }
        let mut is_maximal = true;
        for i in 0..self.voluntary.len() {
            let (u, v) = self.task.edges[self.voluntary[i]];
            if self.can_add(st, u, v) {
                is_maximal = false;
                break;
            }
        }
        if is_maximal {
            self.maximal += 1;
        }
    }

    /// Would adding `(u, v)` keep the leaf graph free? (Forced exclusions
    /// stay violations forever; only voluntary ones need this re-check.)
    fn can_add(&mut self, st: &State, u: usize, v: usize) -> bool {
        let n = self.task.n;
        let mut adj = st.adj;
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        if self.task.check_cycles {
            let comp = component_of(&adj[..n], u);
            if comp.count_ones() as usize >= self.task.k
                && has_cycle_at_least_through(&adj[..n], comp, u, v, self.task.k, &mut self.scratch)
            {
                return false;
            }
        }
        if st.nu == self.task.s {
            if st.mate[u] == UNMATCHED && st.mate[v] == UNMATCHED {
                return false;
            }
            let mut mate = st.mate;
            for root in 0..n {
                if mate[root] == UNMATCHED
                    && self.blossom.try_augment(&adj[..n], root, &mut mate[..n])
                {
                    return false;
                }
            }
        }
        true
    }

    /// One BFS expansion step for the serial prefix phase; mirrors `dfs`
    /// exactly (include child first, then the exclude child).
    fn expand_into(&mut self, snap: &Snapshot, out: &mut Vec<Snapshot>) {
        let mut st = snap.st.clone();
        let (u, v) = self.task.edges[st.depth];
        let include = self.try_include(&mut st, u, v);
        let voluntary = include.is_some();
        if let Some(undo) = include {
            let mut child = st.clone();
            child.depth += 1;
            self.nodes += 1;
            out.push(Snapshot {
                st: child,
                voluntary: snap.voluntary.clone(),
            });
            self.undo_include(&mut st, u, v, undo);
        }
        // exclude child
        let common = st.potential[u] & st.potential[v];
        let delta = count_in_mask(&st.potential[..self.task.n], common, self.task.r - 2)
            .expect("counts on <= 12 vertices fit u64");
        let mut child = st;
        child.potential[u] &= !(1 << v);
        child.potential[v] &= !(1 << u);
        child.bound -= delta;
        if child.bound >= self.floor() {
            let mut vol = snap.voluntary.clone();
            if voluntary {
                vol.push(child.depth);
            }
            child.depth += 1;
            self.nodes += 1;
            out.push(Snapshot {
                st: child,
                voluntary: vol,
            });
        }
    }

    fn run_subtree(mut self, snap: Snapshot) -> SubResult {
        self.voluntary = snap.voluntary;
        let mut st = snap.st;
        self.dfs(&mut st);
        SubResult {
            nodes: self.nodes,
            maximal: self.maximal,
            best: self.best,
        }
    }
}

fn component_of(adj: &[u64], v: usize) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let w = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[w];
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

// ---------------------------------------------------------------------------
// Top-level search
// ---------------------------------------------------------------------------

/// Computes the exact maximum of `N(K_r, G)` over all free `n`-vertex
/// graphs, with a witness.
pub fn extremal_search(params: &FamilyParams, options: &SearchOptions) -> Result<SearchRecord> {
    let (n, k, s, r) = (params.n, params.k, params.s, params.r);
    let max_n = options.max_n.min(HARD_MAX_N);
    if n > max_n {
        return Err(Error::Capacity {
            what: "search order",
            requested: n,
            limit: max_n,
        });
    }
    if n == 0 {
        return Err(Error::Precondition("search needs n >= 1".into()));
    }
    if k < 3 {
        return Err(Error::Precondition(format!(
            "search needs k >= 3, got k={k}"
        )));
    }
    if r < 2 {
        return Err(Error::Precondition(format!(
            "search needs r >= 2, got r={r}"
        )));
    }
    let start = Instant::now();

    // Achievable lower bound for dead-branch pruning: the best applicable
    // construction, and the matching-only value when no cycle can bind.
    // Every candidate is verified free before use.
    let mut lb = 0u64;
    if let Ok(ev) = evaluate_theorem(params) {
        for fam in &ev.families {
            if let crate::construct::FamilyOutcome::Value(v) = fam.outcome {
                let g = crate::construct::build_construction(fam.family, params)?;
                if crate::is_free(&g, k, s)? {
                    lb = lb.max(v);
                }
            }
        }
    }
    if k > n && n > 2 * s {
        if let Ok(v) = matching_turan_value(n, s, r) {
            lb = lb.max(v);
        }
    }

    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for hi in 1..n {
        for lo in 0..hi {
            edges.push((lo, hi));
        }
    }
    let e_total = edges.len();
    let task = Task {
        n,
        r,
        k,
        s,
        check_cycles: k <= n,
        lb,
        edges,
    };

    let dedup = options.canonical_dedup.unwrap_or(n >= 8);
    let closure_depths: Vec<(usize, usize)> = (2..=n)
        .map(|m| (m * (m - 1) / 2, m))
        .filter(|&(d, _)| d <= options.dedup_depth)
        .collect();
    let phase1_depth = if dedup {
        closure_depths
            .last()
            .map_or(options.split_depth, |&(d, _)| d.max(options.split_depth))
            .min(e_total)
    } else {
        options.split_depth.min(e_total)
    };

    // Phase 1: serial breadth-first prefix, with isomorph rejection at the
    // vertex-closure depths. Always serial so node counts cannot depend on
    // the worker count.
    let mut phase1 = Engine::new(task.clone());
    phase1.nodes = 1; // root
    let mut level = vec![Snapshot {
        st: task.initial_state(),
        voluntary: Vec::new(),
    }];
    for depth in 0..phase1_depth {
        let mut next = Vec::with_capacity(level.len() * 2);
        for snap in &level {
            debug_assert_eq!(snap.st.depth, depth);
            phase1.expand_into(snap, &mut next);
        }
        level = next;
        if dedup {
            if let Some(&(_, m)) = closure_depths.iter().find(|&&(d, _)| d == depth + 1) {
                level = dedup_level(level, m)?;
            }
        }
    }
    let phase1_nodes = phase1.nodes;

    // Phase 2: independent subtasks, each explored serially.
    let results: Vec<SubResult> = if options.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            level
                .into_par_iter()
                .map(|snap| Engine::new(task.clone()).run_subtree(snap))
                .collect()
        })
    } else {
        level
            .into_iter()
            .map(|snap| Engine::new(task.clone()).run_subtree(snap))
            .collect()
    };

    let mut nodes = phase1_nodes;
    let mut maximal = 0u64;
    let mut best: Option<(u64, [u64; MAXN])> = None;
    for sub in results {
        nodes += sub.nodes;
        maximal += sub.maximal;
        if let Some((v, adj)) = sub.best {
            let better = match &best {
                None => true,
                Some((b, _)) => v > *b,
            };
            if better {
                best = Some((v, adj));
            }
        }
    }
    let (value, witness_adj) =
        best.expect("at least one leaf is always reachable (the lower bound is achievable)");
    let witness_graph = Graph::from_masks(witness_adj[..n].to_vec())?;
    let witness = graph6::encode(&witness_graph);

    let (theorem_gap, below) = match evaluate_theorem(params) {
        Ok(ev) => (
            ev.value.map(|t| value as i64 - t as i64),
            !ev.all_named_applicable,
        ),
        Err(_) => (None, false),
    };

    let record = SearchRecord {
        params: *params,
        value,
        witness,
        nodes_explored: nodes,
        maximal_graphs_seen: maximal,
        wall_time: start.elapsed().as_secs_f64(),
        theorem_gap,
        below_construction_threshold: below,
    };
    debug_assert!(record.verify().is_ok());
    Ok(record)
}

/// Keeps the first representative of every isomorphism class of the decided
/// graphs on the first `m` vertices, preserving order.
fn dedup_level(level: Vec<Snapshot>, m: usize) -> Result<Vec<Snapshot>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(level.len());
    for snap in level {
        let rows: Vec<u64> = snap.st.adj[..m].to_vec();
        debug_assert!(rows.iter().all(|&row| row & !low_bits(m) == 0));
        let g = Graph::from_masks(rows)?;
        let code = canonical_code_with_limit(&g, HARD_MAX_N)?;
        if seen.insert(code) {
            out.push(snap);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

/// Inclusive parameter ranges for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub n: (usize, usize),
    pub k: (usize, usize),
    pub s: (usize, usize),
    pub r: (usize, usize),
}

impl SweepGrid {
    pub fn tuples(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for n in self.n.0..=self.n.1 {
            for k in self.k.0..=self.k.1 {
                for s in self.s.0..=self.s.1 {
                    for r in self.r.0..=self.r.1 {
                        out.push((n, k, s, r));
                    }
                }
            }
        }
        out
    }
}

/// One line of the sweep comparison table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub r: usize,
    pub value: u64,
    pub theorem_value: Option<u64>,
    pub theorem_gap: Option<i64>,
    /// The matching-bound-only value, shown when the cycle constraint
    /// cannot bind (`k > n`) and `n >= 2s+1`.
    pub matching_turan: Option<u64>,
    pub below_construction_threshold: bool,
    pub cache_hit: bool,
}

/// Sweep outcome: the records (cached or fresh) plus the comparison table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub records: Vec<SearchRecord>,
    pub rows: Vec<ComparisonRow>,
    pub cache_hits: usize,
    pub computed: usize,
}

/// Runs (or replays from cache) the whole grid and assembles the table.
pub fn sweep(
    grid: &SweepGrid,
    options: &SearchOptions,
    mut cache: Option<&mut crate::cache::ResultCache>,
) -> Result<SweepOutcome> {
    let mut records = Vec::new();
    let mut rows = Vec::new();
    let mut cache_hits = 0;
    let mut computed = 0;
    for (n, k, s, r) in grid.tuples() {
        let params = FamilyParams::for_search(n, k, s, r);
        let key = (n, k, s, r);
        let (record, hit) = match cache.as_ref().and_then(|c| c.get(&key)).cloned() {
            Some(rec) => {
                cache_hits += 1;
                (rec, true)
            }
            None => {
                let rec = extremal_search(&params, options)?;
                computed += 1;
                if let Some(c) = cache.as_mut() {
                    c.insert(rec.clone())?;
                }
                (rec, false)
            }
        };
        let theorem_value = evaluate_theorem(&params).ok().and_then(|ev| ev.value);
        let matching_turan = if k > n && n > 2 * s {
            matching_turan_value(n, s, r).ok()
        } else {
            None
        };
        rows.push(ComparisonRow {
            n,
            k,
            s,
            r,
            value: record.value,
            theorem_value,
            theorem_gap: record.theorem_gap,
            matching_turan,
            below_construction_threshold: record.below_construction_threshold,
            cache_hit: hit,
        });
        records.push(record);
    }
    Ok(SweepOutcome {
        records,
        rows,
        cache_hits,
        computed,
    })
}

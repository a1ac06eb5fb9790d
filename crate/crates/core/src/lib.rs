//! Desk-scale workbench for clique-count extremal problems on graphs with a
//! forbidden long-cycle family and a bounded matching number.
//!
//! The crate builds the candidate extremal construction families, computes
//! the exact invariants they extremize (clique counts, matching number,
//! circumference), provides executable checkers for the structural lemmas
//! the constructions rely on, and brute-forces exact extremal values on
//! small vertex counts for comparison.
//!
//! Graphs are capped at 64 vertices (one adjacency word per vertex); all
//! counting uses checked 64-bit arithmetic.

pub mod binom;
pub mod blocks;
pub mod cache;
pub mod canon;
pub mod cliques;
pub mod construct;
pub mod cycles;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod lemma;
pub mod matching;
pub mod params;
pub mod search;

pub use blocks::{block_cut_decompose, is_biconnected, BlockCutTree};
pub use canon::{canonical_code, canonical_code_with_limit};
pub use cliques::count_cliques;
pub use construct::{
    build_construction, formula_clique_count, matching_turan_value, theorem_value, Family,
};
pub use cycles::{circumference, hamiltonian_cycle, longest_path};
pub use error::{Error, Result};
pub use graph::{Graph, PrimitiveKind, MAX_ORDER};
pub use matching::{matching_number, maximum_matching, Matching};
pub use params::{derive_params, FamilyParams};
pub use search::{extremal_search, sweep, SearchOptions, SearchRecord};

/// Is `g` free of both forbidden families: every cycle shorter than `k` and
/// no matching of `s + 1` edges?
pub fn is_free(g: &Graph, k: usize, s: usize) -> Result<bool> {
    debug_assert!(k >= 3, "cycle thresholds below 3 are never satisfiable");
    Ok(cycles::circumference(g)? < k && matching::matching_number(g) <= s)
}

//! Parameter arithmetic for the construction families.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Parity of the cycle threshold `k` relative to `p = floor((k-1)/2) + 1`:
/// odd means `k = 2p - 1`, even means `k = 2p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// The remainder decompositions of `s - p + 1` the family builders use.
/// Present only when `s >= p`; the star branch (`p > s`) needs none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// `s - p + 1 = a(p-2) + b`, `0 <= b <= p-3`.
    pub a: usize,
    pub b: usize,
    /// `s - p + 1 = c(p-1) + d`, `0 <= d <= p-2`.
    pub c: usize,
    pub d: usize,
    /// `s - p + 1 = q(p-2) + t`, `0 <= t <= p-3` (same split as a/b; kept
    /// under the even-case names the builders use).
    pub q: usize,
    pub t: usize,
}

/// Derived quantities for the theorems' parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theory {
    /// `p = floor((k-1)/2) + 1 >= 3`.
    pub p: usize,
    pub parity: Parity,
    /// Absent when `p > s` (the star branch).
    pub decomposition: Option<Decomposition>,
}

/// One parameter tuple `(n, k, s, r)` plus everything derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    /// Vertex count.
    pub n: usize,
    /// Cycle threshold: cycles of length `>= k` are forbidden.
    pub k: usize,
    /// Matching bound: matchings of `s + 1` edges are forbidden.
    pub s: usize,
    /// Clique size being counted.
    pub r: usize,
    /// Derived fields; `None` when `k < 5` (below the constructions' range).
    pub theory: Option<Theory>,
}

impl FamilyParams {
    /// Parameters for search use: any `k >= 3` is allowed, derived fields
    /// populate only when the construction arithmetic is defined.
    pub fn for_search(n: usize, k: usize, s: usize, r: usize) -> Self {
        let theory = (k >= 5).then(|| make_theory(k, s));
        Self { n, k, s, r, theory }
    }

    pub fn p(&self) -> Option<usize> {
        self.theory.map(|t| t.p)
    }

    /// True when the star branch governs: `p > s`.
    pub fn star_branch(&self) -> bool {
        matches!(self.theory, Some(t) if t.p > self.s)
    }
}

fn make_theory(k: usize, s: usize) -> Theory {
    let p = (k - 1) / 2 + 1;
    let parity = if k % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    };
    let decomposition = (s >= p).then(|| {
        let m = s - p + 1;
        Decomposition {
            a: m / (p - 2),
            b: m % (p - 2),
            c: m / (p - 1),
            d: m % (p - 1),
            q: m / (p - 2),
            t: m % (p - 2),
        }
    });
    Theory {
        p,
        parity,
        decomposition,
    }
}

/// Populates every derived field for a parameter tuple.
///
/// `k >= 5` is required so that `p >= 3` and the remainder arithmetic is
/// well-defined.
pub fn derive_params(n: usize, k: usize, s: usize, r: usize) -> Result<FamilyParams> {
    if k < 5 {
        return Err(Error::Unsupported(format!(
            "cycle threshold k={k} is below 5 (p would drop under 3)"
        )));
    }
    if s < 1 || n < 1 {
        return Err(Error::Unsupported(format!(
            "need s >= 1 and n >= 1, got s={s}, n={n}"
        )));
    }
    Ok(FamilyParams {
        n,
        k,
        s,
        r,
        theory: Some(make_theory(k, s)),
    })
}

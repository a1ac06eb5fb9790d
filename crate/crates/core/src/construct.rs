//! The candidate extremal construction families G1..G6 and the star
//! construction, their closed-form clique counts, and the theorem-predicted
//! extremal values.
//!
//! Every family is held as a composition expression over cliques and
//! independent sets. Building the graph and evaluating the clique count are
//! two independent walks of the same expression: the count comes from the
//! union/join composition identities (binomial convolutions), never from the
//! built graph.

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::params::{FamilyParams, Parity, Theory};
use serde::{Deserialize, Serialize};

/// The construction families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    Star,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::G1,
        Family::G2,
        Family::G3,
        Family::G4,
        Family::G5,
        Family::G6,
        Family::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::G1 => "G1",
            Family::G2 => "G2",
            Family::G3 => "G3",
            Family::G4 => "G4",
            Family::G5 => "G5",
            Family::G6 => "G6",
            Family::Star => "STAR",
        }
    }

    pub fn parse(text: &str) -> Option<Family> {
        match text.to_ascii_lowercase().as_str() {
            "g1" => Some(Family::G1),
            "g2" => Some(Family::G2),
            "g3" => Some(Family::G3),
            "g4" => Some(Family::G4),
            "g5" => Some(Family::G5),
            "g6" => Some(Family::G6),
            "star" => Some(Family::Star),
            _ => None,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Canonical text id, e.g. `G1[n=10,k=5,s=3]`.
pub fn construction_id(family: Family, params: &FamilyParams) -> String {
    format!(
        "{}[n={},k={},s={}]",
        family.name(),
        params.n,
        params.k,
        params.s
    )
}

// ---------------------------------------------------------------------------
// Composition expressions
// ---------------------------------------------------------------------------

/// Composition expression over the two primitives.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Clique(usize),
    Ind(usize),
    Union(Box<Expr>, Box<Expr>),
    Join(Box<Expr>, Box<Expr>),
    Rep(usize, Box<Expr>),
}

use Expr::*;

fn union(a: Expr, b: Expr) -> Expr {
    Union(Box::new(a), Box::new(b))
}
fn join(a: Expr, b: Expr) -> Expr {
    Join(Box::new(a), Box::new(b))
}
fn rep(m: usize, e: Expr) -> Expr {
    Rep(m, Box::new(e))
}

impl Expr {
    fn order(&self) -> usize {
        match self {
            Clique(t) | Ind(t) => *t,
            Union(a, b) | Join(a, b) => a.order() + b.order(),
            Rep(m, h) => m * h.order(),
        }
    }

    fn build(&self) -> Result<Graph> {
        match self {
            Clique(t) => Graph::complete(*t),
            Ind(t) => Graph::independent(*t),
            Union(a, b) => a.build()?.union(&b.build()?),
            Join(a, b) => a.build()?.join(&b.build()?),
            Rep(m, h) => h.build()?.replicate(*m),
        }
    }

    /// `v[i] =` number of `K_i` subgraphs, for `i = 0..=rmax`, straight from
    /// the composition identities: unions add counts, joins convolve them.
    fn clique_vector(&self, rmax: usize) -> Result<Vec<u64>> {
        let mut v = vec![0u64; rmax + 1];
        match self {
            Clique(t) => {
                for (i, slot) in v.iter_mut().enumerate() {
                    *slot = binomial(*t as u64, i as u64)?;
                }
            }
            Ind(t) => {
                v[0] = 1;
                if rmax >= 1 {
                    v[1] = *t as u64;
                }
            }
            Union(a, b) => {
                let (va, vb) = (a.clique_vector(rmax)?, b.clique_vector(rmax)?);
                v[0] = 1;
                for i in 1..=rmax {
                    v[i] = va[i]
                        .checked_add(vb[i])
                        .ok_or(Error::Overflow("union clique count"))?;
                }
            }
            Join(a, b) => {
                let (va, vb) = (a.clique_vector(rmax)?, b.clique_vector(rmax)?);
                for (i, slot) in v.iter_mut().enumerate() {
                    let mut acc: u64 = 0;
                    for j in 0..=i {
                        let term = va[j]
                            .checked_mul(vb[i - j])
                            .ok_or(Error::Overflow("join clique count"))?;
                        acc = acc
                            .checked_add(term)
                            .ok_or(Error::Overflow("join clique count"))?;
                    }
                    *slot = acc;
                }
            }
            Rep(m, h) => {
                let vh = h.clique_vector(rmax)?;
                v[0] = 1;
                for i in 1..=rmax {
                    v[i] = vh[i]
                        .checked_mul(*m as u64)
                        .ok_or(Error::Overflow("replicated clique count"))?;
                }
            }
        }
        Ok(v)
    }
}

// ---------------------------------------------------------------------------
// Family applicability and layout
// ---------------------------------------------------------------------------

fn theory(params: &FamilyParams) -> Result<Theory> {
    params.theory.ok_or_else(|| {
        Error::Unsupported(format!(
            "k={} has no construction arithmetic (k >= 5 required)",
            params.k
        ))
    })
}

fn fail(family: Family, constraint: impl Into<String>) -> Error {
    Error::Family {
        family: family.name(),
        constraint: constraint.into(),
    }
}

/// Static applicability of a family for `(k, s)`, independent of `n`.
pub fn family_applicable(family: Family, params: &FamilyParams) -> Result<()> {
    let th = theory(params)?;
    let p = th.p;
    let s = params.s;
    if family == Family::Star {
        return if p > s {
            Ok(())
        } else {
            Err(fail(family, format!("needs p > s, got p={p}, s={s}")))
        };
    }
    if s < p {
        return Err(fail(family, format!("needs s >= p, got s={s}, p={p}")));
    }
    let dec = th.decomposition.expect("s >= p implies a decomposition");
    match (family, th.parity) {
        (Family::G1, Parity::Odd) => Ok(()),
        (Family::G2, Parity::Odd) => {
            let lo = (p - 1).div_ceil(2);
            if lo <= dec.b && dec.b + 3 <= p {
                Ok(())
            } else {
                Err(fail(
                    family,
                    format!("needs ceil((p-1)/2) <= b <= p-3, got b={}, p={p}", dec.b),
                ))
            }
        }
        (Family::G3, Parity::Even) | (Family::G4, Parity::Even) => Ok(()),
        (Family::G5, Parity::Even) => {
            if !(1..=p.saturating_sub(3)).contains(&dec.d) {
                Err(fail(
                    family,
                    format!("needs 1 <= d <= p-3, got d={}, p={p}", dec.d),
                ))
            } else if dec.c + dec.d + 2 < p {
                Err(fail(
                    family,
                    format!(
                        "needs c >= p-d-2 so the K_(2p-2) count is nonnegative, got c={}, d={}, p={p}",
                        dec.c, dec.d
                    ),
                ))
            } else {
                Ok(())
            }
        }
        (Family::G6, Parity::Even) => {
            if (1..=p - 2).contains(&dec.d) {
                Ok(())
            } else {
                Err(fail(
                    family,
                    format!("needs 1 <= d <= p-2, got d={}, p={p}", dec.d),
                ))
            }
        }
        (f, parity) => Err(fail(f, format!("family does not exist for {parity:?} k"))),
    }
}

/// Order of everything except the residual independent set.
fn fixed_order(family: Family, params: &FamilyParams) -> Result<usize> {
    let th = theory(params)?;
    let p = th.p;
    let dec = th.decomposition;
    Ok(match family {
        Family::G1 => {
            let d = dec.expect("checked");
            (p - 1) + d.a * (2 * p - 3)
        }
        Family::G2 => {
            let d = dec.expect("checked");
            (p - 1) + d.a * (2 * p - 3) + 2 * d.b + 1
        }
        Family::G3 => {
            let d = dec.expect("checked");
            (p - 1) + d.q * (2 * p - 3) + if d.t == 0 { 0 } else { 2 * d.t + 1 }
        }
        Family::G4 => {
            let d = dec.expect("checked");
            (p - 1) + d.c * (2 * p - 2) + if d.d == 0 { 0 } else { 2 * d.d + 1 }
        }
        Family::G5 => {
            let d = dec.expect("checked");
            let x = d.c + d.d + 2 - p;
            let y = p - d.d - 1;
            (p - 1) + x * (2 * p - 2) + y * (2 * p - 3)
        }
        Family::G6 => {
            let d = dec.expect("checked");
            (p + 1) + d.c * (2 * p - 2)
        }
        Family::Star => params.s,
    })
}

/// Smallest `n` at which the family's residual independent set is empty.
pub fn min_valid_n(family: Family, params: &FamilyParams) -> Result<usize> {
    family_applicable(family, params)?;
    fixed_order(family, params)
}

/// The family layout as a composition expression at `params.n`.
fn family_expr(family: Family, params: &FamilyParams) -> Result<Expr> {
    family_applicable(family, params)?;
    let th = theory(params)?;
    let p = th.p;
    let n = params.n;
    if n > MAX_ORDER {
        return Err(Error::Capacity {
            what: "construction order",
            requested: n,
            limit: MAX_ORDER,
        });
    }
    let fixed = fixed_order(family, params)?;
    if n < fixed {
        return Err(fail(
            family,
            format!("residual independent set would be negative: n={n} < minimal n={fixed}"),
        ));
    }
    let m = n - fixed; // residual independent-set size
    let dec = th.decomposition;
    let expr = match family {
        Family::G1 => {
            let d = dec.expect("checked");
            join(
                Clique(1),
                union(join(Clique(p - 2), Ind(m)), rep(d.a, Clique(2 * p - 3))),
            )
        }
        Family::G2 => {
            let d = dec.expect("checked");
            join(
                Clique(1),
                union(
                    union(join(Clique(p - 2), Ind(m)), rep(d.a, Clique(2 * p - 3))),
                    Clique(2 * d.b + 1),
                ),
            )
        }
        Family::G3 => {
            let d = dec.expect("checked");
            let core = union(join(Clique(p - 2), Ind(m)), rep(d.q, Clique(2 * p - 3)));
            let inner = if d.t == 0 {
                core
            } else {
                union(core, Clique(2 * d.t + 1))
            };
            join(Clique(1), inner)
        }
        Family::G4 => {
            let d = dec.expect("checked");
            let core = union(join(Clique(p - 2), Ind(m)), rep(d.c, Clique(2 * p - 2)));
            let inner = if d.d == 0 {
                core
            } else {
                union(core, Clique(2 * d.d + 1))
            };
            join(Clique(1), inner)
        }
        Family::G5 => {
            let d = dec.expect("checked");
            let x = d.c + d.d + 2 - p;
            let y = p - d.d - 1;
            join(
                Clique(1),
                union(
                    union(join(Clique(p - 2), Ind(m)), rep(x, Clique(2 * p - 2))),
                    rep(y, Clique(2 * p - 3)),
                ),
            )
        }
        Family::G6 => {
            let d = dec.expect("checked");
            join(
                Clique(1),
                union(
                    join(Clique(p - 2), union(Clique(2), Ind(m))),
                    rep(d.c, Clique(2 * p - 2)),
                ),
            )
        }
        Family::Star => join(Clique(params.s), Ind(m)),
    };
    debug_assert_eq!(expr.order(), n);
    Ok(expr)
}

/// Builds the family's graph at `params.n`. Vertex layout is deterministic:
/// within every union/join, the left operand keeps its indices and the right
/// operand shifts up.
pub fn build_construction(family: Family, params: &FamilyParams) -> Result<Graph> {
    family_expr(family, params)?.build()
}

/// Number of `K_r` in the family's graph, computed from binomial sums
/// without building the graph.
pub fn formula_clique_count(family: Family, params: &FamilyParams) -> Result<u64> {
    let v = family_expr(family, params)?.clique_vector(params.r)?;
    Ok(v[params.r])
}

// ---------------------------------------------------------------------------
// Theorem-predicted values
// ---------------------------------------------------------------------------

/// Outcome of evaluating one family named by the active theorem branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyOutcome {
    /// The family applies at this `n`; its clique count.
    Value(u64),
    /// The family is named by the branch but `n` is below its minimal order.
    BelowThreshold { min_n: usize },
    /// The family is named by the branch but its layout is undefined for
    /// these parameters (only G5 with too small `c`).
    Undefined { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEvaluation {
    pub family: Family,
    pub id: String,
    pub outcome: FamilyOutcome,
}

/// Full record of a theorem-value evaluation: which branch, which families,
/// their values, and the max.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremEvaluation {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub r: usize,
    pub branch: String,
    pub families: Vec<FamilyEvaluation>,
    /// Max over the applicable named families; a lower bound for the
    /// extremal value, equal to it for sufficiently large `n`.
    pub value: Option<u64>,
    /// True when every family the branch names is applicable at this `n`.
    pub all_named_applicable: bool,
}

/// The families the theorems name for this parameter branch.
pub fn theorem_branch(params: &FamilyParams) -> Result<(String, Vec<Family>)> {
    let th = theory(params)?;
    let p = th.p;
    if p > params.s {
        return Ok((
            format!("p={p} > s={}: star construction", params.s),
            vec![Family::Star],
        ));
    }
    let dec = th.decomposition.expect("s >= p");
    Ok(match th.parity {
        Parity::Odd => {
            let threshold = (p - 1).div_ceil(2);
            if dec.b < threshold {
                (
                    format!("odd k=2p-1, b={} < ceil((p-1)/2)={threshold}: G1", dec.b),
                    vec![Family::G1],
                )
            } else {
                (
                    format!(
                        "odd k=2p-1, b={} >= ceil((p-1)/2)={threshold}: max(G1, G2)",
                        dec.b
                    ),
                    vec![Family::G1, Family::G2],
                )
            }
        }
        Parity::Even => {
            if dec.d == 0 {
                (
                    "even k=2p, d=0: max(G3, G4)".to_string(),
                    vec![Family::G3, Family::G4],
                )
            } else if dec.d <= p - 3 {
                (
                    format!("even k=2p, 1 <= d={} <= p-3: max(G3, G4, G5, G6)", dec.d),
                    vec![Family::G3, Family::G4, Family::G5, Family::G6],
                )
            } else {
                (
                    format!("even k=2p, d={} = p-2: max(G3, G4, G6)", dec.d),
                    vec![Family::G3, Family::G4, Family::G6],
                )
            }
        }
    })
}

/// Evaluates the theorem's branch at `params`, reporting each named family.
pub fn evaluate_theorem(params: &FamilyParams) -> Result<TheoremEvaluation> {
    let (branch, named) = theorem_branch(params)?;
    let mut families = Vec::with_capacity(named.len());
    let mut value: Option<u64> = None;
    let mut all_named_applicable = true;
    for family in named {
        let id = construction_id(family, params);
        let outcome = match family_applicable(family, params) {
            Err(e) => {
                all_named_applicable = false;
                FamilyOutcome::Undefined {
                    reason: e.to_string(),
                }
            }
            Ok(()) => {
                let min_n = fixed_order(family, params)?;
                if params.n < min_n {
                    all_named_applicable = false;
                    FamilyOutcome::BelowThreshold { min_n }
                } else {
                    let v = formula_clique_count(family, params)?;
                    value = Some(value.map_or(v, |b| b.max(v)));
                    FamilyOutcome::Value(v)
                }
            }
        };
        families.push(FamilyEvaluation {
            family,
            id,
            outcome,
        });
    }
    Ok(TheoremEvaluation {
        n: params.n,
        k: params.k,
        s: params.s,
        r: params.r,
        branch,
        families,
        value,
        all_named_applicable,
    })
}

/// The theorem-predicted count: max of the named families' closed forms.
/// Always a valid lower bound for the extremal value; equality needs
/// sufficiently large `n`.
pub fn theorem_value(params: &FamilyParams) -> Result<u64> {
    evaluate_theorem(params)?.value.ok_or_else(|| {
        Error::Unsupported(format!(
            "no named family is applicable at n={} (below construction thresholds)",
            params.n
        ))
    })
}

/// The cycle-unconstrained value for graphs with matching number at most
/// `s`: `max(C(2s+1, r), C(s, r) + (n-s) C(s, r-1))`, valid for `n >= 2s+1`
/// and `r >= 2`.
pub fn matching_turan_value(n: usize, s: usize, r: usize) -> Result<u64> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("need r >= 2, got r={r}")));
    }
    if n < 2 * s + 1 {
        return Err(Error::OutOfRange(format!(
            "need n >= 2s+1, got n={n}, s={s}"
        )));
    }
    let clique = binomial(2 * s as u64 + 1, r as u64)?;
    let star = binomial(s as u64, r as u64)?
        .checked_add(
            ((n - s) as u64)
                .checked_mul(binomial(s as u64, r as u64 - 1)?)
                .ok_or(Error::Overflow("star-side product"))?,
        )
        .ok_or(Error::Overflow("star-side sum"))?;
    Ok(clique.max(star))
}

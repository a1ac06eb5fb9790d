//! Python bindings: the graph type, its exact invariants, the construction
//! families, theorem values, and the exhaustive search, exposed in-process.

use extremal_lab::construct::{self, Family, FamilyOutcome};
use extremal_lab::lemma;
use extremal_lab::params::FamilyParams;
use extremal_lab::search::{extremal_search, SearchOptions};
use extremal_lab::{blocks, cycles, graph6, matching};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py_err(e: extremal_lab::Error) -> PyErr {
    match e {
        extremal_lab::Error::Io(_) | extremal_lab::Error::Integrity(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An undirected simple graph on at most 64 vertices.
#[pyclass(name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: extremal_lab::Graph,
}

#[pymethods]
impl PyGraph {
    /// Decode a graph6 string.
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph6::decode(text).map_err(to_py_err)?,
        })
    }

    /// Complete graph K_t.
    #[staticmethod]
    fn complete(t: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: extremal_lab::Graph::complete(t).map_err(to_py_err)?,
        })
    }

    /// Edgeless graph I_t.
    #[staticmethod]
    fn independent(t: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: extremal_lab::Graph::independent(t).map_err(to_py_err)?,
        })
    }

    /// Cycle C_t.
    #[staticmethod]
    fn cycle(t: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: extremal_lab::Graph::cycle(t).map_err(to_py_err)?,
        })
    }

    /// Build from an explicit edge list.
    #[staticmethod]
    fn from_edges(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: extremal_lab::Graph::from_edges(order, &edges).map_err(to_py_err)?,
        })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        if u >= self.inner.order() || v >= self.inner.order() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.has_edge(u, v))
    }

    /// Disjoint union; the other graph's vertices shift up.
    fn union(&self, other: &PyGraph) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.union(&other.inner).map_err(to_py_err)?,
        })
    }

    /// Join: union plus all edges between the two sides.
    fn join(&self, other: &PyGraph) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.join(&other.inner).map_err(to_py_err)?,
        })
    }

    /// Disjoint union of m copies.
    fn replicate(&self, m: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.replicate(m).map_err(to_py_err)?,
        })
    }

    /// Contract the edge uv.
    fn contract(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.contract(u, v).map_err(to_py_err)?,
        })
    }

    /// Identify the nonadjacent vertices u and v.
    fn identify(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.identify(u, v).map_err(to_py_err)?,
        })
    }

    /// Exact number of K_r subgraphs.
    fn count_cliques(&self, r: usize) -> PyResult<u64> {
        extremal_lab::count_cliques(&self.inner, r).map_err(to_py_err)
    }

    /// Size of a maximum matching.
    fn matching_number(&self) -> usize {
        matching::matching_number(&self.inner)
    }

    /// The edges of one maximum matching.
    fn maximum_matching(&self) -> Vec<(usize, usize)> {
        matching::maximum_matching(&self.inner).edges().to_vec()
    }

    /// Length of a longest cycle (0 for forests).
    fn circumference(&self) -> PyResult<usize> {
        cycles::circumference(&self.inner).map_err(to_py_err)
    }

    /// A maximum-order path as a vertex list.
    fn longest_path(&self) -> PyResult<Vec<usize>> {
        cycles::longest_path(&self.inner).map_err(to_py_err)
    }

    /// No cycle of length >= k and no matching of s+1 edges?
    fn is_free(&self, k: usize, s: usize) -> PyResult<bool> {
        extremal_lab::is_free(&self.inner, k, s).map_err(to_py_err)
    }

    /// Block decomposition (connected graphs of order >= 2):
    /// dict with blocks (vertex lists), cut_vertices, strict.
    fn block_cut_tree<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let tree = blocks::block_cut_decompose(&self.inner).map_err(to_py_err)?;
        let d = PyDict::new(py);
        let blocks: Vec<Vec<usize>> = tree.blocks.iter().map(|&m| mask_to_list(m)).collect();
        d.set_item("blocks", blocks)?;
        d.set_item("cut_vertices", mask_to_list(tree.cut_vertices))?;
        d.set_item("strict", tree.is_strict)?;
        Ok(d)
    }

    /// Canonical code bytes (equal iff isomorphic); order <= 12.
    fn canonical_code(&self) -> PyResult<Vec<u8>> {
        extremal_lab::canonical_code(&self.inner).map_err(to_py_err)
    }

    /// graph6 text.
    fn to_graph6(&self) -> String {
        graph6::encode(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, edges={}, graph6={:?})",
            self.inner.order(),
            self.inner.edge_count(),
            graph6::encode(&self.inner)
        )
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

fn mask_to_list(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn parse_family(name: &str) -> PyResult<Family> {
    Family::parse(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown family {name:?}; use g1..g6, star")))
}

/// Derived parameter fields for (n, k, s, r), as a dict.
#[pyfunction]
fn derive_params(py: Python<'_>, n: usize, k: usize, s: usize, r: usize) -> PyResult<Py<PyDict>> {
    let params = extremal_lab::derive_params(n, k, s, r).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("n", n)?;
    d.set_item("k", k)?;
    d.set_item("s", s)?;
    d.set_item("r", r)?;
    let th = params.theory.expect("derive_params always populates");
    d.set_item("p", th.p)?;
    d.set_item(
        "parity",
        match th.parity {
            extremal_lab::params::Parity::Odd => "odd",
            extremal_lab::params::Parity::Even => "even",
        },
    )?;
    d.set_item("star_branch", params.star_branch())?;
    if let Some(dec) = th.decomposition {
        d.set_item("a", dec.a)?;
        d.set_item("b", dec.b)?;
        d.set_item("c", dec.c)?;
        d.set_item("d", dec.d)?;
        d.set_item("q", dec.q)?;
        d.set_item("t", dec.t)?;
    }
    Ok(d.into())
}

/// Build a construction family at (n, k, s).
#[pyfunction]
fn build_construction(family: &str, n: usize, k: usize, s: usize) -> PyResult<PyGraph> {
    let family = parse_family(family)?;
    let params = extremal_lab::derive_params(n, k, s, 2).map_err(to_py_err)?;
    Ok(PyGraph {
        inner: construct::build_construction(family, &params).map_err(to_py_err)?,
    })
}

/// The canonical construction id, e.g. "G1[n=10,k=5,s=3]".
#[pyfunction]
fn construction_id(family: &str, n: usize, k: usize, s: usize) -> PyResult<String> {
    let family = parse_family(family)?;
    let params = extremal_lab::derive_params(n, k, s, 2).map_err(to_py_err)?;
    Ok(construct::construction_id(family, &params))
}

/// Closed-form K_r count of a family, computed without building the graph.
#[pyfunction]
fn formula_clique_count(family: &str, n: usize, k: usize, s: usize, r: usize) -> PyResult<u64> {
    let family = parse_family(family)?;
    let params = extremal_lab::derive_params(n, k, s, r).map_err(to_py_err)?;
    construct::formula_clique_count(family, &params).map_err(to_py_err)
}

/// Theorem evaluation at (n, k, s, r): branch, per-family values, max.
#[pyfunction]
fn theorem_value(py: Python<'_>, n: usize, k: usize, s: usize, r: usize) -> PyResult<Py<PyDict>> {
    let params = extremal_lab::derive_params(n, k, s, r).map_err(to_py_err)?;
    let ev = construct::evaluate_theorem(&params).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("branch", &ev.branch)?;
    d.set_item("value", ev.value)?;
    d.set_item("all_named_applicable", ev.all_named_applicable)?;
    let fams = PyDict::new(py);
    for f in &ev.families {
        let status = match &f.outcome {
            FamilyOutcome::Value(v) => v.to_string(),
            FamilyOutcome::BelowThreshold { min_n } => format!("below_threshold(min_n={min_n})"),
            FamilyOutcome::Undefined { reason } => format!("undefined({reason})"),
        };
        fams.set_item(f.family.name(), status)?;
    }
    d.set_item("families", fams)?;
    Ok(d.into())
}

/// The matching-bound-only extremal value (n >= 2s+1, r >= 2).
#[pyfunction]
fn matching_turan_value(n: usize, s: usize, r: usize) -> PyResult<u64> {
    construct::matching_turan_value(n, s, r).map_err(to_py_err)
}

/// Exact extremal search; returns a dict mirroring the search record.
#[pyfunction]
#[pyo3(signature = (n, k, s, r, jobs=1, dedup=None, max_n=10))]
#[allow(clippy::too_many_arguments)]
fn search(
    py: Python<'_>,
    n: usize,
    k: usize,
    s: usize,
    r: usize,
    jobs: usize,
    dedup: Option<bool>,
    max_n: usize,
) -> PyResult<Py<PyDict>> {
    let params = FamilyParams::for_search(n, k, s, r);
    let options = SearchOptions {
        canonical_dedup: dedup,
        jobs,
        max_n,
        ..SearchOptions::default()
    };
    let rec = extremal_search(&params, &options).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("n", n)?;
    d.set_item("k", k)?;
    d.set_item("s", s)?;
    d.set_item("r", r)?;
    d.set_item("value", rec.value)?;
    d.set_item("witness", &rec.witness)?;
    d.set_item("nodes_explored", rec.nodes_explored)?;
    d.set_item("maximal_graphs_seen", rec.maximal_graphs_seen)?;
    d.set_item("wall_time", rec.wall_time)?;
    d.set_item("theorem_gap", rec.theorem_gap)?;
    d.set_item(
        "below_construction_threshold",
        rec.below_construction_threshold,
    )?;
    Ok(d.into())
}

/// Stability partition of a graph at parameter p, as vertex lists, or None.
#[pyfunction]
fn stability_decompose(py: Python<'_>, g: &PyGraph, p: usize) -> PyResult<Option<Py<PyDict>>> {
    match lemma::stability_decompose(&g.inner, p).map_err(to_py_err)? {
        None => Ok(None),
        Some(part) => {
            let d = PyDict::new(py);
            d.set_item("x", mask_to_list(part.x))?;
            d.set_item("y", mask_to_list(part.y))?;
            d.set_item("z", mask_to_list(part.z))?;
            d.set_item("t0", part.t0())?;
            Ok(Some(d.into()))
        }
    }
}

#[pymodule]
fn extremal_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("MAX_ORDER", extremal_lab::MAX_ORDER)?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(derive_params, m)?)?;
    m.add_function(wrap_pyfunction!(build_construction, m)?)?;
    m.add_function(wrap_pyfunction!(construction_id, m)?)?;
    m.add_function(wrap_pyfunction!(formula_clique_count, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_value, m)?)?;
    m.add_function(wrap_pyfunction!(matching_turan_value, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(stability_decompose, m)?)?;
    Ok(())
}

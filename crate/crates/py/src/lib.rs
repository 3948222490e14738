//! Python bindings: `import brushkit`.

use std::collections::BTreeMap;

use brush_core::centre::{brush_centre as centre, verify_theorem_31};
use brush_core::cleaning::{clean as run_clean, reverse_clean, BrushAllocation, CleaningTrace, Policy};
use brush_core::graph::{SimpleGraph, VertexId};
use brush_core::io;
use brush_core::jaco::JacoGraph;
use brush_core::solvers::{self, Claim};
use pyo3::exceptions::{PyIOError, PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: brush_core::Error) -> PyErr {
    match e {
        brush_core::Error::Io(e) => PyIOError::new_err(e.to_string()),
        e @ brush_core::Error::CapExceeded { .. } => PyOverflowError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn ids(vs: &[VertexId]) -> Vec<usize> {
    vs.iter().map(|v| v.get()).collect()
}

fn allocation_from(n: usize, map: BTreeMap<usize, u32>) -> PyResult<BrushAllocation> {
    BrushAllocation::from_map(n, &map).map_err(err)
}

/// Undirected simple graph on vertices 1..n.
#[pyclass(name = "Graph", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: SimpleGraph,
}

impl From<SimpleGraph> for PyGraph {
    fn from(inner: SimpleGraph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        SimpleGraph::from_edge_list(n, &edges).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        SimpleGraph::path(n).into()
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        SimpleGraph::cycle(n).into()
    }

    /// Hub is vertex 1.
    #[staticmethod]
    fn star(leaves: usize) -> Self {
        SimpleGraph::star(leaves).into()
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        SimpleGraph::complete(n).into()
    }

    /// JSON (`{"n": .., "edges": [..]}`) or edge-list text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        io::parse_graph(text).map(|l| l.graph.into()).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edge_pairs()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v == 0 || v > self.inner.order() {
            return Err(PyValueError::new_err(format!("no vertex {v}")));
        }
        Ok(self.inner.degree(VertexId::new(v)))
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn to_json(&self) -> String {
        io::graph_to_json(&self.inner).to_string()
    }

    fn to_dot(&self) -> String {
        io::to_dot(&self.inner, None)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.order(), self.inner.size())
    }
}

/// Record of one cleaning run.
#[pyclass(name = "Trace", frozen)]
pub struct PyTrace {
    graph: SimpleGraph,
    inner: CleaningTrace,
}

#[pymethods]
impl PyTrace {
    #[getter]
    fn cleaned(&self) -> bool {
        self.inner.is_cleaned()
    }

    #[getter]
    fn firing_order(&self) -> Vec<usize> {
        ids(&self.inner.firing_order())
    }

    /// `(vertex, neighbours sent a brush, brushes kept)` per firing.
    #[getter]
    fn events(&self) -> Vec<(usize, Vec<usize>, u32)> {
        self.inner
            .events
            .iter()
            .map(|e| (e.vertex.get(), ids(&e.dispatched), e.surplus_retained))
            .collect()
    }

    #[getter]
    fn initial(&self) -> BTreeMap<usize, u32> {
        self.inner.initial.to_map()
    }

    #[getter]
    fn end(&self) -> BTreeMap<usize, u32> {
        self.inner.end.to_map()
    }

    /// Second cleaning along the reversed orientation, starting from `end`.
    fn reverse(&self) -> PyResult<PyTrace> {
        let inner = reverse_clean(&self.graph, &self.inner).map_err(err)?;
        Ok(PyTrace { graph: self.graph.clone(), inner })
    }

    fn to_json(&self) -> String {
        io::trace_to_json(&self.inner).to_string()
    }

    fn __repr__(&self) -> String {
        let outcome = if self.inner.is_cleaned() { "cleaned" } else { "stuck" };
        format!("Trace({outcome}, {} firings)", self.inner.events.len())
    }
}

/// Canonically oriented `J_n(1)` as an undirected graph.
#[pyfunction]
fn jaco(n: usize) -> PyResult<PyGraph> {
    Ok(JacoGraph::build(n).map_err(err)?.graph().clone().into())
}

/// Arcs `(tail, head)` of `J_n(1)`.
#[pyfunction]
fn jaco_arcs(n: usize) -> PyResult<Vec<(usize, usize)>> {
    Ok(JacoGraph::build(n).map_err(err)?.orientation().arcs())
}

/// Out-degrees, in-degrees and prime Jaconian vertex (None for n < 2).
#[pyfunction]
fn jaco_info(n: usize) -> PyResult<(Vec<usize>, Vec<usize>, Option<usize>)> {
    let j = JacoGraph::build(n).map_err(err)?;
    let prime = j.jaconian_data().ok().map(|d| d.prime_jaconian.get());
    Ok((j.out_degrees().to_vec(), j.in_degrees().to_vec(), prime))
}

#[pyfunction]
fn mycielskian(g: &PyGraph) -> PyGraph {
    brush_core::mycielskian(&g.inner).graph.into()
}

/// `(b_r, ordering, allocation)` from the exact subset DP.
#[pyfunction]
fn brush_number(g: &PyGraph) -> PyResult<(u64, Vec<usize>, BTreeMap<usize, u32>)> {
    let r = solvers::brush_number_exact(&g.inner).map_err(err)?;
    Ok((r.value, ids(&r.witness_ordering), r.witness_allocation.to_map()))
}

#[pyfunction]
fn brush_number_permutations(g: &PyGraph) -> PyResult<u64> {
    solvers::brush_number_permutation_check(&g.inner).map_err(err)
}

#[pyfunction]
fn formula_jaco(n: usize) -> PyResult<i64> {
    solvers::brush_number_formula_jaco(n).map_err(err)
}

#[pyfunction]
fn formula_mycielski_jaco(n: usize) -> PyResult<u64> {
    solvers::brush_number_formula_mycielski_jaco(n).map_err(err)
}

/// `policy` is "greedy", "exhaustive" or an explicit vertex ordering.
#[pyfunction]
#[pyo3(signature = (g, allocation, policy=None))]
fn clean(g: &PyGraph, allocation: BTreeMap<usize, u32>, policy: Option<&Bound<'_, PyAny>>) -> PyResult<PyTrace> {
    let beta = allocation_from(g.inner.order(), allocation)?;
    let policy = match policy {
        None => Policy::Greedy,
        Some(p) => {
            if let Ok(name) = p.extract::<String>() {
                match name.as_str() {
                    "greedy" => Policy::Greedy,
                    "exhaustive" => Policy::exhaustive(),
                    _ => return Err(PyValueError::new_err(format!("unknown policy {name:?}"))),
                }
            } else {
                let order: Vec<usize> = p.extract()?;
                if order.contains(&0) {
                    return Err(PyValueError::new_err("vertex ids are 1-based"));
                }
                Policy::Explicit(order.into_iter().map(VertexId::new).collect())
            }
        }
    };
    let inner = run_clean(&g.inner, &beta, &policy).map_err(err)?;
    Ok(PyTrace { graph: g.inner.clone(), inner })
}

#[pyfunction]
#[pyo3(signature = (g, max_support=None))]
fn brush_centre<'py>(py: Python<'py>, g: &PyGraph, max_support: Option<usize>) -> PyResult<Bound<'py, PyDict>> {
    let c = centre(&g.inner, max_support).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("b_r", c.b_r)?;
    out.set_item("cardinality", c.cardinality)?;
    out.set_item("spread", c.spread)?;
    let supports = c
        .supports
        .iter()
        .map(|s| {
            let d = PyDict::new(py);
            d.set_item("vertices", ids(&s.vertices))?;
            d.set_item("allocation", s.allocation.to_map())?;
            d.set_item("reachable_as_end", s.reachable_as_end)?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    out.set_item("supports", supports)?;
    Ok(out)
}

/// Formula against oracle rows for "thm21" (J_n) or "thm22" (mu(J_n)).
#[pyfunction]
fn compare_claims<'py>(py: Python<'py>, claim: &str, n_max: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let which = match claim {
        "thm21" => Claim::Thm21,
        "thm22" => Claim::Thm22,
        _ => return Err(PyValueError::new_err(format!("unknown claim {claim:?}"))),
    };
    if n_max < 2 {
        return Err(PyValueError::new_err("n_max must be >= 2"));
    }
    let report = solvers::compare_claims(2..=n_max, which).map_err(err)?;
    report
        .rows
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("n", r.n)?;
            d.set_item("label", &r.label)?;
            d.set_item("formula", r.formula)?;
            d.set_item("oracle", r.oracle)?;
            d.set_item("agrees", r.agrees)?;
            Ok(d)
        })
        .collect()
}

/// End support of the canonical cleaning of `J_n` and whether it is a centre.
#[pyfunction]
fn theorem_31<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let row = verify_theorem_31(n).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("n", row.n)?;
    d.set_item("end_support", ids(&row.end_support))?;
    d.set_item("end_in_hope", row.end_in_hope)?;
    d.set_item("centre", row.centre.vertex_sets().iter().map(|s| ids(s)).collect::<Vec<_>>())?;
    d.set_item("pass", row.pass)?;
    Ok(d)
}

#[pymodule]
fn brushkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTrace>()?;
    m.add_function(wrap_pyfunction!(jaco, m)?)?;
    m.add_function(wrap_pyfunction!(jaco_arcs, m)?)?;
    m.add_function(wrap_pyfunction!(jaco_info, m)?)?;
    m.add_function(wrap_pyfunction!(mycielskian, m)?)?;
    m.add_function(wrap_pyfunction!(brush_number, m)?)?;
    m.add_function(wrap_pyfunction!(brush_number_permutations, m)?)?;
    m.add_function(wrap_pyfunction!(formula_jaco, m)?)?;
    m.add_function(wrap_pyfunction!(formula_mycielski_jaco, m)?)?;
    m.add_function(wrap_pyfunction!(clean, m)?)?;
    m.add_function(wrap_pyfunction!(brush_centre, m)?)?;
    m.add_function(wrap_pyfunction!(compare_claims, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_31, m)?)?;
    Ok(())
}

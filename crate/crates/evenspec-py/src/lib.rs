//! Python bindings. Graphs, symmetric matrices and certified
//! realizations cross the boundary as classes; classification records
//! and spectrum certificates cross as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};

use evenspec::linalg::{SpectrumCertificate, DEFAULT_TOL};
use evenspec::search::SearchConfig;

fn err(e: evenspec::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    use serde_json::Value;
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any().unbind(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any().unbind()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any().unbind()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any().unbind()
            }
        }
        Value::String(s) => PyString::new(py, s).into_any().unbind(),
        Value::Array(items) => {
            let converted: Vec<Py<PyAny>> =
                items.iter().map(|x| json_to_py(py, x)).collect::<PyResult<_>>()?;
            PyList::new(py, converted)?.into_any().unbind()
        }
        Value::Object(map) => {
            let d = PyDict::new(py);
            for (k, x) in map {
                d.set_item(k, json_to_py(py, x)?)?;
            }
            d.into_any().unbind()
        }
    })
}

fn cert_dict(py: Python<'_>, c: &SpectrumCertificate) -> PyResult<Py<PyAny>> {
    let d = PyDict::new(py);
    d.set_item("eigenvalues", c.eigenvalues.clone())?;
    d.set_item("max_gap", c.max_gap)?;
    d.set_item("is_square", c.is_square)?;
    d.set_item("odd_order", c.odd_order)?;
    d.set_item(
        "mode",
        match c.mode {
            evenspec::linalg::CertMode::Exact => "exact",
            evenspec::linalg::CertMode::Numeric => "numeric",
        },
    )?;
    d.set_item("sqrt_poly", c.sqrt_poly.as_ref().map(|p| p.to_string()))?;
    Ok(d.into_any().unbind())
}

// ============================================================
// classes
// ============================================================

#[pyclass(frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Graph {
    inner: evenspec::graphs::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph { inner: evenspec::graphs::Graph::from_edges(n, &edges).map_err(err)? })
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        Ok(Graph { inner: evenspec::graphs::parse_graph6(s).map_err(err)? })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(Graph { inner: evenspec::graphs::Graph::cycle(n).map_err(err)? })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(Graph { inner: evenspec::graphs::Graph::complete(n).map_err(err)? })
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Ok(Graph { inner: evenspec::graphs::Graph::path(n).map_err(err)? })
    }

    #[staticmethod]
    fn star(n: usize) -> PyResult<Self> {
        Ok(Graph { inner: evenspec::graphs::Graph::star(n).map_err(err)? })
    }

    fn to_graph6(&self) -> String {
        evenspec::graphs::write_graph6(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn is_complete(&self) -> bool {
        self.inner.is_complete()
    }

    fn complement(&self) -> Graph {
        Graph { inner: self.inner.complement() }
    }

    fn join(&self, other: &Graph) -> PyResult<Graph> {
        Ok(Graph { inner: self.inner.join(&other.inner).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={}, graph6={:?})",
            self.inner.n(),
            self.inner.edge_count(),
            evenspec::graphs::write_graph6(&self.inner)
        )
    }
}

#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct SymMatrix {
    inner: evenspec::linalg::SymMatrix,
}

#[pymethods]
impl SymMatrix {
    /// Build from the row-major upper triangle including the diagonal.
    #[new]
    fn new(n: usize, upper: Vec<f64>) -> PyResult<Self> {
        Ok(SymMatrix { inner: evenspec::linalg::SymMatrix::from_upper(n, &upper).map_err(err)? })
    }

    #[staticmethod]
    fn from_rows(rows: Vec<Vec<f64>>) -> PyResult<Self> {
        Ok(SymMatrix { inner: evenspec::linalg::SymMatrix::from_rows(&rows).map_err(err)? })
    }

    /// Parse the plain-text format: "n; upper triangle entries".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(SymMatrix { inner: evenspec::linalg::parse_matrix_text(text).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn get(&self, i: usize, j: usize) -> PyResult<f64> {
        if i >= self.inner.n() || j >= self.inner.n() {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(self.inner.get(i, j))
    }

    fn set(&mut self, i: usize, j: usize, v: f64) -> PyResult<()> {
        if i >= self.inner.n() || j >= self.inner.n() {
            return Err(PyValueError::new_err("index out of range"));
        }
        self.inner.set(i, j, v);
        Ok(())
    }

    fn upper_triangle(&self) -> Vec<f64> {
        self.inner.upper_triangle()
    }

    fn rows(&self) -> Vec<Vec<f64>> {
        let n = self.inner.n();
        (0..n).map(|i| (0..n).map(|j| self.inner.get(i, j)).collect()).collect()
    }

    fn trace(&self) -> f64 {
        self.inner.trace()
    }

    fn is_exact(&self) -> bool {
        self.inner.is_exact()
    }

    fn eigenvalues(&self) -> Vec<f64> {
        evenspec::linalg::eigenvalues(&self.inner)
    }

    fn permuted(&self, perm: Vec<usize>) -> PyResult<SymMatrix> {
        Ok(SymMatrix { inner: self.inner.permuted(&perm).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("SymMatrix(n={}, exact={})", self.inner.n(), self.inner.is_exact())
    }
}

#[pyclass(frozen)]
struct CertifiedMatrix {
    inner: evenspec::constructions::CertifiedMatrix,
}

#[pymethods]
impl CertifiedMatrix {
    #[getter]
    fn matrix(&self) -> SymMatrix {
        SymMatrix { inner: self.inner.matrix.clone() }
    }

    #[getter]
    fn graph(&self) -> Graph {
        Graph { inner: self.inner.graph.clone() }
    }

    #[getter]
    fn provenance(&self) -> String {
        self.inner.provenance.clone()
    }

    #[getter]
    fn certificate(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        cert_dict(py, &self.inner.certificate)
    }

    fn __repr__(&self) -> String {
        format!(
            "CertifiedMatrix(order={}, square={}, provenance={:?})",
            self.inner.order(),
            self.inner.certificate.is_square,
            self.inner.provenance
        )
    }
}

impl From<evenspec::constructions::CertifiedMatrix> for CertifiedMatrix {
    fn from(inner: evenspec::constructions::CertifiedMatrix) -> Self {
        CertifiedMatrix { inner }
    }
}

// ============================================================
// functions
// ============================================================

#[pyfunction]
fn enumerate_connected(n: usize) -> PyResult<Vec<Graph>> {
    Ok(evenspec::graphs::enumerate_connected(n)
        .map_err(err)?
        .into_iter()
        .map(|g| Graph { inner: g })
        .collect())
}

#[pyfunction]
fn canonical_label(g: &Graph) -> PyResult<u64> {
    evenspec::graphs::canonical_label(&g.inner).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (m, tol=None))]
fn certify_square(py: Python<'_>, m: &SymMatrix, tol: Option<f64>) -> PyResult<Py<PyAny>> {
    cert_dict(py, &evenspec::linalg::certify_square(&m.inner, tol.unwrap_or(DEFAULT_TOL)))
}

#[pyfunction]
fn cycle_matrix(order: usize) -> PyResult<CertifiedMatrix> {
    Ok(evenspec::constructions::cycle_matrix(order).map_err(err)?.into())
}

#[pyfunction]
#[pyo3(signature = (order, values=None))]
fn even_complete(order: usize, values: Option<Vec<f64>>) -> PyResult<CertifiedMatrix> {
    Ok(evenspec::constructions::even_complete(order, values.as_deref()).map_err(err)?.into())
}

#[pyfunction]
fn rank2_realize(parts: Vec<(usize, usize)>, r: usize) -> PyResult<CertifiedMatrix> {
    Ok(evenspec::constructions::rank2_realize(&parts, r).map_err(err)?.into())
}

#[pyfunction]
#[pyo3(signature = (g, seed=0))]
fn frame_realize(g: &Graph, seed: u64) -> Option<CertifiedMatrix> {
    evenspec::constructions::frame_realize(&g.inner, seed).map(Into::into)
}

#[pyfunction]
fn hs_join(a: &SymMatrix, b: &SymMatrix, u: Vec<f64>, mu: f64) -> PyResult<SymMatrix> {
    let j = evenspec::constructions::hs_join(&a.inner, &b.inner, &u, mu).map_err(err)?;
    Ok(SymMatrix { inner: j.matrix })
}

fn config(seed: u64, restarts: Option<usize>, max_iters: Option<usize>) -> SearchConfig {
    let mut cfg = SearchConfig { seed, ..SearchConfig::default() };
    if let Some(r) = restarts {
        cfg.restarts = r;
    }
    if let Some(i) = max_iters {
        cfg.max_iters = i;
    }
    cfg
}

#[pyfunction]
#[pyo3(signature = (g, seed=0, restarts=None, max_iters=None))]
fn numeric_certify(
    g: &Graph,
    seed: u64,
    restarts: Option<usize>,
    max_iters: Option<usize>,
) -> Option<CertifiedMatrix> {
    evenspec::search::numeric_certify(&g.inner, &config(seed, restarts, max_iters)).map(Into::into)
}

#[pyfunction]
#[pyo3(signature = (g, seed=0, restarts=None, max_iters=None))]
fn classify(
    py: Python<'_>,
    g: &Graph,
    seed: u64,
    restarts: Option<usize>,
    max_iters: Option<usize>,
) -> PyResult<Py<PyAny>> {
    let rec = evenspec::classify::classify_graph(&g.inner, &config(seed, restarts, max_iters))
        .map_err(err)?;
    json_to_py(py, &serde_json::to_value(&rec).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

#[pyfunction]
#[pyo3(signature = (n, seed=0))]
fn classify_all(py: Python<'_>, n: usize, seed: u64) -> PyResult<Vec<Py<PyAny>>> {
    let records = evenspec::classify::classify_all(n, &config(seed, None, None)).map_err(err)?;
    records
        .iter()
        .map(|r| {
            json_to_py(
                py,
                &serde_json::to_value(r).map_err(|e| PyValueError::new_err(e.to_string()))?,
            )
        })
        .collect()
}

#[pymodule]
fn evenspec_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<SymMatrix>()?;
    m.add_class::<CertifiedMatrix>()?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_label, m)?)?;
    m.add_function(wrap_pyfunction!(certify_square, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(even_complete, m)?)?;
    m.add_function(wrap_pyfunction!(rank2_realize, m)?)?;
    m.add_function(wrap_pyfunction!(frame_realize, m)?)?;
    m.add_function(wrap_pyfunction!(hs_join, m)?)?;
    m.add_function(wrap_pyfunction!(numeric_certify, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_all, m)?)?;
    m.add("DEFAULT_TOL", DEFAULT_TOL)?;
    Ok(())
}

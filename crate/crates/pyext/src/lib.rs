//! Python bindings: the `permpoly` extension module.
//!
//! Exposes the graph type, the generators, the recognition and orientation
//! pipeline and the exact polynomial routes. Polynomials are returned as
//! lists of Python ints (index = degree); reports and witnesses as plain
//! dicts mirroring the JSON wire format.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use permpoly_core as core;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// serde_json::Value -> Python object, for report-shaped outputs.
fn value_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        serde_json::Value::Null => py.None().into_bound(py),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.into_any()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(value_to_py(py, item)?)?;
            }
            list.into_any()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, value_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize_to_py<'py, T: serde::Serialize>(py: Python<'py>, t: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(t).map_err(|e| PyValueError::new_err(e.to_string()))?;
    value_to_py(py, &v)
}

fn poly_coeffs(p: &core::IntPolynomial) -> Vec<BigInt> {
    if p.is_zero() {
        return vec![BigInt::from(0)];
    }
    p.coeffs().to_vec()
}

/// An undirected simple graph with stable vertex and edge ids.
#[pyclass(name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: core::build_graph(n, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let (g, _) = core::graph_from_json(s).map_err(err)?;
        Ok(PyGraph { inner: g })
    }

    fn to_json(&self) -> String {
        core::graph_to_json(&self.inner, None)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

fn orientation_of(g: &PyGraph, pairs: Vec<(usize, usize)>) -> PyResult<core::Orientation> {
    core::Orientation::new(&g.inner, pairs).map_err(err)
}

#[pyfunction]
fn bipartition(g: &PyGraph) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let c = core::bipartition(&g.inner).map_err(err)?;
    Ok((c.part_u(), c.part_v()))
}

#[pyfunction]
fn blocks(g: &PyGraph) -> PyResult<(Vec<Vec<usize>>, Vec<usize>)> {
    let d = core::blocks(&g.inner).map_err(err)?;
    Ok((d.blocks, d.cut_vertices))
}

#[pyfunction]
#[pyo3(signature = (g, bound=None))]
fn enumerate_cycles(g: &PyGraph, bound: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
    let cycles =
        core::enumerate_cycles_with_bound(&g.inner, bound.unwrap_or(core::DEFAULT_CYCLE_BOUND))
            .map_err(err)?;
    Ok(cycles.iter().map(|c| c.vertices().to_vec()).collect())
}

#[pyfunction]
fn count_perfect_matchings(g: &PyGraph) -> u128 {
    core::count_perfect_matchings(&g.inner)
}

#[pyfunction]
fn is_nice_cycle(g: &PyGraph, cycle: Vec<usize>) -> bool {
    let c = core::Cycle::new(&g.inner, cycle);
    core::is_nice_cycle(&g.inner, &c)
}

#[pyfunction]
fn is_planar(g: &PyGraph) -> bool {
    core::is_planar(&g.inner)
}

/// (rotation per vertex, face walks as vertex lists, outer face index)
type EmbeddingParts = (Vec<Vec<usize>>, Vec<Vec<usize>>, usize);

#[pyfunction]
fn embed_planar(g: &PyGraph) -> PyResult<EmbeddingParts> {
    let emb = core::embed_planar(&g.inner).map_err(err)?;
    let faces = (0..emb.face_count())
        .map(|f| emb.face_vertices(&g.inner, f))
        .collect();
    Ok((emb.rotation().to_vec(), faces, emb.outer_face()))
}

#[pyfunction]
fn is_outerplanar_bipartite(g: &PyGraph) -> PyResult<bool> {
    core::is_outerplanar_bipartite(&g.inner).map_err(err)
}

#[pyfunction]
fn contains_no_even_k23<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let report = core::contains_no_even_k23(&g.inner).map_err(err)?;
    serialize_to_py(py, &report)
}

#[pyfunction]
fn is_block_1cr<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<(bool, Bound<'py, PyAny>)> {
    match core::is_block_1cr(&g.inner).map_err(err)? {
        core::BlockCheck::Resonant => Ok((true, py.None().into_bound(py))),
        core::BlockCheck::NotResonant(v) => Ok((false, serialize_to_py(py, &v)?)),
    }
}

#[pyfunction]
fn ear_decomposition(g: &PyGraph, cycle: Vec<usize>) -> PyResult<(Vec<usize>, Vec<Vec<usize>>)> {
    let c = core::Cycle::new(&g.inner, cycle);
    let d = core::ear_decomposition(&g.inner, &c).map_err(err)?;
    Ok((d.start_cycle, d.ears))
}

#[pyfunction]
#[pyo3(signature = (g, bound=None))]
fn oracle_1cr(g: &PyGraph, bound: Option<usize>) -> PyResult<bool> {
    core::oracle_1cr_with_bound(&g.inner, bound.unwrap_or(core::DEFAULT_CYCLE_BOUND)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, bound=None))]
fn oracle_even_theta<'py>(
    py: Python<'py>,
    g: &PyGraph,
    bound: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let w =
        core::oracle_even_theta_with_bound(&g.inner, bound.unwrap_or(core::DEFAULT_EVEN_THETA_BOUND))
            .map_err(err)?;
    match w {
        None => Ok(py.None().into_bound(py)),
        Some(w) => serialize_to_py(py, &w),
    }
}

#[pyfunction]
fn orient_graph(g: &PyGraph) -> PyResult<Vec<(usize, usize)>> {
    Ok(core::orient_graph(&g.inner).map_err(err)?.directions().to_vec())
}

#[pyfunction]
fn is_oddly_oriented(
    g: &PyGraph,
    orientation: Vec<(usize, usize)>,
    cycle: Vec<usize>,
) -> PyResult<bool> {
    let o = orientation_of(g, orientation)?;
    let c = core::Cycle::new(&g.inner, cycle);
    core::is_oddly_oriented(&g.inner, &o, &c).map_err(err)
}

#[pyfunction]
fn verify_all_cycles_odd(g: &PyGraph, orientation: Vec<(usize, usize)>) -> PyResult<bool> {
    let o = orientation_of(g, orientation)?;
    core::verify_all_cycles_odd(&g.inner, &o).map_err(err)
}

#[pyfunction]
fn verify_pfaffian(g: &PyGraph, orientation: Vec<(usize, usize)>) -> PyResult<bool> {
    let o = orientation_of(g, orientation)?;
    core::verify_pfaffian(&g.inner, &o).map_err(err)
}

/// Permanental polynomial by the determinant route; coefficients ascending.
#[pyfunction]
fn perm_poly(g: &PyGraph) -> PyResult<Vec<BigInt>> {
    Ok(poly_coeffs(&core::perm_poly_fast(&g.inner).map_err(err)?))
}

#[pyfunction]
fn perm_poly_oracle(g: &PyGraph) -> PyResult<Vec<BigInt>> {
    Ok(poly_coeffs(&core::perm_poly_oracle(&g.inner).map_err(err)?))
}

#[pyfunction]
fn perm_poly_biadjacency(g: &PyGraph) -> PyResult<Vec<BigInt>> {
    let coloring = core::bipartition(&g.inner).map_err(err)?;
    let o = core::orient_graph(&g.inner).map_err(err)?;
    Ok(poly_coeffs(
        &core::perm_poly_biadjacency(&g.inner, &coloring, &o).map_err(err)?,
    ))
}

#[pyfunction]
fn charpoly_adjacency(g: &PyGraph) -> Vec<BigInt> {
    poly_coeffs(&core::charpoly(&core::IntMatrix::adjacency(&g.inner)))
}

#[pyfunction]
fn borowiecki_transfer(g: &PyGraph) -> PyResult<Vec<BigInt>> {
    Ok(poly_coeffs(&core::borowiecki_transfer(&g.inner).map_err(err)?))
}

#[pyfunction]
fn closed_form_g1(s: usize) -> PyResult<Vec<BigInt>> {
    if s < 2 {
        return Err(PyValueError::new_err("s must be at least 2"));
    }
    Ok(poly_coeffs(&core::closed_form_g1(s)))
}

#[pyfunction]
fn closed_form_g2(r: usize) -> PyResult<Vec<BigInt>> {
    if r < 1 {
        return Err(PyValueError::new_err("r must be at least 1"));
    }
    Ok(poly_coeffs(&core::closed_form_g2(r)))
}

#[pyfunction]
fn structured_det_dn(a: Vec<BigInt>, b: BigInt) -> BigInt {
    core::structured_det_dn(&a, &b)
}

#[pyfunction]
fn gen_cycle(k: usize) -> PyResult<PyGraph> {
    if k < 3 {
        return Err(PyValueError::new_err("a cycle needs at least 3 vertices"));
    }
    Ok(PyGraph {
        inner: core::gen_cycle(k),
    })
}

#[pyfunction]
fn gen_path(k: usize) -> PyGraph {
    PyGraph {
        inner: core::gen_path(k),
    }
}

#[pyfunction]
fn gen_theta(l1: usize, l2: usize, l3: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: core::gen_theta(l1, l2, l3).map_err(err)?,
    })
}

#[pyfunction]
fn gen_g1(s: usize) -> PyResult<PyGraph> {
    if s < 2 {
        return Err(PyValueError::new_err("s must be at least 2"));
    }
    Ok(PyGraph {
        inner: core::gen_g1(s),
    })
}

#[pyfunction]
fn gen_g2(r: usize) -> PyResult<PyGraph> {
    if r < 1 {
        return Err(PyValueError::new_err("r must be at least 1"));
    }
    Ok(PyGraph {
        inner: core::gen_g2(r),
    })
}

/// `turns` is a string over L, S, R with one letter per hexagon after the
/// second, or "B" for the branched four-hexagon system.
#[pyfunction]
#[pyo3(signature = (h, turns=""))]
fn gen_hex_chain(h: usize, turns: &str) -> PyResult<PyGraph> {
    if turns.eq_ignore_ascii_case("B") {
        if h != 4 {
            return Err(PyValueError::new_err("the branched code B needs h = 4"));
        }
        return Ok(PyGraph {
            inner: core::gen_hex_branched(),
        });
    }
    let parsed: PyResult<Vec<core::Turn>> = turns
        .chars()
        .map(|c| match c.to_ascii_uppercase() {
            'L' => Ok(core::Turn::Left),
            'S' => Ok(core::Turn::Straight),
            'R' => Ok(core::Turn::Right),
            other => Err(PyValueError::new_err(format!("unknown turn code {other}"))),
        })
        .collect();
    Ok(PyGraph {
        inner: core::gen_hex_chain(h, &parsed?).map_err(err)?,
    })
}

#[pyfunction]
fn gen_hex_branched() -> PyGraph {
    PyGraph {
        inner: core::gen_hex_branched(),
    }
}

#[pyfunction]
fn gen_cube() -> PyGraph {
    PyGraph {
        inner: core::gen_cube(),
    }
}

#[pyfunction]
fn gen_complete_bipartite(a: usize, b: usize) -> PyGraph {
    PyGraph {
        inner: core::gen_complete_bipartite(a, b),
    }
}

#[pymodule]
fn permpoly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(bipartition, m)?)?;
    m.add_function(wrap_pyfunction!(blocks, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(count_perfect_matchings, m)?)?;
    m.add_function(wrap_pyfunction!(is_nice_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(is_planar, m)?)?;
    m.add_function(wrap_pyfunction!(embed_planar, m)?)?;
    m.add_function(wrap_pyfunction!(is_outerplanar_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(contains_no_even_k23, m)?)?;
    m.add_function(wrap_pyfunction!(is_block_1cr, m)?)?;
    m.add_function(wrap_pyfunction!(ear_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_1cr, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_even_theta, m)?)?;
    m.add_function(wrap_pyfunction!(orient_graph, m)?)?;
    m.add_function(wrap_pyfunction!(is_oddly_oriented, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all_cycles_odd, m)?)?;
    m.add_function(wrap_pyfunction!(verify_pfaffian, m)?)?;
    m.add_function(wrap_pyfunction!(perm_poly, m)?)?;
    m.add_function(wrap_pyfunction!(perm_poly_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(perm_poly_biadjacency, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly_adjacency, m)?)?;
    m.add_function(wrap_pyfunction!(borowiecki_transfer, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_g1, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_g2, m)?)?;
    m.add_function(wrap_pyfunction!(structured_det_dn, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(gen_path, m)?)?;
    m.add_function(wrap_pyfunction!(gen_theta, m)?)?;
    m.add_function(wrap_pyfunction!(gen_g1, m)?)?;
    m.add_function(wrap_pyfunction!(gen_g2, m)?)?;
    m.add_function(wrap_pyfunction!(gen_hex_chain, m)?)?;
    m.add_function(wrap_pyfunction!(gen_hex_branched, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cube, m)?)?;
    m.add_function(wrap_pyfunction!(gen_complete_bipartite, m)?)?;
    Ok(())
}

//! Python bindings. Counts come back as Python ints, rationals as `"p/q"` strings.

use num_bigint::BigUint;
use pyo3::exceptions::{PyNotImplementedError, PyRuntimeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use tensor_walks::arith::{gauss_sum_check, rat_to_string};
use tensor_walks::closed_forms;
use tensor_walks::group::{parse_spec, GroupData, ModuleChar};
use tensor_walks::quiver;
use tensor_walks::series;
use tensor_walks::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Unsupported(_) => PyNotImplementedError::new_err(e.to_string()),
        Error::Consistency(_) => PyRuntimeError::new_err(e.to_string()),
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn load(group: &str) -> PyResult<(std::sync::Arc<GroupData>, ModuleChar)> {
    parse_spec(group).and_then(|s| s.build()).map_err(py_err)
}

/// Walks of length `k` between two irreps (index or label) on the McKay quiver.
#[pyfunction]
#[pyo3(signature = (group, k, source = "0", target = "0", method = "character"))]
fn walks(group: &str, k: u32, source: &str, target: &str, method: &str) -> PyResult<BigUint> {
    let (g, v) = load(group)?;
    let a = g.irrep_index(source).map_err(py_err)?;
    let c = g.irrep_index(target).map_err(py_err)?;
    let r = match method {
        "character" => quiver::walk_count_character(&g, &v, k, a, c),
        "matrix" => quiver::mckay_adjacency(&g, &v).and_then(|m| quiver::walk_count_matrix(&m, k, a, c)),
        _ => return Err(PyValueError::new_err(format!("unknown method {method:?}"))),
    };
    r.map_err(py_err)
}

/// Multiplicity of every irrep in the k-th tensor power, keyed by label.
#[pyfunction]
fn dims(group: &str, k: u32) -> PyResult<Vec<(String, BigUint)>> {
    let (g, v) = load(group)?;
    let row = quiver::walk_counts_character_row(&g, &v, k, 0).map_err(py_err)?;
    Ok(g.irreps.iter().map(|ir| ir.label.clone()).zip(row).collect())
}

/// Invariant dimensions for k = 0..=max_k.
#[pyfunction]
fn invariants(group: &str, max_k: u32) -> PyResult<Vec<BigUint>> {
    let (g, v) = load(group)?;
    quiver::invariant_counts(&g, &v, max_k).map_err(py_err)
}

/// Adjacency matrix and vertex labels of the McKay quiver.
#[pyfunction]
fn mckay(group: &str) -> PyResult<(Vec<String>, Vec<Vec<BigUint>>)> {
    let (g, v) = load(group)?;
    let a = quiver::mckay_adjacency(&g, &v).map_err(py_err)?;
    let n = a.dim();
    let rows = (0..n).map(|i| (0..n).map(|j| a.get(i, j).clone()).collect()).collect();
    Ok((a.labels.clone(), rows))
}

/// Reduced Poincare series `(num, den)` as lists of rational strings, constant term first.
#[pyfunction]
#[pyo3(signature = (group, irrep = "0", method = "character"))]
fn poincare(group: &str, irrep: &str, method: &str) -> PyResult<(Vec<String>, Vec<String>)> {
    let (g, v) = load(group)?;
    let lam = g.irrep_index(irrep).map_err(py_err)?;
    let rf = match method {
        "character" => series::poincare_character(&g, &v, lam).map(|(rf, _)| rf),
        "cramer" => quiver::mckay_adjacency(&g, &v).and_then(|a| series::poincare_cramer(&a, lam)),
        _ => return Err(PyValueError::new_err(format!("unknown method {method:?}"))),
    }
    .map_err(py_err)?;
    let cs = |p: &tensor_walks::arith::Poly| p.coeffs().iter().map(rat_to_string).collect();
    Ok((cs(rf.num()), cs(rf.den())))
}

/// Closed-form walk count on Z_r with V = G_1 + G_{r-1}.
#[pyfunction]
fn cyclic_walks(r: u32, k: u32, source: u32, target: u32) -> PyResult<BigUint> {
    closed_forms::cyclic_walks(r, k, source, target).map_err(py_err)
}

/// Closed-form walk count from 0 to `target` on a product of cyclic groups.
#[pyfunction]
fn abelian_walks(radii: Vec<u32>, k: u32, target: Vec<u32>) -> PyResult<BigUint> {
    closed_forms::abelian_walks(&radii, k, &target).map_err(py_err)
}

/// Invariants of Z_r wr S_n in the k-th tensor power of the monomial module.
#[pyfunction]
fn wreath_invariants(r: u32, n: u32, k: u32) -> PyResult<BigUint> {
    closed_forms::wreath_invariants(r, n, k).map_err(py_err)
}

/// Whether the Gauss sum squares to `(-1)^((p-1)/2) p` in Q(zeta_p).
#[pyfunction]
fn gauss_sum_holds(p: u64) -> PyResult<bool> {
    gauss_sum_check(p).map(|r| r.holds).map_err(py_err)
}

/// Runs one verification suite; returns `(passed, [(check, passed, detail)])`.
#[pyfunction]
fn verify(suite: &str) -> PyResult<(bool, Vec<(String, bool, String)>)> {
    let r = tensor_walks::verify::run_suite(suite).map_err(py_err)?;
    let checks = r.checks.iter().map(|c| (c.name.clone(), c.passed, c.detail.clone())).collect();
    Ok((r.passed(), checks))
}

#[pymodule]
fn tensor_walks_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(walks, m)?)?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    m.add_function(wrap_pyfunction!(invariants, m)?)?;
    m.add_function(wrap_pyfunction!(mckay, m)?)?;
    m.add_function(wrap_pyfunction!(poincare, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_walks, m)?)?;
    m.add_function(wrap_pyfunction!(abelian_walks, m)?)?;
    m.add_function(wrap_pyfunction!(wreath_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_sum_holds, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("SUITES", tensor_walks::verify::SUITES.to_vec())?;
    Ok(())
}

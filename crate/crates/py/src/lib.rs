//! Python bindings: polynomials, bridges, equation sets and the checks.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ratscroll::polyring::{parse_poly, Domain, ParseContext, Polynomial};
use ratscroll::scroll::export::{
    to_cas_script, to_json, to_plain_text, CasDialect, DEFAULT_EXPAND_DEGREE,
};
use ratscroll::scroll::{self as sc, ScrollProfile};
use ratscroll::verify::{self as vf, EnumerationOptions};
use ratscroll::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn profile(blocks: Vec<u32>) -> PyResult<ScrollProfile> {
    ScrollProfile::new(blocks).map_err(to_py)
}

fn domain(field: Option<u64>) -> PyResult<Domain> {
    match field {
        None => Ok(Domain::Integer),
        Some(p) => Domain::prime_field(p).map_err(to_py),
    }
}

#[pyclass(
    name = "Polynomial",
    module = "pyratscroll",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyPolynomial {
    inner: Polynomial,
}

impl From<Polynomial> for PyPolynomial {
    fn from(inner: Polynomial) -> Self {
        PyPolynomial { inner }
    }
}

#[pymethods]
impl PyPolynomial {
    /// Parses `text` over Z, or over F_field when `field` is given.
    #[new]
    #[pyo3(signature = (text, field = None))]
    fn new(text: &str, field: Option<u64>) -> PyResult<Self> {
        let ctx = ParseContext::new(domain(field)?);
        Ok(parse_poly(text, &ctx).map_err(to_py)?.into())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Polynomial::from_json(text).map_err(to_py)?.into())
    }

    fn to_json(&self) -> PyResult<String> {
        self.inner.to_json().map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.inner)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.add(&other.inner).map_err(to_py)?.into())
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.sub(&other.inner).map_err(to_py)?.into())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.mul(&other.inner).map_err(to_py)?.into())
    }

    fn __neg__(&self) -> Self {
        self.inner.neg().into()
    }

    fn __pow__(&self, e: u32, modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(PyValueError::new_err("three-argument pow is not supported"));
        }
        Ok(self.inner.pow(e).into())
    }

    fn reduce_mod(&self, q: u64) -> PyResult<Self> {
        Ok(self.inner.reduce_mod(q).map_err(to_py)?.into())
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }
}

/// `B_{a,b}` between blocks `x_block` and `y_block`.
#[pyfunction]
#[pyo3(signature = (a, b, x_block = 1, y_block = 2))]
fn bridge(a: u32, b: u32, x_block: u32, y_block: u32) -> PyResult<PyPolynomial> {
    Ok(sc::bridge(a, b, x_block, y_block).map_err(to_py)?.1.into())
}

#[pyfunction]
#[pyo3(signature = (a, b, x_block = 1, y_block = 2))]
fn bridge_via_lists(a: u32, b: u32, x_block: u32, y_block: u32) -> PyResult<PyPolynomial> {
    Ok(sc::bridge_via_lists(a, b, x_block, y_block)
        .map_err(to_py)?
        .into())
}

#[pyclass(name = "EquationSet", module = "pyratscroll", frozen)]
pub struct PyEquationSet {
    inner: sc::EquationSet,
}

#[pymethods]
impl PyEquationSet {
    #[getter]
    fn profile(&self) -> Vec<u32> {
        self.inner.profile.blocks().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.j_len()
    }

    fn summary(&self) -> String {
        self.inner.summary()
    }

    /// `(label, polynomial)` for every generator of J, fully expanded.
    fn generators(&self) -> Vec<(String, PyPolynomial)> {
        self.inner
            .j_generators()
            .iter()
            .map(|g| (g.label(), g.expand().into()))
            .collect()
    }

    fn minors(&self) -> Vec<(String, PyPolynomial)> {
        self.inner
            .minors
            .iter()
            .map(|m| (m.label(), m.poly.clone().into()))
            .collect()
    }

    fn to_text(&self) -> String {
        to_plain_text(&self.inner, DEFAULT_EXPAND_DEGREE)
    }

    fn to_json(&self) -> PyResult<String> {
        to_json(&self.inner, DEFAULT_EXPAND_DEGREE).map_err(to_py)
    }

    /// Script for `"m2"` (Macaulay2) or `"singular"`.
    #[pyo3(signature = (dialect = "m2"))]
    fn to_cas_script(&self, dialect: &str) -> PyResult<String> {
        let d = match dialect {
            "m2" | "cas" => CasDialect::Macaulay2,
            "singular" => CasDialect::Singular,
            other => return Err(PyValueError::new_err(format!("unknown dialect {other:?}"))),
        };
        Ok(to_cas_script(&self.inner, d))
    }
}

#[pyfunction]
fn equation_set(blocks: Vec<u32>) -> PyResult<PyEquationSet> {
    let inner = sc::equation_set(&profile(blocks)?).map_err(to_py)?;
    Ok(PyEquationSet { inner })
}

#[pyfunction]
fn check_property1(a: u32, b: u32) -> PyResult<bool> {
    Ok(vf::check_property1(a, b).map_err(to_py)?.passed)
}

#[pyfunction]
fn check_property2(a: u32, b: u32) -> PyResult<bool> {
    Ok(vf::check_property2(a, b).map_err(to_py)?.passed)
}

#[pyfunction]
fn check_parametrization(blocks: Vec<u32>) -> PyResult<bool> {
    Ok(vf::check_parametrization(&profile(blocks)?)
        .map_err(to_py)?
        .passed())
}

#[pyfunction]
fn plucker_identity(d: u32) -> bool {
    vf::plucker_identity(d).passed()
}

#[pyclass(name = "VarietyReport", module = "pyratscroll", frozen, get_all)]
pub struct PyVarietyReport {
    profile: Vec<u32>,
    q: u64,
    count_j: u64,
    count_p: u64,
    witnesses: Vec<Vec<u64>>,
    passed: bool,
    json: String,
}

#[pymethods]
impl PyVarietyReport {
    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "VarietyReport(profile={:?}, q={}, count_J={}, count_P={}, witnesses={})",
            self.profile,
            self.q,
            self.count_j,
            self.count_p,
            self.witnesses.len()
        )
    }
}

/// Compares the F_q-points of V(J) and V(P). Raises RuntimeError when the
/// enumeration would exceed `budget` evaluations.
#[pyfunction]
#[pyo3(signature = (blocks, q, budget = None))]
fn compare_varieties(
    py: Python<'_>,
    blocks: Vec<u32>,
    q: u64,
    budget: Option<u128>,
) -> PyResult<PyVarietyReport> {
    let p = profile(blocks)?;
    let mut opts = EnumerationOptions::default();
    if let Some(b) = budget {
        opts.budget = b;
    }
    let r = py
        .detach(|| vf::compare_varieties(&p, q, &opts))
        .map_err(to_py)?;
    Ok(PyVarietyReport {
        profile: r.profile.clone(),
        q: r.q,
        count_j: r.count_j,
        count_p: r.count_p,
        witnesses: r.witnesses.clone(),
        passed: r.passed(),
        json: r.to_json().map_err(to_py)?,
    })
}

#[pymodule]
fn pyratscroll(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyEquationSet>()?;
    m.add_class::<PyVarietyReport>()?;
    m.add_function(wrap_pyfunction!(bridge, m)?)?;
    m.add_function(wrap_pyfunction!(bridge_via_lists, m)?)?;
    m.add_function(wrap_pyfunction!(equation_set, m)?)?;
    m.add_function(wrap_pyfunction!(check_property1, m)?)?;
    m.add_function(wrap_pyfunction!(check_property2, m)?)?;
    m.add_function(wrap_pyfunction!(check_parametrization, m)?)?;
    m.add_function(wrap_pyfunction!(plucker_identity, m)?)?;
    m.add_function(wrap_pyfunction!(compare_varieties, m)?)?;
    Ok(())
}

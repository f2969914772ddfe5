//! Python bindings for the minorphi kernel.
//!
//! Exposes the coefficient rings, canonical sparse polynomials, the Toeplitz
//! minor machinery, and the involution checks as an in-process extension
//! module. Build with `cargo build -p minorphi-py` and see
//! `python/smoke_test.py` for a usage tour.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use minorphi as kernel;
use minorphi::{Polynomial, RingSpec};

fn value_error(e: kernel::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A coefficient ring: the integers (`"z"`) or integers modulo M
/// (`"zmod:M"`, M >= 2).
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Ring {
    spec: RingSpec,
}

#[pymethods]
impl Ring {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        RingSpec::parse(spec)
            .map(|spec| Ring { spec })
            .map_err(value_error)
    }

    /// Modulus as an int for `zmod` rings, None for the integers.
    fn modulus(&self) -> Option<BigInt> {
        self.spec.modulus().map(|m| BigInt::from(m.clone()))
    }

    fn __str__(&self) -> String {
        self.spec.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ring('{}')", self.spec)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<PyRef<'_, Ring>>()
            .map(|o| o.spec == self.spec)
            .unwrap_or(false)
    }
}

/// A canonical sparse polynomial in `x1..xn` over a [`Ring`].
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Poly {
    inner: Polynomial,
}

impl Poly {
    fn wrap(inner: Polynomial) -> Self {
        Poly { inner }
    }
}

#[pymethods]
impl Poly {
    /// Parses a polynomial from text, e.g. `Poly(ring, 3, "x1^2 - 2*x2*x3 + 7")`.
    #[new]
    fn new(ring: &Ring, nvars: usize, text: &str) -> PyResult<Self> {
        Polynomial::parse(&ring.spec, nvars, text)
            .map(Poly::wrap)
            .map_err(value_error)
    }

    #[staticmethod]
    fn zero(ring: &Ring, nvars: usize) -> Self {
        Poly::wrap(Polynomial::zero(&ring.spec, nvars))
    }

    /// The generator `x_index` (1-based).
    #[staticmethod]
    fn variable(ring: &Ring, nvars: usize, index: usize) -> PyResult<Self> {
        Polynomial::variable(&ring.spec, nvars, index)
            .map(Poly::wrap)
            .map_err(value_error)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    #[getter]
    fn ring(&self) -> Ring {
        Ring {
            spec: self.inner.ring().clone(),
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    /// Terms in canonical order as (exponents, coefficient) pairs.
    fn terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.inner
            .terms()
            .map(|(m, c)| (m.exps().to_vec(), c.clone()))
            .collect()
    }

    /// Substitutes `images[k-1]` for `x_k` and expands.
    fn substitute(&self, images: Vec<Poly>) -> PyResult<Poly> {
        let images: Vec<Polynomial> = images.into_iter().map(|p| p.inner).collect();
        let h = kernel::Homomorphism::new(self.inner.ring(), self.inner.nvars(), images)
            .map_err(value_error)?;
        self.inner
            .substitute(&h)
            .map(Poly::wrap)
            .map_err(value_error)
    }

    /// JSON form as a string (ring, nvars, terms in canonical order).
    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        self.inner
            .add(&other.inner)
            .map(Poly::wrap)
            .map_err(value_error)
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        self.inner
            .sub(&other.inner)
            .map(Poly::wrap)
            .map_err(value_error)
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        self.inner
            .mul(&other.inner)
            .map(Poly::wrap)
            .map_err(value_error)
    }

    fn __neg__(&self) -> Poly {
        Poly::wrap(self.inner.neg())
    }

    fn __pow__(&self, exp: u32, _modulo: Option<&Bound<'_, PyAny>>) -> Poly {
        Poly::wrap(self.inner.pow(exp))
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<PyRef<'_, Poly>>()
            .map(|o| o.inner == self.inner)
            .unwrap_or(false)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Poly(Ring('{}'), {}, '{}')",
            self.inner.ring(),
            self.inner.nvars(),
            self.inner
        )
    }
}

/// The principal minors `[m_1, ..., m_n]` of the Toeplitz matrix T(n).
#[pyfunction]
fn minors(ring: &Ring, n: usize) -> Vec<Poly> {
    kernel::minor_table(&ring.spec, n).minors()[1..]
        .iter()
        .cloned()
        .map(Poly::wrap)
        .collect()
}

/// The k-by-k Toeplitz matrix T(k) in `x1..xn` as a list of rows.
#[pyfunction]
fn toeplitz_matrix(ring: &Ring, n: usize, k: usize) -> PyResult<Vec<Vec<Poly>>> {
    let t = kernel::build_toeplitz(&ring.spec, n, k).map_err(value_error)?;
    Ok((0..k)
        .map(|i| (0..k).map(|j| Poly::wrap(t.entry(i, j).clone())).collect())
        .collect())
}

fn matrix_from_rows(rows: Vec<Vec<Poly>>) -> PyResult<kernel::PolyMatrix> {
    let rows: Vec<Vec<Polynomial>> = rows
        .into_iter()
        .map(|row| row.into_iter().map(|p| p.inner).collect())
        .collect();
    kernel::PolyMatrix::from_rows(rows).map_err(value_error)
}

/// Determinant as the full signed permutation sum (sizes up to 8).
#[pyfunction]
fn det_leibniz(rows: Vec<Vec<Poly>>) -> PyResult<Poly> {
    kernel::det_leibniz(&matrix_from_rows(rows)?)
        .map(Poly::wrap)
        .map_err(value_error)
}

/// Division-free determinant by the Berkowitz iteration (any size).
#[pyfunction]
fn det_berkowitz(rows: Vec<Vec<Poly>>) -> PyResult<Poly> {
    Ok(Poly::wrap(kernel::det_berkowitz(&matrix_from_rows(rows)?)))
}

/// Applies the substitution `x_k -> m_k` (twice when `twice=True`; the
/// double application is the identity).
#[pyfunction]
#[pyo3(signature = (p, twice = false))]
fn apply_phi(p: &Poly, twice: bool) -> PyResult<Poly> {
    let ring = p.inner.ring().clone();
    let n = p.inner.nvars();
    let result = if twice {
        kernel::apply_phi_twice(&p.inner, &ring, n)
    } else {
        kernel::apply_phi(&p.inner, &ring, n)
    };
    result.map(Poly::wrap).map_err(value_error)
}

/// Checks `phi(phi(x_k)) = x_k` for every generator and returns a report
/// dict with keys "ring", "n", "overall", and "generators".
#[pyfunction]
fn verify_involution<'py>(py: Python<'py>, ring: &Ring, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let report = kernel::verify_involution(&ring.spec, n);
    let out = PyDict::new(py);
    out.set_item("ring", report.ring.to_string())?;
    out.set_item("n", report.n)?;
    out.set_item("overall", report.overall)?;
    let generators = PyList::empty(py);
    for g in &report.per_generator {
        let entry = PyDict::new(py);
        entry.set_item("k", g.k)?;
        entry.set_item("pass", g.pass)?;
        entry.set_item("image", g.image.to_string())?;
        entry.set_item("double_image", g.double_image.to_string())?;
        generators.append(entry)?;
    }
    out.set_item("generators", generators)?;
    Ok(out)
}

/// Determinant of T(k) with its first column replaced by `column`, where
/// k = len(column); ring and variable count are taken from the entries.
#[pyfunction]
fn first_column_det(column: Vec<Poly>) -> PyResult<Poly> {
    let first = column
        .first()
        .ok_or_else(|| PyValueError::new_err("column must be nonempty"))?;
    let ring = first.inner.ring().clone();
    let n = first.inner.nvars();
    let column: Vec<Polynomial> = column.into_iter().map(|p| p.inner).collect();
    kernel::first_column_det(&ring, n, &column)
        .map(Poly::wrap)
        .map_err(value_error)
}

/// Recovers the generator `x_k` from the true minor table by the inverse
/// recurrence.
#[pyfunction]
fn recover_generator(ring: &Ring, n: usize, k: usize) -> PyResult<Poly> {
    let table = kernel::minor_table(&ring.spec, n);
    kernel::recover_generator(&ring.spec, n, k, &table)
        .map(Poly::wrap)
        .map_err(value_error)
}

#[pymodule]
fn minorphi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("DET_LEIBNIZ_MAX_SIZE", kernel::DET_LEIBNIZ_MAX_SIZE)?;
    m.add_class::<Ring>()?;
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(minors, m)?)?;
    m.add_function(wrap_pyfunction!(toeplitz_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(det_leibniz, m)?)?;
    m.add_function(wrap_pyfunction!(det_berkowitz, m)?)?;
    m.add_function(wrap_pyfunction!(apply_phi, m)?)?;
    m.add_function(wrap_pyfunction!(verify_involution, m)?)?;
    m.add_function(wrap_pyfunction!(first_column_det, m)?)?;
    m.add_function(wrap_pyfunction!(recover_generator, m)?)?;
    Ok(())
}

//! Python bindings.

use std::str::FromStr;

use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tc::certify::{self as cert, Mode};
use tc::classify as nt;
use tc::mcg::{self, PathFile};
use tc::surface::builtin_surface;
use tc::traintrack::MeasuredTrainTrack;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(err)?;
    py.import("json")?.call_method1("loads", (s,))
}

fn k(s: &str) -> PyResult<BigRational> {
    cert::parse_k(s).map_err(err)
}

fn mode(s: &str) -> PyResult<Mode> {
    Mode::from_str(s).map_err(err)
}

fn rationals(v: Vec<String>) -> PyResult<Vec<BigRational>> {
    v.iter().map(|s| BigRational::from_str(s.trim()).map_err(|_| err(format!("bad rational {s:?}")))).collect()
}

/// A mapping class as a flip path on a preset surface.
#[pyclass(name = "FlipPath", module = "trackcert", skip_from_py_object)]
#[derive(Clone)]
struct PyFlipPath {
    surface: String,
    inner: mcg::FlipPath,
}

#[pymethods]
impl PyFlipPath {
    #[staticmethod]
    fn from_word(surface: &str, word: &str) -> PyResult<Self> {
        Ok(PyFlipPath { surface: surface.into(), inner: mcg::word_to_path(surface, word).map_err(err)? })
    }

    /// A word file or path file.
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let input = mcg::MappingInput::from_json(s).map_err(err)?;
        Ok(PyFlipPath { surface: input.surface().into(), inner: input.to_path().map_err(err)? })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&PathFile::from_path(&self.surface, &self.inner)).expect("serializable")
    }

    #[getter]
    fn surface(&self) -> &str {
        &self.surface
    }

    #[getter]
    fn zeta(&self) -> usize {
        self.inner.zeta()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn inverse(&self) -> Self {
        PyFlipPath { surface: self.surface.clone(), inner: self.inner.inverse() }
    }

    fn compose(&self, other: &PyFlipPath) -> PyResult<Self> {
        Ok(PyFlipPath { surface: self.surface.clone(), inner: self.inner.compose(&other.inner).map_err(err)? })
    }

    fn power(&self, k: usize) -> PyResult<Self> {
        Ok(PyFlipPath { surface: self.surface.clone(), inner: self.inner.power(k).map_err(err)? })
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    /// Image of an edge-measure vector given as rational strings.
    fn apply(&self, v: Vec<String>) -> PyResult<Vec<String>> {
        let v = rationals(v)?;
        Ok(self.inner.apply(&v).map_err(err)?.iter().map(|x| x.to_string()).collect())
    }

    fn __repr__(&self) -> String {
        format!("FlipPath({}, length {})", self.surface, self.inner.len())
    }
}

/// A measured train track with rational measures.
#[pyclass(name = "TrainTrack", module = "trackcert", skip_from_py_object)]
#[derive(Clone)]
struct PyTrainTrack {
    inner: MeasuredTrainTrack<BigRational>,
}

#[pymethods]
impl PyTrainTrack {
    /// The track carrying the lamination with these edge measures.
    #[staticmethod]
    fn from_measures(surface: &str, measures: Vec<String>) -> PyResult<Self> {
        let tri = builtin_surface(surface).map_err(err)?;
        let inner = MeasuredTrainTrack::from_triangulation(&tri, &rationals(measures)?).map_err(err)?;
        Ok(PyTrainTrack { inner })
    }

    fn maximal_split(&self) -> PyResult<Self> {
        Ok(PyTrainTrack { inner: self.inner.maximal_split().map_err(err)?.0 })
    }

    fn is_filling(&self) -> bool {
        self.inner.is_filling()
    }

    /// Complementary regions as (cusps, marked points).
    fn census(&self) -> Vec<(usize, usize)> {
        self.inner.census()
    }

    fn num_branches(&self) -> usize {
        self.inner.num_branches()
    }

    fn num_switches(&self) -> usize {
        self.inner.num_switches()
    }

    fn dump<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner.dump())
    }

    /// Preperiod, period and scale factor of the maximal splitting sequence.
    fn detect_periodicity<'py>(&self, py: Python<'py>, max_steps: usize) -> PyResult<Bound<'py, PyAny>> {
        let p = self.inner.detect_periodicity(max_steps).map_err(|e| err(tc::Error::from(e)))?;
        to_py(py, &serde_json::json!({ "n": p.n, "m": p.m, "lambda": p.lambda.to_string() }))
    }
}

#[pyclass(name = "Certificate", module = "trackcert", skip_from_py_object)]
#[derive(Clone)]
struct PyCertificate {
    inner: cert::Certificate,
}

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyCertificate { inner: cert::Certificate::from_json(s).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn zeta(&self) -> usize {
        self.inner.zeta
    }

    #[getter]
    fn d1(&self) -> usize {
        self.inner.d1
    }

    #[getter]
    fn x(&self) -> Vec<String> {
        self.inner.x.iter().map(|x| x.to_string()).collect()
    }

    /// Copy with one fractional digit of `x[i]` replaced.
    fn with_digit(&self, i: usize, place: usize, digit: u8) -> PyResult<Self> {
        if i >= self.inner.x.len() || place == 0 || place > self.inner.d1 || digit > 9 {
            return Err(err("digit position out of range"));
        }
        Ok(PyCertificate { inner: self.inner.with_digit(i, place, digit) })
    }
}

#[pyfunction]
#[pyo3(signature = (path, k="1", mode="adaptive", budget=500))]
fn classify<'py>(
    py: Python<'py>,
    path: &PyFlipPath,
    k: &str,
    mode: &str,
    budget: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let t = nt::nt_classify(&path.inner, &self::k(k)?, self::mode(mode)?, budget);
    to_py(py, &t.summary())
}

/// Generate a certificate and verify it; returns the certificate and report.
#[pyfunction]
#[pyo3(signature = (path, k="1", mode="adaptive", budget=500))]
fn certify<'py>(
    py: Python<'py>,
    path: &PyFlipPath,
    k: &str,
    mode: &str,
    budget: usize,
) -> PyResult<(PyCertificate, Bound<'py, PyAny>)> {
    let g = cert::generate(&path.inner, &self::k(k)?, self::mode(mode)?, budget).map_err(err)?;
    let rep = cert::verify(&path.inner, &g.certificate, &g.params);
    Ok((PyCertificate { inner: g.certificate }, to_py(py, &rep)?))
}

#[pyfunction]
#[pyo3(signature = (path, cert, k="1", mode="adaptive"))]
fn verify<'py>(
    py: Python<'py>,
    path: &PyFlipPath,
    cert: &PyCertificate,
    k: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let rep = cert::verify_with(&path.inner, &cert.inner, &self::k(k)?, self::mode(mode)?).map_err(err)?;
    to_py(py, &rep)
}

/// Strict verifier constants for a path.
#[pyfunction]
#[pyo3(signature = (path, k="1"))]
fn box_params<'py>(py: Python<'py>, path: &PyFlipPath, k: &str) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &cert::derive_params(&path.inner, &self::k(k)?))
}

#[pyfunction]
#[pyo3(signature = (path, budget=500))]
fn invariant<'py>(py: Python<'py>, path: &PyFlipPath, budget: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &nt::pa_invariant(&path.inner, budget).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (p, q, budget=500))]
fn conjugate(p: &PyFlipPath, q: &PyFlipPath, budget: usize) -> PyResult<bool> {
    nt::pa_conjugate(&p.inner, &q.inner, budget).map_err(err)
}

#[pymodule]
#[pyo3(name = "trackcert")]
fn trackcert_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFlipPath>()?;
    m.add_class::<PyTrainTrack>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(box_params, m)?)?;
    m.add_function(wrap_pyfunction!(invariant, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    Ok(())
}

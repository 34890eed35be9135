//! Python module `innerbody`: convex bodies, erosion, metrics and checkers.

use innerbody_core::metrics;
use innerbody_core::parallel::{self, Erosion};
use innerbody_core::verify::{self, GeneratorConfig, GeneratorKind, VerificationReport};
use innerbody_core::{ConvexBody, GeomError, HalfSpace, Vector};
use pyo3::exceptions::{PyNotImplementedError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: GeomError) -> PyErr {
    match e {
        GeomError::UnsupportedDimension(_) => PyNotImplementedError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn vec_of(v: &Vector) -> Vec<f64> {
    v.iter().copied().collect()
}

fn parse_kind(kind: &str) -> PyResult<GeneratorKind> {
    Ok(match kind {
        "hull" => GeneratorKind::HullOfRandomPoints,
        "tangential" => GeneratorKind::Tangential,
        "rectangle" => GeneratorKind::Rectangle,
        "simplex" => GeneratorKind::Simplex,
        "mgon" => GeneratorKind::RegularMgon,
        "fixture" => GeneratorKind::NamedFixture,
        other => return Err(PyValueError::new_err(format!("unknown generator kind {other:?}"))),
    })
}

/// A convex polytope with both representations.
#[pyclass(name = "Body", module = "innerbody", frozen)]
pub struct PyBody {
    inner: ConvexBody,
}

#[pymethods]
impl PyBody {
    #[staticmethod]
    fn from_vertices(points: Vec<Vec<f64>>) -> PyResult<Self> {
        let pts: Vec<Vector> = points.iter().map(|p| Vector::from_column_slice(p)).collect();
        ConvexBody::from_vertices(&pts).map(|inner| Self { inner }).map_err(to_py)
    }

    /// `halfspaces` is a list of `(normal, offset)` pairs for `<a, x> <= b`.
    #[staticmethod]
    fn from_halfspaces(halfspaces: Vec<(Vec<f64>, f64)>) -> PyResult<Self> {
        let hs = halfspaces
            .into_iter()
            .map(|(a, b)| HalfSpace::new(Vector::from_vec(a), b))
            .collect::<Result<Vec<_>, _>>()
            .map_err(to_py)?;
        ConvexBody::from_halfspaces(hs).map(|inner| Self { inner }).map_err(to_py)
    }

    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        verify::named_fixture(name).map(|inner| Self { inner }).map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (kind, dim, size, seed))]
    fn generate(kind: &str, dim: usize, size: usize, seed: u64) -> PyResult<Self> {
        let config = GeneratorConfig { seed, dim, kind: parse_kind(kind)?, size };
        verify::generate(&config).map(|inner| Self { inner }).map_err(to_py)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn vertices(&self) -> Vec<Vec<f64>> {
        self.inner.vertices().iter().map(vec_of).collect()
    }

    #[getter]
    fn halfspaces(&self) -> Vec<(Vec<f64>, f64)> {
        self.inner.halfspaces().iter().map(|h| (vec_of(h.normal()), h.offset())).collect()
    }

    fn support(&self, u: Vec<f64>) -> PyResult<f64> {
        self.inner.support(&Vector::from_vec(u)).map_err(to_py)
    }

    fn contains(&self, p: Vec<f64>) -> PyResult<bool> {
        if p.len() != self.inner.dim() {
            return Err(PyValueError::new_err("point has the wrong dimension"));
        }
        Ok(self.inner.contains_point(&Vector::from_vec(p)))
    }

    #[pyo3(signature = (other, slack = 1e-9))]
    fn same_set(&self, other: &PyBody, slack: f64) -> PyResult<bool> {
        self.inner.same_set(&other.inner, slack).map_err(to_py)
    }

    fn volume(&self) -> f64 {
        metrics::volume(&self.inner)
    }

    fn surface_area(&self) -> f64 {
        metrics::surface_area(&self.inner)
    }

    /// `(radius, center)` of an inscribed ball of maximal radius.
    fn inradius(&self) -> PyResult<(f64, Vec<f64>)> {
        let ball = metrics::inradius(&self.inner).map_err(to_py)?;
        Ok((ball.radius, vec_of(&ball.center)))
    }

    /// `(value, approximate)`; approximate in dimension four and up.
    fn width(&self) -> (f64, bool) {
        let w = metrics::width(&self.inner);
        (w.value, w.approximate)
    }

    fn quermassintegrals(&self) -> PyResult<Vec<f64>> {
        metrics::quermassintegrals(&self.inner).map(|q| q.w).map_err(to_py)
    }

    /// Inner parallel body at distance `t`, or None once it has collapsed.
    fn erode(&self, t: f64) -> PyResult<Option<PyBody>> {
        Ok(match parallel::erode_ball(&self.inner, t).map_err(to_py)? {
            Erosion::Body(inner) => Some(Self { inner }),
            Erosion::Collapsed { .. } => None,
        })
    }

    fn form_body(&self) -> PyResult<PyBody> {
        parallel::form_body(&self.inner).map(|inner| Self { inner }).map_err(to_py)
    }

    fn extremal(&self, t: f64) -> PyResult<PyBody> {
        parallel::extremal_body(&self.inner, t).map(|inner| Self { inner }).map_err(to_py)
    }

    fn minkowski_sum(&self, other: &PyBody) -> PyResult<PyBody> {
        self.inner.minkowski_sum(&other.inner).map(|inner| Self { inner }).map_err(to_py)
    }

    fn translate(&self, x: Vec<f64>) -> PyResult<PyBody> {
        self.inner.translate(&Vector::from_vec(x)).map(|inner| Self { inner }).map_err(to_py)
    }

    fn scale(&self, factor: f64) -> PyResult<PyBody> {
        self.inner.scale(factor).map(|inner| Self { inner }).map_err(to_py)
    }

    fn is_tangential(&self) -> PyResult<bool> {
        let form = parallel::form_body(&self.inner).map_err(to_py)?;
        Ok(self.inner.is_homothetic(&form).map_err(to_py)?.is_some())
    }

    fn __repr__(&self) -> String {
        format!(
            "Body(dim={}, facets={}, vertices={})",
            self.inner.dim(),
            self.inner.halfspaces().len(),
            self.inner.vertices().len()
        )
    }
}

/// Result of one check on one body.
#[pyclass(name = "Report", module = "innerbody", frozen, get_all)]
pub struct PyReport {
    check: String,
    body: String,
    t_values: Vec<f64>,
    margins: Vec<f64>,
    passed: bool,
    worst_margin: f64,
    tolerance: f64,
    inconclusive: bool,
    note: Option<String>,
}

impl From<VerificationReport> for PyReport {
    fn from(r: VerificationReport) -> Self {
        Self {
            check: r.check,
            body: r.body,
            t_values: r.t_values,
            margins: r.margins,
            passed: r.passed,
            worst_margin: r.worst_margin,
            tolerance: r.tolerance,
            inconclusive: r.inconclusive,
            note: r.note,
        }
    }
}

#[pymethods]
impl PyReport {
    fn __repr__(&self) -> String {
        format!(
            "Report(check={:?}, body={:?}, passed={}, worst_margin={})",
            self.check, self.body, self.passed, self.worst_margin
        )
    }
}

/// Perimeter bound margins at each `t`.
#[pyfunction]
fn check_main_bound(body: &PyBody, t: Vec<f64>) -> PyResult<PyReport> {
    verify::check_main_bound(&body.inner, &t).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn check_equality(body: &PyBody, t: Vec<f64>) -> PyResult<PyReport> {
    verify::check_equality_iff(&body.inner, &t).map(Into::into).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (body, t, trials = 50, seed = 0))]
fn check_maximality(body: &PyBody, t: f64, trials: usize, seed: u64) -> PyResult<PyReport> {
    verify::check_maximality(&body.inner, t, trials, seed).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn matheron_probe(body: &PyBody, t: Vec<f64>) -> PyResult<PyReport> {
    verify::matheron_probe(&body.inner, &t).map(Into::into).map_err(to_py)
}

/// Runs a named suite over `count` generated bodies per dimension.
#[pyfunction]
#[pyo3(signature = (name, seed = 0, count = 20, dims = vec![2, 3]))]
fn run_suite(py: Python<'_>, name: &str, seed: u64, count: usize, dims: Vec<usize>) -> PyResult<Vec<PyReport>> {
    let reports = py
        .detach(|| verify::run_suite(name, seed, count, &dims))
        .map_err(to_py)?;
    Ok(reports.into_iter().map(Into::into).collect())
}

#[pymodule]
fn innerbody(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBody>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(check_main_bound, m)?)?;
    m.add_function(wrap_pyfunction!(check_equality, m)?)?;
    m.add_function(wrap_pyfunction!(check_maximality, m)?)?;
    m.add_function(wrap_pyfunction!(matheron_probe, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("SUITES", verify::SUITES.to_vec())?;
    Ok(())
}

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ::ipow::{
    check_containment_with, classify_exponent, classify_rational, format_interval, oracle_pow,
    parse_interval, pow0, pow_full, BoundStyle, EvalConfig, ExponentClass, Interval, RationalClass,
};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Closed interval over the extended reals, possibly empty.
#[pyclass(name = "Interval", module = "ipow", frozen, eq, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq)]
pub struct PyInterval(Interval);

#[pymethods]
impl PyInterval {
    #[new]
    fn new(lo: f64, hi: f64) -> PyResult<Self> {
        Interval::new(lo, hi).map(PyInterval).map_err(value_error)
    }

    #[staticmethod]
    fn empty() -> Self {
        PyInterval(Interval::EMPTY)
    }

    #[staticmethod]
    fn point(v: f64) -> PyResult<Self> {
        Interval::point(v).map(PyInterval).map_err(value_error)
    }

    /// Parses `[lo,hi]` or `empty`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_interval(text).map(PyInterval).map_err(value_error)
    }

    #[getter]
    fn lo(&self) -> Option<f64> {
        self.0.lo()
    }

    #[getter]
    fn hi(&self) -> Option<f64> {
        self.0.hi()
    }

    #[getter]
    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn contains(&self, v: f64) -> bool {
        self.0.contains(v)
    }

    fn is_subset(&self, other: PyRef<'_, PyInterval>) -> bool {
        self.0.is_subset(&other.0)
    }

    fn hull(&self, other: PyRef<'_, PyInterval>) -> Self {
        PyInterval(self.0.hull(other.0))
    }

    fn negate(&self) -> Self {
        PyInterval(self.0.negate())
    }

    fn intersect_nonneg(&self) -> Self {
        PyInterval(self.0.intersect_nonneg())
    }

    #[allow(clippy::wrong_self_convention)]
    fn to_hex(&self) -> String {
        format_interval(&self.0, BoundStyle::Hex)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Interval.parse('{}')",
            format_interval(&self.0, BoundStyle::Hex)
        )
    }
}

/// Rounding settings for the kernel.
#[pyclass(name = "EvalConfig", module = "ipow", frozen, skip_from_py_object)]
#[derive(Clone, Copy)]
pub struct PyEvalConfig(EvalConfig);

#[pymethods]
impl PyEvalConfig {
    #[new]
    #[pyo3(signature = (slack_ulps = EvalConfig::DEFAULT_SLACK_ULPS, exact_paths = true))]
    fn new(slack_ulps: u32, exact_paths: bool) -> PyResult<Self> {
        EvalConfig::new(slack_ulps, exact_paths)
            .map(PyEvalConfig)
            .map_err(value_error)
    }

    #[getter]
    fn slack_ulps(&self) -> u32 {
        self.0.slack_ulps()
    }

    #[getter]
    fn exact_paths(&self) -> bool {
        self.0.exact_paths()
    }

    fn __repr__(&self) -> String {
        format!(
            "EvalConfig(slack_ulps={}, exact_paths={})",
            self.0.slack_ulps(),
            if self.0.exact_paths() {
                "True"
            } else {
                "False"
            }
        )
    }
}

fn config(cfg: Option<PyRef<'_, PyEvalConfig>>) -> EvalConfig {
    cfg.map(|c| c.0).unwrap_or_default()
}

/// Interval power over the non-negative part of `x`.
#[pyfunction(name = "pow0")]
#[pyo3(signature = (x, y, config = None))]
fn py_pow0(
    x: PyRef<'_, PyInterval>,
    y: PyRef<'_, PyInterval>,
    config: Option<PyRef<'_, PyEvalConfig>>,
) -> PyInterval {
    PyInterval(pow0(x.0, y.0, &self::config(config)))
}

/// Interval power for arbitrary base and exponent intervals.
#[pyfunction(name = "pow_full")]
#[pyo3(signature = (x, y, config = None))]
fn py_pow_full(
    x: PyRef<'_, PyInterval>,
    y: PyRef<'_, PyInterval>,
    config: Option<PyRef<'_, PyEvalConfig>>,
) -> PyResult<PyInterval> {
    pow_full(x.0, y.0, &self::config(config))
        .map(PyInterval)
        .map_err(value_error)
}

#[pyfunction(name = "classify_exponent")]
fn py_classify_exponent(y: PyRef<'_, PyInterval>) -> PyResult<&'static str> {
    Ok(match classify_exponent(y.0).map_err(value_error)? {
        ExponentClass::NonSingleton => "non_singleton",
        ExponentClass::SingletonEvenInteger => "even_integer",
        ExponentClass::SingletonOddInteger => "odd_integer",
        ExponentClass::SingletonNonIntegerDyadic => "non_integer_dyadic",
    })
}

#[pyfunction(name = "classify_rational")]
fn py_classify_rational(p: BigInt, q: BigInt) -> PyResult<&'static str> {
    Ok(match classify_rational(&p, &q).map_err(value_error)? {
        RationalClass::EvenOverOdd => "even_over_odd",
        RationalClass::OddOverOdd => "odd_over_odd",
        RationalClass::OddOverEven => "odd_over_even",
        RationalClass::Irrational => "irrational",
    })
}

/// Exact bracket `(lower, upper)` of `x**y` for `Fraction` inputs, or
/// `None` when no real value exists.
#[pyfunction(name = "oracle_pow")]
fn py_oracle_pow(x: BigRational, y: BigRational) -> Option<(BigRational, BigRational)> {
    oracle_pow(&x, &y).ok().map(|v| (v.lower, v.upper))
}

#[pyfunction(name = "next_up")]
fn py_next_up(v: f64) -> f64 {
    ::ipow::next_up(v)
}

#[pyfunction(name = "next_down")]
fn py_next_down(v: f64) -> f64 {
    ::ipow::next_down(v)
}

/// Samples `n` oracle points in the box and checks them against
/// `pow_full(x, y)`. Returns a dict with the counts and the violations.
#[pyfunction(name = "check_containment")]
#[pyo3(signature = (x, y, n, seed = 0, config = None))]
fn py_check_containment<'py>(
    py: Python<'py>,
    x: PyRef<'_, PyInterval>,
    y: PyRef<'_, PyInterval>,
    n: usize,
    seed: u64,
    config: Option<PyRef<'_, PyEvalConfig>>,
) -> PyResult<Bound<'py, PyDict>> {
    let report = check_containment_with(x.0, y.0, n, seed, &self::config(config));
    let out = PyDict::new(py);
    out.set_item("samples", report.samples)?;
    out.set_item("defined", report.defined)?;
    out.set_item("passed", report.passed())?;
    let violations = report
        .violations
        .iter()
        .map(|v| {
            let d = PyDict::new(py);
            d.set_item("index", v.index)?;
            d.set_item("x", &v.x)?;
            d.set_item("y", &v.y)?;
            d.set_item("oracle_lo", &v.oracle_lo)?;
            d.set_item("oracle_hi", &v.oracle_hi)?;
            d.set_item("computed", &v.computed)?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    out.set_item("violations", violations)?;
    Ok(out)
}

#[pymodule(name = "ipow")]
fn ipow_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInterval>()?;
    m.add_class::<PyEvalConfig>()?;
    m.add_function(wrap_pyfunction!(py_pow0, m)?)?;
    m.add_function(wrap_pyfunction!(py_pow_full, m)?)?;
    m.add_function(wrap_pyfunction!(py_classify_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(py_classify_rational, m)?)?;
    m.add_function(wrap_pyfunction!(py_oracle_pow, m)?)?;
    m.add_function(wrap_pyfunction!(py_next_up, m)?)?;
    m.add_function(wrap_pyfunction!(py_next_down, m)?)?;
    m.add_function(wrap_pyfunction!(py_check_containment, m)?)?;
    Ok(())
}

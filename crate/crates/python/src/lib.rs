//! Python bindings: `Rack` and `Diagram` classes plus module-level
//! (s,t)-rack helpers. Structured reports come back as plain dicts.

// PyO3 0.22 method macros trip this lint on every `PyResult` return.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use racklab::knot::{self, KnotDiagram};
use racklab::lattice::{self, DEFAULT_CAP};
use racklab::quandle;
use racklab::source::RackSource;
use racklab::st::{self, StAnalysis};
use racklab::{ElementSet, RackTable, STParams};

fn err(e: racklab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Round-trips a serializable report through Python's `json` module.
fn to_py(py: Python<'_>, v: &impl serde::Serialize) -> PyResult<PyObject> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import_bound("json")?.call_method1("loads", (text,))?.unbind())
}

fn sets(subracks: Vec<racklab::Subrack<'_>>) -> Vec<Vec<usize>> {
    subracks.iter().map(|s| s.to_vec()).collect()
}

#[pyclass(name = "Rack", frozen, module = "racklab")]
#[derive(Clone)]
struct PyRack(RackTable);

#[pymethods]
impl PyRack {
    /// Builds a rack from its operation table, `table[a][b] = a ▷ b`.
    #[new]
    fn new(table: Vec<Vec<usize>>) -> PyResult<Self> {
        RackTable::from_rows(table).map(Self).map_err(err)
    }

    /// Parses `{"n", "table"}` or a family spec such as
    /// `{"family": "st_rack", "n": 20, "s": 2, "t": 9}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        RackSource::parse(text)
            .and_then(|s| s.build())
            .map(Self)
            .map_err(err)
    }

    /// `Rack.family("dihedral", n=5)`.
    #[staticmethod]
    #[pyo3(signature = (name, **params))]
    fn family(py: Python<'_>, name: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Self> {
        let spec = PyDict::new_bound(py);
        if let Some(p) = params {
            spec.update(p.as_mapping())?;
        }
        spec.set_item("family", name)?;
        let text: String = py
            .import_bound("json")?
            .call_method1("dumps", (spec,))?
            .extract()?;
        Self::from_json(&text)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn is_quandle(&self) -> bool {
        self.0.is_quandle()
    }

    fn op(&self, a: usize, b: usize) -> PyResult<usize> {
        let n = self.0.n();
        if a >= n || b >= n {
            return Err(err(racklab::Error::ElementOutOfRange { element: a.max(b), n }));
        }
        Ok(self.0.op(a, b))
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.0.rows()
    }

    fn atoms(&self) -> Vec<Vec<usize>> {
        sets(lattice::atoms(&self.0))
    }

    fn orbits(&self) -> Vec<Vec<usize>> {
        sets(lattice::orbits(&self.0))
    }

    /// Smallest subrack containing `seeds`.
    fn generate(&self, seeds: Vec<usize>) -> PyResult<Vec<usize>> {
        lattice::generate_subrack(&self.0, &seeds)
            .map(|s| s.to_vec())
            .map_err(err)
    }

    fn is_subrack(&self, members: Vec<usize>) -> PyResult<bool> {
        let n = self.0.n();
        if let Some(&bad) = members.iter().find(|&&x| x >= n) {
            return Err(err(racklab::Error::ElementOutOfRange { element: bad, n }));
        }
        Ok(lattice::is_subrack(&self.0, &ElementSet::from_elements(n, members)))
    }

    /// Lattice report: `{"atoms", "subracks", "atomic", "distributive", "witness"}`.
    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn lattice(&self, py: Python<'_>, cap: usize) -> PyResult<PyObject> {
        let lat = lattice::enumerate_subracks(&self.0, cap).map_err(err)?;
        to_py(py, &lat.report())
    }

    /// Returns `(classes, quandle)`.
    fn corresponding_quandle(&self) -> PyResult<(Vec<Vec<usize>>, PyRack)> {
        let cq = quandle::corresponding_quandle(&self.0).map_err(err)?;
        Ok((cq.classes().to_vec(), PyRack(cq.quandle().clone())))
    }

    fn distributive_via_quandle(&self) -> PyResult<bool> {
        quandle::distributive_via_quandle(&self.0).map_err(err)
    }

    /// Images of `ι(a) = f_a^{-1}(a)`.
    fn iota(&self) -> Vec<usize> {
        quandle::iota(&self.0).as_translation().images().to_vec()
    }

    fn iota_quandle(&self) -> PyResult<PyRack> {
        quandle::iota_quandle(&self.0).map(PyRack).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        let kind = if self.0.is_quandle() { "quandle" } else { "rack" };
        format!("Rack(n={}, {kind})", self.0.n())
    }
}

#[pyclass(name = "Diagram", frozen, module = "racklab")]
struct PyDiagram(KnotDiagram);

#[pymethods]
impl PyDiagram {
    /// Parses `{"arcs", "crossings": [{"sign", "over", "under_in", "under_out"}]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        knot::parse_diagram(text).map(Self).map_err(err)
    }

    /// One of `unknot`, `trefoil`, `trefoil_r1`, `trefoil_r2`, `5_1`, `5_2`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        use knot::fixtures::*;
        let d = match name {
            "unknot" => unknot(),
            "trefoil" => trefoil(),
            "trefoil_r1" => trefoil_r1(),
            "trefoil_r2" => trefoil_r2(),
            "5_1" => knot_5_1(),
            "5_2" => knot_5_2(),
            other => return Err(PyValueError::new_err(format!("unknown fixture {other:?}"))),
        };
        Ok(Self(d))
    }

    #[getter]
    fn arcs(&self) -> usize {
        self.0.arc_count()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn count_colorings(&self, q: &PyRack) -> PyResult<u64> {
        knot::count_colorings(&self.0, &q.0).map_err(err)
    }

    /// `{"count", "constant", "nontrivial"}`.
    fn coloring_report(&self, py: Python<'_>, q: &PyRack) -> PyResult<PyObject> {
        to_py(py, &knot::coloring_report(&self.0, &q.0).map_err(err)?)
    }

    fn __repr__(&self) -> String {
        format!("Diagram(arcs={})", self.0.arc_count())
    }
}

/// `{"verdict", "count1", "count2"}` with verdict `distinguished` or `inconclusive`.
#[pyfunction]
fn distinguish(py: Python<'_>, d1: &PyDiagram, d2: &PyDiagram, q: &PyRack) -> PyResult<PyObject> {
    to_py(py, &knot::distinguish(&d1.0, &d2.0, &q.0).map_err(err)?)
}

/// `{"valid", "s2_zero", "k_certificate", "non_alexander"}`; invalid
/// parameters give `valid = False` rather than an exception.
#[pyfunction]
fn st_analyze(py: Python<'_>, n: usize, s: i64, t: i64) -> PyResult<PyObject> {
    let report = match STParams::new(n, s, t) {
        Ok(p) => StAnalysis::of(&p),
        Err(_) => StAnalysis::invalid(),
    };
    to_py(py, &report)
}

/// Closed form of `f_a^k(a)` in the (s,t)-rack on Z_n.
#[pyfunction]
fn st_power(n: usize, s: i64, t: i64, a: u64, k: i64) -> PyResult<u64> {
    let p = STParams::new(n, s, t).map_err(err)?;
    Ok(st::st_power(&p, a % n as u64, k))
}

#[pyfunction]
fn st_atom(n: usize, s: i64, t: i64, a: u64) -> PyResult<Vec<usize>> {
    let p = STParams::new(n, s, t).map_err(err)?;
    Ok(st::st_atom(&p, a % n as u64))
}

#[pymodule]
#[pyo3(name = "racklab")]
fn racklab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRack>()?;
    m.add_class::<PyDiagram>()?;
    m.add_function(wrap_pyfunction!(distinguish, m)?)?;
    m.add_function(wrap_pyfunction!(st_analyze, m)?)?;
    m.add_function(wrap_pyfunction!(st_power, m)?)?;
    m.add_function(wrap_pyfunction!(st_atom, m)?)?;
    m.add("DEFAULT_CAP", DEFAULT_CAP)?;
    Ok(())
}

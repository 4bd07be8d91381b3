//! Python module `genex`: permutations, groups and the main analyses.

use std::collections::BTreeMap;

use genex_core::corpus;
use genex_core::flexibility;
use genex_core::gensets;
use genex_core::mgse::{self as exchange, MgseVerdict};
use genex_core::report::{cycles, format_ratio};
use genex_core::structure;
use genex_core::suites;
use genex_core::{all_subgroups, Error, Limits};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

create_exception!(genex, BoundExceeded, PyException, "A configured resource bound was exceeded.");

fn err(e: Error) -> PyErr {
    if e.is_bound() {
        BoundExceeded::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn limits(max_order: Option<u128>) -> Limits {
    let mut l = suites::suite_limits();
    if let Some(m) = max_order {
        l.max_order = m;
    }
    l
}

/// A permutation in cycle notation on points `1..=degree`.
#[pyclass(name = "Perm", frozen, eq, hash, skip_from_py_object, module = "genex")]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPerm(genex_core::Perm);

#[pymethods]
impl PyPerm {
    #[new]
    fn new(text: &str, degree: usize) -> PyResult<Self> {
        genex_core::Perm::parse(text, degree).map(PyPerm).map_err(err)
    }

    /// From a 1-based image list.
    #[staticmethod]
    fn from_images(images: Vec<u32>) -> PyResult<Self> {
        genex_core::Perm::from_images_one_based(&images).map(PyPerm).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn images(&self) -> Vec<u32> {
        self.0.images_one_based()
    }

    fn order(&self) -> u64 {
        self.0.order()
    }

    fn cycle_type(&self) -> Vec<usize> {
        self.0.cycle_type()
    }

    fn inverse(&self) -> Self {
        PyPerm(self.0.inverse())
    }

    /// `a * b` applies `a` first.
    fn __mul__(&self, other: &PyPerm) -> PyResult<Self> {
        if self.0.degree() != other.0.degree() {
            return Err(err(Error::DegreeMismatch { expected: self.0.degree(), found: other.0.degree() }));
        }
        Ok(PyPerm(self.0.mul(&other.0)))
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> Self {
        PyPerm(self.0.pow(e))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Perm('{}', {})", self.0, self.0.degree())
    }
}

/// A permutation group given by generators.
#[pyclass(name = "Group", frozen, skip_from_py_object, module = "genex")]
#[derive(Clone)]
pub struct PyGroup(genex_core::Group);

fn perms(degree: usize, gens: &Bound<'_, PyList>) -> PyResult<Vec<genex_core::Perm>> {
    gens.iter()
        .map(|item| {
            if let Ok(p) = item.cast::<PyPerm>() {
                return Ok(p.get().0.clone());
            }
            let text: String = item.extract()?;
            genex_core::Perm::parse(&text, degree).map_err(err)
        })
        .collect()
}

#[pymethods]
impl PyGroup {
    /// `Group(degree, gens)` with generators as `Perm` or cycle strings.
    #[new]
    fn new(degree: usize, gens: &Bound<'_, PyList>) -> PyResult<Self> {
        genex_core::Group::new(degree, perms(degree, gens)?).map(PyGroup).map_err(err)
    }

    #[staticmethod]
    fn symmetric(n: usize) -> Self {
        PyGroup(genex_core::Group::symmetric(n))
    }

    #[staticmethod]
    fn alternating(n: usize) -> Self {
        PyGroup(genex_core::Group::alternating(n))
    }

    #[staticmethod]
    fn cyclic(n: usize) -> Self {
        PyGroup(genex_core::Group::cyclic(n))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn order(&self) -> u128 {
        self.0.order()
    }

    fn generators(&self) -> Vec<PyPerm> {
        self.0.generators().iter().cloned().map(PyPerm).collect()
    }

    fn __contains__(&self, p: &PyPerm) -> bool {
        self.0.has(&p.0)
    }

    fn is_subgroup_of(&self, other: &PyGroup) -> bool {
        self.0.is_subgroup_of(&other.0)
    }

    fn is_normal_in(&self, other: &PyGroup) -> bool {
        self.0.is_normal_in(&other.0)
    }

    fn is_abelian(&self) -> bool {
        self.0.is_abelian()
    }

    fn is_solvable(&self) -> bool {
        structure::is_solvable(&self.0)
    }

    fn is_nilpotent(&self) -> bool {
        structure::is_nilpotent(&self.0)
    }

    fn derived_subgroup(&self) -> Self {
        PyGroup(self.0.derived_subgroup())
    }

    #[pyo3(signature = (max_order=None))]
    fn socle(&self, py: Python<'_>, max_order: Option<u128>) -> PyResult<Self> {
        let l = limits(max_order);
        py.detach(|| structure::socle(&self.0, &l)).map(PyGroup).map_err(err)
    }

    #[pyo3(signature = (max_order=None))]
    fn frattini(&self, py: Python<'_>, max_order: Option<u128>) -> PyResult<Self> {
        let l = limits(max_order);
        py.detach(|| genex_core::frattini(&self.0, &l)).map(PyGroup).map_err(err)
    }

    /// Representatives of the maximal subgroup classes.
    #[pyo3(signature = (max_order=None))]
    fn maximal_subgroups(&self, py: Python<'_>, max_order: Option<u128>) -> PyResult<Vec<PyGroup>> {
        let l = limits(max_order);
        let lattice = py.detach(|| all_subgroups(&self.0, &l)).map_err(err)?;
        Ok(lattice.maximal_classes().map(|(_, c)| PyGroup(c.group.clone())).collect())
    }

    fn __repr__(&self) -> String {
        format!("Group{}", self.0.describe())
    }
}

/// Loads `builtin:ID`, `direct(A, B)`, `wreath(A, B)` or a `.grp` path.
#[pyfunction]
#[pyo3(signature = (spec, max_order=None))]
fn load_group(spec: &str, max_order: Option<u128>) -> PyResult<PyGroup> {
    corpus::load_group(spec, &limits(max_order)).map(PyGroup).map_err(err)
}

#[pyfunction]
fn builtin_ids() -> Vec<String> {
    corpus::builtin_ids()
}

/// `d(G)`, the least size of a generating set.
#[pyfunction]
#[pyo3(signature = (group, max_order=None))]
fn d(py: Python<'_>, group: &PyGroup, max_order: Option<u128>) -> PyResult<usize> {
    let l = limits(max_order);
    py.detach(|| gensets::d_of(&group.0, &l)).map_err(err)
}

/// `D_H(G)`: the most entries of a generating `d(G)`-tuple inside `H`.
#[pyfunction]
#[pyo3(signature = (group, subgroup, max_order=None))]
fn d_metric(py: Python<'_>, group: &PyGroup, subgroup: &PyGroup, max_order: Option<u128>) -> PyResult<usize> {
    let l = limits(max_order);
    py.detach(|| gensets::d_metric(&group.0, &subgroup.0, &l)).map(|r| r.value).map_err(err)
}

fn verdict_dict<'py>(py: Python<'py>, v: &MgseVerdict) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("holds", v.holds)?;
    out.set_item("method", v.method.to_string())?;
    out.set_item("d", v.d)?;
    if let Some(c) = &v.counterexample {
        out.set_item("x", cycles(&c.x))?;
        out.set_item("index", c.index + 1)?;
        out.set_item("y", cycles(&c.y))?;
    }
    Ok(out)
}

/// The exchange property for minimal generating sets. `method` is `"opt"`
/// or `"brute"`.
#[pyfunction]
#[pyo3(signature = (group, method="opt", max_order=None))]
fn mgse<'py>(py: Python<'py>, group: &PyGroup, method: &str, max_order: Option<u128>) -> PyResult<Bound<'py, PyDict>> {
    let l = limits(max_order);
    let v = match method {
        "opt" => py.detach(|| exchange::mgse_decide(&group.0, &l)),
        "brute" => py.detach(|| exchange::mgse_bruteforce(&group.0, &l)),
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
    .map_err(err)?;
    verdict_dict(py, &v)
}

#[pyfunction]
#[pyo3(signature = (group, max_order=None))]
fn solvable_characterization<'py>(
    py: Python<'py>,
    group: &PyGroup,
    max_order: Option<u128>,
) -> PyResult<Bound<'py, PyDict>> {
    let l = limits(max_order);
    let c = py.detach(|| exchange::solvable_characterization(&group.0, &l)).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("applies", c.applies)?;
    out.set_item("branch", c.branch.to_string())?;
    out.set_item("p", c.p)?;
    out.set_item("q", c.q)?;
    out.set_item("rank", c.rank)?;
    out.set_item("reason", c.reason)?;
    Ok(out)
}

/// Flexibility of `H` in the monolithic group `K` with socle `S`.
#[pyfunction]
#[pyo3(signature = (k, s, h, max_order=None))]
fn is_flexible<'py>(
    py: Python<'py>,
    k: &PyGroup,
    s: &PyGroup,
    h: &PyGroup,
    max_order: Option<u128>,
) -> PyResult<Bound<'py, PyDict>> {
    let l = limits(max_order);
    let r = py.detach(|| flexibility::is_flexible(&k.0, &s.0, &h.0, &l)).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("flexible", r.verdict)?;
    out.set_item("proper_in_socle", r.proper_in_socle)?;
    out.set_item("supplements", r.supplements)?;
    out.set_item("witness_prime", r.witness_prime)?;
    if let Some((x, primes)) = &r.failure {
        out.set_item("defeating_element", x.to_string())?;
        out.set_item("primes_tried", primes.clone())?;
    }
    Ok(out)
}

/// Sorted element-order sets of the non-trivial cosets of `core` in `h`.
#[pyfunction]
#[pyo3(signature = (h, core, max_order=None))]
fn coset_order_profiles(h: &PyGroup, core: &PyGroup, max_order: Option<u128>) -> PyResult<Vec<Vec<u64>>> {
    let p = flexibility::coset_order_profiles(&h.0, &core.0, &limits(max_order)).map_err(err)?;
    Ok(p.into_iter().map(|c| c.orders.into_iter().collect()).collect())
}

/// Exact generation density `(favorable, total, "p/q")` of socle corrections.
#[pyfunction]
#[pyo3(signature = (group, socle, lifts, max_order=None))]
fn density(
    py: Python<'_>,
    group: &PyGroup,
    socle: &PyGroup,
    lifts: &Bound<'_, PyList>,
    max_order: Option<u128>,
) -> PyResult<(u64, u64, String)> {
    let lifts = perms(group.0.degree(), lifts)?;
    let l = limits(max_order);
    let r = py.detach(|| gensets::generation_density(&group.0, &socle.0, &lifts, &l)).map_err(err)?;
    Ok((r.favorable, r.total, format_ratio(&r.ratio)))
}

/// Primitive type and socle shape of each maximal class.
#[pyfunction]
#[pyo3(signature = (group, max_order=None))]
fn classify_maximal<'py>(py: Python<'py>, group: &PyGroup, max_order: Option<u128>) -> PyResult<Bound<'py, PyList>> {
    let l = limits(max_order);
    let rows = py
        .detach(|| -> genex_core::Result<Vec<_>> {
            let lattice = all_subgroups(&group.0, &l)?;
            lattice
                .maximal_classes()
                .map(|(_, c)| structure::classify_maximal(&group.0, &c.group, &l).map(|m| (c.order, c.class_size, m)))
                .collect()
        })
        .map_err(err)?;
    let out = PyList::empty(py);
    for (order, size, m) in rows {
        let row = PyDict::new(py);
        row.set_item("order", order)?;
        row.set_item("class_size", size)?;
        row.set_item("type", m.primitive_type)?;
        row.set_item("shape", m.intersection_shape.to_string())?;
        row.set_item("core_order", m.core.order())?;
        out.append(row)?;
    }
    Ok(out)
}

#[pyfunction]
fn suite_names() -> Vec<&'static str> {
    suites::SUITES.to_vec()
}

/// Runs a verification suite; returns `{"suite", "passed", "skipped", "cases"}`.
#[pyfunction]
#[pyo3(signature = (name, max_order=None))]
fn run_suite<'py>(py: Python<'py>, name: &str, max_order: Option<u128>) -> PyResult<Bound<'py, PyDict>> {
    let l = limits(max_order);
    let res = py.detach(|| suites::run_suite(name, &l)).map_err(err)?;
    let cases = PyList::empty(py);
    for c in &res.cases {
        let mut row: BTreeMap<&str, String> = BTreeMap::new();
        row.insert("id", c.id.clone());
        row.insert("claim", c.claim.to_string());
        row.insert("details", c.details.clone());
        if let Some(w) = &c.witness {
            row.insert("witness", w.clone());
        }
        let d = row.into_pyobject(py)?;
        d.set_item("pass", c.pass)?;
        cases.append(d)?;
    }
    let out = PyDict::new(py);
    out.set_item("suite", &res.suite)?;
    out.set_item("passed", res.passed)?;
    out.set_item("skipped", res.skipped.clone())?;
    out.set_item("cases", cases)?;
    Ok(out)
}

#[pymodule]
fn genex(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPerm>()?;
    m.add_class::<PyGroup>()?;
    m.add("BoundExceeded", m.py().get_type::<BoundExceeded>())?;
    m.add_function(wrap_pyfunction!(load_group, m)?)?;
    m.add_function(wrap_pyfunction!(builtin_ids, m)?)?;
    m.add_function(wrap_pyfunction!(d, m)?)?;
    m.add_function(wrap_pyfunction!(d_metric, m)?)?;
    m.add_function(wrap_pyfunction!(mgse, m)?)?;
    m.add_function(wrap_pyfunction!(solvable_characterization, m)?)?;
    m.add_function(wrap_pyfunction!(is_flexible, m)?)?;
    m.add_function(wrap_pyfunction!(coset_order_profiles, m)?)?;
    m.add_function(wrap_pyfunction!(density, m)?)?;
    m.add_function(wrap_pyfunction!(classify_maximal, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}

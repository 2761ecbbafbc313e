//! Python bindings for `seedtree`.
//!
//! ```python
//! import pyseedtree as st
//! st.count(10)                                     # 204
//! st.Semigroup([1, 2, 3, 4, 6, 7]).seeds_table()   # ['11011', '111']
//! ```

use std::ops::ControlFlow;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use seedtree::bench::Algorithm;
use seedtree::explorer::{self, DEFAULT_FRONTIER_DEPTH};

fn value_error(e: seedtree::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A numerical semigroup given by its gaps.
#[pyclass(name = "Semigroup", frozen)]
struct PySemigroup {
    inner: seedtree::FullSemigroup,
}

#[pymethods]
impl PySemigroup {
    /// Raises ValueError when the complement of `gaps` is not closed under
    /// addition.
    #[new]
    fn new(gaps: Vec<u32>) -> PyResult<Self> {
        let inner = seedtree::FullSemigroup::from_gaps(gaps).map_err(value_error)?;
        Ok(PySemigroup { inner })
    }

    #[staticmethod]
    fn ordinary(multiplicity: u32) -> PyResult<Self> {
        if multiplicity == 0 {
            return Err(PyValueError::new_err("multiplicity must be positive"));
        }
        Ok(PySemigroup {
            inner: seedtree::FullSemigroup::ordinary(multiplicity),
        })
    }

    /// From the non-zero elements up to and including the conductor.
    #[staticmethod]
    fn from_elements(elements: Vec<u32>) -> PyResult<Self> {
        let inner = seedtree::FullSemigroup::from_elements_to_conductor(&elements).map_err(value_error)?;
        Ok(PySemigroup { inner })
    }

    #[getter]
    fn gaps(&self) -> Vec<u32> {
        self.inner.gaps().to_vec()
    }

    #[getter]
    fn genus(&self) -> u32 {
        self.inner.genus()
    }

    #[getter]
    fn conductor(&self) -> u32 {
        self.inner.conductor()
    }

    #[getter]
    fn multiplicity(&self) -> u32 {
        self.inner.multiplicity()
    }

    fn __contains__(&self, z: u32) -> bool {
        self.inner.contains(z)
    }

    fn is_generator(&self, x: u32) -> bool {
        self.inner.is_generator(x)
    }

    fn generators(&self) -> Vec<u32> {
        self.inner.generators()
    }

    /// Rows of the seeds table as bit strings.
    fn seeds_table(&self) -> Vec<String> {
        self.inner.seeds_table_bruteforce().row_strings()
    }

    /// Child obtained by removing the generator `sigma`.
    fn remove(&self, sigma: u32) -> PyResult<Self> {
        let inner = self.inner.remove(sigma).map_err(value_error)?;
        Ok(PySemigroup { inner })
    }

    fn encode(&self) -> PyResult<PySeedNode> {
        let inner = seedtree::encode_node(&self.inner).map_err(value_error)?;
        Ok(PySeedNode { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("plain data serializes")
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Semigroup({:?})", self.inner.gaps())
    }
}

/// A tree node held as conductor, multiplicity and the G/S bit strings.
#[pyclass(name = "SeedNode", frozen)]
struct PySeedNode {
    inner: seedtree::SeedNode,
}

#[pymethods]
impl PySeedNode {
    #[staticmethod]
    fn root() -> Self {
        PySeedNode {
            inner: seedtree::SeedNode::root(),
        }
    }

    #[staticmethod]
    fn from_strings(gaps: &str, seeds: &str, multiplicity: u32) -> PyResult<Self> {
        let inner = seedtree::SeedNode::from_strings(gaps, seeds, multiplicity).map_err(value_error)?;
        Ok(PySeedNode { inner })
    }

    #[getter]
    fn conductor(&self) -> u32 {
        self.inner.conductor()
    }

    #[getter]
    fn genus(&self) -> u32 {
        self.inner.genus()
    }

    #[getter]
    fn multiplicity(&self) -> u32 {
        self.inner.multiplicity()
    }

    #[getter]
    fn gap_string(&self) -> String {
        self.inner.gap_string()
    }

    #[getter]
    fn seed_string(&self) -> String {
        self.inner.seed_string()
    }

    fn child_count(&self) -> u32 {
        self.inner.child_count()
    }

    /// The child at seed offset `offset`, i.e. removing `conductor + offset`.
    fn descend(&self, offset: u32) -> PyResult<Self> {
        let inner = self.inner.descend(offset).map_err(value_error)?;
        Ok(PySeedNode { inner })
    }

    /// `(offset, child)` pairs in increasing offset.
    fn children(&self) -> Vec<(u32, PySeedNode)> {
        self.inner
            .children()
            .map(|(offset, inner)| (offset, PySeedNode { inner }))
            .collect()
    }

    fn decode(&self) -> PyResult<PySemigroup> {
        let inner = seedtree::decode_node(&self.inner).map_err(value_error)?;
        Ok(PySemigroup { inner })
    }

    fn seeds_table(&self) -> PyResult<Vec<String>> {
        let table = seedtree::split_table(&self.inner).map_err(value_error)?;
        Ok(table.row_strings())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner.gap_string() == other.inner.gap_string()
            && self.inner.seed_string() == other.inner.seed_string()
            && self.inner.multiplicity() == other.inner.multiplicity()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "SeedNode(gaps={:?}, seeds={:?}, multiplicity={})",
            self.inner.gap_string(),
            self.inner.seed_string(),
            self.inner.multiplicity()
        )
    }
}

/// Number of semigroups of the given genus.
#[pyfunction]
#[pyo3(signature = (genus, algorithm="seeds-dfs", workers=1, frontier_depth=DEFAULT_FRONTIER_DEPTH))]
fn count(py: Python<'_>, genus: u32, algorithm: &str, workers: usize, frontier_depth: u32) -> PyResult<u64> {
    let algorithm: Algorithm = algorithm.parse().map_err(value_error)?;
    if workers > 1 && algorithm != Algorithm::SeedsDfs {
        return Err(PyValueError::new_err(format!(
            "workers applies to seeds-dfs only, not {algorithm}"
        )));
    }
    let result = py.detach(|| {
        if workers > 1 {
            explorer::count_parallel(genus, workers, frontier_depth)
        } else {
            algorithm.count(genus)
        }
    });
    Ok(result.map_err(value_error)?.count)
}

/// `[n_0, ..., n_max_genus]`.
#[pyfunction]
fn sequence(py: Python<'_>, max_genus: u32) -> PyResult<Vec<u64>> {
    let report = py.detach(|| explorer::sequence(max_genus)).map_err(value_error)?;
    Ok(report.values())
}

/// Nodes of the given genus in depth-first order, at most `limit` of them.
#[pyfunction]
#[pyo3(signature = (genus, limit=None))]
fn enumerate(genus: u32, limit: Option<usize>) -> PyResult<Vec<PySeedNode>> {
    let mut out = Vec::new();
    if limit == Some(0) {
        return Ok(out);
    }
    explorer::enumerate_until(&seedtree::SeedNode::root(), genus, |n| {
        out.push(PySeedNode { inner: *n });
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .map_err(value_error)?;
    Ok(out)
}

/// Genera `g` at which `n_{g+2} >= n_{g+1} + n_g` fails.
#[pyfunction]
fn fibonacci_violations(counts: Vec<u64>) -> Vec<u32> {
    explorer::fibonacci_violations(&counts)
}

#[pymodule]
fn pyseedtree(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_class::<PySeedNode>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(fibonacci_violations, m)?)?;
    m.add("ALGORITHMS", Algorithm::ALL.map(Algorithm::name).to_vec())?;
    Ok(())
}

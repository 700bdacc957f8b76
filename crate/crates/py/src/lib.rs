//! Python bindings: `import exotic_rs`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyString;

use exotic_rs::transition::{
    second_decrement as classify_step, FirstRemoval as CoreRemoval, TransitionOutcome,
};
use exotic_rs::verify::{self as core_verify, Budget, Property};
use exotic_rs::{
    Bipartition as CoreBipartition, CorrespondencePair, Side, SignedPermutation as CoreWord,
    StandardBitableau,
};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

type Rows = Vec<Vec<usize>>;

/// A signed permutation, built from a list of signed integers or from text
/// such as `"-3 6 4"`.
#[pyclass(
    name = "SignedPermutation",
    module = "exotic_rs",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWord(CoreWord);

#[pymethods]
impl PyWord {
    #[new]
    fn new(word: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = word.cast::<PyString>() {
            return s.to_str()?.parse().map(PyWord).map_err(value_err);
        }
        let values: Vec<i64> = word.extract()?;
        CoreWord::from_signed(&values)
            .map(PyWord)
            .map_err(value_err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyWord(CoreWord::identity(n))
    }

    fn to_list(&self) -> Vec<i64> {
        self.0.to_signed()
    }

    fn invert(&self) -> Self {
        PyWord(self.0.invert())
    }

    /// Images `sigma(1), ..., sigma(2n)` of the embedding into S_2n.
    fn iota_embed(&self) -> Vec<usize> {
        self.0.iota_embed().images().to_vec()
    }

    /// `(w_tilde, r)`, or `None` for the empty word.
    fn derive_w_tilde(&self) -> Option<(Self, usize)> {
        self.0.derive_w_tilde().map(|(w, r)| (PyWord(w), r))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SignedPermutation({:?})", self.0.to_string())
    }
}

/// A pair `(T, R)` of standard bitableaux of one shape. Each tableau is a
/// `(left_rows, right_rows)` tuple with rows listed from the wall outward.
#[pyclass(
    name = "Pair",
    module = "exotic_rs",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPair(CorrespondencePair);

fn tableau(rows: (Rows, Rows)) -> PyResult<StandardBitableau> {
    StandardBitableau::new(rows.0, rows.1).map_err(value_err)
}

fn rows_of(t: &StandardBitableau) -> (Rows, Rows) {
    (t.left_rows().to_vec(), t.right_rows().to_vec())
}

#[pymethods]
impl PyPair {
    #[new]
    #[pyo3(signature = (t, r))]
    fn new(t: (Rows, Rows), r: (Rows, Rows)) -> PyResult<Self> {
        CorrespondencePair::new(tableau(t)?, tableau(r)?)
            .map(PyPair)
            .map_err(value_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PyPair).map_err(value_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("pairs serialize")
    }

    #[getter(T)]
    fn t(&self) -> (Rows, Rows) {
        rows_of(self.0.t())
    }

    #[getter(R)]
    fn r(&self) -> (Rows, Rows) {
        rows_of(self.0.r())
    }

    /// `(mu, nu)`.
    fn shape(&self) -> (Vec<usize>, Vec<usize>) {
        let s = self.0.shape();
        (s.mu.parts().to_vec(), s.nu.parts().to_vec())
    }

    fn swapped(&self) -> Self {
        PyPair(self.0.swapped())
    }

    fn render(&self) -> String {
        self.0.render_ascii()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Pair.from_json({:?})", self.to_json())
    }
}

fn bipartition(mu: Vec<usize>, nu: Vec<usize>) -> PyResult<CoreBipartition> {
    CoreBipartition::from_parts(mu, nu).map_err(value_err)
}

fn side(name: &str) -> PyResult<Side> {
    match name {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(PyValueError::new_err(format!(
            "side must be 'left' or 'right', got {other:?}"
        ))),
    }
}

#[pyfunction]
fn insertion(word: &PyWord) -> PyPair {
    PyPair(exotic_rs::insertion(&word.0))
}

#[pyfunction]
fn reverse_bumping(pair: &PyPair) -> PyWord {
    PyWord(exotic_rs::reverse_bumping(&pair.0))
}

/// `(reduced_pair, last_letter, r)`, or `None` for the empty pair.
#[pyfunction]
fn bump_once(pair: &PyPair) -> Option<(PyPair, i64, usize)> {
    exotic_rs::bump_once(&pair.0).map(|(p, l, r)| (PyPair(p), l.to_signed(), r))
}

#[pyfunction]
fn enumerate_signed_permutations(n: usize) -> Vec<PyWord> {
    exotic_rs::enumerate_signed_permutations(n)
        .into_iter()
        .map(PyWord)
        .collect()
}

/// Bipartitions of `n` as `(mu, nu)` tuples.
#[pyfunction]
fn enumerate_bipartitions(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    exotic_rs::enumerate_bipartitions(n)
        .into_iter()
        .map(|b| (b.mu.parts().to_vec(), b.nu.parts().to_vec()))
        .collect()
}

#[pyfunction]
fn count_bitableaux(mu: Vec<usize>, nu: Vec<usize>) -> PyResult<u128> {
    Ok(exotic_rs::count_bitableaux(&bipartition(mu, nu)?))
}

#[pyfunction]
fn dimension_b(mu: Vec<usize>, nu: Vec<usize>) -> PyResult<usize> {
    Ok(bipartition(mu, nu)?.dimension_b())
}

/// Returns `("continue", side, row)`, `("unbarred",)` or `("barred",)`.
#[pyfunction]
fn second_decrement(
    py: Python<'_>,
    mu: Vec<usize>,
    nu: Vec<usize>,
    first_side: &str,
    row: usize,
) -> PyResult<Py<PyAny>> {
    let bp = bipartition(mu, nu)?;
    let outcome =
        classify_step(&bp, CoreRemoval::new(side(first_side)?, row)).map_err(value_err)?;
    let obj = match outcome {
        TransitionOutcome::Continue { side, row } => ("continue", side.to_string(), row)
            .into_pyobject(py)?
            .into_any(),
        TransitionOutcome::TerminateUnbarred => ("unbarred",).into_pyobject(py)?.into_any(),
        TransitionOutcome::TerminateBarred => ("barred",).into_pyobject(py)?.into_any(),
    };
    Ok(obj.unbind())
}

/// Runs a named check and returns its JSON report.
#[pyfunction]
fn verify(py: Python<'_>, property: &str, n: usize) -> PyResult<String> {
    let property: Property = property.parse().map_err(value_err)?;
    let report = py
        .detach(|| core_verify::verify(property, n, &Budget::default()))
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(report.to_json())
}

#[pymodule]
#[pyo3(name = "exotic_rs")]
fn python_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyPair>()?;
    m.add_function(wrap_pyfunction!(insertion, m)?)?;
    m.add_function(wrap_pyfunction!(reverse_bumping, m)?)?;
    m.add_function(wrap_pyfunction!(bump_once, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_signed_permutations, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_bipartitions, m)?)?;
    m.add_function(wrap_pyfunction!(count_bitableaux, m)?)?;
    m.add_function(wrap_pyfunction!(dimension_b, m)?)?;
    m.add_function(wrap_pyfunction!(second_decrement, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_runs_worked_example() {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "exotic_rs").unwrap();
            python_module(&m).unwrap();
            let code = c"w = m.SignedPermutation('-3 6 4 -7 2 -5 1')\nok = str(m.reverse_bumping(m.insertion(w))) == str(w)";
            let locals = pyo3::types::PyDict::new(py);
            locals.set_item("m", &m).unwrap();
            py.run(code, None, Some(&locals)).unwrap();
            assert!(locals
                .get_item("ok")
                .unwrap()
                .unwrap()
                .extract::<bool>()
                .unwrap());
        });
    }

    #[test]
    fn bad_side_is_a_value_error() {
        Python::initialize();
        Python::attach(|py| {
            let err = side("up").unwrap_err();
            assert!(err.is_instance_of::<PyValueError>(py));
        });
    }
}

//! Python bindings. Curves and factorizations cross the boundary as the same
//! JSON documents the command-line tool reads and writes; mapping class words
//! cross as lists of `(generator, exponent)` pairs.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use g2lf::analysis;
use g2lf::artifact::{self, FactorizationFile};
use g2lf::factorization::{self, HurwitzDirection, PositiveFactorization};
use g2lf::mcg::{self, MappingClassWord, Verdict};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(syllables: Vec<(i64, i64)>) -> PyResult<MappingClassWord> {
    MappingClassWord::from_syllables(&syllables).map_err(value_error)
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Identity => "Identity",
        Verdict::HyperellipticInvolution => "HyperellipticInvolution",
        Verdict::NotIdentity => "NotIdentity",
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// An ordered list of Dehn twist letters.
#[pyclass(name = "Factorization", module = "g2lf_py", skip_from_py_object)]
#[derive(Clone)]
struct PyFactorization {
    inner: PositiveFactorization,
}

#[pymethods]
impl PyFactorization {
    /// Parses a factorization document; a stamp, if present, is ignored.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file: FactorizationFile = serde_json::from_str(text).map_err(value_error)?;
        Ok(PyFactorization {
            inner: file.factorization(),
        })
    }

    /// Stamped document; fails unless the product is the identity.
    fn to_json(&self) -> PyResult<String> {
        let file = FactorizationFile::stamped(&self.inner).map_err(value_error)?;
        Ok(to_json(&file))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        let t = factorization::type_of(&self.inner);
        format!(
            "Factorization(letters={}, type=({}, {}))",
            self.inner.len(),
            t.n,
            t.s
        )
    }

    fn fibration_type(&self) -> (u64, u64) {
        let t = factorization::type_of(&self.inner);
        (t.n, t.s)
    }

    fn verify(&self) -> &'static str {
        verdict_name(factorization::verify(&self.inner).verdict)
    }

    fn certificate_json(&self) -> String {
        to_json(&factorization::verify(&self.inner))
    }

    fn digest(&self) -> String {
        self.inner.digest()
    }

    fn product(&self) -> Vec<(u8, i32)> {
        self.inner.product().syllables().to_vec()
    }

    fn curve_equivalent(&self, other: &PyFactorization) -> bool {
        self.inner.curve_equivalent(&other.inner)
    }

    fn cyclic_permute(&self, k: usize) -> Self {
        PyFactorization {
            inner: factorization::cyclic_permute(&self.inner, k),
        }
    }

    #[pyo3(signature = (index, direction = "forward"))]
    fn hurwitz(&self, index: usize, direction: &str) -> PyResult<Self> {
        let dir = match direction {
            "forward" => HurwitzDirection::Forward,
            "backward" => HurwitzDirection::Backward,
            other => return Err(value_error(format!("unknown direction {other:?}"))),
        };
        let inner = factorization::hurwitz_move(&self.inner, index, dir).map_err(value_error)?;
        Ok(PyFactorization { inner })
    }

    fn conjugate(&self, by: Vec<(i64, i64)>) -> PyResult<Self> {
        let u = word(by)?;
        Ok(PyFactorization {
            inner: factorization::global_conjugate(&self.inner, &u),
        })
    }

    fn square_swap(&self) -> PyResult<(Self, Self)> {
        let (a, b) = factorization::square_swap(&self.inner).map_err(value_error)?;
        Ok((PyFactorization { inner: a }, PyFactorization { inner: b }))
    }

    /// Lantern substitution with the bundled configuration.
    fn lantern(&self, position: usize) -> PyResult<Self> {
        let cfg = artifact::bundled_lantern().config();
        let inner =
            factorization::lantern_substitute(&self.inner, position, &cfg).map_err(value_error)?;
        Ok(PyFactorization { inner })
    }

    #[pyo3(signature = (other, twist = None))]
    fn fiber_sum(&self, other: &PyFactorization, twist: Option<Vec<(i64, i64)>>) -> PyResult<Self> {
        let u = twist.map(word).transpose()?;
        let inner =
            factorization::fiber_sum(&self.inner, &other.inner, u.as_ref()).map_err(value_error)?;
        Ok(PyFactorization { inner })
    }
}

#[pyfunction]
fn is_identity(w: Vec<(i64, i64)>) -> PyResult<&'static str> {
    Ok(verdict_name(mcg::is_identity(&word(w)?).verdict))
}

#[pyfunction]
fn homology_action(w: Vec<(i64, i64)>) -> PyResult<[[i64; 4]; 4]> {
    Ok(mcg::homology_action(&word(w)?).0)
}

#[pyfunction]
fn bundled_seed() -> PyFactorization {
    PyFactorization {
        inner: artifact::bundled_seed().factorization(),
    }
}

/// The `(14, 13)` word derived from the bundled seed and lantern.
#[pyfunction]
fn derive_14_13() -> PyResult<PyFactorization> {
    let seed = artifact::bundled_seed().factorization();
    let cfg = artifact::bundled_lantern().config();
    let phi = mcg::standard_transporter(1, 5).map_err(value_error)?;
    let inner = factorization::derive_14_13(&seed, &phi, &cfg).map_err(value_error)?;
    Ok(PyFactorization { inner })
}

#[pyfunction]
fn signature(n: u64, s: u64) -> PyResult<i64> {
    analysis::signature(n, s).map_err(value_error)
}

#[pyfunction]
fn euler(n: u64, s: u64) -> i64 {
    analysis::euler(n, s)
}

#[pyfunction]
fn admissible(n: u64, s: u64) -> bool {
    analysis::admissible(n, s).passes
}

/// Returns `(verdict, certificate_json)`.
#[pyfunction]
fn certify_minimal(n: u64, s: u64) -> PyResult<(String, String)> {
    let c = analysis::certify_minimal(n, s).map_err(value_error)?;
    Ok((format!("{:?}", c.verdict), to_json(&c)))
}

/// Returns `(verdict, certificate_json)`.
#[pyfunction]
fn certify_indecomposable(n: u64, s: u64) -> PyResult<(String, String)> {
    let c = analysis::certify_indecomposable(n, s).map_err(value_error)?;
    Ok((format!("{:?}", c.verdict), to_json(&c)))
}

#[pyfunction]
fn decompositions(n: u64, s: u64) -> Vec<((u64, u64), (u64, u64))> {
    analysis::decompositions(n, s)
        .into_iter()
        .map(|(a, b)| ((a.n, a.s), (b.n, b.s)))
        .collect()
}

#[pyfunction]
fn theorem1_report_json() -> String {
    to_json(&analysis::theorem1_report())
}

#[pyfunction]
fn enumerate_admissible(max_k: u64) -> Vec<(u64, u64)> {
    analysis::enumerate_admissible(max_k)
        .into_iter()
        .map(|t| (t.n, t.s))
        .collect()
}

#[pymodule]
fn g2lf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFactorization>()?;
    m.add_function(wrap_pyfunction!(is_identity, m)?)?;
    m.add_function(wrap_pyfunction!(homology_action, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_seed, m)?)?;
    m.add_function(wrap_pyfunction!(derive_14_13, m)?)?;
    m.add_function(wrap_pyfunction!(signature, m)?)?;
    m.add_function(wrap_pyfunction!(euler, m)?)?;
    m.add_function(wrap_pyfunction!(admissible, m)?)?;
    m.add_function(wrap_pyfunction!(certify_minimal, m)?)?;
    m.add_function(wrap_pyfunction!(certify_indecomposable, m)?)?;
    m.add_function(wrap_pyfunction!(decompositions, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_report_json, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_admissible, m)?)?;
    Ok(())
}

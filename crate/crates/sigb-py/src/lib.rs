//! Python module `sigb_py`: systems, signature runs and the Buchberger oracle.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use sigb::bench::{self, EngineKind, SystemSpec, VariantConfig};
use sigb::engine::compute;
use sigb::oracle::{buchberger as oracle_gb, reduced_gb, verify_equivalence, BuchbergerConfig};
use sigb::{Polynomial, RunStats};

fn err(e: sigb::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = sigb::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

/// A polynomial system with its ring.
#[pyclass(name = "System", module = "sigb_py", from_py_object)]
#[derive(Clone)]
pub struct PySystem {
    inner: SystemSpec,
}

#[pymethods]
impl PySystem {
    /// Parses the `p` / `vars` / one-polynomial-per-line format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PySystem {
            inner: bench::parse_system(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn named(name: &str, n: usize) -> PyResult<Self> {
        Ok(PySystem {
            inner: bench::gen_named(name, n).map_err(err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (n, dmin, dmax, seed, homogeneous=false))]
    fn random(n: usize, dmin: u32, dmax: u32, seed: u64, homogeneous: bool) -> PyResult<Self> {
        Ok(PySystem {
            inner: bench::gen_random(n, dmin, dmax, seed, homogeneous).map_err(err)?,
        })
    }

    fn homogenize(&self) -> Self {
        PySystem {
            inner: bench::homogenize(&self.inner),
        }
    }

    #[getter]
    fn characteristic(&self) -> u32 {
        self.inner.characteristic()
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.ring.vars.clone()
    }

    #[getter]
    fn gens(&self) -> Vec<String> {
        self.render(&self.inner.gens)
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    fn text(&self) -> String {
        bench::emit_system(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.gens.len()
    }

    fn __repr__(&self) -> String {
        format!("System({}, {} generators)", self.inner.label(), self.inner.gens.len())
    }
}

impl PySystem {
    fn render(&self, ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.display(&self.inner.ring).to_string()).collect()
    }

    fn parse_polys(&self, ps: Vec<String>) -> PyResult<Vec<Polynomial>> {
        ps.iter().map(|s| bench::parse_polynomial(&self.inner.ring, s).map_err(err)).collect()
    }
}

/// Outcome of a signature run.
#[pyclass(name = "RunResult", module = "sigb_py", get_all, skip_from_py_object)]
pub struct PyRunResult {
    /// Polynomial parts of the basis in insertion order.
    basis: Vec<String>,
    /// Signatures, aligned with `basis`.
    signatures: Vec<String>,
    zero_reductions: u64,
    basis_size: u64,
    syzygy_count: u64,
    syzygy_count_pruned: u64,
    s_reduction_steps: u64,
    multiplications: u64,
    interred_reduction_steps: u64,
    interred_multiplications: u64,
}

#[pymethods]
impl PyRunResult {
    fn stats(&self) -> std::collections::BTreeMap<&'static str, u64> {
        [
            ("zero_reductions", self.zero_reductions),
            ("basis_size", self.basis_size),
            ("syzygy_count", self.syzygy_count),
            ("syzygy_count_pruned", self.syzygy_count_pruned),
            ("s_reduction_steps", self.s_reduction_steps),
            ("multiplications", self.multiplications),
            ("interred_reduction_steps", self.interred_reduction_steps),
            ("interred_multiplications", self.interred_multiplications),
        ]
        .into_iter()
        .collect()
    }

    fn __getitem__(&self, key: &str) -> PyResult<u64> {
        self.stats().get(key).copied().ok_or_else(|| PyKeyError::new_err(key.to_string()))
    }

    fn __repr__(&self) -> String {
        format!(
            "RunResult(basis_size={}, zero_reductions={}, syzygy_count={})",
            self.basis_size, self.zero_reductions, self.syzygy_count
        )
    }
}

/// Runs a signature engine (`rb`, `gensb`, `f4rb`).
#[pyfunction]
#[pyo3(signature = (system, module_order="pot", rewrite="add", reduction="top", engine="rb", interreduce=false, gvw2013=false))]
#[allow(clippy::too_many_arguments)]
fn run(
    system: &PySystem,
    module_order: &str,
    rewrite: &str,
    reduction: &str,
    engine: &str,
    interreduce: bool,
    gvw2013: bool,
) -> PyResult<PyRunResult> {
    let kind: EngineKind = parse(engine)?;
    if kind == EngineKind::Buchberger {
        return Err(PyValueError::new_err("use buchberger() for the oracle engine"));
    }
    let cfg = VariantConfig {
        module_order: parse(module_order)?,
        rewrite: parse(rewrite)?,
        reduction: parse(reduction)?,
        engine: kind,
        interreduce,
        gvw2013,
        ..Default::default()
    };
    let ring = &system.inner.ring;
    let out = compute(ring, &system.inner.gens, &cfg.engine_config()).map_err(err)?;
    let RunStats {
        zero_reductions,
        basis_size,
        syzygy_count,
        syzygy_count_pruned,
        s_reduction_steps,
        multiplications,
        interred_reduction_steps,
        interred_multiplications,
    } = out.stats;
    Ok(PyRunResult {
        basis: out.basis.iter().map(|e| e.poly.display(ring).to_string()).collect(),
        signatures: out.basis.iter().map(|e| e.sig.display_with(&ring.vars)).collect(),
        zero_reductions,
        basis_size,
        syzygy_count,
        syzygy_count_pruned,
        s_reduction_steps,
        multiplications,
        interred_reduction_steps,
        interred_multiplications,
    })
}

/// Reduced Gröbner basis computed by the Buchberger oracle.
#[pyfunction]
fn buchberger(system: &PySystem) -> PyResult<Vec<String>> {
    let mut st = RunStats::default();
    let g = oracle_gb(&system.inner.ring, &system.inner.gens, BuchbergerConfig::default(), &mut st).map_err(err)?;
    Ok(system.render(&reduced_gb(&system.inner.ring, &g)))
}

/// Reduced form of a Gröbner basis given as strings in the system's ring.
#[pyfunction]
fn reduce_basis(system: &PySystem, basis: Vec<String>) -> PyResult<Vec<String>> {
    let b = system.parse_polys(basis)?;
    Ok(system.render(&reduced_gb(&system.inner.ring, &b)))
}

/// Whether two Gröbner bases have the same reduced form.
#[pyfunction]
fn verify(system: &PySystem, a: Vec<String>, b: Vec<String>) -> PyResult<bool> {
    let a = system.parse_polys(a)?;
    let b = system.parse_polys(b)?;
    Ok(verify_equivalence(&system.inner.ring, &a, &b))
}

#[pymodule]
fn sigb_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySystem>()?;
    m.add_class::<PyRunResult>()?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(buchberger, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_basis, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

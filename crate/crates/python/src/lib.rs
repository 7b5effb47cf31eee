//! Python bindings: the `polyprod` extension module.

use std::collections::BTreeMap;

use polyprod_core::decomposition::{self, SphereAssignment, WedgeSummand};
use polyprod_core::enumerate;
use polyprod_core::graded_lie;
use polyprod_core::homology::HomologyProfile;
use polyprod_core::interchange::{complex_to_json, parse_complex};
use polyprod_core::permutation::sigma_permutation;
use polyprod_core::proof_replay;
use polyprod_core::report::{self, Format, RunConfig};
use polyprod_core::whitehead;
use polyprod_core::{Error, VertexSet};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vset(vertices: Vec<usize>) -> PyResult<VertexSet> {
    VertexSet::from_vertices(vertices).map_err(err)
}

/// `{q: (betti, [torsion orders])}` for every nonzero degree.
fn profile_dict(p: &HomologyProfile) -> BTreeMap<usize, (usize, Vec<u64>)> {
    p.iter().map(|(q, g)| (q, (g.betti, g.torsion.clone()))).collect()
}

fn spheres(m: usize, dims: Option<Vec<u32>>) -> PyResult<SphereAssignment> {
    match dims {
        None => Ok(SphereAssignment::moment_angle(m)),
        Some(d) => SphereAssignment::new(d).map_err(err),
    }
}

/// A simplicial complex on the vertex set {1, ..., m}.
#[pyclass(name = "SimplicialComplex", frozen, eq, from_py_object, module = "polyprod")]
#[derive(Clone, PartialEq)]
struct PyComplex(polyprod_core::SimplicialComplex);

#[pymethods]
impl PyComplex {
    #[new]
    fn new(m: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        let facets = facets.into_iter().map(vset).collect::<PyResult<Vec<_>>>()?;
        polyprod_core::SimplicialComplex::from_facets(m, facets).map(PyComplex).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_complex(text).map(PyComplex).map_err(err)
    }

    #[staticmethod]
    fn full_simplex(m: usize) -> PyResult<Self> {
        polyprod_core::SimplicialComplex::full_simplex(m).map(PyComplex).map_err(err)
    }

    #[staticmethod]
    fn boundary_of_full(m: usize) -> PyResult<Self> {
        polyprod_core::SimplicialComplex::boundary_of_full(m).map(PyComplex).map_err(err)
    }

    #[staticmethod]
    fn discrete(m: usize) -> PyResult<Self> {
        polyprod_core::SimplicialComplex::discrete(m).map(PyComplex).map_err(err)
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    fn facets(&self) -> Vec<Vec<usize>> {
        self.0.facets().into_iter().map(VertexSet::to_vec).collect()
    }

    fn num_faces(&self) -> usize {
        self.0.num_faces()
    }

    fn f_vector(&self) -> Vec<usize> {
        self.0.f_vector()
    }

    fn contains(&self, face: Vec<usize>) -> PyResult<bool> {
        Ok(self.0.contains(vset(face)?))
    }

    fn is_shifted(&self) -> bool {
        self.0.is_shifted()
    }

    fn shifted_closure(&self) -> Self {
        PyComplex(self.0.shifted_closure())
    }

    fn induced(&self, subset: Vec<usize>) -> PyResult<Self> {
        self.0.induced(vset(subset)?).map(PyComplex).map_err(err)
    }

    fn skeleton(&self, k: i64) -> Self {
        PyComplex(self.0.skeleton(k))
    }

    /// Minimal non-faces containing `top`.
    fn minimal_nonfaces_max(&self, top: usize) -> Vec<Vec<usize>> {
        self.0.minimal_nonfaces_max(top).into_iter().map(VertexSet::to_vec).collect()
    }

    fn reduced_homology(&self) -> PyResult<BTreeMap<usize, (usize, Vec<u64>)>> {
        polyprod_core::reduced_homology(&self.0).map(|p| profile_dict(&p)).map_err(err)
    }

    fn to_json(&self) -> String {
        complex_to_json(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("SimplicialComplex({})", complex_to_json(&self.0))
    }
}

/// Wedge summands `(I, F)` of a shifted complex.
#[pyfunction]
fn decompose(k: &PyComplex) -> PyResult<Vec<(Vec<usize>, Vec<usize>)>> {
    Ok(decomposition::decompose(&k.0)
        .map_err(err)?
        .iter()
        .map(|s| (s.index_set.to_vec(), s.nonface.to_vec()))
        .collect())
}

#[pyfunction]
fn verify_wedge_equivalence(k: &PyComplex) -> PyResult<bool> {
    decomposition::verify_wedge_equivalence(&k.0).map(|r| r.ok).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (k, spheres=None))]
fn total_homology(k: &PyComplex, spheres: Option<Vec<u32>>) -> PyResult<BTreeMap<usize, (usize, Vec<u64>)>> {
    let x = self::spheres(k.0.m(), spheres)?;
    decomposition::total_homology(&k.0, &x).map(|p| profile_dict(&p)).map_err(err)
}

#[pyfunction]
fn hochster_profile(k: &PyComplex) -> PyResult<BTreeMap<usize, (usize, Vec<u64>)>> {
    decomposition::hochster_profile(&k.0).map(|p| profile_dict(&p)).map_err(err)
}

/// `σ(F, I)` as `(images, sign)`.
#[pyfunction]
fn sigma(f: Vec<usize>, i: Vec<usize>, m: usize) -> PyResult<(Vec<usize>, i8)> {
    let p = sigma_permutation(vset(f)?, vset(i)?, m).map_err(err)?;
    Ok((p.images().to_vec(), p.sign()))
}

#[pyfunction]
fn pinch_expression(k: &PyComplex, index_set: Vec<usize>, nonface: Vec<usize>) -> PyResult<String> {
    let s = WedgeSummand { index_set: vset(index_set)?, nonface: vset(nonface)? };
    whitehead::pinch_expression(&k.0, &s).map(|e| e.to_string()).map_err(err)
}

/// `[(I, F, expression, degree)]` for every summand.
#[pyfunction]
#[pyo3(signature = (k, spheres=None))]
fn pinch_map(k: &PyComplex, spheres: Option<Vec<u32>>) -> PyResult<Vec<(Vec<usize>, Vec<usize>, String, i64)>> {
    let x = self::spheres(k.0.m(), spheres)?;
    whitehead::full_pinch_map(&k.0, &x)
        .map_err(err)?
        .into_iter()
        .map(|(s, e)| {
            let d = whitehead::degree_of(&e, &x).map_err(err)?;
            Ok((s.index_set.to_vec(), s.nonface.to_vec(), e.to_string(), d))
        })
        .collect()
}

#[pyfunction]
fn jacobi_sum(m: usize) -> PyResult<String> {
    whitehead::jacobi_sum(m).map(|s| s.to_string()).map_err(err)
}

#[pyfunction]
fn corollary_proof_check() -> bool {
    proof_replay::corollary_proof_check()
}

/// The residual rendered as text; `"0"` when the identity holds.
#[pyfunction]
fn whitehead_jacobi_residual(p: u32, q: u32, r: u32) -> PyResult<String> {
    graded_lie::whitehead_jacobi_residual(p, q, r).map(|e| e.to_string()).map_err(err)
}

#[pyfunction]
fn generate_corpus(seed: u64, size: usize, m: usize) -> PyResult<Vec<PyComplex>> {
    Ok(enumerate::generate_corpus(seed, size, m).map_err(err)?.into_iter().map(PyComplex).collect())
}

/// The structured analyze report as a JSON string.
#[pyfunction]
fn analyze_json(k: &PyComplex) -> PyResult<String> {
    let cfg = RunConfig { format: Format::Structured, ..RunConfig::default() };
    report::cmd_analyze(&cfg, std::slice::from_ref(&k.0)).map(|o| o.output).map_err(err)
}

/// The structured verify report as a JSON string.
#[pyfunction]
fn verify_json(k: &PyComplex) -> PyResult<String> {
    let cfg = RunConfig { format: Format::Structured, ..RunConfig::default() };
    report::cmd_verify(&cfg, std::slice::from_ref(&k.0)).map(|o| o.output).map_err(err)
}

#[pymodule]
fn polyprod(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(verify_wedge_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(total_homology, m)?)?;
    m.add_function(wrap_pyfunction!(hochster_profile, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(pinch_expression, m)?)?;
    m.add_function(wrap_pyfunction!(pinch_map, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi_sum, m)?)?;
    m.add_function(wrap_pyfunction!(corollary_proof_check, m)?)?;
    m.add_function(wrap_pyfunction!(whitehead_jacobi_residual, m)?)?;
    m.add_function(wrap_pyfunction!(generate_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    Ok(())
}

//! Python bindings. Inputs are `builtin:NAME` strings or JSON file paths,
//! as on the command line; reports come back as `{family: witnesses}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hopfwreath::group::{kk_embed_group as kk_group, measuring_group_iso, GroupAlgebra};
use hopfwreath::hopf::{check_axioms, group_likes as likes, primitives_up_to, AxiomReport, FreeModule};
use hopfwreath::io;
use hopfwreath::lie::{kk_embed_lie as kk_lie, Envelope};
use hopfwreath::smash::{group_hopf_round_trip, group_wreath_comparison, wreath_hopf_lie};

pub type Witnesses = BTreeMap<String, Vec<Vec<String>>>;

fn err(e: hopfwreath::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn witnesses(r: AxiomReport) -> Witnesses {
    r.checks.into_iter().map(|c| (c.axiom, c.violations)).collect()
}

/// Five Hopf axiom families on `𝕜G`; empty lists mean the family holds.
#[pyfunction]
#[pyo3(signature = (group, window=None))]
pub fn check_group_axioms(group: &str, window: Option<usize>) -> PyResult<Witnesses> {
    let g = io::load_group(group).map_err(err)?;
    Ok(witnesses(check_axioms(&GroupAlgebra::new(g), window)))
}

/// Five Hopf axiom families on `U(𝔤)` truncated at degree `n`.
#[pyfunction]
#[pyo3(signature = (lie, n=4, window=None))]
pub fn check_lie_axioms(lie: &str, n: usize, window: Option<usize>) -> PyResult<Witnesses> {
    let g = io::load_lie(lie).map_err(err)?;
    Ok(witnesses(check_axioms(&Envelope::new(g, n), window)))
}

#[pyfunction]
pub fn group_order(group: &str) -> PyResult<usize> {
    Ok(io::load_group(group).map_err(err)?.order())
}

#[pyfunction]
pub fn group_likes(group: &str) -> PyResult<Vec<String>> {
    let h = GroupAlgebra::new(io::load_group(group).map_err(err)?);
    Ok(likes(&h).iter().map(|v| h.render(v)).collect())
}

/// Primitive elements of `U(𝔤)` up to degree `n`, rendered in the PBW basis.
#[pyfunction]
#[pyo3(signature = (lie, n=4))]
pub fn primitives(lie: &str, n: usize) -> PyResult<Vec<String>> {
    let h = Envelope::new(io::load_lie(lie).map_err(err)?, n);
    Ok(primitives_up_to(&h, Some(n)).iter().map(|v| h.render(v)).collect())
}

#[pyfunction]
pub fn measuring_dimension(x: usize, y: usize) -> usize {
    let names = |k: usize, p: &str| (0..k).map(|i| format!("{p}{i}")).collect();
    measuring_group_iso(names(x, "x"), names(y, "y")).dim()
}

/// Product and coproduct tables of the group-algebra and Hopf wreath products compared.
#[pyfunction]
pub fn wreath_group_comparison(a: &str, q: &str) -> PyResult<Witnesses> {
    let a = Arc::new(io::load_group(a).map_err(err)?);
    let q = Arc::new(io::load_group(q).map_err(err)?);
    Ok(witnesses(group_wreath_comparison(&a, &q).map_err(err)?))
}

#[pyfunction]
#[pyo3(signature = (a, q, n=4, window=None))]
pub fn wreath_bracket_comparison(a: &str, q: &str, n: usize, window: Option<usize>) -> PyResult<Witnesses> {
    let hopf = wreath_hopf_lie(io::load_lie(a).map_err(err)?, io::load_lie(q).map_err(err)?, n).map_err(err)?;
    Ok(witnesses(hopf.bracket_comparison(window)))
}

/// Graph of the embedding into the wreath product as `(element, image)` labels.
#[pyfunction]
pub fn kk_embed_group(ext: &str) -> PyResult<Vec<(String, String)>> {
    let ext = io::load_group_extension(ext).map_err(err)?;
    let emb = kk_group(&ext).map_err(err)?;
    Ok(emb.graph().into_iter().map(|(e, w)| (e, emb.wreath.label(&w))).collect())
}

#[pyfunction]
#[pyo3(signature = (ext, n=4, window=None))]
pub fn kk_embed_lie(ext: &str, n: usize, window: Option<usize>) -> PyResult<Witnesses> {
    let ext = io::load_lie_extension(ext).map_err(err)?;
    Ok(witnesses(kk_lie(&ext, n).map_err(err)?.check(window)))
}

#[pyfunction]
pub fn group_round_trip(ext: &str) -> PyResult<Witnesses> {
    let ext = io::load_group_extension(ext).map_err(err)?;
    Ok(witnesses(group_hopf_round_trip(&ext).map_err(err)?.report()))
}

#[pymodule]
fn hopfwreath_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(check_group_axioms, m)?)?;
    m.add_function(wrap_pyfunction!(check_lie_axioms, m)?)?;
    m.add_function(wrap_pyfunction!(group_order, m)?)?;
    m.add_function(wrap_pyfunction!(group_likes, m)?)?;
    m.add_function(wrap_pyfunction!(primitives, m)?)?;
    m.add_function(wrap_pyfunction!(measuring_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(wreath_group_comparison, m)?)?;
    m.add_function(wrap_pyfunction!(wreath_bracket_comparison, m)?)?;
    m.add_function(wrap_pyfunction!(kk_embed_group, m)?)?;
    m.add_function(wrap_pyfunction!(kk_embed_lie, m)?)?;
    m.add_function(wrap_pyfunction!(group_round_trip, m)?)?;
    Ok(())
}

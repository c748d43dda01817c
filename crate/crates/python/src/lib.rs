//! Python bindings for `spgm`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use spgm::cluster::build_btilde;
use spgm::paths::{enumerate_params, PathParams};
use spgm::{closed_form, minor_closed, minor_by_paths, minor_l_dp, minor_l_oracle, CWord};

fn word(rank: u32, cycles: u32, last: u32) -> PyResult<CWord> {
    CWord::new(rank, cycles, last).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Canonical string of `Δ^L(k;i)` by the chosen method.
pub fn minor_string(rank: u32, cycles: u32, last: u32, k: usize, method: &str) -> Result<String, String> {
    let w = CWord::new(rank, cycles, last).map_err(|e| e.to_string())?;
    let p = match method {
        "closed" => minor_closed(&w, k).map_err(|e| e.to_string())?,
        "path" => minor_by_paths(&w, k).map_err(|e| e.to_string())?,
        "oracle" => minor_l_oracle(&w, k).map_err(|e| e.to_string())?,
        "dp" => minor_l_dp(&w, k).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown method {other}")),
    };
    Ok(p.canonical_string())
}

/// Runs the command line front end on `args` (without the program name).
pub fn run_cli(args: &[String]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let full = std::iter::once("spgm".to_string()).chain(args.iter().cloned());
    let code = spgm::cli::run(full, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

#[pyfunction]
#[pyo3(signature = (rank, cycles, last, k, method = "closed"))]
fn minor(rank: u32, cycles: u32, last: u32, k: usize, method: &str) -> PyResult<String> {
    minor_string(rank, cycles, last, k, method).map_err(PyValueError::new_err)
}

#[pyfunction]
fn minor_json(rank: u32, cycles: u32, last: u32, k: usize) -> PyResult<String> {
    Ok(minor_closed(&word(rank, cycles, last)?, k).map_err(value_err)?.to_json())
}

#[pyfunction]
fn paths(rank: u32, cycles: u32, last: u32, k: usize) -> PyResult<Vec<String>> {
    let p = PathParams::for_position(&word(rank, cycles, last)?, k).map_err(value_err)?;
    Ok(enumerate_params(&p).iter().map(|x| x.to_string()).collect())
}

#[pyfunction]
fn tableaux(rank: u32, cycles: u32, last: u32, k: usize) -> PyResult<Vec<String>> {
    let p = PathParams::for_position(&word(rank, cycles, last)?, k).map_err(value_err)?;
    Ok(closed_form::enumerate_params(&p).iter().map(|t| t.to_string()).collect())
}

#[pyfunction]
fn btilde(rank: u32, cycles: u32, last: u32) -> PyResult<String> {
    Ok(build_btilde(&word(rank, cycles, last)?).to_json().to_string())
}

#[pyfunction]
fn mutate(rank: u32, cycles: u32, last: u32, seq: Vec<i64>) -> PyResult<String> {
    let b = build_btilde(&word(rank, cycles, last)?).mutate_seq(&seq).map_err(value_err)?;
    Ok(b.to_json().to_string())
}

#[pyfunction]
fn cli(args: Vec<String>) -> (i32, String, String) {
    run_cli(&args)
}

#[pymodule]
fn spgm_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(minor, m)?)?;
    m.add_function(wrap_pyfunction!(minor_json, m)?)?;
    m.add_function(wrap_pyfunction!(paths, m)?)?;
    m.add_function(wrap_pyfunction!(tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(btilde, m)?)?;
    m.add_function(wrap_pyfunction!(mutate, m)?)?;
    m.add_function(wrap_pyfunction!(cli, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn methods_agree_through_bindings() {
        let a = minor_string(3, 3, 2, 5, "closed").unwrap();
        for m in ["path", "oracle", "dp"] {
            assert_eq!(minor_string(3, 3, 2, 5, m).unwrap(), a);
        }
        assert!(minor_string(3, 3, 2, 5, "magic").is_err());
    }

    #[test]
    fn cli_passthrough() {
        let (code, out, _) = run_cli(&["btilde".into(), "--rank".into(), "2".into(), "--cycles".into(), "1".into(), "--last".into(), "1".into()]);
        assert_eq!(code, 0);
        assert!(out.contains("entries"));
    }
}

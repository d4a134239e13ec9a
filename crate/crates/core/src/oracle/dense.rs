//! Thin wrappers over the dense symmetric eigensolver.

use faer::dyn_stack::{MemBuffer, MemStack};
use faer::linalg::evd::{tridiagonal_self_adjoint_evd, SelfAdjointEvdParams};
use faer::{Col, Mat, Par, Side, Spec};

use crate::error::{Error, Result};

/// Ascending eigenvalues of a real symmetric matrix (lower triangle is read).
pub fn symmetric_eigenvalues(m: &Mat<f64>) -> Result<Vec<f64>> {
    m.self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::Eigensolver(format!("{e:?}")))
}

/// Ascending eigenvalues and the matching orthonormal eigenvectors (columns).
pub fn symmetric_eigen(m: &Mat<f64>) -> Result<(Vec<f64>, Mat<f64>)> {
    let evd = m
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Eigensolver(format!("{e:?}")))?;
    let s = evd.S();
    let vals = (0..m.nrows()).map(|i| s[i]).collect();
    Ok((vals, evd.U().to_owned()))
}

/// Ascending eigenvalues of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal (`offdiag.len() == diag.len() - 1`).
pub fn tridiagonal_eigenvalues(diag: &[f64], offdiag: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let d = Col::<f64>::from_fn(n, |i| diag[i]);
    let e = Col::<f64>::from_fn(n, |i| if i + 1 < n { offdiag[i] } else { 0.0 });
    let mut s = Col::<f64>::zeros(n);
    let req = faer::linalg::temp_mat_scratch::<f64>(n, 1).array(2);
    let mut buf = MemBuffer::new(req);
    tridiagonal_self_adjoint_evd(
        d.as_diagonal(),
        e.as_diagonal(),
        s.as_diagonal_mut(),
        None,
        Par::Seq,
        MemStack::new(&mut buf),
        Spec::<SelfAdjointEvdParams, f64>::default(),
    )
    .map_err(|e| Error::Eigensolver(format!("{e:?}")))?;
    let mut out: Vec<f64> = (0..n).map(|i| s[i]).collect();
    out.sort_by(f64::total_cmp);
    Ok(out)
}

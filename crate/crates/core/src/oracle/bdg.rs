//! Numeric Bogoliubov-de Gennes diagonalization of the Jordan-Wigner form of
//! the open chain, without any plane-wave ansatz.
//!
//! With `c_n` the Jordan-Wigner fermions the Hamiltonian is
//! `sum w0 c+c + J sum (c+_n c_{n+1} + c+_n c+_{n+1} + h.c.)`, i.e. hopping
//! matrix `A` (diagonal `w0`, neighbours `J`) and antisymmetric pairing `B`
//! (`B_{n,n+1} = J`). The quasiparticle energies are the positive eigenvalues
//! of `[[A, B], [-B, -A]]`, equivalently the singular values of `A + B`.

use faer::Mat;

use crate::chain::ChainParams;
use crate::error::{Error, Result};
use crate::numeric::kahan_sum;
use crate::oracle::dense::{symmetric_eigenvalues, tridiagonal_eigenvalues};

/// Largest chain accepted.
pub const MAX_SITES: usize = 10_000;
/// Chains up to this size use the full `2N x 2N` route by default.
pub const DENSE_MAX_SITES: usize = 512;
/// Largest chain whose full many-body spectrum may be enumerated.
pub const MANY_BODY_MAX_SITES: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct BdgSpectrum {
    pub n_sites: usize,
    /// Quasiparticle energies, ascending, all >= 0.
    pub energies: Vec<f64>,
    /// `(N w0 - sum eps) / 2`.
    pub ground_energy: f64,
}

impl BdgSpectrum {
    fn from_energies(params: &ChainParams, mut energies: Vec<f64>) -> Self {
        energies.sort_by(f64::total_cmp);
        let ground_energy =
            0.5 * (params.n_dipoles() as f64 * params.omega0() - kahan_sum(energies.iter().copied()));
        BdgSpectrum {
            n_sites: params.n_dipoles(),
            energies,
            ground_energy,
        }
    }

    /// Every many-body level `E0 + sum of an occupied subset`, ascending.
    pub fn many_body_spectrum(&self) -> Result<Vec<f64>> {
        let n = self.n_sites;
        if n > MANY_BODY_MAX_SITES {
            return Err(Error::TooLarge {
                dimension: 1usize << n.min(usize::BITS as usize - 1),
                cap: 1 << MANY_BODY_MAX_SITES,
            });
        }
        let mut levels = vec![self.ground_energy];
        for &e in &self.energies {
            let shifted: Vec<f64> = levels.iter().map(|l| l + e).collect();
            levels.extend(shifted);
        }
        levels.sort_by(f64::total_cmp);
        Ok(levels)
    }
}

fn check_size(params: &ChainParams) -> Result<()> {
    if params.n_dipoles() > MAX_SITES {
        return Err(Error::TooLarge {
            dimension: 2 * params.n_dipoles(),
            cap: 2 * MAX_SITES,
        });
    }
    Ok(())
}

/// Full `2N x 2N` symmetric BdG matrix route.
pub fn bdg_dense(params: &ChainParams) -> Result<BdgSpectrum> {
    check_size(params)?;
    let n = params.n_dipoles();
    let w0 = params.omega0();
    let j = params.coupling();
    let a = |r: usize, c: usize| -> f64 {
        if r == c {
            w0
        } else if r + 1 == c || c + 1 == r {
            j
        } else {
            0.0
        }
    };
    let b = |r: usize, c: usize| -> f64 {
        if r + 1 == c {
            j
        } else if c + 1 == r {
            -j
        } else {
            0.0
        }
    };
    let h = Mat::<f64>::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
        (true, true) => a(r, c),
        (true, false) => b(r, c - n),
        (false, true) => -b(r - n, c),
        (false, false) => -a(r - n, c - n),
    });
    let vals = symmetric_eigenvalues(&h)?;
    Ok(BdgSpectrum::from_energies(params, vals[n..].to_vec()))
}

/// Reduced `N x N` route: `eps^2` are the eigenvalues of the tridiagonal
/// `(A + B)^T (A + B)`, where `A + B` is upper bidiagonal with `w0` on the
/// diagonal and `2J` above it.
pub fn bdg_reduced(params: &ChainParams) -> Result<BdgSpectrum> {
    check_size(params)?;
    let n = params.n_dipoles();
    let w0 = params.omega0();
    let t = 2.0 * params.coupling();
    let diag: Vec<f64> = (0..n)
        .map(|i| if i == 0 { w0 * w0 } else { w0 * w0 + t * t })
        .collect();
    let off = vec![w0 * t; n - 1];
    let sq = tridiagonal_eigenvalues(&diag, &off)?;
    Ok(BdgSpectrum::from_energies(
        params,
        sq.into_iter().map(|x| x.max(0.0).sqrt()).collect(),
    ))
}

/// Dense route for short chains, reduced route beyond `DENSE_MAX_SITES`.
pub fn bdg_spin_chain(params: &ChainParams) -> Result<BdgSpectrum> {
    if params.n_dipoles() <= DENSE_MAX_SITES {
        bdg_dense(params)
    } else {
        bdg_reduced(params)
    }
}

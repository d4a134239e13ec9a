//! Dense exact diagonalization of the open transverse-field Ising chain,
//! `w0 sum_n s+_n s-_n + J sum_n sx_n sx_{n+1}`.
//!
//! Basis states are bit strings: bit `i` set means site `i` is excited, site 0
//! is the lowest bit. `sx sx` flips two neighbouring bits, so the parity of the
//! excitation number is conserved and each parity block is diagonalized
//! separately.

use faer::Mat;

use crate::chain::ChainParams;
use crate::error::{Error, Result};
use crate::oracle::dense::{symmetric_eigen, symmetric_eigenvalues};

/// Largest chain handled by default.
pub const DEFAULT_MAX_SITES: usize = 14;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseSpectrum {
    pub dimension: usize,
    /// All eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Ground-state `<s+_n s-_n>` per site, when requested.
    pub ground_vector_observables: Option<Vec<f64>>,
}

impl DenseSpectrum {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn gap(&self) -> f64 {
        self.eigenvalues[1] - self.eigenvalues[0]
    }
}

/// States of one excitation parity, in ascending order.
pub(crate) fn parity_states(n: usize, parity: u32) -> Vec<u32> {
    (0..1u32 << n).filter(|s| s.count_ones() % 2 == parity).collect()
}

fn block_hamiltonian(params: &ChainParams, states: &[u32]) -> Mat<f64> {
    let n = params.n_dipoles();
    let w0 = params.omega0();
    let j = params.coupling();
    let dim = 1usize << n;
    let mut index = vec![usize::MAX; dim];
    for (i, &s) in states.iter().enumerate() {
        index[s as usize] = i;
    }
    let mut h = Mat::<f64>::zeros(states.len(), states.len());
    for (col, &s) in states.iter().enumerate() {
        h[(col, col)] = w0 * s.count_ones() as f64;
        for site in 0..n - 1 {
            let t = s ^ (0b11 << site);
            h[(index[t as usize], col)] += j;
        }
    }
    h
}

/// Full `2^N` Hamiltonian matrix, for small cross-checks.
pub fn spin_chain_hamiltonian(params: &ChainParams) -> Mat<f64> {
    let all: Vec<u32> = (0..1u32 << params.n_dipoles()).collect();
    block_hamiltonian(params, &all)
}

pub fn ed_spin_chain(params: &ChainParams) -> Result<DenseSpectrum> {
    ed_spin_chain_with(params, DEFAULT_MAX_SITES, true)
}

/// Diagonalizes both parity blocks. With `observables`, eigenvectors are
/// computed too and the ground-state site populations are returned.
pub fn ed_spin_chain_with(
    params: &ChainParams,
    max_sites: usize,
    observables: bool,
) -> Result<DenseSpectrum> {
    let n = params.n_dipoles();
    let dimension = 1usize << n.min(usize::BITS as usize - 1);
    if n > max_sites || n >= 32 {
        return Err(Error::TooLarge {
            dimension,
            cap: 1usize << max_sites.min(usize::BITS as usize - 1),
        });
    }
    let mut eigenvalues = Vec::with_capacity(dimension);
    let mut ground: Option<(f64, Vec<f64>)> = None;
    for parity in 0..2 {
        let states = parity_states(n, parity);
        let h = block_hamiltonian(params, &states);
        if observables {
            let (vals, vecs) = symmetric_eigen(&h)?;
            if ground.as_ref().is_none_or(|(e, _)| vals[0] < *e) {
                let mut pops = vec![0.0; n];
                for (i, &s) in states.iter().enumerate() {
                    let p = vecs[(i, 0)] * vecs[(i, 0)];
                    for (site, pop) in pops.iter_mut().enumerate() {
                        if s >> site & 1 == 1 {
                            *pop += p;
                        }
                    }
                }
                ground = Some((vals[0], pops));
            }
            eigenvalues.extend(vals);
        } else {
            eigenvalues.extend(symmetric_eigenvalues(&h)?);
        }
    }
    eigenvalues.sort_by(f64::total_cmp);
    Ok(DenseSpectrum {
        dimension,
        eigenvalues,
        ground_vector_observables: ground.map(|(_, p)| p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_free_sites() {
        let s = ed_spin_chain(&ChainParams::new(2, 1.0, 0.0).unwrap()).unwrap();
        assert_eq!(s.dimension, 4);
        for (a, b) in s.eigenvalues.iter().zip([0.0, 1.0, 1.0, 2.0]) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn two_sites_closed_form() {
        // Even block {00, 11}: [[0, J], [J, 2]] -> 1 -/+ sqrt(1 + J^2).
        // Odd block {01, 10}: [[1, J], [J, 1]] -> 1 -/+ J.
        let eta = 0.23;
        let s = ed_spin_chain(&ChainParams::new(2, 1.0, eta).unwrap()).unwrap();
        let r = (1.0 + eta * eta).sqrt();
        let mut expect = vec![1.0 - r, 1.0 - eta, 1.0 + eta, 1.0 + r];
        expect.sort_by(f64::total_cmp);
        for (a, b) in s.eigenvalues.iter().zip(expect) {
            assert!((a - b).abs() < 1e-14);
        }
        let full = spin_chain_hamiltonian(&ChainParams::new(2, 1.0, eta).unwrap());
        assert_eq!(full[(0b11, 0b00)], eta);
        assert_eq!(full[(0b10, 0b01)], eta);
    }

    #[test]
    fn cap_is_enforced() {
        let p = ChainParams::new(15, 1.0, 0.1).unwrap();
        assert!(matches!(
            ed_spin_chain(&p),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn populations_reflect_and_stay_small() {
        let p = ChainParams::new(8, 1.0, 0.1).unwrap();
        let s = ed_spin_chain(&p).unwrap();
        let pops = s.ground_vector_observables.unwrap();
        for i in 0..8 {
            assert!((pops[i] - pops[7 - i]).abs() < 1e-12);
            assert!(pops[i] > 0.0 && pops[i] < 0.01);
        }
    }
}

//! Exact Jordan-Wigner solution of the open chain on the Pekar grid.

use crate::chain::{ApproximationTag, BogoliubovPair, ChainParams, ModeSpectrum, Statistics};
use crate::error::{Error, Result};
use crate::numeric::kahan_sum;

/// `E_F(k) = sqrt(w0^2 + 4J^2 + 4 J w0 cos k)`.
pub fn fermion_energy(k: f64, params: &ChainParams) -> f64 {
    let w0 = params.omega0();
    let j = params.coupling();
    (w0 * w0 + 4.0 * j * j + 4.0 * j * w0 * k.cos()).max(0.0).sqrt()
}

/// `(N w0 - sum_k E_F(k)) / 2`, summed in ascending mode order.
pub fn fermion_ground_energy(params: &ChainParams) -> f64 {
    let n = params.n_dipoles() as f64;
    let sum = kahan_sum(params.grid().ks().map(|k| fermion_energy(k, params)));
    0.5 * (n * params.omega0() - sum)
}

pub fn fermion_spectrum(params: &ChainParams) -> ModeSpectrum {
    ModeSpectrum {
        tag: ApproximationTag::FermionExact,
        params: *params,
        energies: params.grid().ks().map(|k| fermion_energy(k, params)).collect(),
        ground_energy: fermion_ground_energy(params),
    }
}

/// Fermionic Bogoliubov coefficients,
/// `alpha = D/S`, `beta = -2J sin k / S`, `D = w0 + 2J cos k + E_F`, `S = sqrt(D^2 + 4J^2 sin^2 k)`.
pub fn fermion_bogoliubov(k: f64, params: &ChainParams) -> Result<BogoliubovPair> {
    let w0 = params.omega0();
    let j = params.coupling();
    let e = fermion_energy(k, params);
    let d = w0 + 2.0 * j * k.cos() + e;
    let two_j_sin = 2.0 * j * k.sin();
    let s = d.hypot(two_j_sin);
    if !(s > f64::MIN_POSITIVE) {
        return Err(Error::DegenerateNormalization { k });
    }
    Ok(BogoliubovPair {
        k,
        alpha: d / s,
        beta: -two_j_sin / s,
        statistics: Statistics::Fermionic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn p(n: usize, eta: f64) -> ChainParams {
        ChainParams::new(n, 1.0, eta).unwrap()
    }

    #[test]
    fn energy_examples() {
        for k in [0.1, 1.0, 2.5] {
            assert_eq!(fermion_energy(k, &p(10, 0.0)), 1.0);
        }
        let e = fermion_energy(PI / 2.0, &p(10, 0.25));
        assert!((e - 1.25f64.sqrt()).abs() < 1e-15);
        assert!((e - 1.1180).abs() < 1e-4);
        let e = fermion_energy(PI / 4.0, &p(10, -0.2));
        let expect = (1.0 + 0.16 - 0.8 * (PI / 4.0).cos()).sqrt();
        assert!((e - expect).abs() < 1e-15);
        assert!((e - 0.770_918).abs() < 1e-6);
    }

    #[test]
    fn ground_energy_examples() {
        assert_eq!(fermion_ground_energy(&p(10, 0.0)), 0.0);
        let eta = 0.01;
        let prm = p(400, eta);
        let per_site = fermion_ground_energy(&prm) / 400.0;
        assert!((per_site + eta * eta / 2.0).abs() < 10.0 * eta.powi(3));
        assert!(fermion_ground_energy(&p(8, 0.2)) < 0.0);
    }

    #[test]
    fn bogoliubov_examples() {
        let pair = fermion_bogoliubov(0.7, &p(10, 0.0)).unwrap();
        assert_eq!((pair.alpha, pair.beta), (1.0, 0.0));

        let prm = p(10, 0.17);
        let j = prm.coupling();
        let e = fermion_energy(PI / 2.0, &prm);
        let pair = fermion_bogoliubov(PI / 2.0, &prm).unwrap();
        let expect = -2.0 * j / ((1.0 + e).powi(2) + 4.0 * j * j).sqrt();
        assert!((pair.beta - expect).abs() < 1e-15);

        for eta in [-0.25, -0.1, 0.05, 0.25] {
            for k in prm.grid().ks() {
                let pair = fermion_bogoliubov(k, &p(10, eta)).unwrap();
                assert!(pair.normalization_defect().abs() < 1e-12);
            }
        }
    }
}

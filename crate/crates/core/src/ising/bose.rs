//! Bose (zeroth-order Holstein-Primakoff) approximation.

use crate::chain::{ApproximationTag, BogoliubovPair, ChainParams, ModeSpectrum, Statistics};
use crate::error::{Error, Result};
use crate::numeric::kahan_sum;

/// `E_B(k) = sqrt(w0^2 + 4 J w0 cos k)`.
pub fn bose_energy(k: f64, params: &ChainParams) -> Result<f64> {
    let w0 = params.omega0();
    let radicand = w0 * w0 + 4.0 * params.coupling() * w0 * k.cos();
    if radicand < 0.0 {
        // Rounding at |eta| = 0.25, k = pi may land a hair below zero.
        if radicand > -1e-14 * w0 * w0 {
            return Ok(0.0);
        }
        return Err(Error::ComplexEnergy { k, radicand });
    }
    Ok(radicand.sqrt())
}

/// `(sum_k E_B(k) - N w0) / 2`. Note the sign convention is opposite to the
/// fermionic formula; both give `-eta^2 N w0 / 2` at second order.
pub fn bose_ground_energy(params: &ChainParams) -> Result<f64> {
    let energies = bose_energies(params)?;
    let n = params.n_dipoles() as f64;
    Ok(0.5 * (kahan_sum(energies) - n * params.omega0()))
}

fn bose_energies(params: &ChainParams) -> Result<Vec<f64>> {
    params.grid().ks().map(|k| bose_energy(k, params)).collect()
}

pub fn bose_spectrum(params: &ChainParams) -> Result<ModeSpectrum> {
    let energies = bose_energies(params)?;
    let n = params.n_dipoles() as f64;
    let ground_energy = 0.5 * (kahan_sum(energies.iter().copied()) - n * params.omega0());
    Ok(ModeSpectrum {
        tag: ApproximationTag::Bose,
        params: *params,
        energies,
        ground_energy,
    })
}

/// Bosonic Bogoliubov coefficients in the `b = alpha d + beta d^dag` convention:
/// `alpha = D/S`, `beta = -2J cos k / S`, `D = w0 + 2J cos k + E_B`,
/// `S = sqrt(D^2 - 4J^2 cos^2 k)`. Then `alpha - beta = sqrt(E_B / w0)` exactly.
pub fn bose_bogoliubov(k: f64, params: &ChainParams) -> Result<BogoliubovPair> {
    let w0 = params.omega0();
    let j = params.coupling();
    let e = bose_energy(k, params)?;
    let two_j_cos = 2.0 * j * k.cos();
    let d = w0 + two_j_cos + e;
    let s2 = (d - two_j_cos) * (d + two_j_cos);
    if !(s2 > 0.0) || !(d > 0.0) {
        return Err(Error::DegenerateNormalization { k });
    }
    let s = s2.sqrt();
    Ok(BogoliubovPair {
        k,
        alpha: d / s,
        beta: -two_j_cos / s,
        statistics: Statistics::Bosonic,
    })
}

/// Ground-state density of virtual excitations, `(1/N) sum_k beta_B(k)^2`.
pub fn virtual_population(params: &ChainParams) -> Result<f64> {
    let mut terms = Vec::with_capacity(params.n_dipoles());
    for k in params.grid().ks() {
        let b = bose_bogoliubov(k, params)?.beta;
        terms.push(b * b);
    }
    Ok(kahan_sum(terms) / params.n_dipoles() as f64)
}

//! Second-order expansions in `(eta, nu)` and the finite-size shift of the
//! lower polariton.

use std::f64::consts::PI;

use crate::chain::ApproximationTag;
use crate::cavity::{photon_frequency, CavityParams};
use crate::error::{Error, Result};
use crate::numeric::KahanSum;

/// Relative width of the band around the bare resonance where the
/// expansions are refused.
pub const RESONANCE_GUARD: f64 = 1e-6;

/// Second-order `(E-, E+)`. The lower line is the matter branch dressed by the
/// cavity, the upper the cavity line; scheme `HolsteinPrimakoff1FullLm`
/// adds `nu^2 w0 F(N)` to the lower one.
pub fn polariton_perturbative(k: f64, cavity: &CavityParams) -> Result<(f64, f64)> {
    let w0 = cavity.chain.omega0();
    let eta = cavity.chain.eta();
    let nu = cavity.nu;
    let wk = photon_frequency(k, cavity);
    if (wk - w0).abs() < RESONANCE_GUARD * w0 {
        return Err(Error::ResonanceDivergence { k });
    }
    let c = k.cos();
    let s = k.sin();
    let den = wk * wk - w0 * w0;
    let upper = wk / w0 + 2.0 * w0 * wk * nu * nu / den;
    let shift = 2.0 * w0 * w0 * nu * nu / den;
    let lower = match cavity.tag {
        ApproximationTag::Bose => 1.0 + 2.0 * eta * c - 2.0 * eta * eta * c * c - shift,
        ApproximationTag::HolsteinPrimakoff1 => {
            1.0 + 2.0 * eta * c + 2.0 * eta * eta * s * s - shift
        }
        ApproximationTag::HolsteinPrimakoff1FullLm => {
            let f = finite_size_correction(cavity.chain.n_dipoles(), cavity.delta).grid_sum;
            1.0 + 2.0 * eta * c + 2.0 * eta * eta * s * s - nu * nu * (2.0 * w0 * w0 / den - f)
        }
        ApproximationTag::FermionExact => {
            return Err(Error::UnsupportedTag {
                tag: cavity.tag,
                context: "perturbative polariton branches",
            })
        }
    };
    Ok((lower * w0, upper * w0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSizeCorrection {
    /// `(1/N) sum_l 1 / (2 x_l (1 + x_l))`, `x_l = delta l / (N + 1)`.
    pub grid_sum: f64,
    /// `(1 / 2 delta) ln((N + delta) / (1 + delta))`.
    pub closed_form: f64,
    /// `|grid_sum - closed_form| / closed_form`.
    pub relative_difference: f64,
}

/// Finite-size shift of the lower polariton, in units of `w0`. The photon
/// frequencies entering the sum are the bare `w_k = w0 delta k / pi` on the
/// Pekar grid, so the result depends on `(N, delta)` only.
pub fn finite_size_correction(n: usize, delta: f64) -> FiniteSizeCorrection {
    let nf = n as f64;
    let mut acc = KahanSum::new();
    for l in 1..=n {
        let x = delta * l as f64 / (nf + 1.0);
        acc.add(1.0 / (2.0 * x * (1.0 + x)));
    }
    let grid_sum = acc.value() / nf;
    let closed_form = ((nf + delta) / (1.0 + delta)).ln() / (2.0 * delta);
    let diff = (grid_sum - closed_form).abs();
    let relative_difference = if closed_form != 0.0 {
        diff / closed_form.abs()
    } else if diff == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    FiniteSizeCorrection {
        grid_sum,
        closed_form,
        relative_difference,
    }
}

/// One branch of the second-order Hopfield table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondOrderVector {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondOrderHopfield {
    pub minus: SecondOrderVector,
    pub plus: SecondOrderVector,
}

/// Printed second-order expansions of the Hopfield coefficients for the
/// fully first-order treatment, expressed in the bare `b` basis.
///
/// `photon` is the bare `w_k` and `f_sum` the `k'` sum appearing in `z_+`
/// (identical to `FiniteSizeCorrection::grid_sum`). The table labels the
/// matter-like branch `+`, i.e. it assumes `w_k < w0`. Used as a
/// cross-check of the exact coefficients only.
pub fn second_order_hopfield(
    k: f64,
    photon: f64,
    omega0: f64,
    eta: f64,
    nu: f64,
    f_sum: f64,
) -> SecondOrderHopfield {
    let w0 = omega0;
    let wk = photon;
    let c = k.cos();
    let w32 = w0.powf(1.5);
    let w52 = w0.powf(2.5);
    let w4 = w0.powi(4);
    let sq = wk.sqrt();
    let minus = SecondOrderVector {
        x: 1.0 - 2.0 * w4 * nu * nu / (w0 * w0 - wk * wk).powi(2),
        y: w32 * nu / (sq * (w0 - wk))
            - 4.0 * c * sq * w52 * eta * nu / ((wk - w0).powi(2) * (wk + w0)),
        w: -w4 * nu * nu / (wk * wk * (wk * wk - w0 * w0)),
        z: w32 * nu / (sq * (wk + w0))
            - 4.0 * c * sq * w52 * eta * nu / ((wk * wk - w0 * w0) * (wk + w0)),
    };
    let plus = SecondOrderVector {
        x: w32 * nu / (sq * (wk - w0))
            + c * (w0 + wk) * w32 * eta * nu / (sq * (wk - w0).powi(2)),
        y: 1.0 + 0.5 * eta * eta * c * c
            - 2.0 * w4 * nu * nu / ((wk - w0).powi(2) * (wk + w0).powi(2)),
        w: w32 * nu / (sq * (wk + w0))
            + c * (wk - w0).powi(3) * eta * nu / ((wk * w0).sqrt() * (wk * wk - w0 * w0)),
        z: eta * c - eta * eta * (2.0 * c * c - 0.5)
            - nu * nu * (w0 * w0 / (w0 * w0 - wk * wk) + f_sum),
    };
    SecondOrderHopfield { minus, plus }
}

/// Bare zone-edge frequency in units of `w0` for a chain whose cavity length
/// stays fixed while `n` grows from the reference `n_ref` at slope `delta_ref`.
pub fn fixed_length_delta(delta_ref: f64, n_ref: usize, n: usize) -> f64 {
    delta_ref * (n as f64 + 1.0) / (n_ref as f64 + 1.0)
}

/// Bare crossing of the linear photon line with `w0`.
pub fn bare_crossing(delta: f64) -> f64 {
    PI / delta
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::ChainParams;

    fn cav(eta: f64, nu: f64, delta: f64, tag: ApproximationTag) -> CavityParams {
        CavityParams::new(ChainParams::new(100, 1.0, eta).unwrap(), nu, delta, tag).unwrap()
    }

    #[test]
    fn uncoupled_limit() {
        let k = 1.2;
        let (lo, hi) = polariton_perturbative(k, &cav(0.1, 0.0, 4.0, ApproximationTag::Bose)).unwrap();
        assert!((hi - 4.0 * k / PI).abs() < 1e-15);
        let c = k.cos();
        assert!((lo - (1.0 + 0.2 * c - 0.02 * c * c)).abs() < 1e-15);
        let (lo, _) =
            polariton_perturbative(k, &cav(0.1, 0.0, 4.0, ApproximationTag::HolsteinPrimakoff1))
                .unwrap();
        let s = k.sin();
        assert!((lo - (1.0 + 0.2 * c + 0.02 * s * s)).abs() < 1e-15);
    }

    #[test]
    fn schemes_differ_by_fixed_amounts() {
        let eta = -0.2;
        let nu = 0.2;
        for k in [0.3, 1.5, 2.8] {
            let b = polariton_perturbative(k, &cav(eta, nu, 4.0, ApproximationTag::Bose)).unwrap();
            let bt = polariton_perturbative(k, &cav(eta, nu, 4.0, ApproximationTag::HolsteinPrimakoff1))
                .unwrap();
            let bc = polariton_perturbative(
                k,
                &cav(eta, nu, 4.0, ApproximationTag::HolsteinPrimakoff1FullLm),
            )
            .unwrap();
            assert!((bt.0 - b.0 - 2.0 * eta * eta).abs() < 1e-14);
            assert_eq!(bt.1, b.1);
            let f = finite_size_correction(100, 4.0).grid_sum;
            assert!((bc.0 - bt.0 - nu * nu * f).abs() < 1e-14);
        }
    }

    #[test]
    fn resonance_guard() {
        let k = PI / 4.0;
        let r = polariton_perturbative(k, &cav(0.0, 0.1, 4.0, ApproximationTag::Bose));
        assert!(matches!(r, Err(Error::ResonanceDivergence { .. })));
        let r = polariton_perturbative(k * (1.0 + 1e-5), &cav(0.0, 0.1, 4.0, ApproximationTag::Bose));
        assert!(r.is_ok());
    }

    #[test]
    fn finite_size_examples() {
        let f = finite_size_correction(1, 4.0);
        assert_eq!(f.closed_form, 0.0);
        assert!(f.grid_sum > 0.0);
        let mut last = f64::INFINITY;
        for delta in [10.0, 100.0, 1e3, 1e4] {
            let f = finite_size_correction(50, delta);
            assert!(f.grid_sum < last && f.closed_form < 0.01 * 1e3 / delta);
            last = f.grid_sum;
        }
        let a = finite_size_correction(1000, fixed_length_delta(4.0, 1000, 1000));
        let b = finite_size_correction(100_000, fixed_length_delta(4.0, 1000, 100_000));
        assert!(b.closed_form < a.closed_form / 10.0);
        assert!(b.grid_sum < a.grid_sum / 10.0);
    }
}

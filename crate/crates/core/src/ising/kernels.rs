//! Coefficients of the normal-ordered first-order Holstein-Primakoff
//! Hamiltonian.
//!
//! Two sets live here. `linear_coefficients` and `kernels_eval` reproduce the
//! published polynomials term by term and are kept for inspection only. The
//! solver works with `normal_ordered_*`, re-derived by Wick-ordering the
//! quartic term with the `1/N` from the plane-wave expansion kept explicit:
//! in that form the Bose limit of the pairing coefficient is
//! `w0 alpha beta + J cos k (alpha + beta)^2`, which vanishes at the Bose
//! solution, whereas the printed `2 J cos k` does not.

use crate::chain::{BogoliubovPair, ChainParams};

/// The `(A_k, B_k, C_k)` polynomials exactly as printed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

pub fn linear_coefficients(pair: &BogoliubovPair, params: &ChainParams) -> LinearCoefficients {
    let (al, be) = (pair.alpha, pair.beta);
    let w0 = params.omega0();
    let jc = params.coupling() * pair.k.cos();
    let s2 = (al + be) * (al + be);
    LinearCoefficients {
        a: w0 * (al * al + be * be) + 2.0 * s2 * jc,
        b: w0 * al * be + 2.0 * s2 * jc,
        c: w0 * be * be + jc * (2.0 * al * be + be * be),
    }
}

/// Printed nonlinear kernels `f(k,k')`, `g(k,k')`, `h(k,k')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kernels {
    pub f: f64,
    pub g: f64,
    pub h: f64,
}

/// Literal evaluation of the printed kernels for the table entries `i` (k) and `j` (k').
pub fn kernels_eval(coeffs: &[BogoliubovPair], i: usize, j: usize) -> Kernels {
    kernels_of(&coeffs[i], &coeffs[j])
}

pub fn kernels_of(p: &BogoliubovPair, q: &BogoliubovPair) -> Kernels {
    let (a, b, ck) = (p.alpha, p.beta, p.k.cos());
    let (a1, b1, ck1) = (q.alpha, q.beta, q.k.cos());
    let s = a + b;
    let s1 = a1 + b1;
    let csum = ck + ck1;
    let f = 2.0 * (a * b1 + a1 * b) * s * s1 * csum
        + 2.0 * a * b * ck1 * s1 * s1
        + 2.0 * b1 * b1 * ck * s * s;
    let g = 4.0 * b1 * s * s * s1 * csum
        + 2.0 * a * a * ck1 * s1 * s1
        + 4.0 * b1 * b1 * ck * s * s
        + 2.0 * b * b * ck1 * s1 * s1;
    let h = 2.0 * b * b1 * csum * s * s1 + 2.0 * b * b * ck1 * s1 * s1;
    Kernels { f, g, h }
}

/// Quadratic-part coefficients without the quartic contribution:
/// `(w0 (alpha^2 + beta^2) + 2 J cos k s^2, w0 alpha beta + J cos k s^2)`, `s = alpha + beta`.
pub fn normal_ordered_linear(pair: &BogoliubovPair, params: &ChainParams) -> (f64, f64) {
    let (al, be) = (pair.alpha, pair.beta);
    let w0 = params.omega0();
    let jc = params.coupling() * pair.k.cos();
    let s2 = (al + be) * (al + be);
    (w0 * (al * al + be * be) + 2.0 * jc * s2, w0 * al * be + jc * s2)
}

/// Re-derived kernels `(f, g)` such that the diagonal and pairing coefficients
/// read `A_k - (J/2)(1/N) sum_k' f` and `B_k - (J/2)(1/N) sum_k' g`.
pub fn normal_ordered_kernels(p: &BogoliubovPair, q: &BogoliubovPair) -> (f64, f64) {
    let (a, b, ck) = (p.alpha, p.beta, p.k.cos());
    let (a1, b1, ck1) = (q.alpha, q.beta, q.k.cos());
    let s2 = (a + b) * (a + b);
    let pq = b1 * (a1 + b1) * ck1;
    let mq = b1 * (2.0 * b1 + a1);
    let g = 2.0 * (2.0 * pq * a * b + mq * ck * s2 + pq * s2);
    let f = 4.0 * (pq * (a * a + b * b) + mq * ck * s2 + pq * s2);
    (f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Statistics;
    use crate::ising::hp1::hp1_coefficients_perturbative;
    use std::f64::consts::PI;

    fn trivial(k: f64) -> BogoliubovPair {
        BogoliubovPair {
            k,
            alpha: 1.0,
            beta: 0.0,
            statistics: Statistics::Bosonic,
        }
    }

    #[test]
    fn trivial_table_substitution() {
        for (k, k1) in [(0.3, 1.7), (PI / 3.0, PI / 5.0), (2.0, 0.1)] {
            let kk = kernels_of(&trivial(k), &trivial(k1));
            assert_eq!(kk.f, 0.0);
            assert!((kk.g - 2.0 * k1.cos()).abs() < 1e-15);
            assert_eq!(kk.h, 0.0);
        }
    }

    #[test]
    fn evaluation_is_deterministic() {
        let table: Vec<_> = [PI / 3.0, PI / 5.0]
            .into_iter()
            .map(|k| hp1_coefficients_perturbative(k, 0.1))
            .collect();
        let a = kernels_eval(&table, 0, 1);
        let b = kernels_eval(&table, 0, 1);
        assert_eq!(a, b);
        assert!(a.f.is_finite() && a.g.is_finite() && a.h.is_finite());
    }

    #[test]
    fn g_vanishes_at_half_zone() {
        let table = vec![hp1_coefficients_perturbative(PI / 2.0, 0.2); 2];
        let g = kernels_eval(&table, 0, 1).g;
        assert!(g.abs() < 1e-15);
    }

    #[test]
    fn normal_ordered_pairing_vanishes_at_bose_solution() {
        let prm = ChainParams::new(10, 1.0, 0.2).unwrap();
        for k in prm.grid().ks() {
            let pair = crate::ising::bose::bose_bogoliubov(k, &prm).unwrap();
            let (_, b) = normal_ordered_linear(&pair, &prm);
            assert!(b.abs() < 1e-14);
            let printed = linear_coefficients(&pair, &prm).b;
            assert!(printed.abs() > 1e-3 || k.cos().abs() < 1e-12);
        }
    }
}

//! Truncated-Fock exact diagonalization of the chain coupled to a single
//! standing-wave cavity mode.
//!
//! ```text
//! H = w a+a - D (a - a+)^2 + w0 sum_n s+_n s-_n + J sum_n sx_n sx_{n+1}
//!     + sum_n g_n (a - a+)(s-_n - s+_n),
//! D = Omega0^2 / w,  g_n = Omega0 sqrt(w0 / w) phi_l(n),
//! phi_l(n) = sqrt(2 / (N + 1)) sin(n k_l).
//! ```
//!
//! The diamagnetic term is kept in the Hamiltonian; in the quadratic limit it
//! renormalizes the mode to `sqrt(w^2 + 4 Omega0^2)` and the coupling to
//! `Omega0 sqrt(w0 / w~)`. The total excitation parity (photons plus spin
//! flips) is conserved. Basis index is `photons * 2^N + spins`.

use faer::Mat;

use crate::chain::ChainParams;
use crate::error::{Error, Result};
use crate::ising::fermion_energy;
use crate::oracle::dense::symmetric_eigen;
use crate::oracle::spin_chain::DenseSpectrum;

/// Default cap on the total Hilbert-space dimension.
pub const DEFAULT_DIMENSION_CAP: usize = 20_000;
/// Relative movement of the polariton gaps tolerated when the cutoff doubles.
pub const CUTOFF_TOLERANCE: f64 = 1e-6;

/// Which standing wave the photon mode matches, and its bare frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DickeMode {
    /// 1-based mode index on the Pekar grid.
    pub l: usize,
    /// Bare photon frequency; `None` picks the one whose renormalized value
    /// equals the exact fermionic energy of mode `l`.
    pub photon: Option<f64>,
}

impl DickeMode {
    pub fn resonant(l: usize) -> Self {
        DickeMode { l, photon: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DickeSpectrum {
    pub spectrum: DenseSpectrum,
    pub k: f64,
    pub photon: f64,
    pub omega_tilde: f64,
    pub coupling_tilde: f64,
    pub cutoff: usize,
    /// Excitation energies of the two odd-parity states carrying the largest
    /// photon plus matter-mode spectral weight, ascending.
    pub lower_gap: f64,
    pub upper_gap: f64,
    /// Largest relative gap movement when the cutoff was doubled.
    pub cutoff_shift: f64,
}

struct Setup {
    n: usize,
    cutoff: usize,
    w0: f64,
    j: f64,
    photon: f64,
    dia: f64,
    g: Vec<f64>,
    phi: Vec<f64>,
}

impl Setup {
    fn states(&self, parity: usize) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for m in 0..=self.cutoff {
            for s in 0..1u32 << self.n {
                if (m + s.count_ones() as usize) % 2 == parity {
                    out.push((m, s));
                }
            }
        }
        out
    }

    fn index(&self, states: &[(usize, u32)]) -> Vec<usize> {
        let mut idx = vec![usize::MAX; (self.cutoff + 1) << self.n];
        for (i, &(m, s)) in states.iter().enumerate() {
            idx[(m << self.n) | s as usize] = i;
        }
        idx
    }

    fn hamiltonian(&self, states: &[(usize, u32)]) -> Mat<f64> {
        let idx = self.index(states);
        let at = |m: usize, s: u32| idx[(m << self.n) | s as usize];
        let mut h = Mat::<f64>::zeros(states.len(), states.len());
        for (col, &(m, s)) in states.iter().enumerate() {
            let mf = m as f64;
            h[(col, col)] = self.photon * mf
                + self.dia * (2.0 * mf + 1.0)
                + self.w0 * s.count_ones() as f64;
            if m >= 2 {
                h[(at(m - 2, s), col)] -= self.dia * (mf * (mf - 1.0)).sqrt();
            }
            if m + 2 <= self.cutoff {
                h[(at(m + 2, s), col)] -= self.dia * ((mf + 1.0) * (mf + 2.0)).sqrt();
            }
            for site in 0..self.n - 1 {
                h[(at(m, s ^ (0b11 << site)), col)] += self.j;
            }
            for site in 0..self.n {
                let flipped = s ^ (1 << site);
                let spin = if s >> site & 1 == 1 { 1.0 } else { -1.0 };
                let g = self.g[site] * spin;
                if m >= 1 {
                    h[(at(m - 1, flipped), col)] += g * mf.sqrt();
                }
                if m < self.cutoff {
                    h[(at(m + 1, flipped), col)] -= g * (mf + 1.0).sqrt();
                }
            }
        }
        h
    }

    /// `(a + a+) |v>` and `sum_n phi(n) sx_n |v>` from the even block into the odd one.
    fn probes(
        &self,
        even: &[(usize, u32)],
        odd: &[(usize, u32)],
        v: &[f64],
    ) -> (Vec<f64>, Vec<f64>) {
        let idx = self.index(odd);
        let at = |m: usize, s: u32| idx[(m << self.n) | s as usize];
        let mut xp = vec![0.0; odd.len()];
        let mut xm = vec![0.0; odd.len()];
        for (i, &(m, s)) in even.iter().enumerate() {
            let c = v[i];
            if m >= 1 {
                xp[at(m - 1, s)] += c * (m as f64).sqrt();
            }
            if m < self.cutoff {
                xp[at(m + 1, s)] += c * (m as f64 + 1.0).sqrt();
            }
            for site in 0..self.n {
                xm[at(m, s ^ (1 << site))] += c * self.phi[site];
            }
        }
        (xp, xm)
    }
}

pub fn ed_dicke_ising(
    params: &ChainParams,
    nu: f64,
    photon_cutoff: usize,
    mode: DickeMode,
) -> Result<DickeSpectrum> {
    ed_dicke_ising_with(params, nu, photon_cutoff, mode, DEFAULT_DIMENSION_CAP, true)
}

/// As `ed_dicke_ising`; with `check_cutoff` the problem is solved again at
/// twice the cutoff and `CutoffUnconverged` is raised when the polariton gaps
/// move by more than `CUTOFF_TOLERANCE` (relative).
pub fn ed_dicke_ising_with(
    params: &ChainParams,
    nu: f64,
    photon_cutoff: usize,
    mode: DickeMode,
    dimension_cap: usize,
    check_cutoff: bool,
) -> Result<DickeSpectrum> {
    let mut out = solve(params, nu, photon_cutoff, mode, dimension_cap)?;
    if check_cutoff {
        let fine = solve(params, nu, 2 * photon_cutoff, mode, dimension_cap)?;
        let shift = ((fine.lower_gap - out.lower_gap) / fine.lower_gap)
            .abs()
            .max(((fine.upper_gap - out.upper_gap) / fine.upper_gap).abs());
        out.cutoff_shift = shift;
        if !(shift <= CUTOFF_TOLERANCE) {
            return Err(Error::CutoffUnconverged {
                cutoff: photon_cutoff,
                shift,
            });
        }
    }
    Ok(out)
}

fn solve(
    params: &ChainParams,
    nu: f64,
    cutoff: usize,
    mode: DickeMode,
    cap: usize,
) -> Result<DickeSpectrum> {
    let n = params.n_dipoles();
    let dimension = (cutoff + 1).saturating_mul(1usize << n.min(40));
    if n >= 32 || dimension > cap {
        return Err(Error::TooLarge { dimension, cap });
    }
    if cutoff < 1 {
        return Err(Error::InvalidParameter {
            name: "photon_cutoff",
            reason: "need at least one photon".into(),
        });
    }
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::InvalidParameter {
            name: "nu",
            reason: format!("must be finite and >= 0, got {nu}"),
        });
    }
    let k = params.grid().k(mode.l).ok_or_else(|| Error::InvalidParameter {
        name: "mode",
        reason: format!("l = {} outside 1..={n}", mode.l),
    })?;
    let w0 = params.omega0();
    let o0 = nu * w0;
    let photon = match mode.photon {
        Some(w) => w,
        None => {
            let e = fermion_energy(k, params);
            let r = e * e - 4.0 * o0 * o0;
            if !(r > 0.0) {
                return Err(Error::InvalidParameter {
                    name: "nu",
                    reason: "diamagnetic shift exceeds the matter energy; no resonant mode".into(),
                });
            }
            r.sqrt()
        }
    };
    if !(photon > 0.0) {
        return Err(Error::InvalidParameter {
            name: "photon",
            reason: format!("must be > 0, got {photon}"),
        });
    }
    let norm = (2.0 / (n as f64 + 1.0)).sqrt();
    let phi: Vec<f64> = (1..=n).map(|site| norm * (site as f64 * k).sin()).collect();
    let g0 = o0 * (w0 / photon).sqrt();
    let setup = Setup {
        n,
        cutoff,
        w0,
        j: params.coupling(),
        photon,
        dia: o0 * o0 / photon,
        g: phi.iter().map(|p| g0 * p).collect(),
        phi,
    };
    let even = setup.states(0);
    let odd = setup.states(1);
    let (ev_even, vec_even) = symmetric_eigen(&setup.hamiltonian(&even))?;
    let (ev_odd, vec_odd) = symmetric_eigen(&setup.hamiltonian(&odd))?;
    let ground: Vec<f64> = (0..even.len()).map(|i| vec_even[(i, 0)]).collect();
    let (xp, xm) = setup.probes(&even, &odd, &ground);
    let mut weights: Vec<(f64, usize)> = (0..odd.len())
        .map(|j| {
            let mut a = 0.0;
            let mut b = 0.0;
            for i in 0..odd.len() {
                a += vec_odd[(i, j)] * xp[i];
                b += vec_odd[(i, j)] * xm[i];
            }
            (a * a + b * b, j)
        })
        .collect();
    weights.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));
    let e0 = ev_even[0].min(ev_odd[0]);
    let mut gaps = [ev_odd[weights[0].1] - e0, ev_odd[weights[1].1] - e0];
    gaps.sort_by(f64::total_cmp);
    let mut eigenvalues = ev_even;
    eigenvalues.extend(ev_odd);
    eigenvalues.sort_by(f64::total_cmp);
    let wt = (photon * photon + 4.0 * o0 * o0).sqrt();
    Ok(DickeSpectrum {
        spectrum: DenseSpectrum {
            dimension,
            eigenvalues,
            ground_vector_observables: None,
        },
        k,
        photon,
        omega_tilde: wt,
        coupling_tilde: if o0 == 0.0 { 0.0 } else { o0 * (w0 / wt).sqrt() },
        cutoff,
        lower_gap: gaps[0],
        upper_gap: gaps[1],
        cutoff_shift: 0.0,
    })
}

//! Matter-sector configuration shared by every solver: chain parameters,
//! the Pekar momentum grid and the per-scheme result types.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Largest |eta| accepted; the model is only treated in its normal phase.
pub const MAX_ABS_ETA: f64 = 0.25;

/// Open chain of `n_dipoles` two-level systems with transition frequency
/// `omega0` and normalised nearest-neighbour coupling `eta = J / omega0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams {
    n_dipoles: usize,
    omega0: f64,
    eta: f64,
}

impl ChainParams {
    pub fn new(n_dipoles: usize, omega0: f64, eta: f64) -> Result<Self> {
        ChainParams {
            n_dipoles,
            omega0,
            eta,
        }
        .validate()
    }

    /// Checks every invariant and hands the parameters back unchanged.
    pub fn validate(self) -> Result<Self> {
        if self.n_dipoles < 2 {
            return Err(Error::ChainTooShort { n: self.n_dipoles });
        }
        if !(self.omega0 > 0.0) || !self.omega0.is_finite() {
            return Err(Error::NonPositiveFrequency {
                omega0: self.omega0,
            });
        }
        if !(self.eta.abs() <= MAX_ABS_ETA) {
            return Err(Error::OutOfNormalPhase { eta: self.eta });
        }
        Ok(self)
    }

    pub fn n_dipoles(&self) -> usize {
        self.n_dipoles
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Ising coupling J in energy units.
    pub fn coupling(&self) -> f64 {
        self.eta * self.omega0
    }

    /// Same chain with a different coupling, validated.
    pub fn with_eta(&self, eta: f64) -> Result<Self> {
        ChainParams::new(self.n_dipoles, self.omega0, eta)
    }

    pub fn grid(&self) -> MomentumGrid {
        pekar_grid(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    /// Mode index, 1-based.
    pub l: usize,
    pub k: f64,
}

/// Standing-wave quasi-momenta `k(l) = l pi / (N + 1)`, `l = 1..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid {
    modes: Vec<Mode>,
}

impl MomentumGrid {
    /// Builds the grid for `n` modes. Works for any `n >= 1`, independent of
    /// chain validation, so single-site or very long grids can be inspected.
    pub fn pekar(n: usize) -> Self {
        let denom = (n + 1) as f64;
        let modes = (1..=n)
            .map(|l| {
                // Mirror the upper half so that k(N+1-l) == pi - k(l) holds bit for bit.
                let k = if 2 * l < n + 1 {
                    l as f64 * PI / denom
                } else if 2 * l == n + 1 {
                    FRAC_PI_2
                } else {
                    PI - (n + 1 - l) as f64 * PI / denom
                };
                Mode { l, k }
            })
            .collect();
        MomentumGrid { modes }
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn iter(&self) -> impl Iterator<Item = &Mode> {
        self.modes.iter()
    }

    pub fn ks(&self) -> impl Iterator<Item = f64> + '_ {
        self.modes.iter().map(|m| m.k)
    }

    /// Quasi-momentum of the 1-based mode `l`.
    pub fn k(&self, l: usize) -> Option<f64> {
        l.checked_sub(1)
            .and_then(|i| self.modes.get(i))
            .map(|m| m.k)
    }
}

pub fn pekar_grid(params: &ChainParams) -> MomentumGrid {
    MomentumGrid::pekar(params.n_dipoles)
}

/// Diagonalization scheme for the matter sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApproximationTag {
    /// Jordan-Wigner fermions, exact.
    FermionExact,
    /// Zeroth-order Holstein-Primakoff (hard-core constraint dropped).
    Bose,
    /// First-order Holstein-Primakoff in the matter Hamiltonian.
    HolsteinPrimakoff1,
    /// First-order Holstein-Primakoff applied to the light-matter term too.
    HolsteinPrimakoff1FullLm,
}

impl ApproximationTag {
    pub const ALL: [ApproximationTag; 4] = [
        ApproximationTag::FermionExact,
        ApproximationTag::Bose,
        ApproximationTag::HolsteinPrimakoff1,
        ApproximationTag::HolsteinPrimakoff1FullLm,
    ];

    /// Short label used in column names.
    pub fn label(self) -> &'static str {
        match self {
            ApproximationTag::FermionExact => "F",
            ApproximationTag::Bose => "B",
            ApproximationTag::HolsteinPrimakoff1 => "Bt",
            ApproximationTag::HolsteinPrimakoff1FullLm => "Bc",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.label().eq_ignore_ascii_case(label))
    }

    pub fn is_bosonic(self) -> bool {
        !matches!(self, ApproximationTag::FermionExact)
    }
}

/// Single-particle energies on the Pekar grid plus the ground-state energy.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSpectrum {
    pub tag: ApproximationTag,
    pub params: ChainParams,
    pub energies: Vec<f64>,
    pub ground_energy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistics {
    Fermionic,
    Bosonic,
}

/// Real Bogoliubov coefficients of one mode.
///
/// Bosonic pairs use the convention `b_k = alpha d_k + beta d^dag_{-k}`, in
/// which `alpha - beta` is the oscillator-strength factor entering the
/// light-matter coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovPair {
    pub k: f64,
    pub alpha: f64,
    pub beta: f64,
    pub statistics: Statistics,
}

impl BogoliubovPair {
    /// `alpha^2 + beta^2 - 1` (fermions) or `alpha^2 - beta^2 - 1` (bosons).
    pub fn normalization_defect(&self) -> f64 {
        let a2 = self.alpha * self.alpha;
        let b2 = self.beta * self.beta;
        match self.statistics {
            Statistics::Fermionic => a2 + b2 - 1.0,
            Statistics::Bosonic => a2 - b2 - 1.0,
        }
    }

    /// `F = alpha - beta`.
    pub fn oscillator_factor(&self) -> f64 {
        self.alpha - self.beta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_examples() {
        let g = MomentumGrid::pekar(1);
        assert_eq!(g.len(), 1);
        assert_eq!(g.k(1), Some(PI / 2.0));

        let g = MomentumGrid::pekar(3);
        let ks: Vec<f64> = g.ks().collect();
        assert_eq!(ks, vec![PI / 4.0, PI / 2.0, 3.0 * PI / 4.0]);

        let g = MomentumGrid::pekar(9999);
        let last = g.k(9999).unwrap();
        assert!(last < PI);
        assert!((last - 9999.0 * PI / 10000.0).abs() <= 4.0 * f64::EPSILON);
        assert_eq!(g.k(0), None);
        assert_eq!(g.k(10000), None);
    }

    #[test]
    fn grid_is_mirror_symmetric_bitwise() {
        for n in [2usize, 3, 7, 10, 99, 100, 1001, 4096] {
            let g = MomentumGrid::pekar(n);
            for l in (1..=n).filter(|l| 2 * l <= n + 1) {
                assert_eq!(g.k(n + 1 - l).unwrap(), PI - g.k(l).unwrap(), "n={n} l={l}");
            }
            let ks: Vec<f64> = g.ks().collect();
            assert!(ks.windows(2).all(|w| w[0] < w[1]));
            assert!(ks.iter().all(|&k| k > 0.0 && k < PI));
        }
    }

    #[test]
    fn validation_examples() {
        assert!(ChainParams::new(10, 1.0, 0.25).is_ok());
        assert!(ChainParams::new(10, 1.0, -0.25).is_ok());
        assert_eq!(
            ChainParams::new(10, 1.0, 0.3),
            Err(Error::OutOfNormalPhase { eta: 0.3 })
        );
        assert_eq!(
            ChainParams::new(1, 1.0, 0.1),
            Err(Error::ChainTooShort { n: 1 })
        );
        assert_eq!(
            ChainParams::new(4, 0.0, 0.1),
            Err(Error::NonPositiveFrequency { omega0: 0.0 })
        );
        assert!(matches!(
            ChainParams::new(4, 1.0, f64::NAN),
            Err(Error::OutOfNormalPhase { .. })
        ));
    }

    #[test]
    fn tag_labels_round_trip() {
        for t in ApproximationTag::ALL {
            assert_eq!(ApproximationTag::from_label(t.label()), Some(t));
        }
        assert!(!ApproximationTag::FermionExact.is_bosonic());
    }
}

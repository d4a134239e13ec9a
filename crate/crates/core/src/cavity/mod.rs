//! Chain coupled to a multimode cavity with a linear photon dispersion:
//! diamagnetic renormalization, effective coupling, polariton branches,
//! the no-go margin and coupling saturation.

pub mod hopfield;
pub mod perturbative;

use std::f64::consts::PI;

pub use hopfield::{
    closed_form_energies, hopfield_coefficients, hopfield_matrix, HopfieldCoefficients,
    HopfieldMatrix, HopfieldVector,
};
pub use perturbative::{
    bare_crossing, finite_size_correction, fixed_length_delta, polariton_perturbative,
    second_order_hopfield, FiniteSizeCorrection, SecondOrderHopfield, SecondOrderVector,
};

use crate::chain::{ApproximationTag, BogoliubovPair, ChainParams};
use crate::error::{Error, Result};
use crate::ising::{
    bose_bogoliubov, bose_energy, bose_ground_energy, hp1_coefficients_numeric,
    hp1_solution_perturbative, Hp1Method, Hp1Solution,
};
use crate::numeric::{bisect, KahanSum};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityParams {
    pub chain: ChainParams,
    /// Collective coupling in units of `w0`.
    pub nu: f64,
    /// Zone-edge photon frequency in units of `w0`.
    pub delta: f64,
    pub tag: ApproximationTag,
    /// Which first-order matter solution backs the `Bt`/`Bc` tags.
    pub hp1_method: Hp1Method,
}

impl CavityParams {
    pub fn new(chain: ChainParams, nu: f64, delta: f64, tag: ApproximationTag) -> Result<Self> {
        CavityParams {
            chain,
            nu,
            delta,
            tag,
            hp1_method: Hp1Method::Numeric,
        }
        .validate()
    }

    pub fn with_hp1_method(mut self, method: Hp1Method) -> Self {
        self.hp1_method = method;
        self
    }

    pub fn with_tag(mut self, tag: ApproximationTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn validate(self) -> Result<Self> {
        self.chain.validate()?;
        if !(self.nu >= 0.0) || !self.nu.is_finite() {
            return Err(Error::InvalidParameter {
                name: "nu",
                reason: format!("must be finite and >= 0, got {}", self.nu),
            });
        }
        if !(self.delta > 0.0) || !self.delta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "delta",
                reason: format!("must be finite and > 0, got {}", self.delta),
            });
        }
        Ok(self)
    }

    /// `Omega_0 = nu w0`.
    pub fn collective_coupling(&self) -> f64 {
        self.nu * self.chain.omega0()
    }
}

/// `w_k = w0 delta k / pi`.
pub fn photon_frequency(k: f64, cavity: &CavityParams) -> f64 {
    cavity.chain.omega0() * cavity.delta * k / PI
}

/// `(w~_k, Omega~_k) = (sqrt(w_k^2 + 4 Omega_0^2), Omega_0 sqrt(w0 / w~_k))`.
pub fn renormalized_cavity(k: f64, cavity: &CavityParams) -> (f64, f64) {
    let wk = photon_frequency(k, cavity);
    let o0 = cavity.collective_coupling();
    let wt = (wk * wk + 4.0 * o0 * o0).sqrt();
    let ot = if o0 == 0.0 {
        0.0
    } else {
        o0 * (cavity.chain.omega0() / wt).sqrt()
    };
    (wt, ot)
}

/// `Lambda = Omega~_k (alpha - beta)`.
pub fn effective_coupling(k: f64, cavity: &CavityParams, matter_pair: &BogoliubovPair) -> f64 {
    renormalized_cavity(k, cavity).1 * matter_pair.oscillator_factor()
}

/// Second-order ratio of the first-order to the Bose effective coupling, `1 - eta^2/2`.
pub fn saturation_ratio(eta: f64) -> f64 {
    1.0 - 0.5 * eta * eta
}

/// Bosonic matter sector for one tag, evaluable at any `k`.
#[derive(Debug, Clone, PartialEq)]
pub enum MatterSector {
    Bose(ChainParams),
    FirstOrder(Hp1Solution),
}

impl MatterSector {
    pub fn new(cavity: &CavityParams) -> Result<Self> {
        match cavity.tag {
            ApproximationTag::Bose => Ok(MatterSector::Bose(cavity.chain)),
            ApproximationTag::HolsteinPrimakoff1 | ApproximationTag::HolsteinPrimakoff1FullLm => {
                let sol = match cavity.hp1_method {
                    Hp1Method::Numeric => hp1_coefficients_numeric(&cavity.chain)?,
                    Hp1Method::PerturbativeOrder2 => hp1_solution_perturbative(&cavity.chain),
                };
                Ok(MatterSector::FirstOrder(sol))
            }
            ApproximationTag::FermionExact => Err(Error::UnsupportedTag {
                tag: cavity.tag,
                context: "the bosonic light-matter coupling",
            }),
        }
    }

    pub fn energy(&self, k: f64) -> Result<f64> {
        match self {
            MatterSector::Bose(p) => bose_energy(k, p),
            MatterSector::FirstOrder(s) => s.energy_at(k),
        }
    }

    pub fn pair(&self, k: f64) -> Result<BogoliubovPair> {
        match self {
            MatterSector::Bose(p) => bose_bogoliubov(k, p),
            MatterSector::FirstOrder(s) => s.pair_at(k),
        }
    }

    pub fn ground_energy(&self) -> Result<f64> {
        match self {
            MatterSector::Bose(p) => bose_ground_energy(p),
            MatterSector::FirstOrder(s) => Ok(s.ground_energy()),
        }
    }
}

/// Branch energies and Hopfield coefficients of one wavevector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolaritonMode {
    pub k: f64,
    pub lower: f64,
    pub upper: f64,
    pub coeffs: HopfieldCoefficients,
    pub tag: ApproximationTag,
}

/// Everything needed to evaluate polaritons of one parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct PolaritonModel {
    pub cavity: CavityParams,
    pub matter: MatterSector,
    /// `nu^2 w0 F(N)` for the fully first-order scheme, zero otherwise.
    pub lower_shift: f64,
}

/// Per-`k` inputs of the Hopfield problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeInputs {
    pub photon: f64,
    pub omega_tilde: f64,
    pub coupling_tilde: f64,
    pub matter_energy: f64,
    pub pair: BogoliubovPair,
    pub lambda: f64,
}

impl PolaritonModel {
    pub fn new(cavity: CavityParams) -> Result<Self> {
        let cavity = cavity.validate()?;
        let matter = MatterSector::new(&cavity)?;
        let lower_shift = match cavity.tag {
            ApproximationTag::HolsteinPrimakoff1FullLm => {
                let f = finite_size_correction(cavity.chain.n_dipoles(), cavity.delta).grid_sum;
                cavity.nu * cavity.nu * cavity.chain.omega0() * f
            }
            _ => 0.0,
        };
        Ok(PolaritonModel {
            cavity,
            matter,
            lower_shift,
        })
    }

    pub fn inputs(&self, k: f64) -> Result<ModeInputs> {
        let (wt, ot) = renormalized_cavity(k, &self.cavity);
        let pair = self.matter.pair(k)?;
        Ok(ModeInputs {
            photon: photon_frequency(k, &self.cavity),
            omega_tilde: wt,
            coupling_tilde: ot,
            matter_energy: self.matter.energy(k)?,
            pair,
            lambda: ot * pair.oscillator_factor(),
        })
    }

    pub fn effective_coupling(&self, k: f64) -> Result<f64> {
        Ok(self.inputs(k)?.lambda)
    }

    pub fn hopfield_matrix(&self, k: f64) -> Result<HopfieldMatrix> {
        let m = self.inputs(k)?;
        Ok(hopfield_matrix(m.omega_tilde, m.matter_energy, m.lambda))
    }

    /// Closed-form `(E-, E+)`, including the finite-size shift for the fully
    /// first-order scheme.
    pub fn polariton_energies(&self, k: f64) -> Result<(f64, f64)> {
        let m = self.inputs(k)?;
        let (lo, hi) = closed_form_energies(m.omega_tilde, m.matter_energy, m.lambda)
            .map_err(|_| Error::ComplexPolariton { k })?;
        Ok((lo + self.lower_shift, hi))
    }

    pub fn mode(&self, k: f64) -> Result<PolaritonMode> {
        let m = self.inputs(k)?;
        let (lo, hi) = closed_form_energies(m.omega_tilde, m.matter_energy, m.lambda)
            .map_err(|_| Error::ComplexPolariton { k })?;
        let coeffs = hopfield_coefficients(m.omega_tilde, m.matter_energy, m.lambda, (lo, hi))
            .map_err(|e| match e {
                Error::DegenerateBranches { .. } => Error::DegenerateBranches { k },
                other => other,
            })?;
        Ok(PolaritonMode {
            k,
            lower: lo + self.lower_shift,
            upper: hi,
            coeffs,
            tag: self.cavity.tag,
        })
    }

    /// `sqrt(E_k / w0) - F_k`; nonnegative when the no-go bound holds.
    pub fn no_go_margin(&self, k: f64) -> Result<f64> {
        let e = self.matter.energy(k)?;
        let f = self.matter.pair(k)?.oscillator_factor();
        Ok((e / self.cavity.chain.omega0()).sqrt() - f)
    }

    /// Root of `w~_k = E_k` in `(0, pi)`: first sign change on a uniform scan,
    /// refined by bisection to `1e-12` relative.
    pub fn crossing_point(&self) -> Result<f64> {
        let g = |k: f64| -> f64 {
            let wt = renormalized_cavity(k, &self.cavity).0;
            match self.matter.energy(k) {
                Ok(e) => wt - e,
                Err(_) => f64::NAN,
            }
        };
        const SCAN: usize = 256;
        let mut lo = 0.0;
        let mut glo = g(lo);
        for i in 1..=SCAN {
            let hi = PI * i as f64 / SCAN as f64;
            let ghi = g(hi);
            if glo == 0.0 {
                return Ok(lo);
            }
            if glo.is_finite() && ghi.is_finite() && glo.signum() != ghi.signum() {
                return bisect(g, lo, hi, 1e-12).ok_or(Error::NoCrossing);
            }
            lo = hi;
            glo = ghi;
        }
        Err(Error::NoCrossing)
    }

    /// `sum_k (E- + E+ - w~_k - E_k) + E0` over the Pekar grid.
    pub fn ground_state_energy(&self) -> Result<f64> {
        let mut acc = KahanSum::new();
        for k in self.cavity.chain.grid().ks() {
            let m = self.inputs(k)?;
            let (lo, hi) = self.polariton_energies(k)?;
            acc.add(lo + hi - m.omega_tilde - m.matter_energy);
        }
        Ok(acc.value() + self.matter.ground_energy()?)
    }
}

/// Ratio of the first-order effective coupling to the one saturating the
/// no-go bound, `F_k / sqrt(E_k / w0)`. For the Bose scheme this is 1; for
/// the numeric first-order solution it equals `sqrt(w0 / w')` at every `k`.
pub fn saturation_ratio_numeric(chain: &ChainParams) -> Result<f64> {
    let sol = hp1_coefficients_numeric(chain)?;
    let k = chain.grid().modes()[0].k;
    let f = sol.pair_at(k)?.oscillator_factor();
    let e = sol.energy_at(k)?;
    Ok(f / (e / chain.omega0()).sqrt())
}

/// Literal `Lambda_Bt / Lambda_B` at one `k` from the numeric first-order
/// solution and the Bose pair (the photon factor cancels).
pub fn coupling_ratio_at(k: f64, chain: &ChainParams) -> Result<f64> {
    let sol = hp1_coefficients_numeric(chain)?;
    Ok(sol.pair_at(k)?.oscillator_factor() / bose_bogoliubov(k, chain)?.oscillator_factor())
}

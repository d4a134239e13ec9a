//! Matter-sector diagonalizations.

pub mod bose;
pub mod fermion;
pub mod hp1;
pub mod kernels;

pub use bose::{bose_bogoliubov, bose_energy, bose_ground_energy, bose_spectrum, virtual_population};
pub use fermion::{fermion_bogoliubov, fermion_energy, fermion_ground_energy, fermion_spectrum};
pub use hp1::{
    hp1_coefficients_numeric, hp1_coefficients_numeric_with, hp1_coefficients_perturbative,
    hp1_energy, hp1_ground_energy, hp1_perturbative_energy, hp1_solution_perturbative,
    Hp1Method, Hp1Solution, MeanFields, SolverOptions,
};
pub use kernels::{kernels_eval, linear_coefficients, Kernels, LinearCoefficients};

use crate::chain::{ApproximationTag, ChainParams, ModeSpectrum};
use crate::error::Result;

/// Spectrum of the scheme selected by `tag`. Both first-order tags share the
/// numeric matter solution.
pub fn spectrum(tag: ApproximationTag, params: &ChainParams) -> Result<ModeSpectrum> {
    match tag {
        ApproximationTag::FermionExact => Ok(fermion_spectrum(params)),
        ApproximationTag::Bose => bose_spectrum(params),
        ApproximationTag::HolsteinPrimakoff1 | ApproximationTag::HolsteinPrimakoff1FullLm => {
            let sol = hp1_coefficients_numeric(params)?;
            let mut s = sol.spectrum();
            s.tag = tag;
            Ok(s)
        }
    }
}

//! Excitation spectra of the transverse-field Ising chain under exact
//! fermionization, the Bose approximation and first-order Holstein-Primakoff
//! bosonization, plus the polariton spectrum of the chain coupled to a
//! multimode cavity. The `oracle` module holds brute-force references.

pub mod cavity;
pub mod chain;
pub mod error;
pub mod ising;
pub mod numeric;
pub mod oracle;

pub use chain::{
    pekar_grid, ApproximationTag, BogoliubovPair, ChainParams, ModeSpectrum, MomentumGrid,
    Statistics,
};
pub use error::{Error, Result};

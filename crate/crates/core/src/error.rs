use thiserror::Error;

use crate::chain::ApproximationTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("eta = {eta} lies outside the normal phase |eta| <= 0.25")]
    OutOfNormalPhase { eta: f64 },
    #[error("transition frequency must be positive, got {omega0}")]
    NonPositiveFrequency { omega0: f64 },
    #[error("chain of {n} dipole(s) has no bond; need at least 2")]
    ChainTooShort { n: usize },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("Bogoliubov normalization degenerates at k = {k}")]
    DegenerateNormalization { k: f64 },
    #[error("single-particle energy is complex at k = {k} (radicand {radicand})")]
    ComplexEnergy { k: f64, radicand: f64 },
    #[error("nonlinear solver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("solution was computed for different chain parameters")]
    ParamsMismatch,
    #[error("lower polariton energy is complex at k = {k}: the no-go bound is violated")]
    ComplexPolariton { k: f64 },
    #[error("polariton branches are degenerate at k = {k}")]
    DegenerateBranches { k: f64 },
    #[error("perturbative polariton formula diverges at the bare resonance (k = {k})")]
    ResonanceDivergence { k: f64 },
    #[error("cavity and matter branches do not cross inside the zone")]
    NoCrossing,
    #[error("approximation {tag:?} is not supported by {context}")]
    UnsupportedTag { tag: ApproximationTag, context: &'static str },
    #[error("Hilbert space of dimension {dimension} exceeds the cap {cap}")]
    TooLarge { dimension: usize, cap: usize },
    #[error("photon cutoff {cutoff} unconverged: doubling moved the gaps by {shift:e} (relative)")]
    CutoffUnconverged { cutoff: usize, shift: f64 },
    #[error("dense eigensolver failed: {0}")]
    Eigensolver(String),
}

//! Brute-force references: dense exact diagonalization of the spin chain,
//! numeric Bogoliubov-de Gennes diagonalization of its fermionic form, and
//! truncated-Fock diagonalization of the chain coupled to one cavity mode.

pub mod bdg;
pub mod dense;
pub mod dicke;
pub mod spin_chain;

pub use bdg::{bdg_dense, bdg_reduced, bdg_spin_chain, BdgSpectrum};
pub use dicke::{ed_dicke_ising, ed_dicke_ising_with, DickeMode, DickeSpectrum};
pub use spin_chain::{ed_spin_chain, ed_spin_chain_with, DenseSpectrum};

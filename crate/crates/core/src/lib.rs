//! Gravitationally induced decoherence of a non-relativistic spin-1/2 particle.
//!
//! The crate has two halves that check each other:
//!
//! * an exact symbolic half ([`clifford`], [`fwsym`]) that carries the Dirac
//!   matrix algebra and the order-by-order block diagonalization of the
//!   weak-field Dirac Hamiltonian in exact rational arithmetic, and
//! * a numeric half ([`noise`], [`dynamics`], [`diagnostics`]) that builds the
//!   reduced Hamiltonians on a periodic grid, propagates stochastic
//!   trajectories and the noise-averaged density matrix, and extracts
//!   decoherence bases and rates.
//!
//! Everything numeric works in natural units `ħ = c = m = 1`; a
//! [`units::Scales`] record carries the SI conversion for I/O only.

pub mod clifford;
pub mod diagnostics;
pub mod dynamics;
pub mod error;
pub mod fwsym;
pub mod linalg;
pub mod noise;
pub mod units;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

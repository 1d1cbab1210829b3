//! Thermal-state preparation for the periodic spin-1/2 XY chain.
//!
//! The crate combines four pieces:
//!
//! * [`exactsolver`] — dense and analytic free-fermion diagonalization of
//!   the chain, degeneracy combinatorics, and the exact Gibbs state.
//! * [`simulator`] — a dense statevector engine with the gate set, partial
//!   trace, entropy and fidelity used by everything downstream.
//! * [`ansatz`] — the distribution-loading circuit over controlled Ry
//!   rotations (full and symmetry-reduced for N = 4) and the
//!   parity-preserving brick-wall system circuit.
//! * [`vqa`] — composition of the full parametrized circuit, the free-energy
//!   objective, and multi-start classical optimization, with fidelity
//!   verification against the exact Gibbs state.

pub mod ansatz;
pub mod error;
pub mod optim;
pub mod exactsolver;
pub mod simulator;
pub mod vqa;

pub use error::{Error, Result};

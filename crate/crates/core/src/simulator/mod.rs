//! Dense statevector and density-matrix engine.
//!
//! Qubit 0 is the most significant bit of a basis-state label, so for a
//! 4-qubit register the index of |0100> is 4. Gates mutate the state buffer
//! in place and return the mutated handle, which keeps optimizer inner loops
//! free of 2^n copies.

mod density;
mod gate;
mod state;

pub use density::{
    entropy_from_probabilities, uhlmann_fidelity, von_neumann_entropy, DensityMatrix,
};
pub use gate::{GateOp, TwoQubitMatrix};
pub use state::{Polarity, Statevector};

//! Parametrized circuits: the distribution-loading binary tree of
//! controlled Ry rotations (full and symmetry-reduced), and the
//! parity-preserving brick-wall circuit for the system register.

mod brickwall;
mod circuit;
mod grover_rudolph;
mod reduced;

pub use brickwall::{brickwall_circuit, rp_matrix, BrickwallParams};
pub use circuit::{Circuit, CircuitGate, ParamSpace};
pub use grover_rudolph::{angles_from_distribution, gr_circuit, GRAngles};
pub use reduced::{
    expand_reduced, fit_check_reduced, free_angles_of, FitCheckReport, IdentityResidual,
    ReducedXYAngles, FREE_ANGLE_INDICES,
};

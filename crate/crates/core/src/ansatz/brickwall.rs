//! Parity-preserving brick-wall circuit on the system register.

use super::{Circuit, CircuitGate, ParamSpace};
use crate::error::{Error, Result};
use crate::simulator::TwoQubitMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Parameters of the brick-wall circuit: two angles per gate, N gates per
/// layer on a periodic even-N register.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BrickwallParams {
    pub n_qubits: usize,
    pub n_layers: usize,
    /// Length 2 * n_qubits * n_layers, consumed in gate-emission order.
    pub phis: Vec<f64>,
}

impl BrickwallParams {
    pub fn new(n_qubits: usize, n_layers: usize, phis: Vec<f64>) -> Result<Self> {
        if n_qubits < 2 || n_qubits % 2 != 0 {
            return Err(Error::InvalidModel(format!(
                "brick-wall needs an even qubit count >= 2, got {n_qubits}"
            )));
        }
        let expected = 2 * n_qubits * n_layers;
        if phis.len() != expected {
            return Err(Error::ParameterSize {
                expected,
                actual: phis.len(),
            });
        }
        Ok(Self {
            n_qubits,
            n_layers,
            phis,
        })
    }

    pub fn param_count(n_qubits: usize, n_layers: usize) -> usize {
        2 * n_qubits * n_layers
    }
}

/// The two-parameter rotation that couples {|00>, |11>} and {|01>, |10>}
/// separately:
///
/// ```text
/// [ cos a   0       0      sin a ]
/// [ 0       cos b  -sin b  0     ]        a = (phi_i + phi_j) / 2
/// [ 0       sin b   cos b  0     ]        b = (phi_i - phi_j) / 2
/// [ -sin a  0       0      cos a ]
/// ```
///
/// Real orthogonal, so any circuit built from it preserves bit parity.
pub fn rp_matrix(phi_i: f64, phi_j: f64) -> TwoQubitMatrix {
    let (sa, ca) = ((phi_i + phi_j) / 2.0).sin_cos();
    let (sb, cb) = ((phi_i - phi_j) / 2.0).sin_cos();
    let z = Complex64::ZERO;
    let c = |x: f64| Complex64::new(x, 0.0);
    let rows = [
        [c(ca), z, z, c(sa)],
        [z, c(cb), c(-sb), z],
        [z, c(sb), c(cb), z],
        [c(-sa), z, z, c(ca)],
    ];
    // orthogonal by construction; the checked constructor costs one 4x4
    // multiply and never fails here
    TwoQubitMatrix::new(rows).expect("rotation blocks are orthogonal")
}

/// Brick-wall layering: per layer, gates on the even bonds (0,1), (2,3), ...
/// then the odd bonds (1,2), (3,4), ..., (N-1, 0). Parameters are consumed
/// two per gate in emission order.
pub fn brickwall_circuit(params: &BrickwallParams) -> Result<Circuit> {
    let n = params.n_qubits;
    let mut circuit = Circuit::new(
        n,
        BrickwallParams::param_count(n, params.n_layers),
        ParamSpace::Phi,
    );
    let mut next = 0usize;
    for _ in 0..params.n_layers {
        for start in [0usize, 1] {
            let mut q = start;
            while q < n {
                circuit.push(CircuitGate::Rp {
                    qa: q,
                    qb: (q + 1) % n,
                    param_i: next,
                    param_j: next + 1,
                });
                next += 2;
                q += 2;
            }
        }
    }
    debug_assert_eq!(next, params.phis.len());
    Ok(circuit)
}

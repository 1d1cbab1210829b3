//! Distribution loading over a binary tree of controlled Ry rotations.
//!
//! The circuit on n qubits carries 2^n - 1 angles. theta_0 rotates qubit 0
//! and splits the distribution between its two halves; level k holds the
//! 2^k angles with indices 2^k - 1 .. 2^(k+1) - 2, one per control pattern
//! of qubits 0..k-1, targeting qubit k. White dots activate on |0>, black
//! dots on |1>; the gate for control value v carries angle index 2^k - 1 + v.

use super::{Circuit, CircuitGate, ParamSpace};
use crate::error::{Error, Result};
use crate::simulator::Polarity;
use serde::{Deserialize, Serialize};

/// Angle vector of the distribution-loading circuit, indexed level by level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GRAngles {
    pub n_qubits: usize,
    /// Length 2^n_qubits - 1; canonical range [0, pi] when produced from a
    /// non-negative distribution.
    pub thetas: Vec<f64>,
}

impl GRAngles {
    pub fn new(n_qubits: usize, thetas: Vec<f64>) -> Result<Self> {
        let expected = (1usize << n_qubits) - 1;
        if thetas.len() != expected {
            return Err(Error::ParameterSize {
                expected,
                actual: thetas.len(),
            });
        }
        if thetas.iter().any(|t| !t.is_finite()) {
            return Err(Error::Domain("angles must be finite".into()));
        }
        Ok(Self { n_qubits, thetas })
    }
}

/// The distribution-loading circuit for `angles.n_qubits` qubits.
pub fn gr_circuit(angles: &GRAngles) -> Result<Circuit> {
    let n = angles.n_qubits;
    if n == 0 {
        return Err(Error::InvalidModel("need at least one qubit".into()));
    }
    let mut circuit = Circuit::new(n, (1 << n) - 1, ParamSpace::Theta);
    circuit.push(CircuitGate::Ry { target: 0, param: 0 });
    for level in 1..n {
        for value in 0..(1usize << level) {
            // control qubit j reads bit j of `value`, qubit 0 most significant
            let controls = (0..level)
                .map(|j| {
                    let bit = value >> (level - 1 - j) & 1;
                    (j, if bit == 1 { Polarity::OnOne } else { Polarity::OnZero })
                })
                .collect();
            circuit.push(CircuitGate::ControlledRy {
                controls,
                target: level,
                param: (1 << level) - 1 + value,
            });
        }
    }
    Ok(circuit)
}

/// Angles that load probability distribution `p` (length 2^n, non-negative,
/// normalized): at every tree node theta = 2 atan2(sqrt(P_right), sqrt(P_left)),
/// so a zero-mass subtree yields theta = 0 and the circuit run from |0...0>
/// reproduces `p` exactly.
pub fn angles_from_distribution(p: &[f64]) -> Result<GRAngles> {
    let len = p.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::InvalidDistribution(format!(
            "length must be a power of two >= 2, got {len}"
        )));
    }
    let n = len.trailing_zeros() as usize;
    if let Some(bad) = p.iter().find(|&&x| !(x >= 0.0) || !x.is_finite()) {
        return Err(Error::InvalidDistribution(format!(
            "entries must be non-negative and finite, got {bad}"
        )));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidDistribution(format!(
            "entries sum to {total}, expected 1 within 1e-10"
        )));
    }

    let mut thetas = vec![0.0; len - 1];
    for level in 0..n {
        let nodes = 1usize << level;
        let span = len >> level;
        for node in 0..nodes {
            let start = node * span;
            let left: f64 = p[start..start + span / 2].iter().sum();
            let right: f64 = p[start + span / 2..start + span].iter().sum();
            thetas[nodes - 1 + node] = 2.0 * right.sqrt().atan2(left.sqrt());
        }
    }
    GRAngles::new(n, thetas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn single_qubit_circuit_is_one_rotation() {
        let angles = GRAngles::new(1, vec![0.7]).unwrap();
        let c = gr_circuit(&angles).unwrap();
        assert_eq!(c.gates().len(), 1);
        assert!(matches!(c.gates()[0], CircuitGate::Ry { target: 0, param: 0 }));
    }

    #[test]
    fn four_qubit_circuit_structure() {
        let angles = GRAngles::new(4, vec![0.0; 15]).unwrap();
        let c = gr_circuit(&angles).unwrap();
        assert_eq!(c.gates().len(), 15);
        // the gate carrying theta_9 has controls (q0=0, q1=1, q2=0), target q3
        match &c.gates()[9] {
            CircuitGate::ControlledRy {
                controls,
                target,
                param,
            } => {
                assert_eq!(*target, 3);
                assert_eq!(*param, 9);
                assert_eq!(
                    controls,
                    &vec![
                        (0, Polarity::OnZero),
                        (1, Polarity::OnOne),
                        (2, Polarity::OnZero)
                    ]
                );
            }
            other => panic!("expected controlled ry, got {other:?}"),
        }
    }

    #[test]
    fn zero_angles_act_as_identity() {
        let angles = GRAngles::new(3, vec![0.0; 7]).unwrap();
        let state = gr_circuit(&angles).unwrap().run_from_zero(&angles.thetas).unwrap();
        assert_abs_diff_eq!(state.amplitudes()[0].re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn point_mass_gives_zero_angles() {
        let mut p = vec![0.0; 16];
        p[0] = 1.0;
        let angles = angles_from_distribution(&p).unwrap();
        assert!(angles.thetas.iter().all(|&t| t == 0.0));
    }

    #[test]
    fn uniform_distribution_gives_right_angles() {
        let p = vec![1.0 / 16.0; 16];
        let angles = angles_from_distribution(&p).unwrap();
        for &t in &angles.thetas {
            assert_abs_diff_eq!(t, PI / 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn last_angle_is_ratio_of_last_two_entries() {
        // theta_14 = 2 atan sqrt(p_1111 / p_1110); equal entries give pi/2
        let mut p = vec![1.0 / 20.0; 16];
        p[14] = 0.1;
        p[15] = 0.2;
        let scale: f64 = p.iter().sum();
        for x in &mut p {
            *x /= scale;
        }
        let angles = angles_from_distribution(&p).unwrap();
        let expect = 2.0 * (p[15] / p[14]).sqrt().atan();
        assert_abs_diff_eq!(angles.thetas[14], expect, epsilon = 1e-12);

        let p = vec![1.0 / 16.0; 16];
        let angles = angles_from_distribution(&p).unwrap();
        assert_abs_diff_eq!(angles.thetas[14], PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn round_trip_reproduces_distribution() {
        let p = [0.05, 0.0, 0.3, 0.15, 0.02, 0.08, 0.25, 0.15];
        let angles = angles_from_distribution(&p).unwrap();
        let state = gr_circuit(&angles).unwrap().run_from_zero(&angles.thetas).unwrap();
        for (observed, expect) in state.measurement_distribution().iter().zip(p) {
            assert_abs_diff_eq!(*observed, expect, epsilon = 1e-14);
        }
        // loading circuits are real: no imaginary parts anywhere
        assert!(state.amplitudes().iter().all(|a| a.im == 0.0));
    }

    #[test]
    fn bad_distributions_rejected() {
        assert!(angles_from_distribution(&[0.5, 0.5, 0.0]).is_err());
        assert!(angles_from_distribution(&[0.7, 0.2]).is_err());
        assert!(angles_from_distribution(&[1.2, -0.2]).is_err());
    }
}

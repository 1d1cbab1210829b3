//! Symbolic circuits: gates carry parameter indices instead of bound angles,
//! so one circuit can be replayed against many parameter vectors without
//! rebuilding.

use crate::error::{Error, Result};
use crate::simulator::{GateOp, Polarity, Statevector, TwoQubitMatrix};

/// Which parameter vector a circuit draws from when printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamSpace {
    Theta,
    Phi,
}

impl ParamSpace {
    fn label(self) -> &'static str {
        match self {
            ParamSpace::Theta => "theta",
            ParamSpace::Phi => "phi",
        }
    }
}

/// One gate with unbound parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum CircuitGate {
    Ry {
        target: usize,
        param: usize,
    },
    ControlledRy {
        controls: Vec<(usize, Polarity)>,
        target: usize,
        param: usize,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    /// Two-parameter parity-preserving rotation on the (qa, qb) pair.
    Rp {
        qa: usize,
        qb: usize,
        param_i: usize,
        param_j: usize,
    },
}

/// An ordered gate list over a fixed register width.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    param_count: usize,
    param_space: ParamSpace,
    gates: Vec<CircuitGate>,
}

impl Circuit {
    pub fn new(n_qubits: usize, param_count: usize, param_space: ParamSpace) -> Self {
        Self {
            n_qubits,
            param_count,
            param_space,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: CircuitGate) {
        self.gates.push(gate);
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn param_count(&self) -> usize {
        self.param_count
    }

    pub fn gates(&self) -> &[CircuitGate] {
        &self.gates
    }

    /// Shift every qubit index by `offset` (for embedding a block circuit in
    /// a wider register).
    pub fn shifted(&self, offset: usize, total_qubits: usize) -> Circuit {
        let gates = self
            .gates
            .iter()
            .map(|g| match g {
                CircuitGate::Ry { target, param } => CircuitGate::Ry {
                    target: target + offset,
                    param: *param,
                },
                CircuitGate::ControlledRy {
                    controls,
                    target,
                    param,
                } => CircuitGate::ControlledRy {
                    controls: controls.iter().map(|(q, p)| (q + offset, *p)).collect(),
                    target: target + offset,
                    param: *param,
                },
                CircuitGate::Cnot { control, target } => CircuitGate::Cnot {
                    control: control + offset,
                    target: target + offset,
                },
                CircuitGate::Rp {
                    qa,
                    qb,
                    param_i,
                    param_j,
                } => CircuitGate::Rp {
                    qa: qa + offset,
                    qb: qb + offset,
                    param_i: *param_i,
                    param_j: *param_j,
                },
            })
            .collect();
        Circuit {
            n_qubits: total_qubits,
            param_count: self.param_count,
            param_space: self.param_space,
            gates,
        }
    }

    fn check_params(&self, params: &[f64]) -> Result<()> {
        if params.len() != self.param_count {
            return Err(Error::ParameterSize {
                expected: self.param_count,
                actual: params.len(),
            });
        }
        Ok(())
    }

    /// Apply all gates in order to `state` with the given parameter vector.
    pub fn apply(&self, state: &mut Statevector, params: &[f64]) -> Result<()> {
        self.check_params(params)?;
        for gate in &self.gates {
            match gate {
                CircuitGate::Ry { target, param } => {
                    state.apply_ry(*target, params[*param])?;
                }
                CircuitGate::ControlledRy {
                    controls,
                    target,
                    param,
                } => {
                    state.apply_controlled_ry(controls, *target, params[*param])?;
                }
                CircuitGate::Cnot { control, target } => {
                    state.apply_cnot(*control, *target)?;
                }
                CircuitGate::Rp {
                    qa,
                    qb,
                    param_i,
                    param_j,
                } => {
                    let m = super::rp_matrix(params[*param_i], params[*param_j]);
                    state.apply_two_qubit(*qa, *qb, &m)?;
                }
            }
        }
        Ok(())
    }

    /// Bind parameters into a list of concrete gate operations.
    pub fn bind(&self, params: &[f64]) -> Result<Vec<GateOp>> {
        self.check_params(params)?;
        self.gates
            .iter()
            .map(|gate| {
                Ok(match gate {
                    CircuitGate::Ry { target, param } => GateOp::Ry {
                        target: *target,
                        theta: params[*param],
                    },
                    CircuitGate::ControlledRy {
                        controls,
                        target,
                        param,
                    } => GateOp::ControlledRy {
                        controls: controls.clone(),
                        target: *target,
                        theta: params[*param],
                    },
                    CircuitGate::Cnot { control, target } => GateOp::Cnot {
                        control: *control,
                        target: *target,
                    },
                    CircuitGate::Rp {
                        qa,
                        qb,
                        param_i,
                        param_j,
                    } => GateOp::TwoQubit {
                        qa: *qa,
                        qb: *qb,
                        matrix: rp_gate_matrix(params[*param_i], params[*param_j]),
                    },
                })
            })
            .collect()
    }

    /// Run the circuit on |0...0> and return the final state.
    pub fn run_from_zero(&self, params: &[f64]) -> Result<Statevector> {
        let mut state = Statevector::zero_state(self.n_qubits)?;
        self.apply(&mut state, params)?;
        Ok(state)
    }
}

fn rp_gate_matrix(phi_i: f64, phi_j: f64) -> TwoQubitMatrix {
    super::rp_matrix(phi_i, phi_j)
}

/// Text diagram: one line per gate with kind, controls with polarity,
/// target, and parameter index.
impl std::fmt::Display for Circuit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let label = self.param_space.label();
        writeln!(
            f,
            "circuit: {} qubits, {} gates, {} parameters",
            self.n_qubits,
            self.gates.len(),
            self.param_count
        )?;
        for gate in &self.gates {
            match gate {
                CircuitGate::Ry { target, param } => {
                    writeln!(f, "ry       q{target} {label}[{param}]")?;
                }
                CircuitGate::ControlledRy {
                    controls,
                    target,
                    param,
                } => {
                    let ctrl = controls
                        .iter()
                        .map(|(q, p)| {
                            format!("q{q}={}", if *p == Polarity::OnOne { 1 } else { 0 })
                        })
                        .collect::<Vec<_>>()
                        .join(",");
                    writeln!(f, "cry      q{target} {label}[{param}] ctrl {ctrl}")?;
                }
                CircuitGate::Cnot { control, target } => {
                    writeln!(f, "cnot     q{target} ctrl q{control}=1")?;
                }
                CircuitGate::Rp {
                    qa,
                    qb,
                    param_i,
                    param_j,
                } => {
                    writeln!(f, "rp       q{qa},q{qb} {label}[{param_i}],{label}[{param_j}]")?;
                }
            }
        }
        Ok(())
    }
}

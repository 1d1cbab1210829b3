//! Composition of the full 2N-qubit parametrized circuit.

use super::{AncillaMode, VqaConfig};
use crate::ansatz::{
    brickwall_circuit, expand_reduced, gr_circuit, BrickwallParams, Circuit, CircuitGate,
    GRAngles, ParamSpace, ReducedXYAngles,
};
use crate::error::{Error, Result};
use crate::simulator::Statevector;

/// Prebuilt circuit blocks, reusable across parameter bindings.
#[derive(Debug, Clone)]
pub(crate) struct PqcTemplate {
    /// Loading circuit on the ancilla block, over the full theta space
    /// (reps * (2^N - 1) angles).
    pub ancilla: Circuit,
    /// Transversal CNOTs ancilla i -> system N + i.
    pub cnots: Vec<(usize, usize)>,
    /// Brick-wall circuit on the system block.
    pub system: Circuit,
}

impl PqcTemplate {
    pub fn build(config: &VqaConfig) -> Result<Self> {
        config.validate()?;
        let n = config.model.n_sites;
        let total = 2 * n;
        let gr_params = (1usize << n) - 1;

        // single-repetition loading circuit, then replay it `reps` times
        // with shifted parameter indices
        let single = gr_circuit(&GRAngles::new(n, vec![0.0; gr_params])?)?;
        let reps = match config.ancilla_mode {
            AncillaMode::FullGr => config.ancilla_reps,
            AncillaMode::ReducedXy => 1,
        };
        let mut ancilla = Circuit::new(total, reps * gr_params, ParamSpace::Theta);
        for rep in 0..reps {
            let offset = rep * gr_params;
            for gate in single.gates() {
                ancilla.push(match gate {
                    CircuitGate::Ry { target, param } => CircuitGate::Ry {
                        target: *target,
                        param: param + offset,
                    },
                    CircuitGate::ControlledRy {
                        controls,
                        target,
                        param,
                    } => CircuitGate::ControlledRy {
                        controls: controls.clone(),
                        target: *target,
                        param: param + offset,
                    },
                    other => other.clone(),
                });
            }
        }

        let cnots = (0..n).map(|i| (i, n + i)).collect();

        let system = brickwall_circuit(&BrickwallParams::new(
            n,
            config.system_layers,
            vec![0.0; BrickwallParams::param_count(n, config.system_layers)],
        )?)?
        .shifted(n, total);

        Ok(Self {
            ancilla,
            cnots,
            system,
        })
    }

    /// Expand the free angles into the full loading-angle vector. Identity
    /// in full mode; the reduced mode computes its eight pinned angles and
    /// may fail on the arccos domain.
    pub fn expand_thetas(
        &self,
        config: &VqaConfig,
        thetas: &[f64],
        out: &mut Vec<f64>,
    ) -> Result<()> {
        match config.ancilla_mode {
            AncillaMode::FullGr => {
                if thetas.len() != self.ancilla.param_count() {
                    return Err(Error::ParameterSize {
                        expected: self.ancilla.param_count(),
                        actual: thetas.len(),
                    });
                }
                out.clear();
                out.extend_from_slice(thetas);
            }
            AncillaMode::ReducedXy => {
                if thetas.len() != 7 {
                    return Err(Error::ParameterSize {
                        expected: 7,
                        actual: thetas.len(),
                    });
                }
                let reduced = ReducedXYAngles::new(
                    config.beta,
                    [
                        thetas[0], thetas[1], thetas[2], thetas[3], thetas[4], thetas[5],
                        thetas[6],
                    ],
                )?;
                let full = expand_reduced(&reduced)?;
                out.clear();
                out.extend_from_slice(&full.thetas);
            }
        }
        Ok(())
    }

    /// Run the composed circuit on a zeroed `state` buffer.
    pub fn apply(
        &self,
        state: &mut Statevector,
        full_thetas: &[f64],
        phis: &[f64],
    ) -> Result<()> {
        self.ancilla.apply(state, full_thetas)?;
        for &(control, target) in &self.cnots {
            state.apply_cnot(control, target)?;
        }
        self.system.apply(state, phis)?;
        Ok(())
    }
}

/// Build the full 2N-qubit state for the given parameters: loading circuit
/// on the ancillas, transversal CNOTs, brick-wall on the system.
pub fn compose_pqc(thetas: &[f64], phis: &[f64], config: &VqaConfig) -> Result<Statevector> {
    let template = PqcTemplate::build(config)?;
    if phis.len() != config.phi_len() {
        return Err(Error::ParameterSize {
            expected: config.phi_len(),
            actual: phis.len(),
        });
    }
    let mut full_thetas = Vec::new();
    template.expand_thetas(config, thetas, &mut full_thetas)?;
    let mut state = Statevector::zero_state_with_cap(
        2 * config.model.n_sites,
        config.limits().sim_qubits,
    )?;
    template.apply(&mut state, &full_thetas, phis)?;
    Ok(state)
}

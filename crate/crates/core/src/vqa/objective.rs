//! The generalized Helmholtz free-energy objective.

use super::pqc::PqcTemplate;
use super::VqaConfig;
use crate::error::{Error, Result};
use crate::exactsolver::{build_dense_hamiltonian_with, gibbs_target_with, GibbsTarget};
use crate::simulator::{uhlmann_fidelity, DensityMatrix, Statevector};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Scratch buffers reused across objective evaluations.
#[derive(Debug, Clone)]
pub struct Workspace {
    state: Statevector,
    h_chunk: Vec<Complex64>,
    full_thetas: Vec<f64>,
}

/// Prebuilt circuit template plus the dense Hamiltonian: everything needed
/// to evaluate F(theta, phi) quickly and repeatedly.
#[derive(Debug, Clone)]
pub struct FreeEnergyModel {
    config: VqaConfig,
    template: PqcTemplate,
    hamiltonian: DMatrix<f64>,
}

impl FreeEnergyModel {
    pub fn new(config: VqaConfig) -> Result<Self> {
        config.validate()?;
        let template = PqcTemplate::build(&config)?;
        let hamiltonian = build_dense_hamiltonian_with(&config.model, &config.limits())?;
        Ok(Self {
            config,
            template,
            hamiltonian,
        })
    }

    pub fn config(&self) -> &VqaConfig {
        &self.config
    }

    pub fn hamiltonian(&self) -> &DMatrix<f64> {
        &self.hamiltonian
    }

    pub fn workspace(&self) -> Result<Workspace> {
        Ok(Workspace {
            state: Statevector::zero_state_with_cap(
                2 * self.config.model.n_sites,
                self.config.limits().sim_qubits,
            )?,
            h_chunk: vec![Complex64::ZERO; 1 << self.config.model.n_sites],
            full_thetas: Vec::new(),
        })
    }

    /// Prepare the circuit state for the given parameters in the workspace.
    pub fn prepare(&self, thetas: &[f64], phis: &[f64], ws: &mut Workspace) -> Result<()> {
        if phis.len() != self.config.phi_len() {
            return Err(Error::ParameterSize {
                expected: self.config.phi_len(),
                actual: phis.len(),
            });
        }
        self.template
            .expand_thetas(&self.config, thetas, &mut ws.full_thetas)?;
        ws.state.reset_to_zero_state();
        self.template.apply(&mut ws.state, &ws.full_thetas, phis)
    }

    /// F = Tr(H rho_S) - S(rho_A) / beta for the prepared workspace state.
    ///
    /// The entropy comes from the ancilla measurement probabilities, which
    /// equal the eigenvalues of rho_A because the circuit leaves the ancilla
    /// block diagonal after the transversal CNOTs.
    pub fn free_energy_of_prepared(&self, ws: &mut Workspace) -> f64 {
        let dim = 1usize << self.config.model.n_sites;
        let amps = ws.state.amplitudes();
        let h = &self.hamiltonian;
        let mut energy = 0.0;
        let mut entropy = 0.0;
        for chunk in amps.chunks_exact(dim) {
            // probability of this ancilla basis state
            let p: f64 = chunk.iter().map(|a| a.norm_sqr()).sum();
            if p > 0.0 {
                entropy -= p * p.ln();
            }
            // <chunk| H |chunk>
            ws.h_chunk.fill(Complex64::ZERO);
            for (j, &cj) in chunk.iter().enumerate() {
                if cj == Complex64::ZERO {
                    continue;
                }
                let col = h.column(j);
                for (i, acc) in ws.h_chunk.iter_mut().enumerate() {
                    *acc += col[i] * cj;
                }
            }
            energy += chunk
                .iter()
                .zip(&ws.h_chunk)
                .map(|(c, hc)| (c.conj() * hc).re)
                .sum::<f64>();
        }
        energy - entropy / self.config.beta
    }

    /// One-shot objective evaluation.
    pub fn free_energy(&self, thetas: &[f64], phis: &[f64], ws: &mut Workspace) -> Result<f64> {
        self.prepare(thetas, phis, ws)?;
        Ok(self.free_energy_of_prepared(ws))
    }

    /// Objective over a packed parameter vector [thetas | phis]; infeasible
    /// points (reduced-mode domain errors) map to +infinity.
    pub fn objective(&self, packed: &[f64], ws: &mut Workspace) -> f64 {
        let split = self.config.theta_len();
        if packed.len() != split + self.config.phi_len() {
            return f64::INFINITY;
        }
        match self.free_energy(&packed[..split], &packed[split..], ws) {
            Ok(v) => v,
            Err(_) => f64::INFINITY,
        }
    }

    /// Reduced system state of the prepared workspace.
    pub fn system_state(&self, ws: &Workspace) -> Result<DensityMatrix> {
        let n = self.config.model.n_sites;
        let keep: Vec<usize> = (n..2 * n).collect();
        ws.state.partial_trace(&keep)
    }

    /// Reduced ancilla state of the prepared workspace.
    pub fn ancilla_state(&self, ws: &Workspace) -> Result<DensityMatrix> {
        let n = self.config.model.n_sites;
        let keep: Vec<usize> = (0..n).collect();
        ws.state.partial_trace(&keep)
    }
}

/// Free energy F(theta, phi) under `config`.
pub fn free_energy(thetas: &[f64], phis: &[f64], config: &VqaConfig) -> Result<f64> {
    let model = FreeEnergyModel::new(config.clone())?;
    let mut ws = model.workspace()?;
    model.free_energy(thetas, phis, &mut ws)
}

/// Diagnostic bundle recomputed deterministically from given parameters.
#[derive(Debug, Clone)]
pub struct Evaluation {
    /// Reduced system state prepared by the circuit.
    pub prepared_state: DensityMatrix,
    /// Uhlmann fidelity against the exact Gibbs state.
    pub fidelity: f64,
    pub free_energy: f64,
    /// Entropy of the ancilla block.
    pub entropy: f64,
    /// Tr(H rho_S).
    pub energy: f64,
    /// The exact target for reference.
    pub target: GibbsTarget,
}

/// Evaluate parameters against the exact Gibbs target.
pub fn evaluate(thetas: &[f64], phis: &[f64], config: &VqaConfig) -> Result<Evaluation> {
    let model = FreeEnergyModel::new(config.clone())?;
    let target = gibbs_target_with(&config.model, config.beta, &config.limits())?;
    let mut ws = model.workspace()?;
    evaluate_with(&model, &target, thetas, phis, &mut ws)
}

pub(crate) fn evaluate_with(
    model: &FreeEnergyModel,
    target: &GibbsTarget,
    thetas: &[f64],
    phis: &[f64],
    ws: &mut Workspace,
) -> Result<Evaluation> {
    model.prepare(thetas, phis, ws)?;
    let free_energy = model.free_energy_of_prepared(ws);
    let prepared_state = model.system_state(ws)?;
    let entropy = model.ancilla_state(ws)?.von_neumann_entropy()?;
    let energy = free_energy + entropy / model.config().beta;
    let fidelity = uhlmann_fidelity(&prepared_state, &target.density_matrix)?;
    Ok(Evaluation {
        prepared_state,
        fidelity,
        free_energy,
        entropy,
        energy,
        target: target.clone(),
    })
}

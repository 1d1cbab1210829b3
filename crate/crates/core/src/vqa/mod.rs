//! Variational Gibbs-state preparation.
//!
//! The parametrized circuit acts on 2N qubits: a loading circuit U_A on the
//! ancilla block (qubits 0..N-1) prepares the Boltzmann weights, transversal
//! CNOTs copy them onto the system block (qubits N..2N-1) as a classical
//! mixture, and a parity-preserving brick-wall circuit U_S rotates the
//! computational basis into the Hamiltonian eigenbasis. Minimizing the
//! generalized Helmholtz free energy F = Tr(H rho_S) - S(rho_A)/beta over
//! the circuit parameters drives the system block toward the Gibbs state.

mod objective;
mod optimize;
mod pqc;

pub use objective::{evaluate, free_energy, Evaluation, FreeEnergyModel, Workspace};
pub use optimize::{optimize, RestartLog, RestartSummary, VqaResult};
pub use pqc::compose_pqc;

use crate::error::{Error, Result};
use crate::exactsolver::{Limits, ModelParams};
use serde::{Deserialize, Serialize};

/// Which circuit loads the ancilla distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AncillaMode {
    /// Full binary-tree loading circuit with 2^N - 1 free angles.
    FullGr,
    /// Symmetry-reduced 7-angle variant; N = 4 only.
    ReducedXy,
}

/// Classical optimizer choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OptimizerKind {
    /// BFGS with central finite-difference gradients.
    QuasiNewton,
    /// Nelder-Mead simplex search.
    DirectSearch,
}

/// Full configuration of one variational run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VqaConfig {
    pub model: ModelParams,
    /// Inverse temperature; must be positive so the entropy weight 1/beta
    /// stays finite. For ground states use a large beta such as 50.
    pub beta: f64,
    pub ancilla_mode: AncillaMode,
    /// Repetitions of the loading circuit, each with fresh angles.
    /// Only meaningful in full mode; the default is 1.
    pub ancilla_reps: usize,
    /// Brick-wall layers on the system block.
    pub system_layers: usize,
    /// Independent optimizer restarts.
    pub restarts: usize,
    pub optimizer: OptimizerKind,
    pub max_iterations: usize,
    /// Central finite-difference step for the quasi-Newton gradient.
    pub gradient_step: f64,
    pub seed: u64,
    #[serde(default)]
    pub limits: Option<Limits>,
}

impl VqaConfig {
    /// Configuration with the defaults used throughout: full loading
    /// circuit, 3 system layers, 20 restarts, quasi-Newton.
    pub fn new(model: ModelParams, beta: f64) -> Self {
        Self {
            model,
            beta,
            ancilla_mode: AncillaMode::FullGr,
            ancilla_reps: 1,
            system_layers: 3,
            restarts: 20,
            optimizer: OptimizerKind::QuasiNewton,
            max_iterations: 2000,
            gradient_step: 1e-6,
            seed: 0,
            limits: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta > 0.0) {
            return Err(Error::Domain(format!(
                "beta must be positive, got {}",
                self.beta
            )));
        }
        if self.ancilla_mode == AncillaMode::ReducedXy && self.model.n_sites != 4 {
            return Err(Error::InvalidModel(format!(
                "the reduced ancilla mode requires N = 4, got N = {}",
                self.model.n_sites
            )));
        }
        if self.ancilla_reps == 0 {
            return Err(Error::InvalidModel("ancilla_reps must be >= 1".into()));
        }
        if self.ancilla_reps > 1 && self.ancilla_mode == AncillaMode::ReducedXy {
            return Err(Error::InvalidModel(
                "repeated loading circuits require the full ancilla mode".into(),
            ));
        }
        if self.system_layers == 0 {
            return Err(Error::InvalidModel("system_layers must be >= 1".into()));
        }
        if self.restarts == 0 {
            return Err(Error::InvalidModel("restarts must be >= 1".into()));
        }
        if !(self.gradient_step > 0.0) {
            return Err(Error::Domain("gradient_step must be positive".into()));
        }
        Ok(())
    }

    pub fn limits(&self) -> Limits {
        self.limits.unwrap_or_default()
    }

    /// Number of free loading angles.
    pub fn theta_len(&self) -> usize {
        match self.ancilla_mode {
            AncillaMode::FullGr => self.ancilla_reps * ((1 << self.model.n_sites) - 1),
            AncillaMode::ReducedXy => 7,
        }
    }

    /// Number of brick-wall angles.
    pub fn phi_len(&self) -> usize {
        2 * self.model.n_sites * self.system_layers
    }
}

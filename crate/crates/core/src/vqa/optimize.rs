//! Multi-start minimization of the free energy.

use super::objective::{evaluate_with, FreeEnergyModel};
use super::{AncillaMode, OptimizerKind, VqaConfig};
use crate::error::{Error, Result};
use crate::exactsolver::gibbs_target_with;
use crate::optim::{bfgs_minimize, nelder_mead_minimize, BfgsOptions, NelderMeadOptions};
use crate::simulator::DensityMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

/// Outcome of a single restart.
#[derive(Debug, Clone, Serialize)]
pub struct RestartLog {
    pub restart: usize,
    pub final_free_energy: f64,
    pub fidelity: f64,
    pub iterations: usize,
    pub evaluations: usize,
    pub converged: bool,
}

/// Pointer to a selected restart.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RestartSummary {
    pub restart: usize,
    pub free_energy: f64,
    pub fidelity: f64,
}

/// Aggregate result of a multi-start run.
#[derive(Debug, Clone)]
pub struct VqaResult {
    pub config: VqaConfig,
    /// Minimum final free energy over all restarts; never below the exact
    /// value, which is the variational bound.
    pub best_free_energy: f64,
    /// Exact -(1/beta) ln Z.
    pub exact_free_energy: f64,
    /// Fidelity of the max-fidelity restart (the selection rule used for
    /// reporting headline numbers).
    pub fidelity: f64,
    /// Parameters of the max-fidelity restart.
    pub optimal_thetas: Vec<f64>,
    pub optimal_phis: Vec<f64>,
    /// System state prepared by the max-fidelity restart.
    pub prepared_state: DensityMatrix,
    pub best_by_free_energy: RestartSummary,
    pub best_by_fidelity: RestartSummary,
    pub per_restart_log: Vec<RestartLog>,
}

fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draw an initial parameter vector. Full-mode angles are uniform in
/// [0, 2pi); reduced free angles are uniform in (0, pi) and resampled until
/// the pinned theta_4 is inside its arccos domain.
fn draw_start(model: &FreeEnergyModel, rng: &mut ChaCha8Rng) -> Result<Vec<f64>> {
    let config = model.config();
    let theta_len = config.theta_len();
    let phi_len = config.phi_len();
    let mut x = vec![0.0; theta_len + phi_len];
    match config.ancilla_mode {
        AncillaMode::FullGr => {
            for slot in x.iter_mut().take(theta_len) {
                *slot = rng.gen_range(0.0..2.0 * PI);
            }
        }
        AncillaMode::ReducedXy => {
            let mut ws = model.workspace()?;
            let mut ok = false;
            for _ in 0..200 {
                for slot in x.iter_mut().take(theta_len) {
                    *slot = rng.gen_range(f64::EPSILON..PI);
                }
                // feasibility probe at phi = 0
                for slot in x.iter_mut().skip(theta_len) {
                    *slot = 0.0;
                }
                if model.objective(&x, &mut ws).is_finite() {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return Err(Error::OptimizationFailed(
                    "could not draw a feasible reduced-mode start".into(),
                ));
            }
        }
    }
    for slot in x.iter_mut().skip(theta_len) {
        *slot = rng.gen_range(0.0..2.0 * PI);
    }
    Ok(x)
}

/// Run `config.restarts` independent minimizations and aggregate them.
///
/// Each restart owns a private workspace and an RNG stream derived from
/// (seed, restart index), so results are deterministic regardless of thread
/// scheduling. Restarts run in parallel.
pub fn optimize(config: &VqaConfig) -> Result<VqaResult> {
    let model = FreeEnergyModel::new(config.clone())?;
    let target = gibbs_target_with(&config.model, config.beta, &config.limits())?;
    let theta_len = config.theta_len();

    struct RestartOutcome {
        log: RestartLog,
        x: Vec<f64>,
    }

    let outcomes: Vec<Result<RestartOutcome>> = (0..config.restarts)
        .into_par_iter()
        .map(|restart| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(config.seed, restart as u64));
            let x0 = draw_start(&model, &mut rng)?;
            let mut ws = model.workspace()?;
            let mut objective = |x: &[f64]| model.objective(x, &mut ws);
            let result = match config.optimizer {
                OptimizerKind::QuasiNewton => bfgs_minimize(
                    &mut objective,
                    &x0,
                    &BfgsOptions {
                        max_iterations: config.max_iterations,
                        fd_step: config.gradient_step,
                        ..BfgsOptions::default()
                    },
                ),
                OptimizerKind::DirectSearch => nelder_mead_minimize(
                    &mut objective,
                    &x0,
                    &NelderMeadOptions {
                        max_iterations: config.max_iterations,
                        ..NelderMeadOptions::default()
                    },
                ),
            };
            let mut ws = model.workspace()?;
            let fidelity = if result.value.is_finite() {
                evaluate_with(&model, &target, &result.x[..theta_len], &result.x[theta_len..], &mut ws)
                    .map(|e| e.fidelity)
                    .unwrap_or(0.0)
            } else {
                0.0
            };
            Ok(RestartOutcome {
                log: RestartLog {
                    restart,
                    final_free_energy: result.value,
                    fidelity,
                    iterations: result.iterations,
                    evaluations: result.evaluations,
                    converged: result.converged,
                },
                x: result.x,
            })
        })
        .collect();

    let mut logs = Vec::with_capacity(config.restarts);
    let mut points = Vec::with_capacity(config.restarts);
    for outcome in outcomes {
        let outcome = outcome?;
        logs.push(outcome.log.clone());
        points.push(outcome.x);
    }

    let best_f = logs
        .iter()
        .filter(|l| l.final_free_energy.is_finite())
        .min_by(|a, b| a.final_free_energy.partial_cmp(&b.final_free_energy).unwrap())
        .ok_or_else(|| {
            Error::OptimizationFailed(format!(
                "all {} restarts diverged; last log: {:?}",
                config.restarts,
                logs.last()
            ))
        })?;
    let best_fid = logs
        .iter()
        .filter(|l| l.final_free_energy.is_finite())
        .max_by(|a, b| a.fidelity.partial_cmp(&b.fidelity).unwrap())
        .expect("at least one finite restart exists");

    let chosen = &points[best_fid.restart];
    let mut ws = model.workspace()?;
    let chosen_eval = evaluate_with(
        &model,
        &target,
        &chosen[..theta_len],
        &chosen[theta_len..],
        &mut ws,
    )?;

    Ok(VqaResult {
        config: config.clone(),
        best_free_energy: best_f.final_free_energy,
        exact_free_energy: target.free_energy(),
        fidelity: best_fid.fidelity,
        optimal_thetas: chosen[..theta_len].to_vec(),
        optimal_phis: chosen[theta_len..].to_vec(),
        prepared_state: chosen_eval.prepared_state,
        best_by_free_energy: RestartSummary {
            restart: best_f.restart,
            free_energy: best_f.final_free_energy,
            fidelity: best_f.fidelity,
        },
        best_by_fidelity: RestartSummary {
            restart: best_fid.restart,
            free_energy: best_fid.final_free_energy,
            fidelity: best_fid.fidelity,
        },
        per_restart_log: logs,
    })
}

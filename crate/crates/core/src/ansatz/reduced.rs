//! Symmetry-reduced angle set for the N = 4 chain.
//!
//! Degeneracies in the chain spectrum pin eight of the fifteen loading
//! angles: with the positive-sector levels on basis states 0xxx and the
//! negative-sector levels on 1xxx (both in the solver's enumeration order),
//! the Boltzmann distribution at inverse temperature beta always satisfies
//!
//! ```text
//! theta_8 = theta_9 = theta_12 = theta_13 = pi/2
//! theta_10 = theta_7
//! theta_11 = theta_14 = 2 atan(exp(-beta))
//! theta_4  = 2 arccos(sin(theta_3/2) / tan(theta_1/2))
//! ```
//!
//! leaving 7 free parameters. The identities are checked numerically by
//! [`fit_check_reduced`].

use super::{angles_from_distribution, GRAngles};
use crate::error::{Error, Result};
use crate::exactsolver::{gibbs_basis_probabilities, Limits, ModelParams};
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

/// Positions of the free angles within the full 15-vector.
pub const FREE_ANGLE_INDICES: [usize; 7] = [0, 1, 2, 3, 5, 6, 7];

/// The 7 free loading angles for N = 4 at a fixed inverse temperature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducedXYAngles {
    pub beta: f64,
    /// theta_0, theta_1, theta_2, theta_3, theta_5, theta_6, theta_7.
    pub free: [f64; 7],
}

impl ReducedXYAngles {
    pub fn new(beta: f64, free: [f64; 7]) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(Error::Domain(format!(
                "inverse temperature must be positive, got {beta}"
            )));
        }
        if free.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("free angles must be finite".into()));
        }
        Ok(Self { beta, free })
    }
}

/// Expand the 7 free parameters into the full 15-angle vector.
///
/// Fails when |sin(theta_3/2) / tan(theta_1/2)| > 1, where the pinned
/// theta_4 leaves its arccos domain.
pub fn expand_reduced(reduced: &ReducedXYAngles) -> Result<GRAngles> {
    let [t0, t1, t2, t3, t5, t6, t7] = reduced.free;
    let ratio = (t3 / 2.0).sin() / (t1 / 2.0).tan();
    if !ratio.is_finite() || ratio.abs() > 1.0 {
        return Err(Error::Domain(format!(
            "theta_4 expansion undefined: sin(theta_3/2)/tan(theta_1/2) = {ratio:.6} \
             for theta_1 = {t1:.6}, theta_3 = {t3:.6}"
        )));
    }
    let t4 = 2.0 * ratio.acos();
    let t_exp = 2.0 * (-reduced.beta).exp().atan();
    let thetas = vec![
        t0, t1, t2, t3, t4, t5, t6, t7, // 0..=7
        FRAC_PI_2, FRAC_PI_2, // theta_8, theta_9
        t7,        // theta_10
        t_exp,     // theta_11
        FRAC_PI_2, FRAC_PI_2, // theta_12, theta_13
        t_exp,     // theta_14
    ];
    GRAngles::new(4, thetas)
}

/// Extract the free parameters from a full 15-angle vector.
pub fn free_angles_of(full: &GRAngles) -> Result<[f64; 7]> {
    if full.n_qubits != 4 {
        return Err(Error::InvalidModel(format!(
            "reduced angle set is defined for 4 qubits, got {}",
            full.n_qubits
        )));
    }
    Ok(FREE_ANGLE_INDICES.map(|i| full.thetas[i]))
}

/// Residual of one pinned-angle identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityResidual {
    pub name: &'static str,
    pub residual: f64,
}

/// Numerical check of the eight identities against the exact Boltzmann
/// distribution of a chain instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitCheckReport {
    pub beta: f64,
    /// Loading angles of the exact distribution.
    pub angles: GRAngles,
    pub residuals: Vec<IdentityResidual>,
}

impl FitCheckReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals
            .iter()
            .map(|r| r.residual)
            .fold(0.0, f64::max)
    }
}

/// Compute the exact Boltzmann distribution of the N = 4 chain, derive its
/// loading angles, and measure how well each pinned-angle identity holds.
pub fn fit_check_reduced(params: &ModelParams, beta: f64) -> Result<FitCheckReport> {
    if params.n_sites != 4 {
        return Err(Error::InvalidModel(format!(
            "the reduced angle set applies to the 4-site chain, got N = {}",
            params.n_sites
        )));
    }
    let p = gibbs_basis_probabilities(params, beta, &Limits::default())?;
    let angles = angles_from_distribution(&p)?;
    let t = &angles.thetas;
    let t_exp = 2.0 * (-beta).exp().atan();
    let theta4_pinned = 2.0 * ((t[3] / 2.0).sin() / (t[1] / 2.0).tan()).min(1.0).acos();
    let residuals = vec![
        IdentityResidual {
            name: "theta_8 = pi/2",
            residual: (t[8] - FRAC_PI_2).abs(),
        },
        IdentityResidual {
            name: "theta_9 = pi/2",
            residual: (t[9] - FRAC_PI_2).abs(),
        },
        IdentityResidual {
            name: "theta_12 = pi/2",
            residual: (t[12] - FRAC_PI_2).abs(),
        },
        IdentityResidual {
            name: "theta_13 = pi/2",
            residual: (t[13] - FRAC_PI_2).abs(),
        },
        IdentityResidual {
            name: "theta_10 = theta_7",
            residual: (t[10] - t[7]).abs(),
        },
        IdentityResidual {
            name: "theta_11 = 2 atan(exp(-beta))",
            residual: (t[11] - t_exp).abs(),
        },
        IdentityResidual {
            name: "theta_14 = 2 atan(exp(-beta))",
            residual: (t[14] - t_exp).abs(),
        },
        IdentityResidual {
            name: "theta_4 = 2 arccos(sin(theta_3/2)/tan(theta_1/2))",
            residual: (t[4] - theta4_pinned).abs(),
        },
    ];
    Ok(FitCheckReport {
        beta,
        angles,
        residuals,
    })
}

//! Exact Gibbs state from the dense eigendecomposition.

use super::{dense_spectrum_with, sector_spectrum_with, Limits, ModelParams, Parity};
use crate::error::{Error, Result};
use crate::simulator::DensityMatrix;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Exact thermal state exp(-beta H)/Z with its Boltzmann weights.
#[derive(Debug, Clone)]
pub struct GibbsTarget {
    pub beta: f64,
    /// Boltzmann probabilities ordered like the ascending dense spectrum.
    pub probabilities: Vec<f64>,
    pub density_matrix: DensityMatrix,
    /// Z = sum_n exp(-beta E_n). May overflow to infinity for extreme
    /// beta * |E|; `ln_partition_function` is always finite.
    pub partition_function: f64,
    pub ln_partition_function: f64,
}

impl GibbsTarget {
    /// Exact Helmholtz free energy -(1/beta) ln Z.
    pub fn free_energy(&self) -> f64 {
        -self.ln_partition_function / self.beta
    }
}

/// Gibbs state with the default size caps.
pub fn gibbs_target(params: &ModelParams, beta: f64) -> Result<GibbsTarget> {
    gibbs_target_with(params, beta, &Limits::default())
}

/// Gibbs state rho = exp(-beta H)/Z from the dense eigendecomposition.
///
/// Boltzmann exponentials are taken after shifting energies by the ground
/// energy, so large beta cannot overflow; the shift cancels in every ratio.
pub fn gibbs_target_with(params: &ModelParams, beta: f64, limits: &Limits) -> Result<GibbsTarget> {
    if !(beta >= 0.0) {
        return Err(Error::Domain(format!(
            "inverse temperature must be non-negative, got {beta}"
        )));
    }
    let spec = dense_spectrum_with(params, limits)?;
    let e_min = spec.eigenvalues[0];
    let weights: Vec<f64> = spec
        .eigenvalues
        .iter()
        .map(|&e| (-beta * (e - e_min)).exp())
        .collect();
    let shifted_z: f64 = weights.iter().sum();
    let probabilities: Vec<f64> = weights.iter().map(|w| w / shifted_z).collect();
    let ln_partition_function = shifted_z.ln() - beta * e_min;

    let dim = probabilities.len();
    let mut rho = DMatrix::<f64>::zeros(dim, dim);
    for (idx, &p) in probabilities.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        let v = spec.eigenvectors.column(idx);
        // rank-one update p |v><v|; eigenvectors are real
        for i in 0..dim {
            let pv = p * v[i];
            if pv == 0.0 {
                continue;
            }
            for j in 0..dim {
                rho[(i, j)] += pv * v[j];
            }
        }
    }
    let density_matrix =
        DensityMatrix::from_matrix(rho.map(|x| Complex64::new(x, 0.0)))?;
    Ok(GibbsTarget {
        beta,
        probabilities,
        density_matrix,
        partition_function: ln_partition_function.exp(),
        ln_partition_function,
    })
}

/// Boltzmann probabilities laid out over the 2^N computational basis in the
/// distribution-loading order: the first half holds the positive-sector
/// levels, the second half the negative-sector levels, each in the sector's
/// enumeration order.
pub fn gibbs_basis_probabilities(
    params: &ModelParams,
    beta: f64,
    limits: &Limits,
) -> Result<Vec<f64>> {
    if !(beta >= 0.0) {
        return Err(Error::Domain(format!(
            "inverse temperature must be non-negative, got {beta}"
        )));
    }
    let pos = sector_spectrum_with(Parity::Positive, params, limits)?;
    let neg = sector_spectrum_with(Parity::Negative, params, limits)?;
    let energies: Vec<f64> = pos
        .levels
        .iter()
        .chain(neg.levels.iter())
        .map(|l| l.energy)
        .collect();
    let e_min = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = energies.iter().map(|&e| (-beta * (e - e_min)).exp()).collect();
    let z: f64 = weights.iter().sum();
    Ok(weights.into_iter().map(|w| w / z).collect())
}

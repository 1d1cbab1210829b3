//! Momentum sets of the two parity sectors.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Parity sector of the chain, the eigenvalue of prod_n(-sigma_z_n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Positive,
    Negative,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Positive => write!(f, "positive"),
            Parity::Negative => write!(f, "negative"),
        }
    }
}

/// The N momenta of one parity sector, sorted ascending in (-pi, pi].
///
/// The positive sector satisfies antiperiodic boundary conditions and its
/// momenta come in +-k pairs with no 0 or pi mode; the negative sector is
/// periodic and contains exactly the unpaired modes k = 0 and k = pi.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentumSet {
    pub parity: Parity,
    pub momenta: Vec<f64>,
}

impl MomentumSet {
    pub fn n_sites(&self) -> usize {
        self.momenta.len()
    }

    /// Position of k = 0 in the sorted momentum list, if present.
    pub fn zero_mode(&self) -> Option<usize> {
        match self.parity {
            Parity::Positive => None,
            Parity::Negative => Some(self.momenta.len() / 2 - 1),
        }
    }

    /// Position of k = pi in the sorted momentum list, if present.
    pub fn pi_mode(&self) -> Option<usize> {
        match self.parity {
            Parity::Positive => None,
            Parity::Negative => Some(self.momenta.len() - 1),
        }
    }

    /// (-k, +k) partner positions, ordered by ascending |k|.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.momenta.len();
        match self.parity {
            // k_m = -k_{N-1-m}; |k| shrinks toward the middle of the list.
            Parity::Positive => (0..n / 2).rev().map(|m| (m, n - 1 - m)).collect(),
            // k_m = -k_{N-2-m} for m < N/2 - 1 (slots N/2-1 and N-1 hold 0 and pi).
            Parity::Negative => (0..n / 2 - 1).rev().map(|m| (m, n - 2 - m)).collect(),
        }
    }
}

/// Momenta of the requested sector for an even chain of `n_sites` spins.
pub fn momenta(parity: Parity, n_sites: usize) -> Result<MomentumSet> {
    if n_sites < 2 || n_sites % 2 != 0 {
        return Err(Error::InvalidModel(format!(
            "n_sites must be even and >= 2, got {n_sites}"
        )));
    }
    let n = n_sites as f64;
    let momenta = (0..n_sites)
        .map(|m| match parity {
            Parity::Positive => -(n - 1.0) / n * PI + (m as f64) * 2.0 * PI / n,
            Parity::Negative => -PI + (m as f64 + 1.0) * 2.0 * PI / n,
        })
        .collect();
    Ok(MomentumSet { parity, momenta })
}

//! Dense Hamiltonian matrix and its eigendecomposition.

use super::{Limits, ModelParams};
use crate::error::{Error, Result};
use nalgebra::DMatrix;

/// Dense 2^N x 2^N matrix of the ladder-form XY Hamiltonian, with the
/// default size cap.
pub fn build_dense_hamiltonian(params: &ModelParams) -> Result<DMatrix<f64>> {
    build_dense_hamiltonian_with(params, &Limits::default())
}

/// Dense 2^N x 2^N matrix of the ladder-form XY Hamiltonian.
///
/// Built term by term as Pauli-string tensor products in the computational
/// basis, with qubit 0 the most significant bit and site n in the state |0>
/// counting as an occupied mode (s+ s- = |0><0|). Periodic indexing: the
/// bond (N-1, 0) is included, so for N = 2 the single physical bond is
/// summed twice. The result is real symmetric.
pub fn build_dense_hamiltonian_with(params: &ModelParams, limits: &Limits) -> Result<DMatrix<f64>> {
    let n = params.n_sites;
    if n > limits.dense_sites {
        return Err(Error::ResourceLimit {
            what: "dense Hamiltonian",
            requested: n,
            cap: limits.dense_sites,
        });
    }
    let dim = 1usize << n;
    let (gamma, h) = (params.gamma, params.field_h);
    let mut m = DMatrix::<f64>::zeros(dim, dim);

    // Site s occupies bit (n-1-s): qubit 0 is the most significant bit.
    let bit = |site: usize| 1usize << (n - 1 - site);

    for site in 0..n {
        let (a, b) = (bit(site), bit((site + 1) % n));
        for col in 0..dim {
            let a_zero = col & a == 0;
            let b_zero = col & b == 0;
            // -1/2 (s+_a s-_b + s-_a s+_b): hop the |0> occupation between
            // neighboring sites.
            if !a_zero && b_zero {
                m[(col ^ a ^ b, col)] += -0.5;
            }
            if a_zero && !b_zero {
                m[(col ^ a ^ b, col)] += -0.5;
            }
            // -gamma/2 (s+_a s+_b + s-_a s-_b): create or destroy the pair.
            if !a_zero && !b_zero {
                m[(col ^ a ^ b, col)] += -0.5 * gamma;
            }
            if a_zero && b_zero {
                m[(col ^ a ^ b, col)] += -0.5 * gamma;
            }
        }
        // -h s+_s s-_s: diagonal count of sites in |0>.
        for col in 0..dim {
            if col & a == 0 {
                m[(col, col)] += -h;
            }
        }
    }
    Ok(m)
}

/// Full eigendecomposition of the dense Hamiltonian.
#[derive(Debug, Clone)]
pub struct DenseSpectrum {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, column i paired with `eigenvalues[i]`.
    pub eigenvectors: DMatrix<f64>,
}

/// Eigendecomposition with the default size cap.
pub fn dense_spectrum(params: &ModelParams) -> Result<DenseSpectrum> {
    dense_spectrum_with(params, &Limits::default())
}

/// Full eigendecomposition of the dense Hamiltonian, eigenvalues ascending.
pub fn dense_spectrum_with(params: &ModelParams, limits: &Limits) -> Result<DenseSpectrum> {
    let m = build_dense_hamiltonian_with(params, limits)?;
    Ok(decompose_symmetric(m))
}

fn decompose_symmetric(m: DMatrix<f64>) -> DenseSpectrum {
    let dim = m.nrows();
    let eig = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut eigenvectors = DMatrix::<f64>::zeros(dim, dim);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    DenseSpectrum {
        eigenvalues,
        eigenvectors,
    }
}

/// Ascending eigenvalues of one parity block of the dense Hamiltonian.
///
/// The positive-parity block is spanned by the computational basis states of
/// even popcount (even fermion number), the negative block by odd popcount.
pub fn parity_block_eigenvalues(
    params: &ModelParams,
    parity: super::Parity,
    limits: &Limits,
) -> Result<Vec<f64>> {
    let m = build_dense_hamiltonian_with(params, limits)?;
    let dim = m.nrows();
    let want_even = matches!(parity, super::Parity::Positive);
    let basis: Vec<usize> = (0..dim)
        .filter(|i| (i.count_ones() % 2 == 0) == want_even)
        .collect();
    let sub = DMatrix::<f64>::from_fn(basis.len(), basis.len(), |r, c| m[(basis[r], basis[c])]);
    let mut vals: Vec<f64> = sub.symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(vals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactsolver::Parity;
    use approx::assert_abs_diff_eq;

    fn params(n: usize, gamma: f64, h: f64) -> ModelParams {
        ModelParams::new(n, gamma, h).unwrap()
    }

    #[test]
    fn two_site_xx_chain_spectrum() {
        // Hand-diagonalizable check: the two-site XX chain with the periodic
        // double bond has eigenvalues {-1, 0, 0, 1}.
        let spec = dense_spectrum(&params(2, 0.0, 0.0)).unwrap();
        let expect = [-1.0, 0.0, 0.0, 1.0];
        for (v, e) in spec.eigenvalues.iter().zip(expect) {
            assert_abs_diff_eq!(*v, e, epsilon = 1e-12);
        }
    }

    #[test]
    fn two_site_general_spectrum() {
        // Blocks {|00>,|11>} and {|01>,|10>} give -h +- sqrt(h^2+g^2) and
        // -h +- 1.
        let (gamma, h) = (0.5, 0.5);
        let spec = dense_spectrum(&params(2, gamma, h)).unwrap();
        let s = (gamma * gamma + h * h).sqrt();
        let mut expect = [-h - s, -h + s, -h - 1.0, -h + 1.0];
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (v, e) in spec.eigenvalues.iter().zip(expect) {
            assert_abs_diff_eq!(*v, e, epsilon = 1e-12);
        }
    }

    #[test]
    fn hamiltonian_is_real_symmetric() {
        let m = build_dense_hamiltonian(&params(4, 0.73, 0.41)).unwrap();
        let diff = (&m - m.transpose()).abs().max();
        assert!(diff == 0.0);
    }

    #[test]
    fn ising_zero_field_ground_energy() {
        let spec = dense_spectrum(&params(4, 1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(spec.eigenvalues[0], -2.0, epsilon = 1e-12);
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let spec = dense_spectrum(&params(4, 0.5, 1.0)).unwrap();
        let gram = spec.eigenvectors.transpose() * &spec.eigenvectors;
        let dim = gram.nrows();
        let diff = (&gram - DMatrix::<f64>::identity(dim, dim)).abs().max();
        assert!(diff < 1e-10, "gram deviation {diff}");
    }

    #[test]
    fn eigenpairs_reconstruct_matrix() {
        let p = params(4, 0.3, 0.8);
        let m = build_dense_hamiltonian(&p).unwrap();
        let spec = dense_spectrum(&p).unwrap();
        let lambda = DMatrix::<f64>::from_diagonal(&nalgebra::DVector::from_vec(
            spec.eigenvalues.clone(),
        ));
        let rebuilt = &spec.eigenvectors * lambda * spec.eigenvectors.transpose();
        assert!((rebuilt - m).abs().max() < 1e-10);
    }

    #[test]
    fn parity_blocks_partition_spectrum() {
        let p = params(4, 0.73, 0.41);
        let limits = Limits::default();
        let full = dense_spectrum(&p).unwrap().eigenvalues;
        let mut both = parity_block_eigenvalues(&p, Parity::Positive, &limits).unwrap();
        both.extend(parity_block_eigenvalues(&p, Parity::Negative, &limits).unwrap());
        both.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (a, b) in full.iter().zip(both) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let p = params(14, 0.5, 0.5);
        assert!(matches!(
            build_dense_hamiltonian(&p),
            Err(Error::ResourceLimit { .. })
        ));
    }
}

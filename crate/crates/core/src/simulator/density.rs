//! Density matrices, partial trace, entropy and fidelity.

use super::Statevector;
use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;

const HERMITICITY_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues above this (negative) floor are treated as solver noise and
/// clamped to zero; anything below is a genuine violation.
const EIGENVALUE_FLOOR: f64 = -1e-10;

/// Hermitian, unit-trace matrix over `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Wrap a matrix, checking dimension, Hermiticity and unit trace.
    pub fn from_matrix(matrix: DMatrix<Complex64>) -> Result<Self> {
        let dim = matrix.nrows();
        if dim == 0 || matrix.ncols() != dim || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch(format!(
                "density matrix must be square with power-of-two size, got {}x{}",
                dim,
                matrix.ncols()
            )));
        }
        let n_qubits = dim.trailing_zeros() as usize;
        let mut herm_dev = 0.0f64;
        for i in 0..dim {
            for j in i..dim {
                herm_dev = herm_dev.max((matrix[(i, j)] - matrix[(j, i)].conj()).norm());
            }
        }
        if herm_dev > HERMITICITY_TOL {
            return Err(Error::DimensionMismatch(format!(
                "matrix is not Hermitian (deviation {herm_dev:.3e})"
            )));
        }
        let trace: Complex64 = (0..dim).map(|i| matrix[(i, i)]).sum();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::DimensionMismatch(format!(
                "matrix trace is {trace}, expected 1"
            )));
        }
        Ok(Self { n_qubits, matrix })
    }

    /// Pure-state projector |psi><psi|.
    pub fn from_statevector(state: &Statevector) -> Self {
        let amps = state.amplitudes();
        let dim = amps.len();
        let matrix =
            DMatrix::from_fn(dim, dim, |i, j| amps[i] * amps[j].conj());
        Self {
            n_qubits: state.n_qubits(),
            matrix,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.matrix[(i, i)]).sum()
    }

    /// Eigenvalues ascending, with tiny negative solver noise clamped to 0.
    /// Values below the noise floor are a genuine PSD violation.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let eig = self.matrix.clone().symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if let Some(&min) = vals.first() {
            if min < EIGENVALUE_FLOOR {
                return Err(Error::Domain(format!(
                    "density matrix has eigenvalue {min:.3e} below the PSD noise floor"
                )));
            }
        }
        Ok(vals.into_iter().map(|v| v.max(0.0)).collect())
    }

    /// Reduce to the qubits in `keep` (any proper, non-empty subset), which
    /// retain their relative order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let spec = TraceSpec::new(self.n_qubits, keep)?;
        let dim_keep = 1usize << spec.keep.len();
        let dim_env = 1usize << spec.env.len();
        let mut reduced = DMatrix::<Complex64>::zeros(dim_keep, dim_keep);
        for i in 0..dim_keep {
            for j in 0..dim_keep {
                let mut acc = Complex64::ZERO;
                for e in 0..dim_env {
                    acc += self.matrix[(spec.full_index(i, e), spec.full_index(j, e))];
                }
                reduced[(i, j)] = acc;
            }
        }
        DensityMatrix::from_matrix(reduced)
    }

    /// Von Neumann entropy -sum p ln p over the eigenvalues.
    pub fn von_neumann_entropy(&self) -> Result<f64> {
        Ok(entropy_of_clamped(&self.eigenvalues()?))
    }
}

impl Statevector {
    /// Reduced density matrix over the qubits in `keep` without forming the
    /// full projector first.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let spec = TraceSpec::new(self.n_qubits(), keep)?;
        let dim_keep = 1usize << spec.keep.len();
        let dim_env = 1usize << spec.env.len();
        let amps = self.amplitudes();
        let mut reduced = DMatrix::<Complex64>::zeros(dim_keep, dim_keep);
        for i in 0..dim_keep {
            for j in 0..dim_keep {
                let mut acc = Complex64::ZERO;
                for e in 0..dim_env {
                    acc += amps[spec.full_index(i, e)] * amps[spec.full_index(j, e)].conj();
                }
                reduced[(i, j)] = acc;
            }
        }
        DensityMatrix::from_matrix(reduced)
    }
}

/// Bit bookkeeping for a partial trace: `keep[r]` is the qubit supplying bit
/// r of the reduced index, `env` the traced-out qubits.
struct TraceSpec {
    n_qubits: usize,
    keep: Vec<usize>,
    env: Vec<usize>,
}

impl TraceSpec {
    fn new(n_qubits: usize, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() || keep.len() >= n_qubits {
            return Err(Error::DegenerateKeepSet);
        }
        let mut seen = vec![false; n_qubits];
        let mut keep_sorted = keep.to_vec();
        keep_sorted.sort_unstable();
        for &q in &keep_sorted {
            if q >= n_qubits {
                return Err(Error::QubitIndex {
                    index: q,
                    n_qubits,
                });
            }
            if seen[q] {
                return Err(Error::OverlappingQubits(q));
            }
            seen[q] = true;
        }
        let env = (0..n_qubits).filter(|q| !seen[*q]).collect();
        Ok(Self {
            n_qubits,
            keep: keep_sorted,
            env,
        })
    }

    /// Full-register index with the kept qubits set to basis state `i` and
    /// the environment qubits to `e` (both read most-significant-first).
    #[inline]
    fn full_index(&self, i: usize, e: usize) -> usize {
        let mut idx = 0usize;
        for (r, &q) in self.keep.iter().enumerate() {
            if i >> (self.keep.len() - 1 - r) & 1 == 1 {
                idx |= 1 << (self.n_qubits - 1 - q);
            }
        }
        for (r, &q) in self.env.iter().enumerate() {
            if e >> (self.env.len() - 1 - r) & 1 == 1 {
                idx |= 1 << (self.n_qubits - 1 - q);
            }
        }
        idx
    }
}

fn entropy_of_clamped(probs: &[f64]) -> f64 {
    -probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.ln())
        .sum::<f64>()
}

/// Shannon entropy -sum p ln p of a probability vector, natural log, with
/// the 0 ln 0 = 0 convention. Entries below -1e-10 are rejected; small
/// negatives are clamped to zero.
pub fn entropy_from_probabilities(probs: &[f64]) -> Result<f64> {
    let mut sum = 0.0;
    for &p in probs {
        if p < EIGENVALUE_FLOOR {
            return Err(Error::InvalidDistribution(format!(
                "probability {p:.3e} below the negativity floor"
            )));
        }
        sum += p.max(0.0);
    }
    if (sum - 1.0).abs() > 1e-8 {
        return Err(Error::InvalidDistribution(format!(
            "probabilities sum to {sum}, expected 1"
        )));
    }
    Ok(entropy_of_clamped(
        &probs.iter().map(|p| p.max(0.0)).collect::<Vec<_>>(),
    ))
}

/// Von Neumann entropy of a density matrix (natural log).
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    rho.von_neumann_entropy()
}

/// Uhlmann-Josza fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, computed
/// through Hermitian eigendecompositions.
pub fn uhlmann_fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(format!(
            "fidelity operands have dimensions {} and {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    let dim = rho.dim();
    let eig = rho.matrix.clone().symmetric_eigen();
    for &v in eig.eigenvalues.iter() {
        if v < EIGENVALUE_FLOOR {
            return Err(Error::Domain(format!(
                "fidelity operand has eigenvalue {v:.3e} below the PSD noise floor"
            )));
        }
    }
    // sqrt(rho) = V sqrt(D) V^dagger with noise clamped at zero
    let mut sqrt_rho = DMatrix::<Complex64>::zeros(dim, dim);
    for (idx, &v) in eig.eigenvalues.iter().enumerate() {
        let root = v.max(0.0).sqrt();
        if root == 0.0 {
            continue;
        }
        let col = eig.eigenvectors.column(idx);
        for i in 0..dim {
            for j in 0..dim {
                sqrt_rho[(i, j)] += root * col[i] * col[j].conj();
            }
        }
    }
    let inner = &sqrt_rho * &sigma.matrix * &sqrt_rho;
    let inner_eig = inner.symmetric_eigen();
    let total: f64 = inner_eig
        .eigenvalues
        .iter()
        .map(|&v| v.max(0.0).sqrt())
        .sum();
    Ok(total * total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulator::Polarity;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn diag_density(probs: &[f64]) -> DensityMatrix {
        let dim = probs.len();
        let m = DMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex64::new(probs[i], 0.0)
            } else {
                Complex64::ZERO
            }
        });
        DensityMatrix::from_matrix(m).unwrap()
    }

    #[test]
    fn projector_from_statevector() {
        let s = Statevector::zero_state(1).unwrap();
        let rho = DensityMatrix::from_statevector(&s);
        assert_abs_diff_eq!(rho.matrix()[(0, 0)].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.matrix()[(1, 1)].re, 0.0, epsilon = 1e-15);

        let mut s = Statevector::zero_state(1).unwrap();
        s.apply_ry(0, PI / 2.0).unwrap();
        let rho = DensityMatrix::from_statevector(&s);
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(rho.matrix()[(i, j)].re, 0.5, epsilon = 1e-12);
            }
        }
        // purity: rho^2 = rho
        let sq = rho.matrix() * rho.matrix();
        assert!((sq - rho.matrix()).iter().all(|d| d.norm() < 1e-12));
    }

    #[test]
    fn partial_trace_of_product_state() {
        // rho_A x rho_B traced over B returns rho_A
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(0, 0.9).unwrap();
        s.apply_ry(1, 2.1).unwrap();
        let rho_a = s.partial_trace(&[0]).unwrap();
        let (sin, cos) = (0.9f64 / 2.0).sin_cos();
        assert_abs_diff_eq!(rho_a.matrix()[(0, 0)].re, cos * cos, epsilon = 1e-12);
        assert_abs_diff_eq!(rho_a.matrix()[(1, 1)].re, sin * sin, epsilon = 1e-12);
        assert_abs_diff_eq!(rho_a.matrix()[(0, 1)].re, sin * cos, epsilon = 1e-12);
    }

    #[test]
    fn both_traces_of_correlated_state_agree() {
        // After CNOTs copy a register, tracing either half leaves the same
        // diagonal mixture.
        let mut s = Statevector::zero_state(4).unwrap();
        s.apply_ry(0, 0.8).unwrap();
        s.apply_ry(1, 2.3).unwrap();
        s.apply_cnot(0, 2).unwrap();
        s.apply_cnot(1, 3).unwrap();
        let rho_sys = s.partial_trace(&[2, 3]).unwrap();
        let rho_anc = s.partial_trace(&[0, 1]).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_abs_diff_eq!(
                    rho_sys.matrix()[(i, j)].re,
                    rho_anc.matrix()[(i, j)].re,
                    epsilon = 1e-12
                );
                if i != j {
                    assert_abs_diff_eq!(rho_sys.matrix()[(i, j)].norm(), 0.0, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn degenerate_keep_sets_rejected() {
        let s = Statevector::zero_state(2).unwrap();
        assert!(matches!(
            s.partial_trace(&[]),
            Err(Error::DegenerateKeepSet)
        ));
        assert!(matches!(
            s.partial_trace(&[0, 1]),
            Err(Error::DegenerateKeepSet)
        ));
    }

    #[test]
    fn entropy_examples() {
        let uniform = vec![1.0 / 16.0; 16];
        assert_abs_diff_eq!(
            entropy_from_probabilities(&uniform).unwrap(),
            16f64.ln(),
            epsilon = 1e-12
        );
        let pure = {
            let mut p = vec![0.0; 8];
            p[3] = 1.0;
            p
        };
        assert_abs_diff_eq!(entropy_from_probabilities(&pure).unwrap(), 0.0);
        // independent scalar evaluation
        let expect = -(0.75f64.ln() * 0.75 + 0.25f64.ln() * 0.25);
        assert_abs_diff_eq!(expect, 0.562_335_144_618_652_2, epsilon = 1e-12);
        assert_abs_diff_eq!(
            entropy_from_probabilities(&[0.75, 0.25]).unwrap(),
            expect,
            epsilon = 1e-12
        );
        assert!(entropy_from_probabilities(&[1.1, -0.1]).is_err());
        // tiny negatives are clamped
        assert_abs_diff_eq!(
            entropy_from_probabilities(&[1.0, -1e-12]).unwrap(),
            0.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn entropy_of_bipartite_halves_match() {
        let mut s = Statevector::zero_state(4).unwrap();
        s.apply_ry(0, 0.7).unwrap();
        s.apply_controlled_ry(&[(0, Polarity::OnOne)], 1, 1.2).unwrap();
        s.apply_cnot(0, 2).unwrap();
        s.apply_cnot(1, 3).unwrap();
        s.apply_ry(2, 0.4).unwrap();
        let sa = s.partial_trace(&[0, 1]).unwrap().von_neumann_entropy().unwrap();
        let sb = s.partial_trace(&[2, 3]).unwrap().von_neumann_entropy().unwrap();
        assert_abs_diff_eq!(sa, sb, epsilon = 1e-10);
    }

    #[test]
    fn fidelity_extremes_and_classical_reduction() {
        let zero = diag_density(&[1.0, 0.0]);
        let one = diag_density(&[0.0, 1.0]);
        assert_abs_diff_eq!(uhlmann_fidelity(&zero, &zero).unwrap(), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(uhlmann_fidelity(&zero, &one).unwrap(), 0.0, epsilon = 1e-12);

        let p = [0.1f64, 0.2, 0.3, 0.4];
        let q = [0.4f64, 0.3, 0.2, 0.1];
        let classical: f64 = p
            .iter()
            .zip(q)
            .map(|(a, b)| (a * b).sqrt())
            .sum::<f64>()
            .powi(2);
        let f = uhlmann_fidelity(&diag_density(&p), &diag_density(&q)).unwrap();
        assert_abs_diff_eq!(f, classical, epsilon = 1e-10);

        assert!(uhlmann_fidelity(&zero, &diag_density(&p)).is_err());
    }
}

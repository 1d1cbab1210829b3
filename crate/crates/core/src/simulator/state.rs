//! Statevector representation and in-place gate application.

use super::TwoQubitMatrix;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Polarity of a control qubit: black dot activates on |1>, white dot on |0>.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    OnOne,
    OnZero,
}

/// Complex amplitude vector over the computational basis of `n_qubits`.
#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl Statevector {
    /// |0...0> on `n_qubits` qubits, bounded by `cap`.
    pub fn zero_state_with_cap(n_qubits: usize, cap: usize) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::InvalidModel("need at least one qubit".into()));
        }
        if n_qubits > cap {
            return Err(Error::ResourceLimit {
                what: "statevector",
                requested: n_qubits,
                cap,
            });
        }
        let mut amps = vec![Complex64::ZERO; 1 << n_qubits];
        amps[0] = Complex64::ONE;
        Ok(Self { n_qubits, amps })
    }

    /// |0...0> with the default 24-qubit cap.
    pub fn zero_state(n_qubits: usize) -> Result<Self> {
        Self::zero_state_with_cap(n_qubits, crate::exactsolver::Limits::default().sim_qubits)
    }

    /// Wrap an explicit amplitude vector; must have length 2^n and unit norm.
    pub fn from_amplitudes(n_qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != 1 << n_qubits {
            return Err(Error::DimensionMismatch(format!(
                "expected 2^{n_qubits} amplitudes, got {}",
                amps.len()
            )));
        }
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidDistribution(format!(
                "amplitudes have squared norm {norm_sq}, expected 1"
            )));
        }
        Ok(Self { n_qubits, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Reset the buffer to |0...0> without reallocating.
    pub fn reset_to_zero_state(&mut self) {
        self.amps.fill(Complex64::ZERO);
        self.amps[0] = Complex64::ONE;
    }

    /// |a_i|^2 for every computational basis state.
    pub fn measurement_distribution(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    #[inline]
    fn bit_weight(&self, qubit: usize) -> usize {
        // qubit 0 is the most significant bit
        1usize << (self.n_qubits - 1 - qubit)
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitIndex {
                index: qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    /// Single-qubit rotation Ry(theta) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
    pub fn apply_ry(&mut self, target: usize, theta: f64) -> Result<&mut Self> {
        self.check_qubit(target)?;
        let (s, c) = (theta / 2.0).sin_cos();
        let t = self.bit_weight(target);
        for base in 0..self.amps.len() {
            if base & t == 0 {
                let a0 = self.amps[base];
                let a1 = self.amps[base | t];
                self.amps[base] = c * a0 - s * a1;
                self.amps[base | t] = s * a0 + c * a1;
            }
        }
        Ok(self)
    }

    /// Ry(theta) on `target`, applied only where every control qubit matches
    /// its polarity.
    pub fn apply_controlled_ry(
        &mut self,
        controls: &[(usize, Polarity)],
        target: usize,
        theta: f64,
    ) -> Result<&mut Self> {
        self.check_qubit(target)?;
        let mut required_mask = 0usize;
        let mut required_value = 0usize;
        for &(qubit, polarity) in controls {
            self.check_qubit(qubit)?;
            if qubit == target {
                return Err(Error::OverlappingQubits(qubit));
            }
            let w = self.bit_weight(qubit);
            if required_mask & w != 0 {
                return Err(Error::OverlappingQubits(qubit));
            }
            required_mask |= w;
            if polarity == Polarity::OnOne {
                required_value |= w;
            }
        }
        let (s, c) = (theta / 2.0).sin_cos();
        let t = self.bit_weight(target);
        for base in 0..self.amps.len() {
            if base & t == 0 && base & required_mask == required_value {
                let a0 = self.amps[base];
                let a1 = self.amps[base | t];
                self.amps[base] = c * a0 - s * a1;
                self.amps[base | t] = s * a0 + c * a1;
            }
        }
        Ok(self)
    }

    /// CNOT with the usual on-|1> control.
    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<&mut Self> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::OverlappingQubits(control));
        }
        let c = self.bit_weight(control);
        let t = self.bit_weight(target);
        for base in 0..self.amps.len() {
            if base & c != 0 && base & t == 0 {
                self.amps.swap(base, base | t);
            }
        }
        Ok(self)
    }

    /// Apply a (pre-validated) 4x4 unitary on qubits (qa, qb), with qa the
    /// more significant of the pair.
    pub fn apply_two_qubit(
        &mut self,
        qa: usize,
        qb: usize,
        matrix: &TwoQubitMatrix,
    ) -> Result<&mut Self> {
        self.check_qubit(qa)?;
        self.check_qubit(qb)?;
        if qa == qb {
            return Err(Error::OverlappingQubits(qa));
        }
        let wa = self.bit_weight(qa);
        let wb = self.bit_weight(qb);
        let m = matrix.elements();
        for base in 0..self.amps.len() {
            if base & (wa | wb) == 0 {
                let idx = [base, base | wb, base | wa, base | wa | wb];
                let v = idx.map(|i| self.amps[i]);
                for (row, &i) in idx.iter().enumerate() {
                    self.amps[i] =
                        m[row][0] * v[0] + m[row][1] * v[1] + m[row][2] * v[2] + m[row][3] * v[3];
                }
            }
        }
        Ok(self)
    }

    /// JSON debug dump: one `{index, re, im}` row per amplitude.
    pub fn to_debug_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.amps
                .iter()
                .enumerate()
                .map(|(index, a)| {
                    serde_json::json!({ "index": index, "re": a.re, "im": a.im })
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn approx_state(state: &Statevector, expect: &[f64]) {
        assert_eq!(state.dim(), expect.len());
        for (a, e) in state.amplitudes().iter().zip(expect) {
            assert_abs_diff_eq!(a.re, *e, epsilon = 1e-12);
            assert_abs_diff_eq!(a.im, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn zero_states() {
        approx_state(&Statevector::zero_state(1).unwrap(), &[1.0, 0.0]);
        approx_state(&Statevector::zero_state(2).unwrap(), &[1.0, 0.0, 0.0, 0.0]);
        let s = Statevector::zero_state(8).unwrap();
        assert_eq!(s.dim(), 256);
        assert_abs_diff_eq!(s.amplitudes()[0].re, 1.0);
        assert!(Statevector::zero_state_with_cap(25, 24).is_err());
        assert!(Statevector::zero_state(0).is_err());
    }

    #[test]
    fn ry_basics() {
        let mut s = Statevector::zero_state(1).unwrap();
        s.apply_ry(0, PI).unwrap();
        approx_state(&s, &[0.0, 1.0]);

        let mut s = Statevector::zero_state(1).unwrap();
        s.apply_ry(0, 0.0).unwrap();
        approx_state(&s, &[1.0, 0.0]);

        let mut s = Statevector::zero_state(1).unwrap();
        s.apply_ry(0, PI / 2.0).unwrap();
        approx_state(&s, &[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);

        assert!(Statevector::zero_state(1).unwrap().apply_ry(1, 0.3).is_err());
    }

    #[test]
    fn controlled_ry_polarities() {
        // control on-1 unsatisfied by |00>
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_controlled_ry(&[(0, Polarity::OnOne)], 1, PI).unwrap();
        approx_state(&s, &[1.0, 0.0, 0.0, 0.0]);

        // white dot activates on |0>: |00> -> |01>
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_controlled_ry(&[(0, Polarity::OnZero)], 1, PI).unwrap();
        approx_state(&s, &[0.0, 1.0, 0.0, 0.0]);

        assert!(matches!(
            Statevector::zero_state(2)
                .unwrap()
                .apply_controlled_ry(&[(1, Polarity::OnOne)], 1, 0.5),
            Err(Error::OverlappingQubits(1))
        ));
    }

    #[test]
    fn three_controls_mixed_polarity() {
        // Controls (q0 on-0, q1 on-1, q2 on-0) targeting q3: fires on |0100>
        // exactly as a lone Ry would, and leaves |0000> alone.
        let controls = [
            (0, Polarity::OnZero),
            (1, Polarity::OnOne),
            (2, Polarity::OnZero),
        ];
        let mut s = Statevector::zero_state(4).unwrap();
        s.apply_ry(1, PI).unwrap(); // |0100>
        s.apply_controlled_ry(&controls, 3, 1.234).unwrap();
        let mut expect = vec![0.0; 16];
        expect[0b0100] = (1.234f64 / 2.0).cos();
        expect[0b0101] = (1.234f64 / 2.0).sin();
        approx_state(&s, &expect);

        let mut s = Statevector::zero_state(4).unwrap();
        s.apply_controlled_ry(&controls, 3, 1.234).unwrap();
        let mut expect = vec![0.0; 16];
        expect[0] = 1.0;
        approx_state(&s, &expect);
    }

    #[test]
    fn cnot_truth_table_and_bell() {
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(0, PI).unwrap(); // |10>
        s.apply_cnot(0, 1).unwrap();
        approx_state(&s, &[0.0, 0.0, 0.0, 1.0]); // |11>

        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_cnot(0, 1).unwrap();
        approx_state(&s, &[1.0, 0.0, 0.0, 0.0]);

        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(0, PI / 2.0).unwrap(); // (|00> + |10>)/sqrt(2)
        s.apply_cnot(0, 1).unwrap();
        approx_state(&s, &[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]);
    }

    #[test]
    fn measurement_distribution_examples() {
        let mut s = Statevector::zero_state(4).unwrap();
        s.apply_ry(2, PI).unwrap(); // |0010>
        let p = s.measurement_distribution();
        assert_abs_diff_eq!(p[2], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.iter().sum::<f64>(), 1.0, epsilon = 1e-12);

        let mut s = Statevector::zero_state(4).unwrap();
        for q in 0..4 {
            s.apply_ry(q, PI / 2.0).unwrap();
        }
        for p in s.measurement_distribution() {
            assert_abs_diff_eq!(p, 1.0 / 16.0, epsilon = 1e-12);
        }
    }
}

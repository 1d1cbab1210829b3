//! Concrete gate operations.

use super::{Polarity, Statevector};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// A validated 4x4 unitary, rows and columns ordered |00>, |01>, |10>, |11>
/// with the first qubit of the pair the more significant.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitMatrix([[Complex64; 4]; 4]);

impl TwoQubitMatrix {
    /// Accepts the matrix only if it is unitary within 1e-12.
    pub fn new(m: [[Complex64; 4]; 4]) -> Result<Self> {
        let mut deviation = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                let mut dot = Complex64::ZERO;
                for k in 0..4 {
                    dot += m[i][k] * m[j][k].conj();
                }
                let expect = if i == j { Complex64::ONE } else { Complex64::ZERO };
                deviation = deviation.max((dot - expect).norm());
            }
        }
        if deviation > 1e-12 {
            return Err(Error::NonUnitary { deviation });
        }
        Ok(Self(m))
    }

    /// Real orthogonal case, validated the same way.
    pub fn from_real(m: [[f64; 4]; 4]) -> Result<Self> {
        Self::new(m.map(|row| row.map(|x| Complex64::new(x, 0.0))))
    }

    pub fn elements(&self) -> &[[Complex64; 4]; 4] {
        &self.0
    }
}

/// One concrete gate with bound parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum GateOp {
    Ry {
        target: usize,
        theta: f64,
    },
    ControlledRy {
        controls: Vec<(usize, Polarity)>,
        target: usize,
        theta: f64,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    TwoQubit {
        qa: usize,
        qb: usize,
        matrix: TwoQubitMatrix,
    },
}

impl GateOp {
    pub fn apply(&self, state: &mut Statevector) -> Result<()> {
        match self {
            GateOp::Ry { target, theta } => state.apply_ry(*target, *theta).map(|_| ()),
            GateOp::ControlledRy {
                controls,
                target,
                theta,
            } => state
                .apply_controlled_ry(controls, *target, *theta)
                .map(|_| ()),
            GateOp::Cnot { control, target } => state.apply_cnot(*control, *target).map(|_| ()),
            GateOp::TwoQubit { qa, qb, matrix } => {
                state.apply_two_qubit(*qa, *qb, matrix).map(|_| ())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identity_leaves_state_alone() {
        let mut id = [[Complex64::ZERO; 4]; 4];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = Complex64::ONE;
        }
        let m = TwoQubitMatrix::new(id).unwrap();
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(0, 0.7).unwrap().apply_ry(1, 1.1).unwrap();
        let before = s.clone();
        s.apply_two_qubit(0, 1, &m).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn swap_exchanges_basis_states() {
        let mut swap = [[0.0f64; 4]; 4];
        swap[0][0] = 1.0;
        swap[1][2] = 1.0;
        swap[2][1] = 1.0;
        swap[3][3] = 1.0;
        let m = TwoQubitMatrix::from_real(swap).unwrap();
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(1, std::f64::consts::PI).unwrap(); // |01>
        s.apply_two_qubit(0, 1, &m).unwrap();
        let p = s.measurement_distribution();
        assert_abs_diff_eq!(p[2], 1.0, epsilon = 1e-12); // |10>
    }

    #[test]
    fn non_unitary_is_rejected() {
        let mut bad = [[0.0f64; 4]; 4];
        bad[0][0] = 2.0;
        bad[1][1] = 1.0;
        bad[2][2] = 1.0;
        bad[3][3] = 1.0;
        assert!(matches!(
            TwoQubitMatrix::from_real(bad),
            Err(Error::NonUnitary { .. })
        ));
    }
}

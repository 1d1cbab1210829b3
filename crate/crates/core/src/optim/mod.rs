//! Local minimizers for smooth black-box objectives.
//!
//! Two methods: a quasi-Newton (BFGS) minimizer driven by central
//! finite-difference gradients, and a derivative-free Nelder-Mead simplex
//! search. Objectives may return non-finite values to mark infeasible
//! points; both methods treat those as rejections.

mod bfgs;
mod nelder_mead;

pub use bfgs::{bfgs_minimize, BfgsOptions};
pub use nelder_mead::{nelder_mead_minimize, NelderMeadOptions};

/// Outcome of one minimization run.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizeResult {
    /// Best point found.
    pub x: Vec<f64>,
    /// Objective value at `x`.
    pub value: f64,
    /// Iterations performed.
    pub iterations: usize,
    /// Objective evaluations consumed.
    pub evaluations: usize,
    /// Whether a convergence criterion was met before the iteration cap.
    pub converged: bool,
}

/// Central finite-difference gradient with step `h`; falls back to a
/// one-sided difference when a probe point is infeasible.
pub fn central_difference_gradient<F>(f: &mut F, x: &[f64], h: f64, fx: f64) -> Vec<f64>
where
    F: FnMut(&[f64]) -> f64,
{
    let mut grad = vec![0.0; x.len()];
    let mut probe = x.to_vec();
    for i in 0..x.len() {
        probe[i] = x[i] + h;
        let fp = f(&probe);
        probe[i] = x[i] - h;
        let fm = f(&probe);
        probe[i] = x[i];
        grad[i] = match (fp.is_finite(), fm.is_finite()) {
            (true, true) => (fp - fm) / (2.0 * h),
            (true, false) => (fp - fx) / h,
            (false, true) => (fx - fm) / h,
            (false, false) => 0.0,
        };
    }
    grad
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadratic(x: &[f64]) -> f64 {
        // minimum at (1, -2, 3)
        (x[0] - 1.0).powi(2) + 2.0 * (x[1] + 2.0).powi(2) + 0.5 * (x[2] - 3.0).powi(2)
    }

    fn rosenbrock(x: &[f64]) -> f64 {
        (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2)
    }

    #[test]
    fn bfgs_minimizes_quadratic() {
        let mut f = quadratic;
        let r = bfgs_minimize(&mut f, &[0.0, 0.0, 0.0], &BfgsOptions::default());
        assert!(r.converged);
        assert!(r.value < 1e-12, "value {}", r.value);
        assert!((r.x[0] - 1.0).abs() < 1e-6);
        assert!((r.x[1] + 2.0).abs() < 1e-6);
        assert!((r.x[2] - 3.0).abs() < 1e-6);
    }

    #[test]
    fn bfgs_handles_rosenbrock() {
        let mut f = rosenbrock;
        let r = bfgs_minimize(&mut f, &[-1.2, 1.0], &BfgsOptions::default());
        assert!(r.value < 1e-8, "value {}", r.value);
    }

    #[test]
    fn nelder_mead_minimizes_quadratic() {
        let mut f = quadratic;
        let r = nelder_mead_minimize(&mut f, &[0.0, 0.0, 0.0], &NelderMeadOptions::default());
        assert!(r.converged);
        assert!(r.value < 1e-9, "value {}", r.value);
    }

    #[test]
    fn infeasible_start_reports_failure() {
        let mut f = |_x: &[f64]| f64::INFINITY;
        let r = bfgs_minimize(&mut f, &[0.0], &BfgsOptions::default());
        assert!(!r.converged);
        assert!(!r.value.is_finite());
    }

    #[test]
    fn objective_with_infeasible_region() {
        // infeasible for x < 0; minimum at the interior point x = 1
        let mut f = |x: &[f64]| {
            if x[0] < 0.0 {
                f64::INFINITY
            } else {
                (x[0] - 1.0).powi(2)
            }
        };
        let r = bfgs_minimize(&mut f, &[0.5], &BfgsOptions::default());
        assert!(r.value < 1e-10);
    }

    #[test]
    fn gradient_matches_analytic_on_quadratic() {
        let mut f = quadratic;
        let x = [0.3, 0.7, -1.1];
        let fx = f(&x);
        let g = central_difference_gradient(&mut f, &x, 1e-6, fx);
        let expect = [
            2.0 * (x[0] - 1.0),
            4.0 * (x[1] + 2.0),
            1.0 * (x[2] - 3.0),
        ];
        for (a, b) in g.iter().zip(expect) {
            assert!((a - b).abs() < 1e-7, "{a} vs {b}");
        }
    }
}

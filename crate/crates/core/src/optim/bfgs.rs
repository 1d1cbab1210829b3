//! BFGS with central finite-difference gradients and a backtracking
//! Armijo line search.

use super::{central_difference_gradient, MinimizeResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BfgsOptions {
    pub max_iterations: usize,
    /// Stop when the objective improves by less than this between iterates.
    pub f_tol: f64,
    /// Stop when the gradient infinity norm drops below this.
    pub grad_tol: f64,
    /// Central finite-difference step.
    pub fd_step: f64,
}

impl Default for BfgsOptions {
    fn default() -> Self {
        Self {
            max_iterations: 2000,
            f_tol: 1e-10,
            grad_tol: 1e-8,
            fd_step: 1e-6,
        }
    }
}

pub fn bfgs_minimize<F>(f: &mut F, x0: &[f64], opts: &BfgsOptions) -> MinimizeResult
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    let mut evaluations = 0usize;

    let mut x = x0.to_vec();
    evaluations += 1;
    let mut fx = f(&x);
    if !fx.is_finite() {
        return MinimizeResult {
            x,
            value: fx,
            iterations: 0,
            evaluations,
            converged: false,
        };
    }

    let mut grad = {
        evaluations += 2 * n;
        central_difference_gradient(f, &x, opts.fd_step, fx)
    };
    // inverse Hessian approximation, row-major
    let mut h_inv = identity(n);
    let mut converged = false;
    let mut iterations = 0usize;

    for iter in 0..opts.max_iterations {
        iterations = iter + 1;
        if inf_norm(&grad) < opts.grad_tol {
            converged = true;
            break;
        }

        // d = -H g
        let mut direction = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += h_inv[i * n + j] * grad[j];
            }
            direction[i] = -acc;
        }
        let mut descent: f64 = direction.iter().zip(&grad).map(|(d, g)| d * g).sum();
        if descent >= 0.0 {
            // stale curvature; restart from steepest descent
            h_inv = identity(n);
            for i in 0..n {
                direction[i] = -grad[i];
            }
            descent = -grad.iter().map(|g| g * g).sum::<f64>();
            if descent == 0.0 {
                converged = true;
                break;
            }
        }

        // backtracking Armijo search
        let mut step = 1.0;
        let mut x_new = vec![0.0; n];
        let mut f_new = f64::INFINITY;
        let mut accepted = false;
        for _ in 0..60 {
            for i in 0..n {
                x_new[i] = x[i] + step * direction[i];
            }
            evaluations += 1;
            f_new = f(&x_new);
            if f_new.is_finite() && f_new <= fx + 1e-4 * step * descent {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            // no acceptable step along the direction: converged to noise level
            converged = true;
            break;
        }

        let grad_new = {
            evaluations += 2 * n;
            central_difference_gradient(f, &x_new, opts.fd_step, f_new)
        };

        // BFGS update with curvature guard
        let s: Vec<f64> = (0..n).map(|i| x_new[i] - x[i]).collect();
        let y: Vec<f64> = (0..n).map(|i| grad_new[i] - grad[i]).collect();
        let sy: f64 = s.iter().zip(&y).map(|(a, b)| a * b).sum();
        if sy > 1e-12 {
            let rho = 1.0 / sy;
            // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
            let mut hy = vec![0.0; n];
            for i in 0..n {
                let mut acc = 0.0;
                for j in 0..n {
                    acc += h_inv[i * n + j] * y[j];
                }
                hy[i] = acc;
            }
            let yhy: f64 = y.iter().zip(&hy).map(|(a, b)| a * b).sum();
            for i in 0..n {
                for j in 0..n {
                    h_inv[i * n + j] += rho * rho * yhy * s[i] * s[j]
                        - rho * (hy[i] * s[j] + s[i] * hy[j])
                        + rho * s[i] * s[j];
                }
            }
        }

        let improvement = fx - f_new;
        x = x_new.clone();
        fx = f_new;
        grad = grad_new;
        if improvement.abs() < opts.f_tol {
            converged = true;
            break;
        }
    }

    MinimizeResult {
        x,
        value: fx,
        iterations,
        evaluations,
        converged,
    }
}

fn identity(n: usize) -> Vec<f64> {
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        m[i * n + i] = 1.0;
    }
    m
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

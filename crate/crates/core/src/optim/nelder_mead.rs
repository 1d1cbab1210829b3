//! Nelder-Mead downhill simplex search.

use super::MinimizeResult;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    pub max_iterations: usize,
    /// Stop when the value spread across the simplex falls below this.
    pub f_tol: f64,
    /// Edge length of the initial simplex around the start point.
    pub initial_step: f64,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            max_iterations: 5000,
            f_tol: 1e-10,
            initial_step: 0.25,
        }
    }
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

pub fn nelder_mead_minimize<F>(f: &mut F, x0: &[f64], opts: &NelderMeadOptions) -> MinimizeResult
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    let mut evaluations = 0usize;
    let eval = |f: &mut F, x: &[f64], count: &mut usize| -> f64 {
        *count += 1;
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            f64::MAX
        }
    };

    // start simplex: x0 plus one vertex per coordinate
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += opts.initial_step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex
        .iter()
        .map(|v| eval(f, v, &mut evaluations))
        .collect();

    let mut iterations = 0usize;
    let mut converged = false;
    for iter in 0..opts.max_iterations {
        iterations = iter + 1;
        // order ascending by value
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];

        if (values[worst] - values[best]).abs() < opts.f_tol
            || (values[worst] == f64::MAX && values[best] == f64::MAX)
        {
            converged = values[best] < f64::MAX;
            break;
        }

        // centroid of all but the worst vertex
        let mut centroid = vec![0.0; n];
        for (idx, vertex) in simplex.iter().enumerate() {
            if idx == worst {
                continue;
            }
            for (c, x) in centroid.iter_mut().zip(vertex) {
                *c += x / n as f64;
            }
        }

        let blend = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
            a.iter().zip(b).map(|(x, y)| x + t * (x - y)).collect()
        };

        let reflected = blend(&centroid, &simplex[worst], REFLECT);
        let f_reflected = eval(f, &reflected, &mut evaluations);

        if f_reflected < values[best] {
            let expanded = blend(&centroid, &simplex[worst], EXPAND);
            let f_expanded = eval(f, &expanded, &mut evaluations);
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
            continue;
        }
        if f_reflected < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
            continue;
        }

        // contraction, outside or inside of the worst vertex
        let (contracted, f_contracted) = if f_reflected < values[worst] {
            let c = blend(&centroid, &simplex[worst], CONTRACT);
            let fc = eval(f, &c, &mut evaluations);
            (c, fc)
        } else {
            let c = blend(&centroid, &simplex[worst], -CONTRACT);
            let fc = eval(f, &c, &mut evaluations);
            (c, fc)
        };
        if f_contracted < values[worst].min(f_reflected) {
            simplex[worst] = contracted;
            values[worst] = f_contracted;
            continue;
        }

        // shrink toward the best vertex
        let best_vertex = simplex[best].clone();
        for (idx, vertex) in simplex.iter_mut().enumerate() {
            if idx == best {
                continue;
            }
            for (x, b) in vertex.iter_mut().zip(&best_vertex) {
                *x = b + SHRINK * (*x - b);
            }
            values[idx] = eval(f, vertex, &mut evaluations);
        }
    }

    let (best_idx, &best_value) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap();
    MinimizeResult {
        x: simplex.swap_remove(best_idx),
        value: if best_value == f64::MAX {
            f64::INFINITY
        } else {
            best_value
        },
        iterations,
        evaluations,
        converged,
    }
}

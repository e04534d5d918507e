//! Quasi-Newton minimization with finite-difference derivatives.

use nalgebra::{DMatrix, DVector};

#[derive(Debug, Clone, Copy)]
pub struct BfgsOptions {
    pub max_iter: usize,
    /// Relative objective change below which the run may stop.
    pub rel_tol: f64,
    /// Gradient norm below which the run may stop.
    pub grad_tol: f64,
    /// Largest step length accepted from a single direction.
    pub max_step: f64,
}

impl Default for BfgsOptions {
    fn default() -> Self {
        Self {
            max_iter: 500,
            rel_tol: 1e-10,
            grad_tol: 1e-4,
            max_step: 5.0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub gradient: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

fn gradient_step(x: f64) -> f64 {
    1e-5 * x.abs().max(1.0)
}

/// Central-difference gradient; falls back to a one-sided difference when
/// one neighbour is non-finite.
pub fn central_gradient<F: FnMut(&[f64]) -> f64>(f: &mut F, x: &[f64], fx: f64) -> Vec<f64> {
    let mut probe = x.to_vec();
    (0..x.len())
        .map(|i| {
            let h = gradient_step(x[i]);
            probe[i] = x[i] + h;
            let up = f(&probe);
            probe[i] = x[i] - h;
            let down = f(&probe);
            probe[i] = x[i];
            match (up.is_finite(), down.is_finite()) {
                (true, true) => (up - down) / (2.0 * h),
                (true, false) => (up - fx) / h,
                (false, true) => (fx - down) / h,
                (false, false) => f64::NAN,
            }
        })
        .collect()
}

/// Central-difference Hessian with per-coordinate step
/// `h_i = max(1e-4, 1e-4·|x_i|)`, symmetrized.
pub fn central_hessian<F: FnMut(&[f64]) -> f64>(f: &mut F, x: &[f64]) -> DMatrix<f64> {
    let n = x.len();
    let h: Vec<f64> = x.iter().map(|v| (1e-4 * v.abs()).max(1e-4)).collect();
    let f0 = f(x);
    let mut probe = x.to_vec();
    let mut hess = DMatrix::zeros(n, n);
    for i in 0..n {
        probe[i] = x[i] + h[i];
        let up = f(&probe);
        probe[i] = x[i] - h[i];
        let down = f(&probe);
        probe[i] = x[i];
        hess[(i, i)] = (up - 2.0 * f0 + down) / (h[i] * h[i]);
        for j in 0..i {
            let mut corner = |si: f64, sj: f64| {
                probe[i] = x[i] + si * h[i];
                probe[j] = x[j] + sj * h[j];
                let v = f(&probe);
                probe[i] = x[i];
                probe[j] = x[j];
                v
            };
            let v = (corner(1.0, 1.0) - corner(1.0, -1.0) - corner(-1.0, 1.0) + corner(-1.0, -1.0))
                / (4.0 * h[i] * h[j]);
            hess[(i, j)] = v;
            hess[(j, i)] = v;
        }
    }
    (&hess + hess.transpose()) * 0.5
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Minimizes `f` from `x0` by BFGS on the inverse Hessian with a
/// backtracking Armijo line search. Non-finite objective values are treated
/// as infeasible and shrink the step.
pub fn minimize<F: FnMut(&[f64]) -> f64>(mut f: F, x0: &[f64], opts: &BfgsOptions) -> Minimum {
    let n = x0.len();
    let mut x = DVector::from_column_slice(x0);
    let mut fx = f(x.as_slice());
    if !fx.is_finite() {
        return Minimum {
            x: x0.to_vec(),
            value: fx,
            gradient: vec![f64::NAN; n],
            iterations: 0,
            converged: false,
        };
    }
    let mut g = DVector::from_vec(central_gradient(&mut f, x.as_slice(), fx));
    let mut hinv = DMatrix::<f64>::identity(n, n);
    let mut fresh = true;
    let mut last_rel = f64::INFINITY;
    let mut iterations = 0;

    while iterations < opts.max_iter {
        let gnorm = g.norm();
        if gnorm < opts.grad_tol && last_rel < opts.rel_tol {
            return Minimum {
                x: x.as_slice().to_vec(),
                value: fx,
                gradient: g.as_slice().to_vec(),
                iterations,
                converged: true,
            };
        }
        iterations += 1;

        let mut dir = -(&hinv * &g);
        let mut slope = g.dot(&dir);
        if !(slope < 0.0) {
            hinv = DMatrix::identity(n, n);
            fresh = true;
            dir = -g.clone();
            slope = g.dot(&dir);
        }
        let dnorm = dir.norm();
        let mut alpha = if dnorm > opts.max_step { opts.max_step / dnorm } else { 1.0 };

        let mut accepted = None;
        for _ in 0..60 {
            let trial = &x + &dir * alpha;
            let ft = f(trial.as_slice());
            if ft.is_finite() && ft <= fx + 1e-4 * alpha * slope {
                accepted = Some((trial, ft));
                break;
            }
            alpha *= 0.5;
        }

        let Some((x_new, f_new)) = accepted else {
            if !fresh {
                hinv = DMatrix::identity(n, n);
                fresh = true;
                continue;
            }
            // No descent available along the steepest direction.
            let converged = gnorm < opts.grad_tol;
            return Minimum {
                x: x.as_slice().to_vec(),
                value: fx,
                gradient: g.as_slice().to_vec(),
                iterations,
                converged,
            };
        };

        let g_new = DVector::from_vec(central_gradient(&mut f, x_new.as_slice(), f_new));
        let s = &x_new - &x;
        let y = &g_new - &g;
        let sy = s.dot(&y);
        if sy > 1e-12 * s.norm() * y.norm() && sy > 0.0 {
            if fresh {
                let scale = sy / y.dot(&y);
                hinv = DMatrix::identity(n, n) * scale;
            }
            let rho = 1.0 / sy;
            let hy = &hinv * &y;
            let yhy = y.dot(&hy);
            // H ← H − ρ(H y sᵀ + s yᵀ H) + (ρ² yᵀHy + ρ) s sᵀ
            hinv -= (&hy * s.transpose() + &s * hy.transpose()) * rho;
            hinv += (&s * s.transpose()) * (rho * rho * yhy + rho);
            fresh = false;
        }

        last_rel = (fx - f_new).abs() / fx.abs().max(1.0);
        x = x_new;
        fx = f_new;
        g = g_new;
    }

    let converged = norm(g.as_slice()) < opts.grad_tol && last_rel < opts.rel_tol;
    Minimum {
        x: x.as_slice().to_vec(),
        value: fx,
        gradient: g.as_slice().to_vec(),
        iterations,
        converged,
    }
}

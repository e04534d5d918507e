//! Gauss–Hermite rules for expectations under normal laws.
//!
//! Rules are standardized: `Σ w_j f(t_j) ≈ E[f(T)]` with `T ~ N(0, 1)`, so the
//! weights sum to one and scaling a node by σ gives an expectation under
//! `N(0, σ²)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 100;
pub const DEFAULT_ORDER_1D: usize = 30;
pub const DEFAULT_ORDER_2D: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule1D {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule1D {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule2D {
    nodes: Vec<(f64, f64)>,
    weights: Vec<f64>,
    order: usize,
}

impl QuadratureRule2D {
    pub fn nodes(&self) -> &[(f64, f64)] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Nodes per axis.
    pub fn order(&self) -> usize {
        self.order
    }
}

/// Physicists' Gauss–Hermite nodes and weights (weight function `e^{−u²}`)
/// by Newton iteration on the orthonormal Hermite recurrence.
fn physicists_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    const PIM4: f64 = 0.751_125_544_464_942_5; // π^{-1/4}
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    let nf = n as f64;
    let mut z = 0.0f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-0.16667),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = PIM4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

/// Standardized Gauss–Hermite rule of the given order, nodes ascending.
pub fn gauss_hermite(order: usize) -> Result<QuadratureRule1D> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "quadrature order must be in 1..={MAX_ORDER}, got {order}"
        )));
    }
    if order == 1 {
        return Ok(QuadratureRule1D {
            nodes: vec![0.0],
            weights: vec![1.0],
        });
    }
    let (u, v) = physicists_rule(order);
    let inv_sqrt_pi = 1.0 / std::f64::consts::PI.sqrt();
    let mut nodes: Vec<f64> = u.iter().map(|u| u * std::f64::consts::SQRT_2).collect();
    let mut weights: Vec<f64> = v.iter().map(|v| v * inv_sqrt_pi).collect();
    nodes.reverse();
    weights.reverse();
    Ok(QuadratureRule1D { nodes, weights })
}

/// Lower Cholesky factor of `[[σ1², ρσ1σ2], [ρσ1σ2, σ2²]]`.
///
/// At `|ρ| = 1` the second column vanishes, which is the rank-one factor.
pub(crate) fn bivariate_cholesky(sigma1: f64, sigma2: f64, rho: f64) -> [[f64; 2]; 2] {
    let off = (1.0 - rho * rho).max(0.0).sqrt();
    [[sigma1, 0.0], [rho * sigma2, off * sigma2]]
}

/// Tensor-product rule for `(ε1, ε2) ~ N(0, V)`, nodes mapped through the
/// Cholesky factor of V.
pub fn bivariate_rule(order: usize, sigma1: f64, sigma2: f64, rho: f64) -> Result<QuadratureRule2D> {
    let axis = gauss_hermite(order)?;
    bivariate_rule_from(&axis, sigma1, sigma2, rho)
}

pub(crate) fn bivariate_rule_from(
    axis: &QuadratureRule1D,
    sigma1: f64,
    sigma2: f64,
    rho: f64,
) -> Result<QuadratureRule2D> {
    if !(sigma1 >= 0.0 && sigma2 >= 0.0) || !(rho.abs() <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "invalid bivariate parameters sigma1={sigma1} sigma2={sigma2} rho={rho}"
        )));
    }
    let l = bivariate_cholesky(sigma1, sigma2, rho);
    let n = axis.order();
    let mut nodes = Vec::with_capacity(n * n);
    let mut weights = Vec::with_capacity(n * n);
    for (&ta, &wa) in axis.nodes.iter().zip(&axis.weights) {
        for (&tb, &wb) in axis.nodes.iter().zip(&axis.weights) {
            nodes.push((l[0][0] * ta, l[1][0] * ta + l[1][1] * tb));
            weights.push(wa * wb);
        }
    }
    Ok(QuadratureRule2D {
        nodes,
        weights,
        order: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn moment(rule: &QuadratureRule1D, m: i32) -> f64 {
        rule.nodes().iter().zip(rule.weights()).map(|(t, w)| w * t.powi(m)).sum()
    }

    #[test]
    fn order_one_is_the_mean() {
        let r = gauss_hermite(1).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert_eq!(r.weights(), &[1.0]);
    }

    #[test]
    fn order_two_nodes_are_unit() {
        let r = gauss_hermite(2).unwrap();
        assert!((r.nodes()[0] + 1.0).abs() < 1e-14 && (r.nodes()[1] - 1.0).abs() < 1e-14);
        assert!((r.weights()[0] - 0.5).abs() < 1e-14 && (r.weights()[1] - 0.5).abs() < 1e-14);
    }

    // numpy.polynomial.hermite_e.hermegauss(3): ±√3 with weights 1/6, 0 with 2/3.
    #[test]
    fn order_three_matches_closed_form() {
        let r = gauss_hermite(3).unwrap();
        let s3 = 3f64.sqrt();
        let want_t = [-s3, 0.0, s3];
        let want_w = [1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0];
        for i in 0..3 {
            assert!((r.nodes()[i] - want_t[i]).abs() < 1e-13);
            assert!((r.weights()[i] - want_w[i]).abs() < 1e-13);
        }
    }

    #[test]
    fn out_of_range_order() {
        assert!(gauss_hermite(0).is_err());
        assert!(gauss_hermite(MAX_ORDER + 1).is_err());
        assert!(gauss_hermite(MAX_ORDER).is_ok());
    }

    #[test]
    fn weights_normalized_and_symmetric() {
        for order in 1..=MAX_ORDER {
            let r = gauss_hermite(order).unwrap();
            let s: f64 = r.weights().iter().sum();
            assert!((s - 1.0).abs() < 1e-12, "order {order}: sum {s}");
            assert!(r.weights().iter().all(|&w| w > 0.0));
            for i in 0..order {
                assert_eq!(r.nodes()[i], -r.nodes()[order - 1 - i]);
            }
        }
    }

    #[test]
    fn second_moment_exact() {
        for order in 2..=MAX_ORDER {
            let r = gauss_hermite(order).unwrap();
            assert!((moment(&r, 2) - 1.0).abs() < 1e-12, "order {order}");
        }
    }

    #[test]
    fn moments_up_to_fourth() {
        let exact = [0.0, 1.0, 0.0, 3.0];
        for order in 2..=40 {
            let r = gauss_hermite(order).unwrap();
            for m in 1..=4 {
                if 2 * order - 1 >= m {
                    let err = (moment(&r, m as i32) - exact[m - 1]).abs();
                    assert!(err < 1e-10, "order {order} moment {m}: {err}");
                }
            }
        }
    }

    #[test]
    fn bivariate_single_node() {
        let r = bivariate_rule(1, 1.0, 1.0, 0.0).unwrap();
        assert_eq!(r.nodes(), &[(0.0, 0.0)]);
        assert_eq!(r.weights(), &[1.0]);
    }

    #[test]
    fn perfect_correlation_collapses_to_diagonal() {
        let r = bivariate_rule(2, 1.0, 1.0, 1.0).unwrap();
        for &(a, b) in r.nodes() {
            assert!((a - b).abs() < 1e-15);
            assert!((a.abs() - 1.0).abs() < 1e-14);
        }
        assert!((r.weights().iter().sum::<f64>() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn bivariate_covariance_exact() {
        for &(s1, s2, rho) in &[(1.0, 1.0, 0.0), (0.609, 0.738, 0.933), (0.4, 0.65, -0.5), (1.5, 0.2, -1.0)] {
            for order in 2..=12 {
                let r = bivariate_rule(order, s1, s2, rho).unwrap();
                let m = |f: &dyn Fn(f64, f64) -> f64| -> f64 {
                    r.nodes().iter().zip(r.weights()).map(|(&(a, b), w)| w * f(a, b)).sum()
                };
                assert!((m(&|a, _| a * a) - s1 * s1).abs() < 1e-10);
                assert!((m(&|_, b| b * b) - s2 * s2).abs() < 1e-10);
                assert!((m(&|a, b| a * b) - rho * s1 * s2).abs() < 1e-10);
                assert_eq!(r.nodes().len(), order * order);
            }
        }
    }

    #[test]
    fn bivariate_rejects_bad_parameters() {
        assert!(bivariate_rule(4, -1.0, 1.0, 0.0).is_err());
        assert!(bivariate_rule(4, 1.0, 1.0, 1.5).is_err());
    }
}

//! Maximum-likelihood fitting, observed-information standard errors, and
//! empirical-Bayes predictions of cluster effects.
//!
//! The optimizer works on an unconstrained vector: intercepts and slopes as
//! is, standard deviations as `log σ`, correlations as `atanh ρ`. Estimates
//! and covariances are mapped back to the natural scale by the delta method.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::likelihood::{conditional_at, marginal_from_eta, Mixing, ParameterVector, PreparedData, Scratch};
use crate::model::{Cluster, Dataset, FixedEffects, LinkFamily, RandomEffectSpec, ReStructure};
use crate::optim::{central_hessian, minimize, BfgsOptions, Minimum};
use crate::quadrature::{bivariate_cholesky, gauss_hermite, QuadratureRule1D, DEFAULT_ORDER_1D, DEFAULT_ORDER_2D};
use crate::special::normal_two_sided_p;

/// `log σ` below which a standard deviation is reported as zero.
pub const LOG_SIGMA_BOUNDARY: f64 = -8.0;
const LOG_SIGMA_MAX: f64 = 5.0;
const Z_95: f64 = 1.96;

#[derive(Debug, Clone)]
pub struct FitOptions {
    /// Nodes per axis; `None` picks 30 for one effect and 12 per axis for two.
    pub quadrature_order: Option<usize>,
    pub max_iterations: usize,
    /// Relative log-likelihood change required for convergence.
    pub rel_tol: f64,
    pub start: Option<ParameterVector>,
    /// Seed for the jittered restarts tried after a failed first run.
    pub seed: Option<u64>,
    /// Skip the Hessian when only point estimates are needed.
    pub covariance: bool,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            quadrature_order: None,
            max_iterations: 500,
            rel_tol: 1e-10,
            start: None,
            seed: None,
            covariance: true,
        }
    }
}

impl FitOptions {
    pub fn order_for(&self, structure: ReStructure) -> usize {
        self.quadrature_order.unwrap_or(match structure {
            ReStructure::Bivariate => DEFAULT_ORDER_2D,
            _ => DEFAULT_ORDER_1D,
        })
    }
}

/// One row of a coefficient table.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficient {
    pub name: String,
    pub estimate: f64,
    pub se: f64,
    pub p_value: f64,
    pub lci: f64,
    pub uci: f64,
}

#[derive(Debug, Clone)]
pub struct FitResult {
    pub link: LinkFamily,
    pub structure: ReStructure,
    /// Slopes held at zero.
    pub intercept_only: bool,
    pub estimates: ParameterVector,
    /// Natural-scale rows: intercepts, slopes (unless intercept-only), then
    /// variance components.
    pub coefficients: Vec<Coefficient>,
    /// Natural-scale covariance of the coefficient rows, if the Hessian was
    /// usable.
    pub covariance: Option<DMatrix<f64>>,
    pub covariance_note: Option<String>,
    pub loglik: f64,
    pub converged: bool,
    pub iterations: usize,
    pub gradient_norm: f64,
    /// A standard deviation ended below the reporting boundary.
    pub boundary: bool,
    pub quadrature_order: usize,
    /// Optimizer coordinates at the optimum.
    pub theta: Vec<f64>,
}

impl FitResult {
    /// Number of estimated parameters (fixed plus variance components).
    pub fn n_params(&self) -> usize {
        self.coefficients.len()
    }

    /// Number of estimated intercepts and slopes.
    pub fn n_fixed(&self) -> usize {
        self.coefficients.len() - self.structure.n_params()
    }

    pub fn coefficient(&self, name: &str) -> Option<&Coefficient> {
        self.coefficients.iter().find(|c| c.name == name)
    }

    /// Natural-scale covariance block of the variance components.
    pub fn variance_component_covariance(&self) -> Option<DMatrix<f64>> {
        let cov = self.covariance.as_ref()?;
        let m = self.structure.n_params();
        let start = self.coefficients.len() - m;
        Some(cov.view((start, start), (m, m)).into_owned())
    }
}

/// How the optimizer vector maps onto model parameters.
#[derive(Debug, Clone, Copy)]
struct Layout {
    n_intercepts: usize,
    n_slopes: usize,
    structure: ReStructure,
    intercept_only: bool,
}

impl Layout {
    fn n_fixed(&self) -> usize {
        self.n_intercepts + if self.intercept_only { 0 } else { self.n_slopes }
    }

    fn unpack(&self, theta: &[f64]) -> Option<(FixedEffects, RandomEffectSpec)> {
        let intercepts = theta[..self.n_intercepts].to_vec();
        let slopes = if self.intercept_only {
            vec![0.0; self.n_slopes]
        } else {
            theta[self.n_intercepts..self.n_fixed()].to_vec()
        };
        let v = &theta[self.n_fixed()..];
        let re = match self.structure {
            ReStructure::None => RandomEffectSpec::None,
            ReStructure::Univariate => {
                if v[0] > LOG_SIGMA_MAX {
                    return None;
                }
                RandomEffectSpec::Univariate { sigma: v[0].exp() }
            }
            ReStructure::Bivariate => {
                if v[0] > LOG_SIGMA_MAX || v[1] > LOG_SIGMA_MAX {
                    return None;
                }
                RandomEffectSpec::Bivariate {
                    sigma1: v[0].exp(),
                    sigma2: v[1].exp(),
                    rho: v[2].tanh(),
                }
            }
        };
        Some((FixedEffects::new(intercepts, slopes), re))
    }

    fn pack(&self, params: &ParameterVector) -> Vec<f64> {
        let mut theta = params.fixed.intercepts.clone();
        if !self.intercept_only {
            theta.extend_from_slice(&params.fixed.slopes);
        }
        let floor = |s: f64| s.max(1e-6).ln();
        match (self.structure, params.re) {
            (ReStructure::None, _) => {}
            (ReStructure::Univariate, RandomEffectSpec::Univariate { sigma }) => theta.push(floor(sigma)),
            (ReStructure::Univariate, RandomEffectSpec::Bivariate { sigma1, sigma2, .. }) => {
                theta.push(floor(0.5 * (sigma1 + sigma2)))
            }
            (ReStructure::Univariate, RandomEffectSpec::None) => theta.push(0.5f64.ln()),
            (ReStructure::Bivariate, RandomEffectSpec::Bivariate { sigma1, sigma2, rho }) => {
                theta.extend([floor(sigma1), floor(sigma2), rho.clamp(-0.999, 0.999).atanh()])
            }
            (ReStructure::Bivariate, RandomEffectSpec::Univariate { sigma }) => {
                theta.extend([floor(sigma), floor(sigma), 0.0])
            }
            (ReStructure::Bivariate, RandomEffectSpec::None) => theta.extend([0.5f64.ln(), 0.5f64.ln(), 0.0]),
        }
        theta
    }

    /// Natural-scale values and the diagonal Jacobian d(natural)/d(theta).
    fn natural(&self, theta: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let nf = self.n_fixed();
        let mut values = theta[..nf].to_vec();
        let mut jac = vec![1.0; nf];
        match self.structure {
            ReStructure::None => {}
            ReStructure::Univariate => {
                let s = theta[nf].exp();
                values.push(s);
                jac.push(s);
            }
            ReStructure::Bivariate => {
                let (s1, s2, r) = (theta[nf].exp(), theta[nf + 1].exp(), theta[nf + 2].tanh());
                values.extend([s1, s2, r]);
                jac.extend([s1, s2, 1.0 - r * r]);
            }
        }
        (values, jac)
    }

    fn names(&self, data: &Dataset) -> Vec<String> {
        let mut names: Vec<String> = (1..=self.n_intercepts).map(|k| format!("c{k}")).collect();
        if !self.intercept_only {
            names.extend(data.covariate_names().iter().cloned());
        }
        match self.structure {
            ReStructure::None => {}
            ReStructure::Univariate => names.push("sigma".into()),
            ReStructure::Bivariate => names.extend(["sigma1".into(), "sigma2".into(), "rho".into()]),
        }
        names
    }
}

struct Problem<'a> {
    prepared: PreparedData<'a>,
    link: LinkFamily,
    layout: Layout,
    rule: QuadratureRule1D,
}

impl<'a> Problem<'a> {
    fn loglik(&self, theta: &[f64], scratch: &mut Scratch) -> f64 {
        let Some((fixed, re)) = self.layout.unpack(theta) else {
            return f64::NEG_INFINITY;
        };
        let Ok(mixing) = Mixing::new(&re, &self.rule) else {
            return f64::NEG_INFINITY;
        };
        let v = self.prepared.total(self.link, &fixed, &mixing, scratch);
        if v.is_nan() {
            f64::NEG_INFINITY
        } else {
            v
        }
    }

    fn minimize_from(&self, start: &[f64], opts: &FitOptions) -> Minimum {
        let mut scratch = Scratch::new(self.prepared.data.categories());
        let bfgs = BfgsOptions {
            max_iter: opts.max_iterations,
            rel_tol: opts.rel_tol,
            ..Default::default()
        };
        minimize(|t| -self.loglik(t, &mut scratch), start, &bfgs)
    }
}

fn check_data(data: &Dataset, structure: ReStructure) -> Result<()> {
    if structure == ReStructure::Bivariate && data.categories() != 3 {
        return Err(Error::InvalidArgument(format!(
            "bivariate random effects need K = 3, got K = {}",
            data.categories()
        )));
    }
    let totals = data.category_totals();
    if let Some(k) = totals.iter().position(|&t| t == 0) {
        return Err(Error::EstimationDegenerate(format!(
            "category {} is never observed",
            k + 1
        )));
    }
    Ok(())
}

/// Intercepts of the homogeneous intercept-only fit, which have closed forms
/// in the pooled category proportions.
fn pooled_intercepts(data: &Dataset, link: LinkFamily) -> Vec<f64> {
    let totals = data.category_totals();
    let n: f64 = totals.iter().map(|&t| t as f64).sum();
    let p: Vec<f64> = totals.iter().map(|&t| t as f64 / n).collect();
    crate::model::log_odds(link, &p)
}

fn jittered(theta: &[f64], rng: &mut ChaCha8Rng) -> Vec<f64> {
    theta
        .iter()
        .map(|t| t + 0.25 * rng.sample::<f64, _>(StandardNormal))
        .collect()
}

fn fit_impl(
    data: &Dataset,
    link: LinkFamily,
    structure: ReStructure,
    intercept_only: bool,
    opts: &FitOptions,
) -> Result<FitResult> {
    check_data(data, structure)?;
    let layout = Layout {
        n_intercepts: data.categories() - 1,
        n_slopes: data.n_slopes(),
        structure,
        intercept_only,
    };
    let order = opts.order_for(structure);
    let problem = Problem {
        prepared: PreparedData::new(data),
        link,
        layout,
        rule: gauss_hermite(order)?,
    };

    // Homogeneous fit first; its optimum seeds the random-effect fit.
    let mut baseline = None;
    let start = match &opts.start {
        Some(p) => {
            p.check_against(data)?;
            layout.pack(p)
        }
        None if structure == ReStructure::None => {
            let mut t = pooled_intercepts(data, link);
            if !intercept_only {
                t.extend(std::iter::repeat_n(0.0, data.n_slopes()));
            }
            t
        }
        None => {
            let hom_opts = FitOptions {
                covariance: false,
                start: None,
                ..opts.clone()
            };
            let hom = fit_impl(data, link, ReStructure::None, intercept_only, &hom_opts)?;
            let mut params = hom.estimates.clone();
            params.re = match structure {
                ReStructure::Univariate => RandomEffectSpec::Univariate { sigma: 0.5 },
                _ => RandomEffectSpec::Bivariate {
                    sigma1: 0.5,
                    sigma2: 0.5,
                    rho: 0.0,
                },
            };
            let t = layout.pack(&params);
            baseline = Some((hom, t.clone()));
            t
        }
    };

    let mut best = problem.minimize_from(&start, opts);
    if !best.converged {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.unwrap_or(0));
        for _ in 0..3 {
            let m = problem.minimize_from(&jittered(&start, &mut rng), opts);
            if m.converged {
                best = m;
                break;
            }
            if m.value < best.value {
                best = m;
            }
        }
    }
    // The random-effect optimum cannot sit below the homogeneous one; if it
    // does, the search wandered, so restart near the σ = 0 boundary.
    if let Some((hom, mut t)) = baseline {
        if -best.value < hom.loglik - 1e-6 {
            for v in &mut t[layout.n_fixed()..layout.n_fixed() + structure.n_params().min(2)] {
                *v = -4.0;
            }
            let m = problem.minimize_from(&t, opts);
            if m.value < best.value || (!best.converged && m.converged) {
                best = m;
            }
        }
    }

    let loglik = -best.value;
    if !loglik.is_finite() {
        return Err(Error::EstimationDegenerate(
            "log-likelihood is not finite at any explored parameter value".into(),
        ));
    }

    let (values, jac) = layout.natural(&best.x);
    let names = layout.names(data);
    let n = values.len();

    let mut covariance = None;
    let mut covariance_note = None;
    if opts.covariance {
        let mut scratch = Scratch::new(data.categories());
        match numerical_covariance(|t| problem.loglik(t, &mut scratch), &best.x) {
            Ok(cov_theta) => {
                let j = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(jac.clone()));
                covariance = Some(&j * cov_theta * &j);
            }
            Err(e) => covariance_note = Some(e.to_string()),
        }
    }

    let nf = layout.n_fixed();
    let boundary = match structure {
        ReStructure::None => false,
        ReStructure::Univariate => best.x[nf] < LOG_SIGMA_BOUNDARY,
        ReStructure::Bivariate => best.x[nf] < LOG_SIGMA_BOUNDARY || best.x[nf + 1] < LOG_SIGMA_BOUNDARY,
    };
    let mut reported = values.clone();
    for (i, &v) in best.x.iter().enumerate().skip(nf).take(structure.n_params().min(2)) {
        if v < LOG_SIGMA_BOUNDARY {
            reported[i] = 0.0;
        }
    }

    let coefficients = (0..n)
        .map(|i| {
            let se = covariance
                .as_ref()
                .map(|c: &DMatrix<f64>| c[(i, i)].max(0.0).sqrt())
                .unwrap_or(f64::NAN);
            let est = reported[i];
            Coefficient {
                name: names[i].clone(),
                estimate: est,
                se,
                p_value: normal_two_sided_p(est / se),
                lci: est - Z_95 * se,
                uci: est + Z_95 * se,
            }
        })
        .collect();

    let (fixed, _) = layout
        .unpack(&best.x)
        .ok_or_else(|| Error::EstimationDegenerate("optimum outside the parameter space".into()))?;
    let re = match structure {
        ReStructure::None => RandomEffectSpec::None,
        ReStructure::Univariate => RandomEffectSpec::Univariate { sigma: reported[nf] },
        ReStructure::Bivariate => RandomEffectSpec::Bivariate {
            sigma1: reported[nf],
            sigma2: reported[nf + 1],
            rho: reported[nf + 2],
        },
    };

    Ok(FitResult {
        link,
        structure,
        intercept_only,
        estimates: ParameterVector::new(fixed, re),
        coefficients,
        covariance,
        covariance_note,
        loglik,
        converged: best.converged,
        iterations: best.iterations,
        gradient_norm: best.gradient.iter().map(|g| g * g).sum::<f64>().sqrt(),
        boundary,
        quadrature_order: order,
        theta: best.x,
    })
}

/// Maximizes the marginal log-likelihood.
///
/// A fit that exhausts its iterations is returned with `converged = false`.
pub fn fit(data: &Dataset, link: LinkFamily, structure: ReStructure, opts: &FitOptions) -> Result<FitResult> {
    fit_impl(data, link, structure, false, opts)
}

/// Same as [`fit`] with every slope held at zero; the random-effect
/// structure is kept.
pub fn fit_intercept_model(
    data: &Dataset,
    link: LinkFamily,
    structure: ReStructure,
    opts: &FitOptions,
) -> Result<FitResult> {
    fit_impl(data, link, structure, true, opts)
}

/// Inverse of the negative central-difference Hessian of `loglik` at `at`.
pub fn numerical_covariance<F: FnMut(&[f64]) -> f64>(mut loglik: F, at: &[f64]) -> Result<DMatrix<f64>> {
    let hess = central_hessian(&mut loglik, at);
    let info = -hess;
    if info.iter().any(|v| !v.is_finite()) {
        return Err(Error::CovarianceUnavailable {
            min_eigenvalue: f64::NAN,
            eigenvalues: vec![],
        });
    }
    let eig = SymmetricEigen::new(info.clone());
    let eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    let max = eigenvalues.iter().copied().fold(0.0f64, |a, b| a.max(b.abs()));
    let min = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if !(min > 1e-10 * max.max(1.0)) {
        return Err(Error::CovarianceUnavailable {
            min_eigenvalue: min,
            eigenvalues,
        });
    }
    let inv_vals = eig.eigenvalues.map(|v| 1.0 / v);
    let cov = &eig.eigenvectors * DMatrix::from_diagonal(&inv_vals) * eig.eigenvectors.transpose();
    Ok((&cov + cov.transpose()) * 0.5)
}

/// Empirical-Bayes summary of a cluster's random effect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EbKind {
    /// Posterior mode.
    Mode,
    /// Posterior mean by quadrature.
    Mean,
}

/// Predicted random effect for one cluster, one value per predictor slot.
///
/// The effect is written `ε = L z` with `z` standard normal and `L` the
/// scale (univariate) or Cholesky factor (bivariate).
pub fn empirical_bayes(cluster: &Cluster, fit: &FitResult, kind: EbKind) -> Result<Vec<f64>> {
    let fixed = &fit.estimates.fixed;
    let km1 = fixed.intercepts.len();
    if cluster.counts().len() != km1 + 1 || cluster.covariates().len() != fixed.slopes.len() {
        return Err(Error::InvalidArgument("cluster does not match the fit".into()));
    }
    let factor: [[f64; 2]; 2] = match fit.estimates.re {
        RandomEffectSpec::None => {
            return Err(Error::InvalidArgument("fit has no random effects".into()));
        }
        RandomEffectSpec::Univariate { sigma } => [[sigma, 0.0], [0.0, 0.0]],
        RandomEffectSpec::Bivariate { sigma1, sigma2, rho } => bivariate_cholesky(sigma1, sigma2, rho),
    };
    let dims = if fit.structure == ReStructure::Bivariate { 2 } else { 1 };
    let to_eps = |z: &[f64]| -> Vec<f64> {
        if dims == 1 {
            vec![factor[0][0] * z[0]; km1]
        } else {
            vec![factor[0][0] * z[0], factor[1][0] * z[0] + factor[1][1] * z[1]]
        }
    };
    let mut eta = vec![0.0; km1];
    fixed.fixed_predictors_into(cluster.covariates(), &mut eta);
    let mut scratch = Scratch::new(km1 + 1);
    let log_coef = crate::likelihood::log_multinomial_coefficient(cluster.counts());
    let mut cond = |eps: &[f64]| conditional_at(fit.link, cluster.counts(), log_coef, &eta, eps, &mut scratch);

    match kind {
        EbKind::Mode => {
            let mut objective = |z: &[f64]| cond(&to_eps(z)) - 0.5 * z.iter().map(|v| v * v).sum::<f64>();
            let z = posterior_mode(&mut objective, dims, fit.quadrature_order)?;
            Ok(to_eps(&z))
        }
        EbKind::Mean => {
            let rule = gauss_hermite(fit.quadrature_order)?;
            let mut terms = Vec::new();
            let mut points = Vec::new();
            let t = rule.nodes();
            let w = rule.weights();
            if dims == 1 {
                for j in 0..t.len() {
                    points.push(vec![t[j]]);
                    terms.push(w[j].ln());
                }
            } else {
                for a in 0..t.len() {
                    for b in 0..t.len() {
                        points.push(vec![t[a], t[b]]);
                        terms.push(w[a].ln() + w[b].ln());
                    }
                }
            }
            for (term, z) in terms.iter_mut().zip(&points) {
                *term += cond(&to_eps(z));
            }
            let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if max == f64::NEG_INFINITY {
                return Err(Error::InfeasibleParameters("posterior has no mass at any node".into()));
            }
            let mut mean_z = vec![0.0; dims];
            let mut total = 0.0;
            for (term, z) in terms.iter().zip(&points) {
                let wt = (term - max).exp();
                total += wt;
                for (m, v) in mean_z.iter_mut().zip(z) {
                    *m += wt * v;
                }
            }
            for m in &mut mean_z {
                *m /= total;
            }
            Ok(to_eps(&mean_z))
        }
    }
}

/// Damped Newton ascent from `z = 0` with finite-difference derivatives;
/// falls back to the best standardized quadrature node when Newton stalls.
fn posterior_mode<F: FnMut(&[f64]) -> f64>(h: &mut F, dims: usize, order: usize) -> Result<Vec<f64>> {
    const D: f64 = 1e-4;
    let mut z = vec![0.0; dims];
    let mut fz = h(&z);
    if !fz.is_finite() {
        // Start from the best grid node instead.
        let rule = gauss_hermite(order)?;
        let mut best = (f64::NEG_INFINITY, z.clone());
        for &a in rule.nodes() {
            let cands: Vec<Vec<f64>> = if dims == 1 {
                vec![vec![a]]
            } else {
                rule.nodes().iter().map(|&b| vec![a, b]).collect()
            };
            for c in cands {
                let v = h(&c);
                if v > best.0 {
                    best = (v, c);
                }
            }
        }
        if !best.0.is_finite() {
            return Err(Error::InfeasibleParameters("posterior is zero at every node".into()));
        }
        fz = best.0;
        z = best.1;
    }
    for _ in 0..200 {
        let mut g = vec![0.0; dims];
        let mut hess = [[0.0; 2]; 2];
        let mut probe = z.clone();
        for i in 0..dims {
            probe[i] = z[i] + D;
            let up = h(&probe);
            probe[i] = z[i] - D;
            let down = h(&probe);
            probe[i] = z[i];
            g[i] = (up - down) / (2.0 * D);
            hess[i][i] = (up - 2.0 * fz + down) / (D * D);
        }
        if dims == 2 {
            let mut corner = |a: f64, b: f64| h(&[z[0] + a * D, z[1] + b * D]);
            hess[0][1] = (corner(1.0, 1.0) - corner(1.0, -1.0) - corner(-1.0, 1.0) + corner(-1.0, -1.0)) / (4.0 * D * D);
            hess[1][0] = hess[0][1];
        }
        if g.iter().any(|v| !v.is_finite()) {
            break;
        }
        // Newton direction when the Hessian is negative definite, else gradient.
        let step: Vec<f64> = if dims == 1 {
            if hess[0][0] < 0.0 {
                vec![-g[0] / hess[0][0]]
            } else {
                g.clone()
            }
        } else {
            let det = hess[0][0] * hess[1][1] - hess[0][1] * hess[1][0];
            if hess[0][0] < 0.0 && det > 0.0 {
                vec![
                    -(hess[1][1] * g[0] - hess[0][1] * g[1]) / det,
                    -(-hess[1][0] * g[0] + hess[0][0] * g[1]) / det,
                ]
            } else {
                g.clone()
            }
        };
        let mut alpha = 1.0;
        let mut moved = false;
        for _ in 0..50 {
            let trial: Vec<f64> = z.iter().zip(&step).map(|(a, s)| a + alpha * s).collect();
            let ft = h(&trial);
            if ft.is_finite() && ft >= fz {
                let size = step.iter().map(|s| (alpha * s).abs()).fold(0.0, f64::max);
                z = trial;
                fz = ft;
                moved = true;
                if size < 1e-10 {
                    return Ok(z);
                }
                break;
            }
            alpha *= 0.5;
        }
        if !moved || g.iter().all(|v| v.abs() < 1e-10) {
            return Ok(z);
        }
    }
    Ok(z)
}

/// Convenience: total log-likelihood of `data` at a fitted parameter value.
pub fn loglik_at(data: &Dataset, fit: &FitResult) -> Result<f64> {
    let rule = gauss_hermite(fit.quadrature_order)?;
    crate::likelihood::total_loglik(data, &fit.estimates, fit.link, &rule)
}

/// Marginal log-likelihood of one cluster under a fit (used by diagnostics).
pub fn cluster_loglik(cluster: &Cluster, fit: &FitResult, order: usize) -> Result<f64> {
    let rule = gauss_hermite(order)?;
    let mixing = Mixing::new(&fit.estimates.re, &rule)?;
    let mut eta = vec![0.0; fit.estimates.fixed.intercepts.len()];
    fit.estimates.fixed.fixed_predictors_into(cluster.covariates(), &mut eta);
    let mut scratch = Scratch::new(eta.len() + 1);
    Ok(marginal_from_eta(
        fit.link,
        cluster.counts(),
        crate::likelihood::log_multinomial_coefficient(cluster.counts()),
        &eta,
        &mixing,
        &mut scratch,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_data() -> Dataset {
        let rows: [([f64; 2], [u32; 3]); 8] = [
            ([0.0, 0.0], [2, 3, 5]),
            ([1.0, 0.0], [4, 3, 3]),
            ([0.0, 1.0], [1, 4, 5]),
            ([1.0, 1.0], [5, 3, 2]),
            ([0.0, 0.0], [0, 4, 6]),
            ([1.0, 0.0], [6, 2, 2]),
            ([0.0, 1.0], [3, 2, 5]),
            ([1.0, 1.0], [3, 5, 2]),
        ];
        Dataset::new(
            rows.iter()
                .map(|(x, y)| Cluster::new(x.to_vec(), y.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn covariance_of_standard_quadratic() {
        let cov = numerical_covariance(|t| -0.5 * t[0] * t[0], &[0.3]).unwrap();
        assert!((cov[(0, 0)] - 1.0).abs() < 1e-6);
        let cov = numerical_covariance(|t| -0.5 * (2.0 * t[0] * t[0] + 4.0 * t[1] * t[1]), &[0.0, 0.0]).unwrap();
        assert!((cov[(0, 0)] - 0.5).abs() < 1e-6);
        assert!((cov[(1, 1)] - 0.25).abs() < 1e-6);
        assert!(cov[(0, 1)].abs() < 1e-6);
    }

    #[test]
    fn indefinite_hessian_is_reported() {
        let err = numerical_covariance(|t| 0.5 * t[0] * t[0] - t[1] * t[1], &[0.0, 0.0]).unwrap_err();
        match err {
            Error::CovarianceUnavailable { min_eigenvalue, eigenvalues } => {
                assert!(min_eigenvalue < 0.0);
                assert_eq!(eigenvalues.len(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unobserved_category_is_degenerate() {
        let data = Dataset::new(vec![
            Cluster::new(vec![0.0], vec![2, 0, 3]).unwrap(),
            Cluster::new(vec![1.0], vec![1, 0, 4]).unwrap(),
        ])
        .unwrap();
        assert!(matches!(
            fit(&data, LinkFamily::ProportionalOdds, ReStructure::None, &FitOptions::default()),
            Err(Error::EstimationDegenerate(_))
        ));
    }

    #[test]
    fn homogeneous_fit_reaches_stationary_point() {
        let data = toy_data();
        for link in LinkFamily::ALL {
            let f = fit(&data, link, ReStructure::None, &FitOptions::default()).unwrap();
            assert!(f.converged, "{link:?}");
            assert!(f.gradient_norm < 1e-4);
            for c in &f.coefficients {
                assert!((c.lci - (c.estimate - 1.96 * c.se)).abs() < 1e-15);
                assert!((c.uci - (c.estimate + 1.96 * c.se)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn intercept_model_without_covariate_variation_matches_full() {
        let data = Dataset::new(
            toy_data()
                .clusters()
                .iter()
                .map(|c| Cluster::new(vec![0.0, 0.0], c.counts().to_vec()).unwrap())
                .collect(),
        )
        .unwrap();
        for link in LinkFamily::ALL {
            let opts = FitOptions::default();
            let full = fit(&data, link, ReStructure::None, &opts).unwrap();
            let int = fit_intercept_model(&data, link, ReStructure::None, &opts).unwrap();
            assert!((full.loglik - int.loglik).abs() < 1e-8);
        }
    }

    #[test]
    fn eb_is_zero_for_a_typical_cluster() {
        let data = toy_data();
        let mut f = fit(&data, LinkFamily::AdjacentCategories, ReStructure::None, &FitOptions::default()).unwrap();
        // Force a random-effect fit at δ = (0, 0): π = (1/3, 1/3, 1/3).
        f.structure = ReStructure::Univariate;
        f.quadrature_order = 20;
        f.estimates = ParameterVector::new(
            FixedEffects::new(vec![0.0, 0.0], vec![0.0, 0.0]),
            RandomEffectSpec::Univariate { sigma: 0.8 },
        );
        let c = Cluster::new(vec![1.0, 0.0], vec![3, 3, 3]).unwrap();
        for kind in [EbKind::Mode, EbKind::Mean] {
            let e = empirical_bayes(&c, &f, kind).unwrap();
            assert!(e.iter().all(|v| v.abs() < 1e-6), "{kind:?}: {e:?}");
        }
        f.link = LinkFamily::ContinuationRatio;
        let c = Cluster::new(vec![0.0, 1.0], vec![4, 2, 2]).unwrap();
        let e = empirical_bayes(&c, &f, EbKind::Mode).unwrap();
        assert!(e.iter().all(|v| v.abs() < 1e-6), "{e:?}");
    }

    #[test]
    fn eb_shrinks_to_zero_as_sigma_vanishes() {
        let data = toy_data();
        let mut f = fit(&data, LinkFamily::ProportionalOdds, ReStructure::Univariate, &FitOptions::default()).unwrap();
        let c = Cluster::new(vec![0.0, 0.0], vec![9, 1, 0]).unwrap();
        let mut last = f64::INFINITY;
        for sigma in [1.0, 0.1, 0.01, 0.0] {
            f.estimates.re = RandomEffectSpec::Univariate { sigma };
            let e = empirical_bayes(&c, &f, EbKind::Mode).unwrap()[0].abs();
            assert!(e <= last);
            last = e;
        }
        assert_eq!(last, 0.0);
    }

    #[test]
    fn eb_direction_follows_the_counts() {
        let data = toy_data();
        let f = fit(&data, LinkFamily::ContinuationRatio, ReStructure::Univariate, &FitOptions::default()).unwrap();
        // Mass in the first category pushes ε up (larger δ favours lower categories).
        let low = Cluster::new(vec![0.0, 0.0], vec![9, 1, 0]).unwrap();
        let high = Cluster::new(vec![0.0, 0.0], vec![0, 1, 9]).unwrap();
        if f.estimates.re != (RandomEffectSpec::Univariate { sigma: 0.0 }) {
            assert!(empirical_bayes(&low, &f, EbKind::Mode).unwrap()[0] > 0.0);
            assert!(empirical_bayes(&high, &f, EbKind::Mode).unwrap()[0] < 0.0);
        }
    }

    #[test]
    fn random_effect_fit_not_below_homogeneous() {
        let data = toy_data();
        for link in LinkFamily::ALL {
            let opts = FitOptions::default();
            let hom = fit(&data, link, ReStructure::None, &opts).unwrap();
            let re = fit(&data, link, ReStructure::Univariate, &opts).unwrap();
            assert!(re.loglik >= hom.loglik - 1e-6, "{link:?}");
        }
    }
}

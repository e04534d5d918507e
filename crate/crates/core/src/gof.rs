//! Goodness-of-fit: Pearson χ², likelihood-ratio C against the intercept
//! model, AIC, and the intraclass correlation.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimation::{empirical_bayes, EbKind, FitResult};
use crate::model::{category_probabilities, linear_predictors, Dataset, RandomEffectSpec, ReStructure};
use crate::special::normal_two_sided_p;

pub use crate::special::chi_squared_survival;

/// Variance of the standard logistic distribution.
pub const LOGISTIC_VARIANCE: f64 = PI * PI / 3.0;

const MIN_EXPECTED: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Chi2Test {
    pub statistic: f64,
    pub df: u32,
    pub p_value: f64,
}

impl Chi2Test {
    fn new(statistic: f64, df: u32) -> Self {
        let p_value = if df == 0 { f64::NAN } else { chi_squared_survival(statistic, df) };
        Self { statistic, df, p_value }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IccEstimate {
    pub value: f64,
    /// NaN when no covariance was available.
    pub se: f64,
    pub p_value: f64,
    pub lci: f64,
    pub uci: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofReport {
    pub chi2: Chi2Test,
    pub c: Chi2Test,
    pub aic: f64,
    pub icc: Option<IccEstimate>,
}

/// Fitted category probabilities for every cluster: ε = 0 for homogeneous
/// fits, the empirical-Bayes prediction otherwise.
pub fn fitted_probabilities(data: &Dataset, fit: &FitResult, kind: EbKind) -> Result<Vec<Vec<f64>>> {
    let km1 = data.categories() - 1;
    data.clusters()
        .iter()
        .map(|cluster| {
            let eps = match fit.structure {
                ReStructure::None => vec![0.0; km1],
                _ => empirical_bayes(cluster, fit, kind)?,
            };
            let delta = linear_predictors(&fit.estimates.fixed, cluster.covariates(), &eps)?;
            Ok(category_probabilities(fit.link, &delta)?.into_vec())
        })
        .collect()
}

/// Pearson χ² over all (cluster, category) cells with posterior-mode
/// fitted counts for random-effect fits.
pub fn pearson_chi2(data: &Dataset, fit: &FitResult) -> Result<Chi2Test> {
    pearson_chi2_with(data, fit, EbKind::Mode)
}

/// Pearson χ² with a chosen empirical-Bayes summary.
///
/// Degrees of freedom are `(K − 1)·patterns − (intercepts + slopes)`;
/// variance components are not subtracted.
pub fn pearson_chi2_with(data: &Dataset, fit: &FitResult, kind: EbKind) -> Result<Chi2Test> {
    let probs = fitted_probabilities(data, fit, kind)?;
    let mut statistic = 0.0;
    let mut bad = Vec::new();
    for (i, (cluster, p)) in data.clusters().iter().zip(&probs).enumerate() {
        let n = cluster.size() as f64;
        for (k, (&y, &pk)) in cluster.counts().iter().zip(p).enumerate() {
            let e = n * pk;
            if e < MIN_EXPECTED {
                bad.push((i, k));
                continue;
            }
            let d = y as f64 - e;
            statistic += d * d / e;
        }
    }
    if !bad.is_empty() {
        return Err(Error::DegenerateCells(bad));
    }
    let cells = (data.categories() - 1) * data.covariate_patterns();
    let df = cells.saturating_sub(fit.n_fixed()) as u32;
    Ok(Chi2Test::new(statistic, df))
}

/// `C = 2 (l_full − l_intercept)` with df equal to the number of slopes.
pub fn likelihood_ratio_c(full: &FitResult, intercept: &FitResult) -> Result<Chi2Test> {
    if full.link != intercept.link || full.structure != intercept.structure {
        return Err(Error::InvalidArgument(
            "likelihood-ratio comparison needs matching link and random-effect structure".into(),
        ));
    }
    let statistic = 2.0 * (full.loglik - intercept.loglik);
    if statistic < -1e-6 {
        return Err(Error::InconsistentFits(statistic));
    }
    let df = full.n_params().saturating_sub(intercept.n_params()) as u32;
    Ok(Chi2Test::new(statistic.max(0.0), df))
}

/// `−2 l + 2 p`, counting every estimated parameter.
pub fn aic(fit: &FitResult) -> f64 {
    -2.0 * fit.loglik + 2.0 * fit.n_params() as f64
}

/// Latent-scale cluster variance: σ² or `σ1² + σ2² + 2ρσ1σ2`.
pub fn cluster_variance(re: &RandomEffectSpec) -> Option<f64> {
    match *re {
        RandomEffectSpec::None => None,
        RandomEffectSpec::Univariate { sigma } => Some(sigma * sigma),
        RandomEffectSpec::Bivariate { sigma1, sigma2, rho } => {
            Some(sigma1 * sigma1 + sigma2 * sigma2 + 2.0 * rho * sigma1 * sigma2)
        }
    }
}

/// `v / (v + π²/3)`.
pub fn icc_value(re: &RandomEffectSpec) -> Option<f64> {
    cluster_variance(re).map(|v| v / (v + LOGISTIC_VARIANCE))
}

/// ICC with a delta-method standard error from the natural-scale covariance
/// of the variance components (σ, or σ1, σ2, ρ).
pub fn icc(re: &RandomEffectSpec, covariance: Option<&DMatrix<f64>>) -> Result<IccEstimate> {
    let v = cluster_variance(re)
        .ok_or_else(|| Error::InvalidArgument("ICC needs a random-effect structure".into()))?;
    let value = v / (v + LOGISTIC_VARIANCE);
    let d_icc_dv = LOGISTIC_VARIANCE / (v + LOGISTIC_VARIANCE).powi(2);
    let grad: Vec<f64> = match *re {
        RandomEffectSpec::Univariate { sigma } => vec![2.0 * sigma],
        RandomEffectSpec::Bivariate { sigma1, sigma2, rho } => vec![
            2.0 * sigma1 + 2.0 * rho * sigma2,
            2.0 * sigma2 + 2.0 * rho * sigma1,
            2.0 * sigma1 * sigma2,
        ],
        RandomEffectSpec::None => unreachable!(),
    };
    let se = match covariance {
        Some(c) if c.nrows() == grad.len() && c.ncols() == grad.len() => {
            let mut var = 0.0;
            for i in 0..grad.len() {
                for j in 0..grad.len() {
                    var += grad[i] * c[(i, j)] * grad[j];
                }
            }
            d_icc_dv * var.max(0.0).sqrt()
        }
        Some(_) => {
            return Err(Error::InvalidArgument("covariance does not match the variance components".into()));
        }
        None => f64::NAN,
    };
    Ok(IccEstimate {
        value,
        se,
        p_value: normal_two_sided_p(value / se),
        lci: value - 1.96 * se,
        uci: value + 1.96 * se,
    })
}

/// ICC of a fitted random-effect model, if it has one.
pub fn fit_icc(fit: &FitResult) -> Option<IccEstimate> {
    if fit.structure == ReStructure::None {
        return None;
    }
    icc(&fit.estimates.re, fit.variance_component_covariance().as_ref()).ok()
}

/// All goodness-of-fit statistics for a model and its intercept-only twin.
pub fn gof_report(data: &Dataset, full: &FitResult, intercept: &FitResult) -> Result<GofReport> {
    Ok(GofReport {
        chi2: pearson_chi2(data, full)?,
        c: likelihood_ratio_c(full, intercept)?,
        aic: aic(full),
        icc: fit_icc(full),
    })
}

//! Conditional multinomial and marginal (random-effect integrated)
//! log-likelihoods.
//!
//! Infeasible proportional-odds proposals evaluate to `-inf` rather than an
//! error, so optimizers can back off from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{log_probabilities_into, Cluster, Dataset, FixedEffects, LinkFamily, ProbabilityVector, RandomEffectSpec};
use crate::quadrature::{bivariate_rule_from, QuadratureRule1D, QuadratureRule2D};

/// Fixed effects together with the random-effect law.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParameterVector {
    pub fixed: FixedEffects,
    pub re: RandomEffectSpec,
}

impl ParameterVector {
    pub fn new(fixed: FixedEffects, re: RandomEffectSpec) -> Self {
        Self { fixed, re }
    }

    pub(crate) fn check_against(&self, data: &Dataset) -> Result<()> {
        if self.fixed.intercepts.len() + 1 != data.categories() {
            return Err(Error::InvalidArgument(format!(
                "{} intercepts for K = {}",
                self.fixed.intercepts.len(),
                data.categories()
            )));
        }
        if self.fixed.slopes.len() != data.n_slopes() {
            return Err(Error::InvalidArgument(format!(
                "{} slopes for {} covariates",
                self.fixed.slopes.len(),
                data.n_slopes()
            )));
        }
        self.re.validate(data.categories())
    }
}

/// `log(N! / (y_1! ⋯ y_K!))`.
pub fn log_multinomial_coefficient(counts: &[u32]) -> f64 {
    fn log_factorial(n: u32) -> f64 {
        (2..=n).map(|i| (i as f64).ln()).sum()
    }
    let n: u32 = counts.iter().sum();
    log_factorial(n) - counts.iter().map(|&y| log_factorial(y)).sum::<f64>()
}

#[inline]
fn weighted_log_probs(counts: &[u32], logp: &[f64]) -> f64 {
    let mut s = 0.0;
    for (&y, &lp) in counts.iter().zip(logp) {
        if y > 0 {
            s += y as f64 * lp;
        }
    }
    s
}

/// Multinomial log-mass of the cluster's counts, coefficient included.
///
/// Uses `0·log 0 = 0`; a zero probability on an observed category gives `-inf`.
pub fn conditional_cluster_loglik(cluster: &Cluster, probs: &ProbabilityVector) -> f64 {
    let logp: Vec<f64> = probs.as_slice().iter().map(|p| p.ln()).collect();
    log_multinomial_coefficient(cluster.counts()) + weighted_log_probs(cluster.counts(), &logp)
}

fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln()
}

/// Quadrature realised for one parameter value.
pub(crate) enum Mixing<'a> {
    None,
    Univariate { sigma: f64, rule: &'a QuadratureRule1D },
    Bivariate(QuadratureRule2D),
}

impl<'a> Mixing<'a> {
    pub(crate) fn new(re: &RandomEffectSpec, rule: &'a QuadratureRule1D) -> Result<Self> {
        Ok(match *re {
            RandomEffectSpec::None => Mixing::None,
            RandomEffectSpec::Univariate { sigma } if sigma == 0.0 => Mixing::None,
            RandomEffectSpec::Univariate { sigma } => Mixing::Univariate { sigma, rule },
            RandomEffectSpec::Bivariate { sigma1, sigma2, .. } if sigma1 == 0.0 && sigma2 == 0.0 => {
                Mixing::None
            }
            RandomEffectSpec::Bivariate { sigma1, sigma2, rho } => {
                Mixing::Bivariate(bivariate_rule_from(rule, sigma1, sigma2, rho)?)
            }
        })
    }
}

/// Scratch space reused across clusters.
pub(crate) struct Scratch {
    delta: Vec<f64>,
    logp: Vec<f64>,
    terms: Vec<f64>,
}

impl Scratch {
    pub(crate) fn new(categories: usize) -> Self {
        Self {
            delta: vec![0.0; categories - 1],
            logp: vec![0.0; categories],
            terms: Vec::new(),
        }
    }
}

/// Conditional log-likelihood at predictors `eta + eps` (`eps` slot-wise).
pub(crate) fn conditional_at(
    link: LinkFamily,
    counts: &[u32],
    log_coef: f64,
    eta: &[f64],
    eps: &[f64],
    scratch: &mut Scratch,
) -> f64 {
    for ((d, e), s) in scratch.delta.iter_mut().zip(eta).zip(eps) {
        *d = e + s;
    }
    if !log_probabilities_into(link, &scratch.delta, &mut scratch.logp) {
        return f64::NEG_INFINITY;
    }
    log_coef + weighted_log_probs(counts, &scratch.logp)
}

/// Marginal log-likelihood of one cluster given its fixed predictors `eta`.
pub(crate) fn marginal_from_eta(
    link: LinkFamily,
    counts: &[u32],
    log_coef: f64,
    eta: &[f64],
    mixing: &Mixing<'_>,
    scratch: &mut Scratch,
) -> f64 {
    let Scratch { delta, logp, terms } = scratch;
    let mut node_value = |shift: &dyn Fn(usize) -> f64| -> f64 {
        for (k, (d, e)) in delta.iter_mut().zip(eta).enumerate() {
            *d = e + shift(k);
        }
        if !log_probabilities_into(link, delta, logp) {
            return f64::NEG_INFINITY;
        }
        log_coef + weighted_log_probs(counts, logp)
    };
    match mixing {
        Mixing::None => node_value(&|_| 0.0),
        Mixing::Univariate { sigma, rule } => {
            terms.clear();
            for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
                let e = sigma * t;
                terms.push(w.ln() + node_value(&|_| e));
            }
            log_sum_exp(terms)
        }
        Mixing::Bivariate(rule) => {
            terms.clear();
            for (&(e1, e2), &w) in rule.nodes().iter().zip(rule.weights()) {
                terms.push(w.ln() + node_value(&|k| if k == 0 { e1 } else { e2 }));
            }
            log_sum_exp(terms)
        }
    }
}

/// Dataset with per-cluster constants cached for repeated evaluation.
pub(crate) struct PreparedData<'a> {
    pub(crate) data: &'a Dataset,
    pub(crate) log_coef: Vec<f64>,
}

impl<'a> PreparedData<'a> {
    pub(crate) fn new(data: &'a Dataset) -> Self {
        let log_coef = data
            .clusters()
            .iter()
            .map(|c| log_multinomial_coefficient(c.counts()))
            .collect();
        Self { data, log_coef }
    }

    /// Total log-likelihood; parameters are assumed validated.
    pub(crate) fn total(
        &self,
        link: LinkFamily,
        fixed: &FixedEffects,
        mixing: &Mixing<'_>,
        scratch: &mut Scratch,
    ) -> f64 {
        let mut eta = vec![0.0; self.data.categories() - 1];
        let mut total = 0.0;
        for (cluster, &lc) in self.data.clusters().iter().zip(&self.log_coef) {
            fixed.fixed_predictors_into(cluster.covariates(), &mut eta);
            let v = marginal_from_eta(link, cluster.counts(), lc, &eta, mixing, scratch);
            if v == f64::NEG_INFINITY {
                return v;
            }
            total += v;
        }
        total
    }
}

fn check_cluster(cluster: &Cluster, params: &ParameterVector) -> Result<()> {
    if cluster.counts().len() != params.fixed.intercepts.len() + 1
        || cluster.covariates().len() != params.fixed.slopes.len()
    {
        return Err(Error::InvalidArgument(
            "cluster dimensions do not match the parameter vector".into(),
        ));
    }
    params.re.validate(cluster.counts().len())
}

/// Log of the cluster likelihood integrated over the random-effect law.
///
/// `rule` is the standardized per-axis rule; bivariate effects use its tensor
/// product mapped through the Cholesky factor of their covariance.
pub fn marginal_cluster_loglik(
    cluster: &Cluster,
    params: &ParameterVector,
    link: LinkFamily,
    rule: &QuadratureRule1D,
) -> Result<f64> {
    check_cluster(cluster, params)?;
    let mixing = Mixing::new(&params.re, rule)?;
    let mut eta = vec![0.0; params.fixed.intercepts.len()];
    params.fixed.fixed_predictors_into(cluster.covariates(), &mut eta);
    let mut scratch = Scratch::new(cluster.counts().len());
    Ok(marginal_from_eta(
        link,
        cluster.counts(),
        log_multinomial_coefficient(cluster.counts()),
        &eta,
        &mixing,
        &mut scratch,
    ))
}

/// Sum of per-cluster marginal log-likelihoods, in cluster order.
pub fn total_loglik(
    data: &Dataset,
    params: &ParameterVector,
    link: LinkFamily,
    rule: &QuadratureRule1D,
) -> Result<f64> {
    params.check_against(data)?;
    let mixing = Mixing::new(&params.re, rule)?;
    let prepared = PreparedData::new(data);
    let mut scratch = Scratch::new(data.categories());
    Ok(prepared.total(link, &params.fixed, &mixing, &mut scratch))
}

//! Data model and the three ordinal link structures.
//!
//! All links share the linear predictor `δ_k = c_k + x·β + ε_k`, `k = 1..K−1`,
//! and differ only in which log-odds `δ_k` describes:
//!
//! * proportional odds: categories `1..=k` against `k+1..=K`;
//! * adjacent categories: category `k` against `k+1`;
//! * continuation ratio: category `k` against `k+1..=K`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One cluster: a covariate row and the category counts observed in it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    covariates: Vec<f64>,
    counts: Vec<u32>,
}

impl Cluster {
    pub fn new(covariates: Vec<f64>, counts: Vec<u32>) -> Result<Self> {
        if counts.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "a cluster needs at least 2 categories, got {}",
                counts.len()
            )));
        }
        if counts.iter().all(|&y| y == 0) {
            return Err(Error::InvalidArgument("cluster has no observations".into()));
        }
        if covariates.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite covariate".into()));
        }
        Ok(Self { covariates, counts })
    }

    pub fn covariates(&self) -> &[f64] {
        &self.covariates
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Number of observations in the cluster.
    pub fn size(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// A collection of clusters sharing the category count and covariate dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    clusters: Vec<Cluster>,
    categories: usize,
    n_slopes: usize,
    covariate_names: Vec<String>,
}

impl Dataset {
    pub fn new(clusters: Vec<Cluster>) -> Result<Self> {
        let first = clusters
            .first()
            .ok_or_else(|| Error::InvalidArgument("dataset has no clusters".into()))?;
        let categories = first.counts.len();
        let n_slopes = first.covariates.len();
        for (i, c) in clusters.iter().enumerate() {
            if c.counts.len() != categories {
                return Err(Error::InvalidArgument(format!(
                    "cluster {i} has {} categories, expected {categories}",
                    c.counts.len()
                )));
            }
            if c.covariates.len() != n_slopes {
                return Err(Error::InvalidArgument(format!(
                    "cluster {i} has {} covariates, expected {n_slopes}",
                    c.covariates.len()
                )));
            }
        }
        Ok(Self {
            clusters,
            categories,
            n_slopes,
            covariate_names: (1..=n_slopes).map(|i| format!("x{i}")).collect(),
        })
    }

    /// Replaces the default `x1, x2, …` slope labels.
    pub fn with_covariate_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n_slopes {
            return Err(Error::InvalidArgument(format!(
                "{} covariate names for {} covariates",
                names.len(),
                self.n_slopes
            )));
        }
        self.covariate_names = names;
        Ok(self)
    }

    pub fn covariate_names(&self) -> &[String] {
        &self.covariate_names
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    /// Number of ordered categories K.
    pub fn categories(&self) -> usize {
        self.categories
    }

    /// Number of slope covariates (p − 1).
    pub fn n_slopes(&self) -> usize {
        self.n_slopes
    }

    pub fn n_clusters(&self) -> usize {
        self.clusters.len()
    }

    pub fn total_observations(&self) -> u64 {
        self.clusters.iter().map(|c| c.size() as u64).sum()
    }

    /// Category totals pooled over all clusters.
    pub fn category_totals(&self) -> Vec<u64> {
        let mut totals = vec![0u64; self.categories];
        for c in &self.clusters {
            for (t, &y) in totals.iter_mut().zip(&c.counts) {
                *t += y as u64;
            }
        }
        totals
    }

    /// Number of distinct covariate vectors.
    pub fn covariate_patterns(&self) -> usize {
        let mut seen: Vec<&[f64]> = Vec::new();
        for c in &self.clusters {
            if !seen.iter().any(|s| *s == c.covariates.as_slice()) {
                seen.push(&c.covariates);
            }
        }
        seen.len()
    }

    /// A new dataset holding the clusters at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        Self::new(indices.iter().map(|&i| self.clusters[i].clone()).collect())?
            .with_covariate_names(self.covariate_names.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LinkFamily {
    ProportionalOdds,
    AdjacentCategories,
    ContinuationRatio,
}

impl LinkFamily {
    pub const ALL: [LinkFamily; 3] = [
        LinkFamily::ProportionalOdds,
        LinkFamily::AdjacentCategories,
        LinkFamily::ContinuationRatio,
    ];

    /// Short command-line name.
    pub fn short_name(self) -> &'static str {
        match self {
            LinkFamily::ProportionalOdds => "po",
            LinkFamily::AdjacentCategories => "acl",
            LinkFamily::ContinuationRatio => "crl",
        }
    }

    pub fn from_short_name(name: &str) -> Option<Self> {
        match name {
            "po" => Some(LinkFamily::ProportionalOdds),
            "acl" => Some(LinkFamily::AdjacentCategories),
            "crl" | "cr" => Some(LinkFamily::ContinuationRatio),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            LinkFamily::ProportionalOdds => "proportional odds",
            LinkFamily::AdjacentCategories => "adjacent categories logit",
            LinkFamily::ContinuationRatio => "continuation ratio logit",
        }
    }
}

/// Normal random-effect law attached to the linear predictor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RandomEffectSpec {
    None,
    /// One effect per cluster, shared by every predictor slot.
    Univariate { sigma: f64 },
    /// One effect per intercept (K = 3 only) with correlation `rho`.
    Bivariate { sigma1: f64, sigma2: f64, rho: f64 },
}

impl RandomEffectSpec {
    pub fn validate(&self, categories: usize) -> Result<()> {
        match *self {
            RandomEffectSpec::None => Ok(()),
            RandomEffectSpec::Univariate { sigma } => {
                if !(sigma >= 0.0) || !sigma.is_finite() {
                    return Err(Error::InvalidArgument(format!("sigma must be >= 0, got {sigma}")));
                }
                Ok(())
            }
            RandomEffectSpec::Bivariate { sigma1, sigma2, rho } => {
                if !(sigma1 >= 0.0 && sigma2 >= 0.0) || !(sigma1.is_finite() && sigma2.is_finite())
                {
                    return Err(Error::InvalidArgument(format!(
                        "sigma1, sigma2 must be >= 0, got {sigma1}, {sigma2}"
                    )));
                }
                if !(rho.abs() <= 1.0) {
                    return Err(Error::InvalidArgument(format!("|rho| must be <= 1, got {rho}")));
                }
                if categories != 3 {
                    return Err(Error::InvalidArgument(format!(
                        "bivariate random effects need K = 3, got K = {categories}"
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn structure(&self) -> ReStructure {
        match self {
            RandomEffectSpec::None => ReStructure::None,
            RandomEffectSpec::Univariate { .. } => ReStructure::Univariate,
            RandomEffectSpec::Bivariate { .. } => ReStructure::Bivariate,
        }
    }
}

/// Random-effect structure requested for a fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ReStructure {
    None,
    Univariate,
    Bivariate,
}

impl ReStructure {
    /// Number of variance-component parameters.
    pub fn n_params(self) -> usize {
        match self {
            ReStructure::None => 0,
            ReStructure::Univariate => 1,
            ReStructure::Bivariate => 3,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            ReStructure::None => "none",
            ReStructure::Univariate => "one",
            ReStructure::Bivariate => "two",
        }
    }

    pub fn from_short_name(name: &str) -> Option<Self> {
        match name {
            "none" | "0" => Some(ReStructure::None),
            "one" | "1" => Some(ReStructure::Univariate),
            "two" | "2" => Some(ReStructure::Bivariate),
            _ => None,
        }
    }
}

/// Category intercepts `c_1..c_{K−1}` and shared slopes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedEffects {
    pub intercepts: Vec<f64>,
    pub slopes: Vec<f64>,
}

impl FixedEffects {
    pub fn new(intercepts: Vec<f64>, slopes: Vec<f64>) -> Self {
        Self { intercepts, slopes }
    }

    /// `c_k + x·β` for every k, without random effects.
    pub(crate) fn fixed_predictors_into(&self, x: &[f64], out: &mut [f64]) {
        let xb: f64 = x.iter().zip(&self.slopes).map(|(a, b)| a * b).sum();
        for (o, c) in out.iter_mut().zip(&self.intercepts) {
            *o = c + xb;
        }
    }
}

/// Category probabilities for one cluster.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
            return Err(Error::InvalidArgument("probabilities must lie in [0, 1]".into()));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!("probabilities sum to {total}, not 1")));
        }
        Ok(Self(probs))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

/// `δ_k = c_k + x·β + eps_k`.
pub fn linear_predictors(fe: &FixedEffects, x: &[f64], eps: &[f64]) -> Result<Vec<f64>> {
    if x.len() != fe.slopes.len() {
        return Err(Error::InvalidArgument(format!(
            "covariate length {} does not match {} slopes",
            x.len(),
            fe.slopes.len()
        )));
    }
    if eps.len() != fe.intercepts.len() {
        return Err(Error::InvalidArgument(format!(
            "random-effect length {} does not match {} intercepts",
            eps.len(),
            fe.intercepts.len()
        )));
    }
    let mut out = vec![0.0; fe.intercepts.len()];
    fe.fixed_predictors_into(x, &mut out);
    for (o, e) in out.iter_mut().zip(eps) {
        *o += e;
    }
    Ok(out)
}

/// `log(1 + e^x)` without overflow.
#[inline]
pub(crate) fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// `log expit(x)`.
#[inline]
pub(crate) fn log_expit(x: f64) -> f64 {
    -softplus(-x)
}

/// Writes `log π_k` for the given predictors into `out` (length K).
///
/// Returns `false` when a proportional-odds predictor sequence decreases;
/// `out` is then unspecified. Zero-probability categories get `-inf`.
pub(crate) fn log_probabilities_into(link: LinkFamily, deltas: &[f64], out: &mut [f64]) -> bool {
    let km1 = deltas.len();
    debug_assert_eq!(out.len(), km1 + 1);
    match link {
        LinkFamily::ProportionalOdds => {
            out[0] = log_expit(deltas[0]);
            for k in 1..km1 {
                let (lo, hi) = (deltas[k - 1], deltas[k]);
                if hi < lo {
                    return false;
                }
                // expit(hi) − expit(lo) = e^lo (e^{hi−lo} − 1) / ((1 + e^hi)(1 + e^lo))
                out[k] = if hi == lo {
                    f64::NEG_INFINITY
                } else {
                    lo + (hi - lo).exp_m1().ln() - softplus(hi) - softplus(lo)
                };
            }
            out[km1] = -softplus(deltas[km1 - 1]);
            true
        }
        LinkFamily::AdjacentCategories => {
            // log π_k = S_k − logsumexp(S), S_k = Σ_{j ≥ k} δ_j, S_K = 0.
            out[km1] = 0.0;
            for k in (0..km1).rev() {
                out[k] = out[k + 1] + deltas[k];
            }
            let max = out.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lse = max + out.iter().map(|s| (s - max).exp()).sum::<f64>().ln();
            for o in out.iter_mut() {
                *o -= lse;
            }
            true
        }
        LinkFamily::ContinuationRatio => {
            let mut survive = 0.0;
            for k in 0..km1 {
                out[k] = survive + log_expit(deltas[k]);
                survive -= softplus(deltas[k]);
            }
            out[km1] = survive;
            true
        }
    }
}

/// Category probabilities from the K−1 linear predictors.
pub fn category_probabilities(link: LinkFamily, deltas: &[f64]) -> Result<ProbabilityVector> {
    if deltas.is_empty() {
        return Err(Error::InvalidArgument("need at least one linear predictor".into()));
    }
    if deltas.iter().any(|d| !d.is_finite()) {
        return Err(Error::InvalidArgument("linear predictors must be finite".into()));
    }
    let mut logp = vec![0.0; deltas.len() + 1];
    if !log_probabilities_into(link, deltas, &mut logp) {
        return Err(Error::InfeasibleParameters(format!(
            "cumulative probabilities decrease for predictors {deltas:?}"
        )));
    }
    let mut probs: Vec<f64> = logp.iter().map(|l| l.exp()).collect();
    // Renormalize to absorb the last few ulps of rounding.
    let total: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= total;
    }
    Ok(ProbabilityVector(probs))
}

/// Defining log-odds of each link recomputed from probabilities.
pub fn log_odds(link: LinkFamily, probs: &[f64]) -> Vec<f64> {
    let k = probs.len();
    (0..k - 1)
        .map(|j| {
            let upper: f64 = probs[j + 1..].iter().sum();
            match link {
                LinkFamily::ProportionalOdds => {
                    let lower: f64 = probs[..=j].iter().sum();
                    (lower / upper).ln()
                }
                LinkFamily::AdjacentCategories => (probs[j] / probs[j + 1]).ln(),
                LinkFamily::ContinuationRatio => (probs[j] / upper).ln(),
            }
        })
        .collect()
}

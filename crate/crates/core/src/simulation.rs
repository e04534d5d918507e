//! Seeded replication studies: simulate clustered ordinal data from a known
//! model, refit a list of models to every replicate, and summarize the
//! sampling distribution of the estimates and fit statistics.
//!
//! Each replicate draws from its own ChaCha stream keyed by `(seed, index)`,
//! so serial and parallel runs produce identical summaries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimation::{fit, fit_intercept_model, FitOptions, FitResult};
use crate::gof::{aic, icc_value, likelihood_ratio_c, pearson_chi2};
use crate::io::FactorSchema;
use crate::likelihood::ParameterVector;
use crate::model::{
    category_probabilities, linear_predictors, Cluster, Dataset, FixedEffects, LinkFamily, RandomEffectSpec,
    ReStructure,
};
use crate::quadrature::bivariate_cholesky;

/// Largest tolerated share of failed replications per fitted model.
pub const MAX_FAILURE_SHARE: f64 = 0.2;

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationDesign {
    pub factors: FactorSchema,
    pub cluster_size: u32,
    pub generator: LinkFamily,
    pub truth: ParameterVector,
    pub replications: usize,
    pub seed: u64,
    pub fits: Vec<(LinkFamily, ReStructure)>,
    pub quadrature_order: Option<usize>,
}

impl SimulationDesign {
    /// Intercepts (−2, −1) and the eight indicator slopes used throughout the
    /// replication study, ordered m2, m3, f2, f3, f4, b2, b3, b4.
    pub fn default_truth(re: RandomEffectSpec) -> ParameterVector {
        ParameterVector::new(
            FixedEffects::new(vec![-2.0, -1.0], vec![0.1, -0.2, 0.7, 0.6, 1.0, 0.6, 0.9, 0.1]),
            re,
        )
    }

    /// 3 × 4 × 4 factorial, 10 observations per cluster, 100 replications,
    /// fitting the generator's link with and without a univariate effect.
    pub fn strawberry_like(generator: LinkFamily, sigma: f64, seed: u64) -> Self {
        Self {
            factors: FactorSchema::strawberry(),
            cluster_size: 10,
            generator,
            truth: Self::default_truth(RandomEffectSpec::Univariate { sigma }),
            replications: 100,
            seed,
            fits: vec![(generator, ReStructure::None), (generator, ReStructure::Univariate)],
            quadrature_order: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.replications == 0 {
            return Err(Error::InvalidDesign("replications must be >= 1".into()));
        }
        if self.cluster_size == 0 {
            return Err(Error::InvalidDesign("cluster size must be >= 1".into()));
        }
        if self.fits.is_empty() {
            return Err(Error::InvalidDesign("fit list is empty".into()));
        }
        let categories = self.truth.fixed.intercepts.len() + 1;
        if self.truth.fixed.slopes.len() != self.factors.n_indicators() {
            return Err(Error::InvalidDesign(format!(
                "{} true slopes for {} indicator columns",
                self.truth.fixed.slopes.len(),
                self.factors.n_indicators()
            )));
        }
        self.truth
            .re
            .validate(categories)
            .map_err(|e| Error::InvalidDesign(e.to_string()))?;
        if self.generator == LinkFamily::ProportionalOdds
            && self.truth.fixed.intercepts.windows(2).any(|w| w[1] < w[0])
        {
            return Err(Error::InvalidDesign(
                "proportional-odds intercepts must be non-decreasing".into(),
            ));
        }
        Ok(())
    }

    fn fit_options(&self) -> FitOptions {
        FitOptions {
            quadrature_order: self.quadrature_order,
            covariance: false,
            seed: Some(self.seed),
            ..FitOptions::default()
        }
    }
}

fn replication_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Multinomial draw by sequential conditional binomials.
fn multinomial<R: Rng>(rng: &mut R, n: u32, probs: &[f64]) -> Vec<u32> {
    let mut counts = vec![0u32; probs.len()];
    let mut remaining = n as u64;
    let mut mass = 1.0;
    for (k, &p) in probs.iter().enumerate() {
        if remaining == 0 {
            break;
        }
        if k + 1 == probs.len() {
            counts[k] = remaining as u32;
            break;
        }
        let q = if mass > 0.0 { (p / mass).clamp(0.0, 1.0) } else { 0.0 };
        let y = Binomial::new(remaining, q).expect("valid binomial").sample(rng);
        counts[k] = y as u32;
        remaining -= y;
        mass -= p;
    }
    counts
}

/// One simulated dataset; identical `(design, index)` gives identical data.
pub fn generate_dataset(design: &SimulationDesign, index: usize) -> Result<Dataset> {
    design.validate()?;
    let mut rng = replication_rng(design.seed, index);
    let km1 = design.truth.fixed.intercepts.len();
    let clusters = design
        .factors
        .full_factorial()
        .iter()
        .map(|levels| {
            let x = design.factors.encode(levels);
            let eps: Vec<f64> = match design.truth.re {
                RandomEffectSpec::None => vec![0.0; km1],
                RandomEffectSpec::Univariate { sigma } => {
                    let z: f64 = rng.sample(StandardNormal);
                    vec![sigma * z; km1]
                }
                RandomEffectSpec::Bivariate { sigma1, sigma2, rho } => {
                    let l = bivariate_cholesky(sigma1, sigma2, rho);
                    let za: f64 = rng.sample(StandardNormal);
                    let zb: f64 = rng.sample(StandardNormal);
                    vec![l[0][0] * za, l[1][0] * za + l[1][1] * zb]
                }
            };
            let delta = linear_predictors(&design.truth.fixed, &x, &eps)?;
            let probs = category_probabilities(design.generator, &delta)
                .map_err(|e| Error::InvalidDesign(e.to_string()))?;
            let counts = multinomial(&mut rng, design.cluster_size, probs.as_slice());
            Cluster::new(x, counts)
        })
        .collect::<Result<Vec<_>>>()?;
    Dataset::new(clusters)?.with_covariate_names(design.factors.indicator_names())
}

/// Statistics from fitting one model to one replicate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicationFit {
    pub estimates: Vec<f64>,
    pub loglik: f64,
    pub chi2: f64,
    pub chi2_p: f64,
    pub c: f64,
    pub c_p: f64,
    pub aic: f64,
    pub icc: Option<f64>,
}

fn fit_replicate(data: &Dataset, link: LinkFamily, structure: ReStructure, opts: &FitOptions) -> Option<(FitResult, ReplicationFit)> {
    let full = fit(data, link, structure, opts).ok()?;
    if !full.converged {
        return None;
    }
    let intercept = fit_intercept_model(data, link, structure, opts).ok()?;
    if !intercept.converged {
        return None;
    }
    let chi2 = pearson_chi2(data, &full).ok()?;
    let c = likelihood_ratio_c(&full, &intercept).ok()?;
    let rep = ReplicationFit {
        estimates: full.coefficients.iter().map(|c| c.estimate).collect(),
        loglik: full.loglik,
        chi2: chi2.statistic,
        chi2_p: chi2.p_value,
        c: c.statistic,
        c_p: c.p_value,
        aic: aic(&full),
        icc: icc_value(&full.estimates.re),
    };
    Some((full, rep))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParameterSummary {
    pub name: String,
    pub truth: Option<f64>,
    pub mean: f64,
    /// Sample standard deviation across replications; absent for one replication.
    pub sd: Option<f64>,
    pub lci: Option<f64>,
    pub uci: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSummary {
    pub link: LinkFamily,
    pub structure: ReStructure,
    pub used: usize,
    pub excluded: usize,
    pub parameters: Vec<ParameterSummary>,
    pub icc: Option<ParameterSummary>,
    pub mean_chi2: f64,
    pub mean_chi2_p: f64,
    pub chi2_df: u32,
    pub mean_c: f64,
    pub mean_c_p: f64,
    pub c_df: u32,
    pub mean_aic: f64,
}

impl ModelSummary {
    pub fn parameter(&self, name: &str) -> Option<&ParameterSummary> {
        self.parameters.iter().find(|p| p.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationSummary {
    pub generator: LinkFamily,
    pub truth: ParameterVector,
    pub replications: usize,
    pub seed: u64,
    pub cluster_size: u32,
    pub models: Vec<ModelSummary>,
}

impl SimulationSummary {
    pub fn model(&self, link: LinkFamily, structure: ReStructure) -> Option<&ModelSummary> {
        self.models.iter().find(|m| m.link == link && m.structure == structure)
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn summarize(name: String, truth: Option<f64>, xs: &[f64]) -> ParameterSummary {
    let m = mean(xs);
    let n = xs.len();
    let sd = (n > 1).then(|| (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt());
    let half = sd.map(|s| 1.96 * s / (n as f64).sqrt());
    ParameterSummary {
        name,
        truth,
        mean: m,
        sd,
        lci: half.map(|h| m - h),
        uci: half.map(|h| m + h),
    }
}

fn true_values(truth: &ParameterVector, structure: ReStructure, names: &[String], same_link: bool) -> Vec<Option<f64>> {
    let mut values: Vec<Option<f64>> = truth
        .fixed
        .intercepts
        .iter()
        .chain(&truth.fixed.slopes)
        .map(|&v| Some(v))
        .collect();
    match (structure, truth.re) {
        (ReStructure::Univariate, RandomEffectSpec::Univariate { sigma }) => values.push(Some(sigma)),
        (ReStructure::Bivariate, RandomEffectSpec::Bivariate { sigma1, sigma2, rho }) => {
            values.extend([Some(sigma1), Some(sigma2), Some(rho)])
        }
        _ => values.extend(std::iter::repeat_n(None, structure.n_params())),
    }
    values.truncate(names.len());
    if !same_link {
        // Coefficients of a different link are on a different scale; only
        // the random-effect law is comparable.
        for v in values.iter_mut().take(names.len() - structure.n_params()) {
            *v = None;
        }
    }
    values
}

/// Runs every replication and aggregates per fitted model.
pub fn run_study(design: &SimulationDesign) -> Result<SimulationSummary> {
    design.validate()?;
    let opts = design.fit_options();
    let outcomes: Vec<Vec<Option<ReplicationFit>>> = (0..design.replications)
        .into_par_iter()
        .map(|r| {
            let data = generate_dataset(design, r)?;
            Ok(design
                .fits
                .iter()
                .map(|&(link, s)| fit_replicate(&data, link, s, &opts).map(|(_, rep)| rep))
                .collect())
        })
        .collect::<Result<Vec<_>>>()?;

    let names_schema = design.factors.indicator_names();
    let km1 = design.truth.fixed.intercepts.len();
    let mut models = Vec::with_capacity(design.fits.len());
    for (m, &(link, structure)) in design.fits.iter().enumerate() {
        let used: Vec<&ReplicationFit> = outcomes.iter().filter_map(|o| o[m].as_ref()).collect();
        let excluded = design.replications - used.len();
        if used.is_empty() || excluded as f64 > MAX_FAILURE_SHARE * design.replications as f64 {
            return Err(Error::StudyQuality {
                model: format!("{}/{}", link.short_name(), structure.short_name()),
                failed: excluded,
                total: design.replications,
            });
        }
        let mut names: Vec<String> = (1..=km1).map(|k| format!("c{k}")).collect();
        names.extend(names_schema.iter().cloned());
        match structure {
            ReStructure::None => {}
            ReStructure::Univariate => names.push("sigma".into()),
            ReStructure::Bivariate => names.extend(["sigma1".into(), "sigma2".into(), "rho".into()]),
        }
        let truth = true_values(&design.truth, structure, &names, link == design.generator);
        let parameters = names
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let xs: Vec<f64> = used.iter().map(|r| r.estimates[i]).collect();
                summarize(name.clone(), truth[i], &xs)
            })
            .collect();
        let icc = (structure != ReStructure::None).then(|| {
            let xs: Vec<f64> = used.iter().filter_map(|r| r.icc).collect();
            summarize("icc".into(), icc_value(&design.truth.re), &xs)
        });
        let col = |f: fn(&ReplicationFit) -> f64| mean(&used.iter().map(|r| f(r)).collect::<Vec<_>>());
        let n_fixed = names.len() - structure.n_params();
        models.push(ModelSummary {
            link,
            structure,
            used: used.len(),
            excluded,
            parameters,
            icc,
            mean_chi2: col(|r| r.chi2),
            mean_chi2_p: col(|r| r.chi2_p),
            chi2_df: (km1 * design.factors.full_factorial().len()).saturating_sub(n_fixed) as u32,
            mean_c: col(|r| r.c),
            mean_c_p: col(|r| r.c_p),
            c_df: names_schema.len() as u32,
            mean_aic: col(|r| r.aic),
        });
    }

    Ok(SimulationSummary {
        generator: design.generator,
        truth: design.truth.clone(),
        replications: design.replications,
        seed: design.seed,
        cluster_size: design.cluster_size,
        models,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_and_index_reproduce() {
        let d = SimulationDesign::strawberry_like(LinkFamily::ProportionalOdds, 0.6, 11);
        assert_eq!(generate_dataset(&d, 3).unwrap(), generate_dataset(&d, 3).unwrap());
        assert_ne!(generate_dataset(&d, 3).unwrap(), generate_dataset(&d, 4).unwrap());
    }

    #[test]
    fn clusters_have_the_design_size() {
        let d = SimulationDesign::strawberry_like(LinkFamily::ContinuationRatio, 1.5, 2);
        let data = generate_dataset(&d, 0).unwrap();
        assert_eq!(data.n_clusters(), 48);
        assert!(data.clusters().iter().all(|c| c.size() == 10));
    }

    #[test]
    fn symmetric_generator_gives_uniform_categories() {
        let mut d = SimulationDesign::strawberry_like(LinkFamily::AdjacentCategories, 0.0, 5);
        d.truth = ParameterVector::new(FixedEffects::new(vec![0.0, 0.0], vec![0.0; 8]), RandomEffectSpec::None);
        let mut totals = [0u64; 3];
        for r in 0..100 {
            for (t, v) in totals.iter_mut().zip(generate_dataset(&d, r).unwrap().category_totals()) {
                *t += v;
            }
        }
        let n: u64 = totals.iter().sum();
        assert_eq!(n, 48_000);
        let se = (1.0 / 3.0 * 2.0 / 3.0 / n as f64).sqrt();
        for t in totals {
            assert!((t as f64 / n as f64 - 1.0 / 3.0).abs() < 3.0 * se, "{totals:?}");
        }
    }

    #[test]
    fn decreasing_po_intercepts_rejected() {
        let mut d = SimulationDesign::strawberry_like(LinkFamily::ProportionalOdds, 0.6, 1);
        d.truth.fixed.intercepts = vec![-1.0, -2.0];
        assert!(matches!(generate_dataset(&d, 0), Err(Error::InvalidDesign(_))));
        d.replications = 0;
        assert!(matches!(d.validate(), Err(Error::InvalidDesign(_))));
    }

    #[test]
    fn multinomial_respects_total() {
        let mut rng = replication_rng(9, 0);
        for _ in 0..100 {
            let c = multinomial(&mut rng, 10, &[0.2, 0.5, 0.3]);
            assert_eq!(c.iter().sum::<u32>(), 10);
        }
        assert_eq!(multinomial(&mut rng, 10, &[1.0, 0.0, 0.0]), vec![10, 0, 0]);
    }

    #[test]
    fn single_replication_has_no_sd() {
        let mut d = SimulationDesign::strawberry_like(LinkFamily::ContinuationRatio, 0.6, 3);
        d.replications = 1;
        d.fits = vec![(LinkFamily::ContinuationRatio, ReStructure::None)];
        let s = run_study(&d).unwrap();
        let m = &s.models[0];
        assert_eq!(m.used, 1);
        assert!(m.parameters.iter().all(|p| p.sd.is_none() && p.lci.is_none()));
    }

    #[test]
    fn ci_rule_matches_published_layout() {
        // mean −1.754, SD 0.378, R = 100 → (−1.828, −1.680)
        let half: f64 = 1.96 * 0.378 / 10.0;
        assert!(((-1.754 - half) - -1.828).abs() < 5e-4);
        assert!(((-1.754 + half) - -1.680).abs() < 5e-4);
        let s = summarize("x".into(), None, &[1.0, 2.0, 3.0, 4.0]);
        assert!(s.lci.unwrap() < s.mean && s.mean < s.uci.unwrap());
    }
}

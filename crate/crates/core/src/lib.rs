//! Maximum-likelihood fitting of clustered ordinal data with logistic link
//! structures (proportional odds, adjacent categories, continuation ratio)
//! and optional univariate or bivariate normal random effects.
//!
//! The crate also carries goodness-of-fit statistics, a seeded simulation
//! engine for parameter-recovery studies, dataset I/O, and report rendering.

pub mod cli;
pub mod error;
pub mod estimation;
pub mod gof;
pub mod io;
pub mod likelihood;
pub mod model;
pub mod optim;
pub mod published;
pub mod quadrature;
pub mod report;
pub mod simulation;
pub mod special;

pub use error::{Error, Result};
pub use estimation::{empirical_bayes, fit, fit_intercept_model, numerical_covariance, EbKind, FitOptions, FitResult};
pub use gof::{aic, chi_squared_survival, icc, likelihood_ratio_c, pearson_chi2, GofReport};
pub use likelihood::{conditional_cluster_loglik, marginal_cluster_loglik, total_loglik, ParameterVector};
pub use model::{
    category_probabilities, linear_predictors, Cluster, Dataset, FixedEffects, LinkFamily, ProbabilityVector,
    RandomEffectSpec, ReStructure,
};
pub use quadrature::{bivariate_rule, gauss_hermite, QuadratureRule1D, QuadratureRule2D};

pub use simulation::{generate_dataset, run_study, SimulationDesign, SimulationSummary};

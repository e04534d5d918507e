use thiserror::Error;

/// Errors raised across the model, estimation, and simulation layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Proportional-odds cumulative probabilities are not non-decreasing.
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("estimation degenerate: {0}")]
    EstimationDegenerate(String),

    /// The negative Hessian at the optimum is not positive definite.
    #[error("covariance unavailable: smallest eigenvalue of the negative Hessian is {min_eigenvalue:e}")]
    CovarianceUnavailable {
        min_eigenvalue: f64,
        eigenvalues: Vec<f64>,
    },

    /// Fitted counts below the Pearson cell threshold, as (cluster, category) pairs.
    #[error("degenerate cells in Pearson statistic: {0:?}")]
    DegenerateCells(Vec<(usize, usize)>),

    #[error("inconsistent fits: likelihood-ratio statistic {0} is negative")]
    InconsistentFits(f64),

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("study quality: model {model} failed to converge in {failed} of {total} replications")]
    StudyQuality {
        model: String,
        failed: usize,
        total: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag used by the command-line error line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InfeasibleParameters(_) => "infeasible-parameters",
            Error::EstimationDegenerate(_) => "estimation-degenerate",
            Error::CovarianceUnavailable { .. } => "covariance-unavailable",
            Error::DegenerateCells(_) => "degenerate-cells",
            Error::InconsistentFits(_) => "inconsistent-fits",
            Error::InvalidDesign(_) => "invalid-design",
            Error::StudyQuality { .. } => "study-quality",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
        }
    }
}

impl Error {
    /// The message without the kind prefix that `Display` adds.
    pub fn detail(&self) -> String {
        match self {
            Error::InvalidArgument(m)
            | Error::InfeasibleParameters(m)
            | Error::EstimationDegenerate(m)
            | Error::InvalidDesign(m) => m.clone(),
            Error::CovarianceUnavailable { min_eigenvalue, .. } => {
                format!("smallest eigenvalue of the negative Hessian is {min_eigenvalue:e}")
            }
            Error::DegenerateCells(cells) => format!("cells {cells:?}"),
            Error::InconsistentFits(c) => format!("likelihood-ratio statistic {c} is negative"),
            Error::StudyQuality { model, failed, total } => {
                format!("model {model} failed to converge in {failed} of {total} replications")
            }
            Error::Parse { line, message } => format!("line {line}: {message}"),
            Error::Io(e) => e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

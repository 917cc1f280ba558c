use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("{what}: series did not converge within {terms} terms")]
    NonConvergence { what: &'static str, terms: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid order: {0}")]
    Order(String),

    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("non-integrable combination: {0}")]
    NonIntegrable(String),

    #[error("Gramian is numerically singular (condition estimate {condition:.3e})")]
    SingularGramian { condition: f64 },

    #[error("{what} has numerical rank {rank}, {needed} required")]
    RankDeficient {
        what: &'static str,
        rank: usize,
        needed: usize,
    },

    #[error("kernel inversion failed at s = {s}: condition estimate {condition:.3e}")]
    KernelInversion { s: f64, condition: f64 },
}

impl Error {
    /// True for failures of a steering precondition (singular Gramian, rank
    /// deficiency, non-invertible kernel) as opposed to numerical breakdowns.
    pub fn is_steering_precondition(&self) -> bool {
        matches!(
            self,
            Error::SingularGramian { .. } | Error::RankDeficient { .. } | Error::KernelInversion { .. }
        )
    }
}

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("mixed exact/approximate coordinates in one operation")]
    ModeMismatch,

    #[error("degenerate point set: {0}")]
    DegeneratePointSet(String),

    #[error("point set must contain at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error(
        "unreliable distance clustering: min inter-class gap {min_inter_gap:e} vs \
         max intra-class spread {max_intra_spread:e} (safety factor {safety:e} required)"
    )]
    UnreliableClustering {
        min_inter_gap: f64,
        max_intra_spread: f64,
        safety: f64,
    },

    #[error("ambiguous key {key}: falls inside an audit gap of the clustered spectrum")]
    AmbiguousKey { key: f64 },

    #[error("the point set realizes fewer than two distinct distances")]
    NoSecondDistance,

    #[error("arc angle {0} rad is outside the open interval (0, pi/3)")]
    AngleOutOfRange(f64),

    #[error("construction geometry infeasible: {0}")]
    InfeasibleGeometry(String),

    #[error("no admissible translate direction found within {budget} resamples at step {step}")]
    RetryBudgetExhausted { step: usize, budget: usize },

    #[error("parameter out of the supported integer range: {0}")]
    RangeExceeded(String),

    #[error("{value} is not divisible by {divisor}")]
    DivisibilityError { value: u64, divisor: u64 },

    #[error("point set is not in convex position ({on_hull} of {n} points on the hull)")]
    NotConvex { n: usize, on_hull: usize },

    #[error("point set too small for this check: n = {n}, need n >= {needed}")]
    TooSmall { n: usize, needed: usize },

    #[error("operation not applicable: {0}")]
    NotApplicable(String),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

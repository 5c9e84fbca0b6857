//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across signal construction, transforms,
/// recovery, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    #[error("invalid gamma parameters: {0}")]
    InvalidGamma(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series has {got} samples where at least {needed} are required")]
    TooFewSamples { needed: usize, got: usize },

    #[error("sample {index} is not finite")]
    NonFiniteSample { index: usize },

    #[error("series length {len} does not match grid sample count {n}")]
    LengthMismatch { len: usize, n: usize },

    #[error("constant series cannot be peak-normalized")]
    DegenerateNormalization,

    #[error("density sample {index} is negative ({value:.3e})")]
    NegativeDensity { index: usize, value: f64 },

    #[error("operands live on different time grids")]
    GridMismatch,

    #[error(
        "ill-posed deconvolution: divisor spectral mode {mode} has magnitude \
         {magnitude:.3e}, below the zero guard {guard:.3e}"
    )]
    IllPosedDivision {
        mode: usize,
        magnitude: f64,
        guard: f64,
    },

    #[error("inverse transform is not real: relative imaginary residue {residue:.3e}")]
    NonRealReconstruction { residue: f64 },

    #[error("cutoff fraction {0} is outside (0, 1]")]
    InvalidCutoff(f64),

    #[error("extension length {got} does not match 2n-2 = {expected}")]
    ExtensionMismatch { expected: usize, got: usize },

    #[error(
        "series tail has not decayed (tail/peak = {ratio:.3e}, guard {guard:.1e}); \
         use a longer grid"
    )]
    UndecayedTail { ratio: f64, guard: f64 },

    #[error("recovered curve has no positive maximum")]
    NonPositiveMaximum,

    #[error("transit-time variance is negative ({0:.3e}); inputs are inconsistent")]
    NegativeVariance(f64),

    #[error("curve maximum sits on the grid boundary; the gamma fit needs an interior peak")]
    BoundaryPeak,

    #[error("gamma-variate fit failed: {0}")]
    FitFailed(String),

    #[error("{path}:{line}: {msg}")]
    Csv {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("input record is missing column '{0}'")]
    MissingColumn(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code class: 2 config, 3 numerical, 4 I/O and data files.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Io(_) | Error::Csv { .. } | Error::MissingColumn(_) => 4,
            _ => 3,
        }
    }
}

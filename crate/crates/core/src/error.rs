use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// A generator or class parameter lies outside its defining range.
    #[error("{name} must lie in {range}")]
    InvalidParameter { name: &'static str, range: &'static str },

    /// Parameters are valid for the class but outside the range where a
    /// theorem is proven.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// A run configuration is malformed (radii, grid, order, paths).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("point {re}+{im}i lies outside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },

    #[error("non-finite input or intermediate value in {0}")]
    NonFinite(&'static str),

    #[error("evaluation at a singularity of {0}")]
    Pole(&'static str),

    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("series must have zero constant term for {0}")]
    NonzeroConstantTerm(&'static str),

    #[error("series must have nonzero constant term for {0}")]
    ZeroConstantTerm(&'static str),

    #[error("truncation order must be positive")]
    EmptySeries,

    #[error("radius {value} outside {range}")]
    RadiusOutOfRange { value: f64, range: &'static str },

    #[error("no sign change on [{a}, {b}]: f(a) = {fa}, f(b) = {fb}")]
    NoSignChange { a: f64, b: f64, fa: f64, fb: f64 },

    #[error("root finder exceeded {0} iterations")]
    MaxIterations(usize),

    #[error("quadrature failed to converge on [{a}, {b}] (error estimate {estimate})")]
    Quadrature { a: f64, b: f64, estimate: f64 },

    #[error("cross-check failed for {what}: {left} vs {right}")]
    CrossCheck { what: &'static str, left: f64, right: f64 },

    #[error("derivative vanishes at theta = {0}")]
    DegenerateDerivative(f64),

    #[error("point is within {distance:e} of the sampled boundary; membership ambiguous")]
    AmbiguousWinding { distance: f64 },

    #[error("limit does not converge: last step changed by {0:e}")]
    DivergentLimit(f64),

    #[error("invalid Schwarz witness: {0}")]
    InvalidWitness(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Process exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code for failures that are neither configuration nor hypothesis errors.
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID_CONFIG: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

impl Error {
    /// Exit code a command-line front end should report for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter { .. }
            | Error::InvalidConfig(_)
            | Error::RadiusOutOfRange { .. }
            | Error::InvalidWitness(_) => EXIT_INVALID_CONFIG,
            Error::Hypothesis(_) => EXIT_HYPOTHESIS,
            _ => EXIT_FAILURE,
        }
    }
}

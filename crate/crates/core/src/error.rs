use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Eigenvalue collision or other failure of genericity at the chosen
    /// parameters. Callers are expected to resample.
    #[error("degenerate specialization: {0}")]
    DegenerateSpecialization(String),

    #[error("vanishing denominator in factor {label}")]
    VanishingDenominator { label: String },

    #[error("limit does not exist: {0}")]
    SingularLimit(String),

    #[error("numerator not divisible by denominator factor {0}")]
    NonDivisible(String),

    #[error("operator image of m_{row} has a term m_{col} outside the dominance order")]
    Triangularity { row: String, col: String },

    #[error("diagonal entry for {lambda} is {found}, expected eigenvalue {expected}")]
    DiagonalMismatch {
        lambda: String,
        found: String,
        expected: String,
    },

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partitions live in different contexts (n = {left} and n = {right})")]
    MismatchedContext { left: usize, right: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no certified parameter point after {attempts} attempts")]
    CertificationFailed { attempts: u32 },

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
}

impl Error {
    /// Short machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegenerateSpecialization(_) => "degenerate specialization",
            Error::VanishingDenominator { .. } => "vanishing denominator",
            Error::SingularLimit(_) => "singular limit",
            Error::NonDivisible(_) => "non-divisible",
            Error::Triangularity { .. } => "triangularity violation",
            Error::DiagonalMismatch { .. } => "diagonal mismatch",
            Error::BasisMismatch(_) => "basis mismatch",
            Error::InvalidPartition(_) => "invalid partition",
            Error::MismatchedContext { .. } => "mismatched context",
            Error::InvalidInput(_) => "invalid input",
            Error::CertificationFailed { .. } => "certification failed",
            Error::ResourceBound(_) => "resource bound exceeded",
        }
    }
}

use thiserror::Error;

/// Errors raised by the library. Each variant maps to a stable code string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("PARSE_ERROR: {0}")]
    Parse(String),
    #[error("HALF_EXPONENT: {0}")]
    HalfExponent(String),
    #[error("RESIDUAL_Y: odd part of the invariant is nonzero")]
    ResidualY,
    #[error("INVERSE_VERIFICATION_FAILED: R * candidate != Id at entry ({row}, {col})")]
    InverseVerificationFailed { row: usize, col: usize },
    #[error("SITE_OUT_OF_RANGE: site {site} on {strands} strands")]
    SiteOutOfRange { site: usize, strands: usize },
    #[error("NOT_SCALAR: partial trace is not a multiple of the identity at ({row}, {col})")]
    NotScalar { row: usize, col: usize },
    #[error("RESOURCE_LIMIT: {0}")]
    ResourceLimit(String),
    #[error("DOMAIN: {0}")]
    Domain(String),
    #[error("ODD_EXPONENT: specialization has exponents of mixed parity")]
    OddExponent,
    #[error("EMPTY_SET: convex hull of an empty point set")]
    EmptySet,
    #[error("EMPTY_TABLE: coefficient table is identically zero")]
    EmptyTable,
    #[error("MISSING_MU: component count not set on table")]
    MissingMu,
    #[error("NEGATIVE_ENTRY: sequence entry {index} is negative")]
    NegativeEntry { index: usize },
    #[error("NOT_HOMOGENEOUS: polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("MIXED_DEGREE: support vectors have different total degrees")]
    MixedDegree,
    #[error("NOT_SYMMETRIC: matrix differs from its transpose at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "PARSE_ERROR",
            Error::HalfExponent(_) => "HALF_EXPONENT",
            Error::ResidualY => "RESIDUAL_Y",
            Error::InverseVerificationFailed { .. } => "INVERSE_VERIFICATION_FAILED",
            Error::SiteOutOfRange { .. } => "SITE_OUT_OF_RANGE",
            Error::NotScalar { .. } => "NOT_SCALAR",
            Error::ResourceLimit(_) => "RESOURCE_LIMIT",
            Error::Domain(_) => "DOMAIN",
            Error::OddExponent => "ODD_EXPONENT",
            Error::EmptySet => "EMPTY_SET",
            Error::EmptyTable => "EMPTY_TABLE",
            Error::MissingMu => "MISSING_MU",
            Error::NegativeEntry { .. } => "NEGATIVE_ENTRY",
            Error::NotHomogeneous => "NOT_HOMOGENEOUS",
            Error::MixedDegree => "MIXED_DEGREE",
            Error::NotSymmetric { .. } => "NOT_SYMMETRIC",
        }
    }

    /// True for failures that can only come from a bug in the engine, never from user input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::ResidualY | Error::InverseVerificationFailed { .. } | Error::NotScalar { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the library. Variant names double as the error names
/// reported by the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("tolerance must be positive")]
    ToleranceInvalid,
    #[error("(0, 0) does not generate an infinite cyclic subgroup")]
    ZeroPoint,
    #[error("cone boundary point (alpha = 0) lies outside the cone chart")]
    BoundaryPoint,
    #[error("cannot glue an unresolved Denjoy coordinate")]
    UnresolvedInput,
    #[error("model point is not canonical: {0}")]
    NonCanonicalModelPoint(String),
    #[error("grid sample u = {0} could not be resolved; refine grid or precision")]
    UnresolvedSample(String),
    #[error("oracle failed to stabilize; closure looks non-discrete")]
    NonDiscreteSuspected,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::ToleranceInvalid => "ToleranceInvalid",
            Error::ZeroPoint => "ZeroPoint",
            Error::BoundaryPoint => "BoundaryPoint",
            Error::UnresolvedInput => "UnresolvedInput",
            Error::NonCanonicalModelPoint(_) => "NonCanonicalModelPoint",
            Error::UnresolvedSample(_) => "UnresolvedSample",
            Error::NonDiscreteSuspected => "NonDiscreteSuspected",
            Error::UnknownSuite(_) => "UnknownSuite",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

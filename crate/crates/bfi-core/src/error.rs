//! Error type shared by all core modules.

use alloc::string::String;

/// Classified failure raised by the core numerics.
///
/// The variants map onto the distinct failure classes surfaced to callers
/// (and, in the CLI, onto distinct exit codes): input validation, schema
/// mismatches, mathematical domain violations, floating-point trouble,
/// optimizer failures, linear-algebra failures, aggregation/protocol
/// violations and censoring-calibration failures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("validation: {0}")]
    Validation(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("numerical: {0}")]
    Numerical(String),
    #[error("optimization: {0}")]
    Optimization(String),
    #[error("linear algebra: {0}")]
    LinearAlgebra(String),
    #[error("aggregation: {0}")]
    Aggregation(String),
    #[error("calibration: {0}")]
    Calibration(String),
}

pub type Result<T> = core::result::Result<T, Error>;

//! Error-to-exit-code mapping.
//!
//! Contract: 0 success, 2 usage, 3 precision/resource, 4 fixture/data,
//! 5 verification mismatch.

use std::fmt;

use exrep_core::locus::LocusError;
use exrep_core::qseries::QSeriesError;
use exrep_core::selmer::SelmerError;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(String),
    Data(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Data(_) => 4,
            CliError::Mismatch(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m)
            | CliError::Resource(m)
            | CliError::Data(m)
            | CliError::Mismatch(m) => f.write_str(m),
        }
    }
}

impl From<QSeriesError> for CliError {
    fn from(e: QSeriesError) -> Self {
        match &e {
            QSeriesError::InsufficientPrecision { .. }
            | QSeriesError::UnsupportedInstance { .. }
            | QSeriesError::NonSemisimple { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LocusError> for CliError {
    fn from(e: LocusError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SelmerError> for CliError {
    fn from(e: SelmerError) -> Self {
        CliError::Data(e.to_string())
    }
}

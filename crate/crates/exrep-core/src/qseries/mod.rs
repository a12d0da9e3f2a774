//! Exact arithmetic for level-one modular forms: Eisenstein series, Δ, the
//! Victor–Miller basis, Hecke operator matrices and eigenvalue systems
//! modulo p.
//!
//! Coefficients are exact arbitrary-precision integers throughout; rationals
//! appear only transiently (Bernoulli numbers) and integrality of every
//! final series is checked, never rounded.

use alloc::string::String;
use core::fmt;

mod basis;
mod bernoulli;
mod eigen;
pub mod fp;
mod hecke;
mod series;

pub use basis::{delta, dim_cusp, dim_modular, eisenstein, victor_miller_basis};
pub use bernoulli::bernoulli;
pub use eigen::{ap_zero_detect, eigensystems_mod_p, EigenSystem, FqValue};
pub use hecke::{hecke_matrix, HeckeMatrix};
pub use series::QExpansion;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSeriesError {
    /// Weight is odd, negative, or outside the operation's domain.
    InvalidWeight { weight: i64 },
    /// Precision must be at least `minimum`.
    InvalidPrecision { given: usize, minimum: usize },
    /// Arithmetic between expansions with different moduli.
    ModulusMismatch,
    /// Sum of expansions of different weights.
    WeightMismatch,
    /// The normalised series has a non-integral coefficient (happens for
    /// Eisenstein weights whose Bernoulli numerator is not ±1).
    NonIntegralSeries { weight: u64 },
    /// An operation needs more q-expansion coefficients than are available;
    /// `required` is the minimal sufficient precision.
    InsufficientPrecision { required: usize, available: usize },
    /// `n` was expected to be prime.
    NotPrime { n: u64 },
    /// The prime-bound argument must be at least 2.
    InvalidBound { given: u64 },
    /// T_2 mod p has a repeated characteristic root; eigensystem extraction
    /// is restricted to the semisimple distinct-root case.
    NonSemisimple { weight: u64, prime: u64 },
    /// Exact computation leaves the supported domain.
    UnsupportedInstance { what: String },
}

impl fmt::Display for QSeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSeriesError::InvalidWeight { weight } => {
                write!(f, "invalid weight {}", weight)
            }
            QSeriesError::InvalidPrecision { given, minimum } => {
                write!(f, "precision {} below minimum {}", given, minimum)
            }
            QSeriesError::ModulusMismatch => write!(f, "mixed moduli in series arithmetic"),
            QSeriesError::WeightMismatch => write!(f, "mixed weights in series sum"),
            QSeriesError::NonIntegralSeries { weight } => {
                write!(f, "normalised series of weight {} is not integral", weight)
            }
            QSeriesError::InsufficientPrecision {
                required,
                available,
            } => write!(
                f,
                "insufficient precision: need {} coefficients, have {}",
                required, available
            ),
            QSeriesError::NotPrime { n } => write!(f, "{} is not prime", n),
            QSeriesError::InvalidBound { given } => {
                write!(f, "prime bound {} must be at least 2", given)
            }
            QSeriesError::NonSemisimple { weight, prime } => write!(
                f,
                "T_2 mod {} at weight {} has a repeated eigenvalue; instance unsupported",
                prime, weight
            ),
            QSeriesError::UnsupportedInstance { what } => {
                write!(f, "unsupported instance: {}", what)
            }
        }
    }
}

//! The self-describing report document emitted by every subcommand.
//!
//! Serialisation is deterministic: struct fields serialise in declaration
//! order, lists are sorted by their natural keys before they get here, and
//! timings are kept out of the document unless explicitly requested (they
//! are the one field that would break byte-identical reruns).

use exrep_core::locus::{ConsistencySummary, LocusReport, ProjectiveOptions};
use exrep_core::qseries::{EigenSystem, FqValue};
use exrep_core::selmer::VanishingVerdict;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    /// Canonical echo of the semantic arguments (execution details such as
    /// parallelism are deliberately excluded).
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classify: Option<ClassifyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chars: Option<CharsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify_example: Option<VerifyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<u64>,
}

impl ReportDocument {
    pub fn new(command: String) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command,
            classify: None,
            scan: None,
            chars: None,
            verify_example: None,
            timings_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Decimal rendering of eigenvalues: prime-field values as plain integers,
/// quadratic-extension values as "(c0, c1; nonresidue r)".
pub fn format_value(v: &FqValue, nonresidue: Option<u64>) -> String {
    match nonresidue {
        Some(r) if v.c1 != 0 => format!("({}, {}; nonresidue {})", v.c0, v.c1, r),
        _ => format!("{}", v.c0),
    }
}

#[derive(Serialize)]
pub struct EigenSystemReport {
    pub weight: u64,
    pub prime: u64,
    pub residue_degree: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonresidue: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_p: Option<String>,
    pub ap_zero_mod_p: Option<bool>,
    pub eigenvalues: Vec<(u64, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistency: Option<ConsistencySummary>,
}

impl EigenSystemReport {
    pub fn from_system(system: &EigenSystem, consistency: Option<ConsistencySummary>) -> Self {
        EigenSystemReport {
            weight: system.weight,
            prime: system.prime,
            residue_degree: system.residue_degree,
            nonresidue: system.nonresidue,
            a_p: system
                .ap()
                .map(|v| format_value(&v, system.nonresidue)),
            ap_zero_mod_p: system.ap_is_zero(),
            eigenvalues: system
                .eigenvalues()
                .iter()
                .map(|(l, v)| (*l, format_value(v, system.nonresidue)))
                .collect(),
            consistency,
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub locus: LocusReport,
    pub projective_options: ProjectiveOptions,
    pub eigensystems: Vec<EigenSystemReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem2: Option<VanishingVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct ScanHit {
    pub p: u64,
    pub k: u64,
    pub dim: usize,
    pub d: u64,
    pub hatada_residue: u64,
}

#[derive(Serialize)]
pub struct ScanReport {
    pub p_max: u64,
    pub k_max: u64,
    pub weight_policy: String,
    pub pairs_scanned: usize,
    pub hits: Vec<ScanHit>,
}

#[derive(Serialize)]
pub struct CharsClassColumn {
    pub representative: String,
    pub size: usize,
}

#[derive(Serialize)]
pub struct CharsRow {
    pub label: String,
    pub degree: i64,
    pub values: Vec<String>,
}

#[derive(Serialize)]
pub struct CharsReport {
    pub group: String,
    pub order: usize,
    pub classes: Vec<CharsClassColumn>,
    pub irreducibles: Vec<CharsRow>,
    pub rendered: String,
}

#[derive(Serialize)]
pub struct StageReport {
    pub stage: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub stages: Vec<StageReport>,
}

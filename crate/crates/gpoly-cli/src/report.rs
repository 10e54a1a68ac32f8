//! Machine-readable reports. Field order and map ordering are fixed so the
//! JSON output is byte-for-byte reproducible; timing is filled in only when
//! explicitly requested.

use std::collections::BTreeMap;

use gpoly_core::GPolynomial;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::CliError;

/// Exact coefficient array, low degree first.
pub fn poly_coeffs(p: &GPolynomial) -> Result<Vec<i64>, CliError> {
    p.coeffs()
        .iter()
        .map(|c| c.to_i64().ok_or(CliError::CoefficientOverflow))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Serialize)]
pub struct FaceReport {
    pub selector: String,
    pub vertices: Vec<usize>,
    pub dim: i64,
    pub g_relative: Vec<i64>,
    pub g1_geometric: usize,
    pub g2_geometric: usize,
}

#[derive(Debug, Serialize)]
pub struct ComputeReport {
    pub name: String,
    pub file: String,
    pub dim: usize,
    pub ambient_dim: usize,
    pub n_vertices: usize,
    pub f_vector: Vec<usize>,
    pub g: Vec<i64>,
    pub h: Vec<i64>,
    pub gbar: Vec<i64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub flag_numbers: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub relative_flag_numbers: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face: Option<FaceReport>,
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub status: Status,
    /// Number of instances examined (faces, pairs, or 1 for global checks).
    pub cases: usize,
    /// Residual polynomial for single-residual checks, exact coefficients.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<i64>>,
    /// One deterministic line per failing instance.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub file: String,
    pub dim: usize,
    pub n_vertices: usize,
    pub checks: Vec<CheckOutcome>,
    pub failures: usize,
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct BatchEntry {
    pub file: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct BatchSummary {
    pub files: usize,
    pub checks_run: usize,
    pub failures: usize,
    pub errors: usize,
}

#[derive(Debug, Serialize)]
pub struct BatchReport {
    pub entries: Vec<BatchEntry>,
    pub summary: BatchSummary,
    pub timing_ms: Option<u128>,
}

pub fn to_stdout_json<T: Serialize>(value: &T) {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    print!("{}", text);
}

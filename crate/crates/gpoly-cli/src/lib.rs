//! File formats, reports and check runners behind the `gpoly` binary.
//!
//! Polytopes travel as JSON files with exact rational coordinates encoded as
//! strings; reports are JSON on stdout with a human summary on stderr.
//! Everything here is deterministic byte for byte given the same inputs and
//! flags (timing is only recorded under `--timing`).

pub mod checks;
pub mod format;
pub mod genexpr;
pub mod report;
pub mod selector;

use std::path::Path;

use gpoly_core::{GeomError, GPolyError, LatticeError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{0}")]
    Geometry(#[from] GeomError),
    #[error("{0}")]
    Lattice(#[from] LatticeError),
    #[error("{0}")]
    GPoly(#[from] GPolyError),
    #[error("not a face: {0}")]
    NotAFace(String),
    #[error("{0}; pass --force to override")]
    Guardrail(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid json in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("coefficient does not fit the report integer range")]
    CoefficientOverflow,
}

/// Desk-scale guardrails: vertex count and ambient dimension caps, enforced
/// before any hull work unless forced.
pub const MAX_VERTICES: usize = 64;
pub const MAX_DIM: usize = 6;

pub fn check_guardrails(n_vertices: usize, ambient_dim: usize, force: bool) -> Result<(), CliError> {
    if force {
        return Ok(());
    }
    if n_vertices > MAX_VERTICES {
        return Err(CliError::Guardrail(format!(
            "input has {} vertices (limit {})",
            n_vertices, MAX_VERTICES
        )));
    }
    if ambient_dim > MAX_DIM {
        return Err(CliError::Guardrail(format!(
            "input has ambient dimension {} (limit {})",
            ambient_dim, MAX_DIM
        )));
    }
    Ok(())
}

/// Memo cap from the `GPOLY_MEMO_LIMIT` environment variable, if set.
pub fn memo_limit() -> Option<usize> {
    std::env::var("GPOLY_MEMO_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
}

pub fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

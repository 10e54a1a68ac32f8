//! The polytope interchange format: JSON with exact rational coordinates.
//!
//! Coordinates are written as strings (`"3"`, `"-1/2"`) so nothing is ever
//! rounded; plain JSON integers are accepted on input. Join-built files may
//! carry the vertex sets of their join factors so the join checks know which
//! faces to look at.

use std::path::Path;
use std::str::FromStr;

use gpoly_core::{Coord, Polytope};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordValue {
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub name: String,
    pub vertices: Vec<Vec<CoordValue>>,
    /// Vertex sets of generator join factors, when this file came from a
    /// join-like construction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join_faces: Option<Vec<Vec<usize>>>,
}

impl PolytopeFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = crate::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_json()).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("file serializes");
        text.push('\n');
        text
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices.first().map_or(0, Vec::len)
    }

    pub fn to_polytope(&self) -> Result<Polytope, CliError> {
        let mut rows = Vec::with_capacity(self.vertices.len());
        for (i, row) in self.vertices.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, value) in row.iter().enumerate() {
                let coord = match value {
                    CoordValue::Int(x) => Coord::from_integer(BigInt::from(*x)),
                    CoordValue::Text(text) => parse_rational(text).map_err(|e| {
                        CliError::Parse(format!("vertex {}, coordinate {}: {}", i, j, e))
                    })?,
                };
                out.push(coord);
            }
            rows.push(out);
        }
        Ok(Polytope::from_vertices(rows)?)
    }

    pub fn from_polytope(
        name: &str,
        polytope: &Polytope,
        join_faces: Option<Vec<Vec<usize>>>,
    ) -> Self {
        PolytopeFile {
            name: name.to_string(),
            vertices: polytope
                .vertices()
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|x| CoordValue::Text(rational_to_string(x)))
                        .collect()
                })
                .collect(),
            join_faces,
        }
    }
}

/// Parses `"p"` or `"p/q"` with arbitrary-precision integer parts.
pub fn parse_rational(text: &str) -> Result<Coord, String> {
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        None => (trimmed, "1"),
        Some((n, d)) => (n.trim(), d.trim()),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("bad integer {:?}", num))?;
    let den = BigInt::from_str(den).map_err(|_| format!("bad integer {:?}", den))?;
    if den.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(Coord::new(num, den))
}

pub fn rational_to_string(x: &Coord) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

//! Face selectors: stable ways for scripts to address a face.
//!
//! Accepted forms: `empty`, `top`, `<dim>:<index>` with the dimension given
//! numerically or as `vertex`/`edge`/`facet`, or an explicit comma-separated
//! vertex index set such as `0,3,5`.

use std::str::FromStr;

use gpoly_core::{BitSet, FaceId, FaceLattice};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceSelector {
    Empty,
    Top,
    DimIndex(DimName, usize),
    VertexSet(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimName {
    Vertex,
    Edge,
    Facet,
    Dim(i64),
}

impl FromStr for FaceSelector {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        match s {
            "empty" => return Ok(FaceSelector::Empty),
            "top" => return Ok(FaceSelector::Top),
            _ => {}
        }
        if let Some((dim, index)) = s.split_once(':') {
            let dim = match dim.trim() {
                "vertex" => DimName::Vertex,
                "edge" => DimName::Edge,
                "facet" => DimName::Facet,
                other => DimName::Dim(other.parse().map_err(|_| {
                    CliError::Parse(format!("bad face selector dimension {:?}", other))
                })?),
            };
            let index = index
                .trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("bad face selector index in {:?}", s)))?;
            return Ok(FaceSelector::DimIndex(dim, index));
        }
        let indices = s
            .split(',')
            .map(|part| part.trim().parse())
            .collect::<Result<Vec<usize>, _>>()
            .map_err(|_| CliError::Parse(format!("bad face selector {:?}", s)))?;
        Ok(FaceSelector::VertexSet(indices))
    }
}

impl FaceSelector {
    pub fn resolve(&self, lattice: &FaceLattice) -> Result<FaceId, CliError> {
        match self {
            FaceSelector::Empty => Ok(lattice.bottom()),
            FaceSelector::Top => Ok(lattice.top()),
            FaceSelector::DimIndex(name, index) => {
                let dim = match name {
                    DimName::Vertex => 0,
                    DimName::Edge => 1,
                    DimName::Facet => lattice.dim() - 1,
                    DimName::Dim(d) => *d,
                };
                lattice
                    .faces_of_dim(dim)
                    .get(*index)
                    .copied()
                    .ok_or_else(|| {
                        CliError::NotAFace(format!(
                            "no face of dimension {} with index {}",
                            dim, index
                        ))
                    })
            }
            FaceSelector::VertexSet(indices) => {
                let atoms: BitSet = indices.iter().copied().collect();
                lattice.face_by_vertex_set(&atoms).ok_or_else(|| {
                    CliError::NotAFace(format!("no face has vertex set {:?}", indices))
                })
            }
        }
    }
}

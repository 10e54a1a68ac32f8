//! Exact geometric layer: polytopes from rational vertex coordinates, facet
//! enumeration, face lattices, facet unions around a face, and frameworks.
//!
//! A [`Polytope`] is built once from its vertices and then immutable: the
//! affine-hull projection, facet incidences and the validated face lattice
//! are all computed up front. Quotients are never realized geometrically;
//! everything downstream of the lattice works on intervals.

mod generators;
mod hull;

pub use generators::{
    cross_polytope, cube, join, polygon, prism, pyramid, random_perturbed, simplex,
};
pub use hull::{affine_projection, facet_enumeration};

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use crate::ratmat::Coord;

use crate::bitset::BitSet;
use crate::lattice::{FaceId, FaceLattice, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    /// Input that does not describe a polytope at all.
    DegenerateInput(String),
    /// The vertex at this index is redundant (inside the hull of the others).
    NotExtremePoint(usize),
    Lattice(LatticeError),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::DegenerateInput(reason) => write!(f, "degenerate input: {}", reason),
            GeomError::NotExtremePoint(i) => {
                write!(f, "vertex {} is not an extreme point", i)
            }
            GeomError::Lattice(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for GeomError {}

impl From<LatticeError> for GeomError {
    fn from(e: LatticeError) -> Self {
        GeomError::Lattice(e)
    }
}

/// Which vertex of a 2-face anchors its fan triangulation.
///
/// The default fans from the lowest vertex index; the alternative exists so
/// tests can confirm that stress dimensions do not depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TriangulationRule {
    #[default]
    FanFromLowest,
    FanFromHighest,
}

/// A finite point configuration joined by straight edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Framework {
    dim: usize,
    points: Vec<Vec<Coord>>,
    edges: Vec<(usize, usize)>,
}

impl Framework {
    pub fn new(dim: usize, points: Vec<Vec<Coord>>, edges: Vec<(usize, usize)>) -> Self {
        assert!(points.iter().all(|p| p.len() == dim), "point of wrong dimension");
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            assert!(a != b, "edge endpoints must be distinct");
            assert!(a < points.len() && b < points.len(), "edge endpoint out of range");
            assert!(seen.insert((a.min(b), a.max(b))), "duplicate edge");
        }
        Framework { dim, points, edges }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Coord>] {
        &self.points
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// A framework cut out of a larger one, with index maps back into it.
#[derive(Debug, Clone)]
pub struct FrameworkEmbedding {
    pub framework: Framework,
    /// `point_map[i]` is the parent point index of sub-point `i`.
    pub point_map: Vec<usize>,
    /// `edge_map[i]` is the parent edge index of sub-edge `i`.
    pub edge_map: Vec<usize>,
}

/// The union of all facets containing a face: its vertex atoms and the ids of
/// every face lying inside that union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NUnion {
    pub vertices: BitSet,
    pub faces: Vec<FaceId>,
}

/// A convex polytope with exact rational vertices.
#[derive(Debug, Clone)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Coord>>,
    dim: usize,
    coords: Vec<Vec<Coord>>,
    facets: Vec<BitSet>,
    lattice: FaceLattice,
}

impl Polytope {
    /// Builds a polytope from its vertices, enumerating facets by brute force
    /// and validating the face lattice. Every vertex must be extreme.
    pub fn from_vertices(vertices: Vec<Vec<Coord>>) -> Result<Self, GeomError> {
        Self::build(vertices, None)
    }

    /// Builds a polytope whose facet vertex sets are already known, skipping
    /// hyperplane enumeration. The face lattice is still constructed and
    /// validated from the incidences.
    pub fn from_vertices_with_facets(
        vertices: Vec<Vec<Coord>>,
        facets: Vec<BitSet>,
    ) -> Result<Self, GeomError> {
        Self::build(vertices, Some(facets))
    }

    fn build(vertices: Vec<Vec<Coord>>, known_facets: Option<Vec<BitSet>>) -> Result<Self, GeomError> {
        if vertices.is_empty() {
            return Err(GeomError::DegenerateInput("no vertices given".into()));
        }
        let ambient_dim = hull::check_consistent_rows(&vertices)?;
        hull::check_distinct(&vertices)?;
        let (dim, coords) = hull::affine_projection(&vertices);
        let facets = match known_facets {
            Some(f) => f,
            None => {
                let data = hull::enumerate_facets(&coords, dim)?;
                hull::check_extremeness(vertices.len(), dim, &data)?;
                data.sets
            }
        };
        let lattice =
            FaceLattice::from_vertex_facet_incidence(vertices.len(), &facets, dim as i64)?;
        Ok(Polytope {
            ambient_dim,
            vertices,
            dim,
            coords,
            facets,
            lattice,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the affine hull of the vertices.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// The vertices as given, in the original ambient space.
    pub fn vertices(&self) -> &[Vec<Coord>] {
        &self.vertices
    }

    /// Vertex coordinates re-expressed in the affine hull; all geometry
    /// downstream of construction works with these.
    pub fn coords(&self) -> &[Vec<Coord>] {
        &self.coords
    }

    pub fn facet_incidence(&self) -> &[BitSet] {
        &self.facets
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    /// All vertices and faces contained in some facet containing `f`.
    ///
    /// For the empty face this is the whole boundary; for the polytope itself
    /// it is empty.
    pub fn n_union(&self, f: FaceId) -> NUnion {
        let lat = &self.lattice;
        let mut vertices = BitSet::new();
        let mut face_set = BitSet::new();
        for &h in lat.facets() {
            if lat.leq(f, h) {
                vertices = vertices.union(lat.vertex_set(h));
                face_set = face_set.union(lat.down_set(h));
            }
        }
        NUnion {
            vertices,
            faces: face_set.iter().map(FaceId::new).collect(),
        }
    }

    /// The framework on the vertices: all edges of the polytope plus, for
    /// each proper 2-face with more than three vertices, the diagonals of a
    /// fan triangulation anchored at its lowest-index vertex.
    pub fn framework(&self) -> Framework {
        self.framework_with(TriangulationRule::FanFromLowest)
    }

    pub fn framework_with(&self, rule: TriangulationRule) -> Framework {
        let edges = self
            .framework_parts(rule)
            .into_iter()
            .map(|(a, b, _)| (a, b))
            .collect();
        Framework::new(self.dim, self.coords.clone(), edges)
    }

    /// Restriction of the framework to the facet union around `f`: the
    /// vertices and edges contained in it, including the diagonals of 2-faces
    /// that lie inside the union.
    pub fn subframework(&self, f: FaceId) -> Framework {
        self.subframework_embedding(f, TriangulationRule::FanFromLowest)
            .framework
    }

    pub fn subframework_embedding(
        &self,
        f: FaceId,
        rule: TriangulationRule,
    ) -> FrameworkEmbedding {
        let n = self.n_union(f);
        let mut in_union = BitSet::new();
        for &g in &n.faces {
            in_union.insert(g.index());
        }
        let point_map: Vec<usize> = n.vertices.to_vec();
        let mut point_index = alloc::vec![usize::MAX; self.n_vertices()];
        for (i, &v) in point_map.iter().enumerate() {
            point_index[v] = i;
        }
        let points = point_map.iter().map(|&v| self.coords[v].clone()).collect();

        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (i, (a, b, source)) in self.framework_parts(rule).into_iter().enumerate() {
            // An edge lies in the union exactly when its source face does:
            // a diagonal crosses the relative interior of its 2-face.
            if in_union.contains(source.index()) {
                edges.push((point_index[a], point_index[b]));
                edge_map.push(i);
            }
        }
        FrameworkEmbedding {
            framework: Framework::new(self.dim, points, edges),
            point_map,
            edge_map,
        }
    }

    /// Framework edges with the face each one comes from: a 1-face for the
    /// polytope's own edges, a 2-face for triangulation diagonals.
    fn framework_parts(&self, rule: TriangulationRule) -> Vec<(usize, usize, FaceId)> {
        let lat = &self.lattice;
        let mut parts = Vec::new();
        for &e in lat.faces_of_dim(1) {
            let mut it = lat.vertex_set(e).iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            parts.push((a, b, e));
        }
        for &g in lat.faces_of_dim(2) {
            if g == lat.top() {
                continue;
            }
            let atoms: Vec<usize> = lat.vertex_set(g).to_vec();
            if atoms.len() <= 3 {
                continue;
            }
            let pivot = match rule {
                TriangulationRule::FanFromLowest => *atoms.first().unwrap(),
                TriangulationRule::FanFromHighest => *atoms.last().unwrap(),
            };
            // Polygon neighbors of the pivot inside this 2-face.
            let mut neighbors = BitSet::new();
            for &e in lat.faces_of_dim(1) {
                if lat.leq(e, g) && lat.vertex_set(e).contains(pivot) {
                    for w in lat.vertex_set(e).iter() {
                        if w != pivot {
                            neighbors.insert(w);
                        }
                    }
                }
            }
            for &w in &atoms {
                if w != pivot && !neighbors.contains(w) {
                    parts.push((pivot.min(w), pivot.max(w), g));
                }
            }
        }
        parts
    }
}

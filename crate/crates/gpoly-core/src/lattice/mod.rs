//! Graded face posets of polytopes.
//!
//! A [`FaceLattice`] holds every face of a polytope, including the empty face
//! of dimension `-1` and the polytope itself, ordered by inclusion. The order
//! is stored twice: as the covering relation (the Hasse diagram) and as a
//! reachability row per face. Each face also carries the set of atoms
//! (vertices) below it, which is what construction, deduplication and face
//! lookup work with.
//!
//! Lattices are immutable after construction and can be shared freely across
//! threads.

mod build;
mod iso;
mod ops;

pub use iso::are_isomorphic;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;

/// Handle of a face, stable within one lattice.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceId(pub(crate) u32);

impl FaceId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn new(i: usize) -> Self {
        FaceId(i as u32)
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// The input does not describe the face lattice of a polytope.
    NotALattice(String),
    /// The two faces are not comparable in the order.
    NotComparable,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotALattice(reason) => write!(f, "not a polytopal lattice: {}", reason),
            LatticeError::NotComparable => write!(f, "faces are not comparable"),
        }
    }
}

impl core::error::Error for LatticeError {}

/// Outcome of [`FaceLattice::validate`], one flag per structural check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationReport {
    /// Unique minimum and unique maximum.
    pub bounded: bool,
    /// Bottom has dimension -1, the top has the declared dimension, and every
    /// covering step raises dimension by exactly one.
    pub graded: bool,
    /// Every interval spanning two dimensions has exactly two interior faces.
    pub diamond: bool,
    /// The alternating sum of face counts vanishes (for dimension >= 0).
    pub euler: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.bounded && self.graded && self.diamond && self.euler
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn mark(ok: bool) -> &'static str {
            if ok {
                "pass"
            } else {
                "FAIL"
            }
        }
        write!(
            f,
            "bounded: {}, graded: {}, diamond: {}, euler: {}",
            mark(self.bounded),
            mark(self.graded),
            mark(self.diamond),
            mark(self.euler)
        )
    }
}

/// A lattice derived from another one, together with the face correspondence.
///
/// `to_parent[i]` is the parent face of the derived face with index `i`.
#[derive(Debug, Clone)]
pub struct MappedLattice {
    pub lattice: FaceLattice,
    pub to_parent: Vec<FaceId>,
}

impl MappedLattice {
    pub fn parent_of(&self, f: FaceId) -> FaceId {
        self.to_parent[f.index()]
    }

    /// Derived face corresponding to `parent`, if it lies in the image.
    pub fn image_of(&self, parent: FaceId) -> Option<FaceId> {
        self.to_parent
            .iter()
            .position(|&p| p == parent)
            .map(FaceId::new)
    }
}

/// A lattice built from two factors, with the component pair per face.
///
/// For a product the bottom face corresponds to no pair, so its components
/// are `None`; for a join every face is a genuine pair.
#[derive(Debug, Clone)]
pub struct PairedLattice {
    pub lattice: FaceLattice,
    pub pairs: Vec<(Option<FaceId>, Option<FaceId>)>,
}

impl PairedLattice {
    pub fn components_of(&self, f: FaceId) -> (Option<FaceId>, Option<FaceId>) {
        self.pairs[f.index()]
    }

    pub fn face_from_components(&self, a: Option<FaceId>, b: Option<FaceId>) -> Option<FaceId> {
        self.pairs
            .iter()
            .position(|&p| p == (a, b))
            .map(FaceId::new)
    }
}

/// The face lattice of a polytope: a bounded poset graded by face dimension.
///
/// Faces are sorted by `(dimension, atom set)`, so two lattices built from the
/// same vertex-facet incidences are equal structure for structure.
#[derive(Clone, PartialEq, Eq)]
pub struct FaceLattice {
    dim: i64,
    n_atoms: usize,
    /// Dimension of each face.
    dims: Vec<i64>,
    /// Atoms (vertices) below each face. The empty face has no atoms.
    atoms: Vec<BitSet>,
    lower_covers: Vec<Vec<FaceId>>,
    upper_covers: Vec<Vec<FaceId>>,
    /// `below[f]` holds the indices of all faces `<=` face `f`, including `f`.
    below: Vec<BitSet>,
    /// Face ids per dimension; index `k` holds dimension `k - 1`.
    by_dim: Vec<Vec<FaceId>>,
    bottom: FaceId,
    top: FaceId,
}

impl FaceLattice {
    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn num_faces(&self) -> usize {
        self.dims.len()
    }

    pub fn bottom(&self) -> FaceId {
        self.bottom
    }

    pub fn top(&self) -> FaceId {
        self.top
    }

    pub fn dim_of(&self, f: FaceId) -> i64 {
        self.dims[f.index()]
    }

    /// The atoms below `f`; this is the vertex set of the face.
    pub fn vertex_set(&self, f: FaceId) -> &BitSet {
        &self.atoms[f.index()]
    }

    pub fn face_ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.num_faces()).map(FaceId::new)
    }

    /// Whether `a <= b` in the face order.
    pub fn leq(&self, a: FaceId, b: FaceId) -> bool {
        self.below[b.index()].contains(a.index())
    }

    /// The indices of all faces `<= f`, including `f` itself.
    pub fn down_set(&self, f: FaceId) -> &BitSet {
        &self.below[f.index()]
    }

    pub fn lt(&self, a: FaceId, b: FaceId) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn lower_covers(&self, f: FaceId) -> &[FaceId] {
        &self.lower_covers[f.index()]
    }

    pub fn upper_covers(&self, f: FaceId) -> &[FaceId] {
        &self.upper_covers[f.index()]
    }

    /// Faces of dimension `k`, in face order. Empty if `k` is out of range.
    pub fn faces_of_dim(&self, k: i64) -> &[FaceId] {
        if k < -1 || k > self.dim {
            return &[];
        }
        &self.by_dim[(k + 1) as usize]
    }

    /// Face counts per dimension, from `-1` to `dim` inclusive.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        self.by_dim.iter().map(|v| v.len()).collect()
    }

    /// Faces of dimension `dim - 1`.
    pub fn facets(&self) -> &[FaceId] {
        self.faces_of_dim(self.dim - 1)
    }

    pub fn facets_containing(&self, f: FaceId) -> Vec<FaceId> {
        self.facets()
            .iter()
            .copied()
            .filter(|&h| self.leq(f, h))
            .collect()
    }

    /// Looks a face up by its exact vertex set.
    pub fn face_by_vertex_set(&self, atoms: &BitSet) -> Option<FaceId> {
        self.face_ids().find(|&f| self.vertex_set(f) == atoms)
    }

    /// The unique smallest face containing both `a` and `b`.
    pub fn join_of_faces(&self, a: FaceId, b: FaceId) -> FaceId {
        let lo = self.dim_of(a).max(self.dim_of(b));
        for k in lo..=self.dim {
            let mut found = None;
            for &f in self.faces_of_dim(k) {
                if self.leq(a, f) && self.leq(b, f) {
                    debug_assert!(found.is_none(), "join is not unique");
                    found = Some(f);
                    #[cfg(not(debug_assertions))]
                    break;
                }
            }
            if let Some(f) = found {
                return f;
            }
        }
        self.top
    }

    /// All ordered comparable pairs `(a, b)` with `a <= b`.
    pub fn comparable_pairs(&self) -> Vec<(FaceId, FaceId)> {
        let mut out = Vec::new();
        for b in self.face_ids() {
            for a_idx in self.below[b.index()].iter() {
                out.push((FaceId::new(a_idx), b));
            }
        }
        out
    }
}

impl fmt::Debug for FaceLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FaceLattice(dim {}, counts {:?})",
            self.dim,
            self.counts_by_dim()
        )
    }
}

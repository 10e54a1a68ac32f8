//! Construction and validation of face lattices.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{FaceId, FaceLattice, LatticeError, ValidationReport};
use crate::bitset::BitSet;

impl FaceLattice {
    /// The lattice of the empty polytope: a single face of dimension `-1`.
    pub fn empty_polytope() -> Self {
        assemble(-1, 0, vec![(-1, BitSet::new())], &[]).0
    }

    /// The lattice of a point: the empty face and one vertex.
    pub fn point() -> Self {
        assemble(
            0,
            1,
            vec![(-1, BitSet::new()), (0, BitSet::singleton(0))],
            &[(0, 1)],
        )
        .0
    }

    /// Builds the full face lattice from vertex-facet incidences by closing
    /// the facet atom sets under intersection.
    ///
    /// Faces are the intersections of facet subsets plus the full atom set
    /// (the polytope) and the empty set (the empty face); dimensions are
    /// assigned by maximal-chain rank from the bottom. The result is validated
    /// and non-polytopal input is rejected.
    pub fn from_vertex_facet_incidence(
        n_atoms: usize,
        facets: &[BitSet],
        dim: i64,
    ) -> Result<Self, LatticeError> {
        if dim < -1 {
            return Err(LatticeError::NotALattice(format!(
                "declared dimension {} is below -1",
                dim
            )));
        }
        if dim <= 0 {
            if !facets.is_empty() {
                return Err(LatticeError::NotALattice(format!(
                    "a {}-dimensional lattice admits no facet sets",
                    dim
                )));
            }
            return match (dim, n_atoms) {
                (-1, 0) => Ok(Self::empty_polytope()),
                (0, 1) => Ok(Self::point()),
                _ => Err(LatticeError::NotALattice(format!(
                    "dimension {} is incompatible with {} atoms",
                    dim, n_atoms
                ))),
            };
        }

        let full = BitSet::full(n_atoms);
        for (i, f) in facets.iter().enumerate() {
            if !f.is_subset(&full) {
                return Err(LatticeError::NotALattice(format!(
                    "facet {} contains an atom outside 0..{}",
                    i, n_atoms
                )));
            }
            for (j, g) in facets.iter().enumerate() {
                if i != j && f.is_subset(g) {
                    return Err(LatticeError::NotALattice(format!(
                        "facets must be pairwise incomparable (facet {} is inside facet {})",
                        i, j
                    )));
                }
            }
        }

        // Intersection closure starting from the full polytope.
        let mut sets: BTreeSet<BitSet> = BTreeSet::new();
        let mut stack = vec![full.clone()];
        sets.insert(full.clone());
        while let Some(s) = stack.pop() {
            for f in facets {
                let t = s.intersection(f);
                if sets.insert(t.clone()) {
                    stack.push(t);
                }
            }
        }
        sets.insert(BitSet::new());

        // Order by cardinality so lower covers precede their faces.
        let mut face_sets: Vec<BitSet> = sets.into_iter().collect();
        face_sets.sort_by_key(|s| (s.len(), s.clone()));

        // Covers: maximal strict subsets.
        let mut covers: Vec<(usize, usize)> = Vec::new();
        for (bi, b) in face_sets.iter().enumerate() {
            let mut chosen: Vec<usize> = Vec::new();
            for ai in (0..bi).rev() {
                let a = &face_sets[ai];
                if a.len() < b.len()
                    && a.is_subset(b)
                    && !chosen.iter().any(|&c| a.is_subset(&face_sets[c]))
                {
                    chosen.push(ai);
                }
            }
            for ai in chosen {
                covers.push((ai, bi));
            }
        }

        // Rank by longest chain from the bottom (index 0 after the sort).
        let mut rank = vec![0i64; face_sets.len()];
        for &(a, b) in &covers {
            rank[b] = rank[b].max(rank[a] + 1);
        }
        let dims: Vec<i64> = rank.iter().map(|r| r - 1).collect();
        let top_dim = *dims.last().unwrap_or(&-1);
        if top_dim != dim {
            return Err(LatticeError::NotALattice(format!(
                "maximal chain rank gives dimension {}, declared {}",
                top_dim, dim
            )));
        }

        let faces: Vec<(i64, BitSet)> = dims.into_iter().zip(face_sets).collect();
        let lattice = assemble(dim, n_atoms, faces, &covers).0;

        // Every atom must appear as a vertex of the lattice.
        let vertices = lattice.faces_of_dim(0);
        if vertices.len() != n_atoms
            || vertices
                .iter()
                .any(|&v| lattice.vertex_set(v).len() != 1)
        {
            return Err(LatticeError::NotALattice(
                "atoms and 0-dimensional faces do not match one for one".into(),
            ));
        }

        let report = lattice.validate();
        if !report.passed() {
            return Err(LatticeError::NotALattice(format!(
                "validation failed ({})",
                report
            )));
        }
        Ok(lattice)
    }

    /// Builds a lattice directly from a Hasse diagram without validation.
    ///
    /// Intended for feeding [`FaceLattice::validate`] with structures that may
    /// not be polytopal. Atom sets are derived from reachability to the faces
    /// of dimension zero. The cover graph must be acyclic.
    pub fn from_covers(dim: i64, face_dims: &[i64], covers: &[(usize, usize)]) -> Self {
        let n = face_dims.len();
        // Reachability on the raw order to recover atom sets.
        let order = topological_order(n, covers);
        let mut below: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
        let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in covers {
            lower[b].push(a);
        }
        for &f in &order {
            for &c in &lower[f] {
                let merged = below[f].union(&below[c]);
                below[f] = merged;
            }
        }
        let faces: Vec<(i64, BitSet)> = (0..n)
            .map(|f| {
                let atoms: BitSet = below[f]
                    .iter()
                    .filter(|&g| face_dims[g] == 0)
                    .collect::<Vec<_>>()
                    .into_iter()
                    .collect();
                (face_dims[f], atoms)
            })
            .collect();
        let n_atoms = face_dims.iter().filter(|&&d| d == 0).count();
        assemble(dim, n_atoms, faces, covers).0
    }

    /// Checks boundedness, gradedness, the diamond property and the Euler
    /// relation, reporting each outcome separately.
    pub fn validate(&self) -> ValidationReport {
        let n = self.num_faces();
        let minimal: Vec<FaceId> = self
            .face_ids()
            .filter(|&f| self.lower_covers(f).is_empty())
            .collect();
        let maximal: Vec<FaceId> = self
            .face_ids()
            .filter(|&f| self.upper_covers(f).is_empty())
            .collect();
        let bounded = minimal.len() == 1
            && maximal.len() == 1
            && self
                .face_ids()
                .all(|f| self.leq(minimal[0], f) && self.leq(f, maximal[0]));

        let mut graded = bounded
            && self.dim_of(minimal[0]) == -1
            && self.dim_of(maximal[0]) == self.dim;
        if graded {
            'outer: for b in self.face_ids() {
                for &a in self.lower_covers(b) {
                    if self.dim_of(b) != self.dim_of(a) + 1 {
                        graded = false;
                        break 'outer;
                    }
                }
            }
        }

        // above[a] = faces >= a, for interval cardinalities.
        let mut above: Vec<BitSet> = vec![BitSet::new(); n];
        for b in self.face_ids() {
            for a in self.below[b.index()].iter() {
                above[a].insert(b.index());
            }
        }
        let mut diamond = true;
        'pairs: for c in self.face_ids() {
            for a_idx in self.below[c.index()].iter() {
                let a = FaceId::new(a_idx);
                if self.dim_of(c) - self.dim_of(a) == 2 {
                    // |[a, c]| counts both endpoints plus the interior.
                    if self.below[c.index()].intersection_len(&above[a_idx]) != 4 {
                        diamond = false;
                        break 'pairs;
                    }
                }
            }
        }

        let euler = if self.dim < 0 {
            true
        } else {
            let signed: i64 = self
                .face_ids()
                .map(|f| if self.dim_of(f) % 2 == 0 { 1 } else { -1 })
                .sum();
            signed == 0
        };

        ValidationReport {
            bounded,
            graded,
            diamond,
            euler,
        }
    }
}

fn topological_order(n: usize, covers: &[(usize, usize)]) -> Vec<usize> {
    let mut indegree = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in covers {
        indegree[b] += 1;
        out[a].push(b);
    }
    let mut queue: Vec<usize> = (0..n).filter(|&f| indegree[f] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(f) = queue.pop() {
        order.push(f);
        for &g in &out[f] {
            indegree[g] -= 1;
            if indegree[g] == 0 {
                queue.push(g);
            }
        }
    }
    assert_eq!(order.len(), n, "cover relation must be acyclic");
    order
}

/// Sorts faces canonically by `(dim, atoms)`, wires the Hasse diagram and the
/// reachability rows, and returns the lattice together with the permutation
/// `perm[new_index] = input_index`.
pub(super) fn assemble(
    dim: i64,
    n_atoms: usize,
    faces: Vec<(i64, BitSet)>,
    covers: &[(usize, usize)],
) -> (FaceLattice, Vec<usize>) {
    let n = faces.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&a, &b| faces[a].cmp(&faces[b]));
    let mut inv = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }

    let mut dims = Vec::with_capacity(n);
    let mut atoms = Vec::with_capacity(n);
    for &old in &perm {
        dims.push(faces[old].0);
        atoms.push(faces[old].1.clone());
    }

    let mut lower_covers: Vec<Vec<FaceId>> = vec![Vec::new(); n];
    let mut upper_covers: Vec<Vec<FaceId>> = vec![Vec::new(); n];
    for &(a, b) in covers {
        let (a, b) = (inv[a], inv[b]);
        lower_covers[b].push(FaceId::new(a));
        upper_covers[a].push(FaceId::new(b));
    }
    for l in lower_covers.iter_mut().chain(upper_covers.iter_mut()) {
        l.sort();
    }

    // Reachability, in topological order of the (relabelled) Hasse diagram.
    let relabelled: Vec<(usize, usize)> = covers
        .iter()
        .map(|&(a, b)| (inv[a], inv[b]))
        .collect();
    let order = topological_order(n, &relabelled);
    let mut below: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
    for &f in &order {
        for c in &lower_covers[f] {
            let merged = below[f].union(&below[c.index()]);
            below[f] = merged;
        }
    }

    let span = (dim + 2).max(1) as usize;
    let mut by_dim: Vec<Vec<FaceId>> = vec![Vec::new(); span];
    for (i, &d) in dims.iter().enumerate() {
        if d >= -1 && d <= dim {
            by_dim[(d + 1) as usize].push(FaceId::new(i));
        }
    }

    let bottom = FaceId::new(
        (0..n)
            .find(|&f| lower_covers[f].is_empty())
            .unwrap_or(0),
    );
    let top = FaceId::new(
        (0..n)
            .rev()
            .find(|&f| upper_covers[f].is_empty())
            .unwrap_or(n.saturating_sub(1)),
    );

    (
        FaceLattice {
            dim,
            n_atoms,
            dims,
            atoms,
            lower_covers,
            upper_covers,
            below,
            by_dim,
            bottom,
            top,
        },
        perm,
    )
}

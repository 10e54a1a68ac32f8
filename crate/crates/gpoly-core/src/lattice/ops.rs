//! Derived lattices: intervals, opposites, products and joins.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::build::assemble;
use super::{FaceId, FaceLattice, LatticeError, MappedLattice, PairedLattice};
use crate::bitset::BitSet;

impl FaceLattice {
    /// The interval `[bottom, top]`, re-graded so its minimum has dimension
    /// `-1`. The resulting lattice is the face poset of the quotient polytope
    /// when `bottom` is the empty face of that quotient.
    pub fn interval(&self, bottom: FaceId, top: FaceId) -> Result<MappedLattice, LatticeError> {
        if !self.leq(bottom, top) {
            return Err(LatticeError::NotComparable);
        }
        let members: Vec<FaceId> = self
            .face_ids()
            .filter(|&f| self.leq(bottom, f) && self.leq(f, top))
            .collect();
        let mut index_of: BTreeMap<FaceId, usize> = BTreeMap::new();
        for (i, &f) in members.iter().enumerate() {
            index_of.insert(f, i);
        }

        let shift = self.dim_of(bottom) + 1;
        let new_dim = self.dim_of(top) - shift;
        // Atoms of the interval are its faces of new dimension 0.
        let new_atoms: Vec<FaceId> = members
            .iter()
            .copied()
            .filter(|&f| self.dim_of(f) - shift == 0)
            .collect();

        let faces: Vec<(i64, BitSet)> = members
            .iter()
            .map(|&f| {
                let atoms: BitSet = new_atoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &a)| self.leq(a, f))
                    .map(|(j, _)| j)
                    .collect();
                (self.dim_of(f) - shift, atoms)
            })
            .collect();

        let mut covers: Vec<(usize, usize)> = Vec::new();
        for (bi, &f) in members.iter().enumerate() {
            for &c in self.lower_covers(f) {
                if let Some(&ci) = index_of.get(&c) {
                    covers.push((ci, bi));
                }
            }
        }

        let (lattice, perm) = assemble(new_dim, new_atoms.len(), faces, &covers);
        let to_parent = perm.iter().map(|&old| members[old]).collect();
        Ok(MappedLattice { lattice, to_parent })
    }

    /// The opposite lattice: the order reversed, a face of dimension `e`
    /// becoming one of dimension `dim - 1 - e`. This is the face lattice of
    /// the polar polytope.
    pub fn opposite(&self) -> MappedLattice {
        let d = self.dim;
        let coatoms: Vec<FaceId> = self.faces_of_dim(d - 1).to_vec();
        let faces: Vec<(i64, BitSet)> = self
            .face_ids()
            .map(|f| {
                let atoms: BitSet = coatoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &h)| self.leq(f, h))
                    .map(|(j, _)| j)
                    .collect();
                (d - 1 - self.dim_of(f), atoms)
            })
            .collect();
        let mut covers: Vec<(usize, usize)> = Vec::new();
        for f in self.face_ids() {
            for &c in self.lower_covers(f) {
                covers.push((f.index(), c.index()));
            }
        }
        let (lattice, perm) = assemble(d, coatoms.len(), faces, &covers);
        let to_parent = perm.iter().map(|&old| FaceId::new(old)).collect();
        MappedLattice { lattice, to_parent }
    }

    /// The face lattice of the product polytope: nonempty faces are pairs of
    /// nonempty faces with dimensions adding, plus a new empty face.
    pub fn lattice_product(&self, other: &FaceLattice) -> PairedLattice {
        assert!(
            self.dim >= 0 && other.dim >= 0,
            "product factors must have dimension >= 0"
        );
        let n2_atoms = other.n_atoms;
        let atom_index = |a1: usize, a2: usize| a1 * n2_atoms + a2;

        let mut faces: Vec<(i64, BitSet)> = Vec::new();
        let mut pairs: Vec<(Option<FaceId>, Option<FaceId>)> = Vec::new();
        let mut index_of: BTreeMap<(FaceId, FaceId), usize> = BTreeMap::new();

        faces.push((-1, BitSet::new()));
        pairs.push((None, None));

        for f1 in self.face_ids().filter(|&f| f != self.bottom()) {
            for f2 in other.face_ids().filter(|&f| f != other.bottom()) {
                let mut atoms = BitSet::new();
                for a1 in self.vertex_set(f1).iter() {
                    for a2 in other.vertex_set(f2).iter() {
                        atoms.insert(atom_index(a1, a2));
                    }
                }
                index_of.insert((f1, f2), faces.len());
                faces.push((self.dim_of(f1) + other.dim_of(f2), atoms));
                pairs.push((Some(f1), Some(f2)));
            }
        }

        let mut covers: Vec<(usize, usize)> = Vec::new();
        for (&(f1, f2), &fi) in &index_of {
            if self.dim_of(f1) + other.dim_of(f2) == 0 {
                covers.push((0, fi));
            }
            for &c1 in self.lower_covers(f1) {
                if let Some(&ci) = index_of.get(&(c1, f2)) {
                    covers.push((ci, fi));
                }
            }
            for &c2 in other.lower_covers(f2) {
                if let Some(&ci) = index_of.get(&(f1, c2)) {
                    covers.push((ci, fi));
                }
            }
        }

        let (lattice, perm) = assemble(
            self.dim + other.dim,
            self.n_atoms * other.n_atoms,
            faces,
            &covers,
        );
        let pairs = perm.iter().map(|&old| pairs[old]).collect();
        PairedLattice { lattice, pairs }
    }

    /// The face lattice of the join: faces are pairs of faces including the
    /// empty ones, ordered componentwise, with `dim (F1, F2) = dim F1 +
    /// dim F2 + 1`.
    pub fn lattice_join(&self, other: &FaceLattice) -> PairedLattice {
        let offset = self.n_atoms;
        let mut faces: Vec<(i64, BitSet)> = Vec::new();
        let mut pairs: Vec<(Option<FaceId>, Option<FaceId>)> = Vec::new();
        let mut index_of: BTreeMap<(FaceId, FaceId), usize> = BTreeMap::new();

        for f1 in self.face_ids() {
            for f2 in other.face_ids() {
                let atoms = self
                    .vertex_set(f1)
                    .union(&other.vertex_set(f2).shift_up(offset));
                index_of.insert((f1, f2), faces.len());
                faces.push((self.dim_of(f1) + other.dim_of(f2) + 1, atoms));
                pairs.push((Some(f1), Some(f2)));
            }
        }

        let mut covers: Vec<(usize, usize)> = Vec::new();
        for (&(f1, f2), &fi) in &index_of {
            for &c1 in self.lower_covers(f1) {
                covers.push((index_of[&(c1, f2)], fi));
            }
            for &c2 in other.lower_covers(f2) {
                covers.push((index_of[&(f1, c2)], fi));
            }
        }

        let (lattice, perm) = assemble(
            self.dim + other.dim + 1,
            self.n_atoms + other.n_atoms,
            faces,
            &covers,
        );
        let pairs = perm.iter().map(|&old| pairs[old]).collect();
        PairedLattice { lattice, pairs }
    }
}

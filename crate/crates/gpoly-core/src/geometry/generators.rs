//! Generators for the standard polytope families.
//!
//! Product-like constructions (pyramid, prism, join) derive their facet
//! vertex sets combinatorially from the factors, so no hyperplane enumeration
//! runs; the tests cross-check those incidences against brute-force
//! enumeration on small instances.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{Coord, Polytope};
use crate::bitset::BitSet;
use crate::ratmat::ratio;

fn int(x: i64) -> Coord {
    Coord::from_integer(BigInt::from(x))
}

/// The `d`-simplex: the origin together with the standard basis vectors.
pub fn simplex(d: usize) -> Polytope {
    let mut vertices = vec![vec![Coord::zero(); d]];
    for i in 0..d {
        let mut v = vec![Coord::zero(); d];
        v[i] = Coord::one();
        vertices.push(v);
    }
    let facets: Vec<BitSet> = if d == 0 {
        Vec::new()
    } else {
        // Leaving out one vertex gives a facet.
        (0..=d)
            .map(|skip| (0..=d).filter(|&i| i != skip).collect())
            .collect()
    };
    Polytope::from_vertices_with_facets(vertices, facets).expect("simplex is a polytope")
}

/// The `d`-cube `{0,1}^d`; vertex `v` has bit `i` of its index as its `i`-th
/// coordinate.
pub fn cube(d: usize) -> Polytope {
    let vertices: Vec<Vec<Coord>> = (0..1usize << d)
        .map(|v| (0..d).map(|i| int(((v >> i) & 1) as i64)).collect())
        .collect();
    let mut facets = Vec::new();
    for axis in 0..d {
        for side in 0..2usize {
            facets.push(
                (0..1usize << d)
                    .filter(|v| (v >> axis) & 1 == side)
                    .collect(),
            );
        }
    }
    Polytope::from_vertices_with_facets(vertices, facets).expect("cube is a polytope")
}

/// The `d`-cross-polytope with vertices at plus and minus the basis vectors;
/// vertex `2i` is `+e_i` and vertex `2i + 1` is `-e_i`.
pub fn cross_polytope(d: usize) -> Polytope {
    assert!(d >= 1, "cross-polytope needs dimension >= 1");
    let mut vertices = Vec::new();
    for i in 0..d {
        for sign in [1i64, -1] {
            let mut v = vec![Coord::zero(); d];
            v[i] = int(sign);
            vertices.push(v);
        }
    }
    // One vertex of each antipodal pair per sign pattern.
    let mut facets = Vec::new();
    for pattern in 0..1usize << d {
        facets.push((0..d).map(|i| 2 * i + ((pattern >> i) & 1)).collect());
    }
    Polytope::from_vertices_with_facets(vertices, facets).expect("cross-polytope is a polytope")
}

/// A convex `n`-gon with integer coordinates on the parabola `(i, i^2)`.
pub fn polygon(n: usize) -> Polytope {
    assert!(n >= 3, "polygon needs at least three vertices");
    let vertices: Vec<Vec<Coord>> = (0..n as i64).map(|i| vec![int(i), int(i * i)]).collect();
    let facets: Vec<BitSet> = (0..n)
        .map(|i| [i, (i + 1) % n].into_iter().collect())
        .collect();
    Polytope::from_vertices_with_facets(vertices, facets).expect("polygon is a polytope")
}

/// The join of two polytopes, realized by embedding the factors in
/// complementary affine subspaces: `p` at height 0 and `q` at height 1.
/// Vertices of `p` come first.
pub fn join(p: &Polytope, q: &Polytope) -> Polytope {
    let (dp, dq) = (p.dim(), q.dim());
    let (np, nq) = (p.n_vertices(), q.n_vertices());
    let width = dp + dq + 1;
    let mut vertices = Vec::with_capacity(np + nq);
    for v in p.coords() {
        let mut row = Vec::with_capacity(width);
        row.extend(v.iter().cloned());
        row.resize(width, Coord::zero());
        vertices.push(row);
    }
    for w in q.coords() {
        let mut row = vec![Coord::zero(); dp];
        row.extend(w.iter().cloned());
        row.push(Coord::one());
        vertices.push(row);
    }

    // Facets: (facet of p) * q and p * (facet of q), where the lattice facet
    // of a point is its empty face.
    let all_p: BitSet = (0..np).collect();
    let all_q: BitSet = (np..np + nq).collect();
    let mut facets = Vec::new();
    let lp = p.face_lattice();
    for &f in lp.faces_of_dim(lp.dim() - 1) {
        facets.push(lp.vertex_set(f).union(&all_q));
    }
    let lq = q.face_lattice();
    for &g in lq.faces_of_dim(lq.dim() - 1) {
        facets.push(all_p.union(&lq.vertex_set(g).shift_up(np)));
    }
    Polytope::from_vertices_with_facets(vertices, facets).expect("join of polytopes")
}

/// The pyramid over a base: the join of a point (the apex, vertex 0) with it.
pub fn pyramid(base: &Polytope) -> Polytope {
    join(&simplex(0), base)
}

/// The prism over a base: its product with a segment. The bottom copy's
/// vertices come first.
pub fn prism(base: &Polytope) -> Polytope {
    let n = base.n_vertices();
    let mut vertices = Vec::with_capacity(2 * n);
    for height in [Coord::zero(), Coord::one()] {
        for v in base.coords() {
            let mut row = v.clone();
            row.push(height.clone());
            vertices.push(row);
        }
    }
    let mut facets: Vec<BitSet> = base
        .facet_incidence()
        .iter()
        .map(|f| f.union(&f.shift_up(n)))
        .collect();
    facets.push((0..n).collect());
    facets.push((n..2 * n).collect());
    Polytope::from_vertices_with_facets(vertices, facets).expect("prism over a polytope")
}

/// A seeded random affine change of coordinates (shear, scale and translate)
/// applied to the vertices. The map is invertible, so the face lattice is
/// preserved; facets are re-enumerated from scratch on the new coordinates.
pub fn random_perturbed(p: &Polytope, seed: u64) -> Polytope {
    let m = p.ambient_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = |lo: i64, hi: i64| -> i64 {
        lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64
    };

    // A = D * U with D a positive diagonal and U unit upper triangular.
    let mut matrix = vec![vec![Coord::zero(); m]; m];
    for (i, row) in matrix.iter_mut().enumerate() {
        let diag = ratio(pick(1, 3), pick(1, 2));
        for (j, entry) in row.iter_mut().enumerate().skip(i) {
            *entry = if j == i {
                diag.clone()
            } else {
                &diag * ratio(pick(-2, 2), pick(1, 3))
            };
        }
    }
    let translation: Vec<Coord> = (0..m).map(|_| ratio(pick(-3, 3), pick(1, 2))).collect();

    let vertices: Vec<Vec<Coord>> = p
        .vertices()
        .iter()
        .map(|v| {
            (0..m)
                .map(|i| {
                    let mut x = translation[i].clone();
                    for (a, b) in matrix[i][i..].iter().zip(&v[i..]) {
                        x += a * b;
                    }
                    x
                })
                .collect()
        })
        .collect();
    Polytope::from_vertices(vertices).expect("affine image of a polytope")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::facet_enumeration;
    use crate::lattice::are_isomorphic;

    #[test]
    fn family_face_counts() {
        assert_eq!(simplex(0).face_lattice().counts_by_dim(), [1, 1]);
        assert_eq!(simplex(3).face_lattice().counts_by_dim(), [1, 4, 6, 4, 1]);
        assert_eq!(cube(2).face_lattice().counts_by_dim(), [1, 4, 4, 1]);
        assert_eq!(cube(3).face_lattice().counts_by_dim(), [1, 8, 12, 6, 1]);
        assert_eq!(
            cross_polytope(3).face_lattice().counts_by_dim(),
            [1, 6, 12, 8, 1]
        );
        assert_eq!(polygon(5).face_lattice().counts_by_dim(), [1, 5, 5, 1]);
        assert_eq!(
            pyramid(&cube(2)).face_lattice().counts_by_dim(),
            [1, 5, 8, 5, 1]
        );
    }

    #[test]
    fn combinatorial_facets_match_enumeration() {
        for p in [
            simplex(3),
            cube(3),
            cross_polytope(3),
            polygon(6),
            pyramid(&cube(2)),
            prism(&polygon(3)),
            join(&simplex(1), &polygon(3)),
        ] {
            let mut enumerated = facet_enumeration(p.vertices()).unwrap();
            enumerated.sort();
            let mut declared = p.facet_incidence().to_vec();
            declared.sort();
            assert_eq!(enumerated, declared);
        }
    }

    #[test]
    fn join_lattice_matches_lattice_join() {
        for (p, q) in [
            (simplex(0), cube(2)),
            (simplex(1), polygon(3)),
            (polygon(4), simplex(1)),
        ] {
            let geometric = join(&p, &q);
            let combinatorial = p.face_lattice().lattice_join(q.face_lattice());
            assert!(are_isomorphic(
                geometric.face_lattice(),
                &combinatorial.lattice
            ));
        }
    }

    #[test]
    fn prism_lattice_matches_lattice_product() {
        for base in [polygon(3), cube(2), polygon(5)] {
            let geometric = prism(&base);
            let combinatorial = base
                .face_lattice()
                .lattice_product(simplex(1).face_lattice());
            assert!(are_isomorphic(
                geometric.face_lattice(),
                &combinatorial.lattice
            ));
        }
    }

    #[test]
    fn facet_counts_match_lattice() {
        for p in [cube(3), cross_polytope(2), prism(&polygon(4))] {
            let lat = p.face_lattice();
            assert_eq!(
                p.facet_incidence().len(),
                lat.faces_of_dim(lat.dim() - 1).len()
            );
        }
    }

    #[test]
    fn perturbation_preserves_the_lattice() {
        for (p, seed) in [(cube(3), 7u64), (polygon(5), 11), (cross_polytope(3), 13)] {
            let q = random_perturbed(&p, seed);
            assert_eq!(q.ambient_dim(), p.ambient_dim());
            assert_eq!(
                q.face_lattice().counts_by_dim(),
                p.face_lattice().counts_by_dim()
            );
            // Same vertex order and an affine map: identical facet sets.
            let mut qs = q.facet_incidence().to_vec();
            let mut ps = p.facet_incidence().to_vec();
            qs.sort();
            ps.sort();
            assert_eq!(qs, ps);
            assert!(are_isomorphic(q.face_lattice(), p.face_lattice()));
        }
    }

    #[test]
    fn perturbation_is_deterministic_per_seed() {
        let a = random_perturbed(&cube(2), 5);
        let b = random_perturbed(&cube(2), 5);
        let c = random_perturbed(&cube(2), 6);
        assert_eq!(a.vertices(), b.vertices());
        assert_ne!(a.vertices(), c.vertices());
    }
}

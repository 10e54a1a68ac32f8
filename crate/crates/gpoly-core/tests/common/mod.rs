//! The standard test corpus: simplices, cubes, cross-polytopes, polygons,
//! pyramid/prism/join combinations and seeded perturbed copies.

use gpoly_core::geometry::{
    cross_polytope, cube, join, polygon, prism, pyramid, random_perturbed, simplex,
};
use gpoly_core::{BitSet, FaceLattice, Polytope};

pub struct CorpusEntry {
    pub name: String,
    pub lattice: FaceLattice,
    /// Present for entries with a geometric realization.
    pub polytope: Option<Polytope>,
    /// Ground truth from the construction, for the simplex characterization.
    pub is_simplex: bool,
    /// Vertex sets of generator join factors, when the entry is a join.
    pub join_factor_faces: Vec<BitSet>,
}

fn geometric(name: &str, polytope: Polytope, is_simplex: bool) -> CorpusEntry {
    CorpusEntry {
        name: name.to_string(),
        lattice: polytope.face_lattice().clone(),
        polytope: Some(polytope),
        is_simplex,
        join_factor_faces: Vec::new(),
    }
}

fn join_entry(name: &str, a: &Polytope, b: &Polytope, is_simplex: bool) -> CorpusEntry {
    let p = join(a, b);
    let na = a.n_vertices();
    let nb = b.n_vertices();
    let factor_a: BitSet = (0..na).collect();
    let factor_b: BitSet = (na..na + nb).collect();
    CorpusEntry {
        name: name.to_string(),
        lattice: p.face_lattice().clone(),
        polytope: Some(p),
        is_simplex,
        join_factor_faces: vec![factor_a, factor_b],
    }
}

fn lattice_only(name: &str, lattice: FaceLattice, is_simplex: bool) -> CorpusEntry {
    CorpusEntry {
        name: name.to_string(),
        lattice,
        polytope: None,
        is_simplex,
        join_factor_faces: Vec::new(),
    }
}

/// The full corpus. Entries of dimension five and above come in lattice-only
/// where hull enumeration would be wasteful.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut entries = Vec::new();

    for d in 0..=6usize {
        entries.push(geometric(&format!("simplex{}", d), simplex(d), true));
    }
    for d in 1..=4usize {
        entries.push(geometric(&format!("cube{}", d), cube(d), d <= 1));
    }
    for d in 2..=4usize {
        entries.push(geometric(
            &format!("cross{}", d),
            cross_polytope(d),
            false,
        ));
    }
    for n in 3..=8usize {
        entries.push(geometric(&format!("polygon{}", n), polygon(n), n == 3));
    }

    entries.push(geometric("pyramid_square", pyramid(&cube(2)), false));
    entries.push(geometric("pyramid_cube3", pyramid(&cube(3)), false));
    entries.push(geometric("prism_triangle", prism(&polygon(3)), false));
    entries.push(geometric("prism_pentagon", prism(&polygon(5)), false));
    entries.push(geometric("prism_cross3", prism(&cross_polytope(3)), false));

    // Joins; a join of simplices is again a simplex.
    entries.push(join_entry("join_point_square", &simplex(0), &cube(2), false));
    entries.push(join_entry(
        "join_segment_triangle",
        &simplex(1),
        &polygon(3),
        true,
    ));
    entries.push(join_entry(
        "join_square_triangle",
        &cube(2),
        &polygon(3),
        false,
    ));

    // Dimension five and six via combinatorial constructions.
    entries.push(lattice_only(
        "prism_cube4_lattice",
        cube(4)
            .face_lattice()
            .lattice_product(simplex(1).face_lattice())
            .lattice,
        false,
    ));
    entries.push(lattice_only(
        "join_square_square_lattice",
        cube(2).face_lattice().lattice_join(cube(2).face_lattice()).lattice,
        false,
    ));

    for (base, seed) in perturbation_seeds() {
        let p = base_polytope(base);
        entries.push(geometric(
            &format!("{}_perturbed", base),
            random_perturbed(&p, seed),
            p.n_vertices() == p.dim() + 1,
        ));
    }

    entries
}

/// The pairs driving the combinatorial-invariance checks.
pub fn perturbation_seeds() -> Vec<(&'static str, u64)> {
    vec![
        ("cube3", 1),
        ("cross3", 2),
        ("polygon6", 3),
        ("pyramid_square", 4),
        ("cube4", 5),
    ]
}

pub fn base_polytope(name: &str) -> Polytope {
    match name {
        "cube3" => cube(3),
        "cube4" => cube(4),
        "cross3" => cross_polytope(3),
        "polygon6" => polygon(6),
        "pyramid_square" => pyramid(&cube(2)),
        other => panic!("unknown corpus base {}", other),
    }
}

/// Deterministic sample of comparable pairs: everything up to `limit`, then a
/// fixed stride.
pub fn sampled_comparable_pairs(
    lattice: &FaceLattice,
    limit: usize,
) -> Vec<(gpoly_core::FaceId, gpoly_core::FaceId)> {
    let all = lattice.comparable_pairs();
    if all.len() <= limit {
        return all;
    }
    let stride = all.len().div_ceil(limit);
    all.into_iter().step_by(stride).collect()
}

//! Stress spaces of frameworks and affine dependencies of point sets, with
//! the geometric evaluations of the linear and quadratic relative g-numbers.
//!
//! The stress map sends an edge weight to the pair of opposite forces it
//! exerts on its endpoints; stresses are the kernel. Quotient dimensions are
//! taken as differences of kernel dimensions, after explicitly checking on a
//! kernel basis that the smaller space embeds in the larger one by extending
//! with zeros.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::geometry::{Coord, Framework, Polytope, TriangulationRule};
use crate::lattice::FaceId;
use crate::ratmat::{is_zero_vec, RationalMatrix};

/// Matrix of the stress map: one row per (vertex, coordinate) pair in
/// vertex-major, coordinate-minor order, one column per edge. The column of
/// an edge `(v1, v2)` carries `v1 - v2` in the rows of `v1` and `v2 - v1` in
/// the rows of `v2`.
pub fn stress_matrix(framework: &Framework) -> RationalMatrix {
    let d = framework.dim();
    let mut m = RationalMatrix::zeros(framework.points().len() * d, framework.edges().len());
    for (col, &(a, b)) in framework.edges().iter().enumerate() {
        let pa = &framework.points()[a];
        let pb = &framework.points()[b];
        for coord in 0..d {
            let delta = &pa[coord] - &pb[coord];
            m.set(a * d + coord, col, delta.clone());
            m.set(b * d + coord, col, -delta);
        }
    }
    m
}

/// Dimension of the stress space: edge weightings with zero net force at
/// every vertex.
pub fn stress_dim(framework: &Framework) -> usize {
    stress_matrix(framework).kernel_dim()
}

/// Constraint matrix for affine dependencies: a row of ones above the
/// coordinate rows, one column per point.
pub fn affine_dependence_matrix(points: &[Vec<Coord>]) -> RationalMatrix {
    let d = points.first().map_or(0, Vec::len);
    let mut m = RationalMatrix::zeros(1 + d, points.len());
    for (col, p) in points.iter().enumerate() {
        m.set(0, col, Coord::from_integer(1.into()));
        for (row, x) in p.iter().enumerate() {
            m.set(1 + row, col, x.clone());
        }
    }
    m
}

/// Dimension of the space of affine dependencies: weightings summing to zero
/// whose weighted point sum also vanishes. For the vertex set of a
/// d-polytope this is the vertex count minus d minus one.
pub fn affine_dependence_dim(points: &[Vec<Coord>]) -> usize {
    affine_dependence_matrix(points).kernel_dim()
}

/// The linear relative g-number, evaluated geometrically as the codimension
/// of the affine dependencies of the facet-union vertices inside those of all
/// vertices.
pub fn g1_geometric(polytope: &Polytope, f: FaceId) -> usize {
    let full_points = polytope.coords();
    let union = polytope.n_union(f);
    let sub_indices: Vec<usize> = union.vertices.to_vec();
    let sub_points: Vec<Vec<Coord>> = sub_indices
        .iter()
        .map(|&v| full_points[v].clone())
        .collect();

    let full_matrix = affine_dependence_matrix(full_points);
    let sub_matrix = affine_dependence_matrix(&sub_points);

    // The zero-extension of every sub-dependency must be a dependency of the
    // full vertex set; check it on a kernel basis rather than assuming it.
    for basis_vec in sub_matrix.kernel_basis() {
        let mut extended = vec![Coord::zero(); full_points.len()];
        for (i, &v) in sub_indices.iter().enumerate() {
            extended[v] = basis_vec[i].clone();
        }
        assert!(
            is_zero_vec(&full_matrix.mul_vec(&extended)),
            "zero-extended affine dependency fails the full constraints"
        );
    }

    full_matrix.kernel_dim() - sub_matrix.kernel_dim()
}

/// The quadratic relative g-number, evaluated geometrically as the
/// codimension of the facet-union framework's stresses inside the stresses of
/// the full framework.
pub fn g2_geometric(polytope: &Polytope, f: FaceId) -> usize {
    g2_geometric_with(polytope, f, TriangulationRule::FanFromLowest)
}

pub fn g2_geometric_with(
    polytope: &Polytope,
    f: FaceId,
    rule: TriangulationRule,
) -> usize {
    let full = polytope.framework_with(rule);
    let full_matrix = stress_matrix(&full);
    let embedding = polytope.subframework_embedding(f, rule);
    let sub_matrix = stress_matrix(&embedding.framework);

    // Stresses of the subframework must extend by zero to stresses of the
    // full framework; check it on a kernel basis.
    for basis_vec in sub_matrix.kernel_basis() {
        let mut extended = vec![Coord::zero(); full.edges().len()];
        for (i, &e) in embedding.edge_map.iter().enumerate() {
            extended[e] = basis_vec[i].clone();
        }
        assert!(
            is_zero_vec(&full_matrix.mul_vec(&extended)),
            "zero-extended stress fails equilibrium on the full framework"
        );
    }

    full_matrix.kernel_dim() - sub_matrix.kernel_dim()
}

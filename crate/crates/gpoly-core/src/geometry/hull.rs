//! Exact affine-hull projection and brute-force facet enumeration.
//!
//! Hyperplanes are enumerated over all dim-element vertex subsets, with the
//! normal recovered as an exact rational kernel vector. This is quadratic-ish
//! in the binomial coefficient and meant for desk-scale inputs; it avoids any
//! external convex hull machinery.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{Coord, GeomError};
use crate::bitset::BitSet;
use crate::ratmat::{rref, RationalMatrix};

pub(super) fn dot(a: &[Coord], b: &[Coord]) -> Coord {
    a.iter().zip(b).fold(Coord::zero(), |acc, (x, y)| acc + x * y)
}

/// Re-expresses points in exact coordinates for their affine hull.
///
/// Returns the hull dimension `k` and one length-`k` coordinate vector per
/// point. The map is an affine isomorphism of the hull onto its image, so
/// convexity, face structure, affine dependencies and stress spaces are all
/// preserved.
pub fn affine_projection(points: &[Vec<Coord>]) -> (usize, Vec<Vec<Coord>>) {
    let n = points.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let base = &points[0];
    let mut diffs: Vec<Vec<Coord>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let (_, pivots) = rref(&mut diffs);
    let k = pivots.len();
    let coords = points
        .iter()
        .map(|p| {
            pivots
                .iter()
                .map(|&c| &p[c] - &base[c])
                .collect::<Vec<Coord>>()
        })
        .collect();
    (k, coords)
}

/// One supporting hyperplane: its vertex set and a normal in hull coordinates.
pub(super) struct FacetData {
    pub sets: Vec<BitSet>,
    pub normals: Vec<Vec<Coord>>,
}

/// Enumerates the facets of the convex hull of full-dimensional points.
///
/// `coords` must affinely span dimension `k`. Every supporting hyperplane
/// spanned by `k` affinely independent points is kept; the facet set is the
/// full equality set, deduplicated, and reported in a deterministic order.
pub(super) fn enumerate_facets(
    coords: &[Vec<Coord>],
    k: usize,
) -> Result<FacetData, GeomError> {
    let n = coords.len();
    let mut found: BTreeMap<BitSet, Vec<Coord>> = BTreeMap::new();
    if k == 0 {
        return Ok(FacetData {
            sets: Vec::new(),
            normals: Vec::new(),
        });
    }

    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if let Some((normal, offset)) = hyperplane_through(coords, &subset) {
            let mut any_pos = false;
            let mut any_neg = false;
            let mut on_plane = BitSet::new();
            for (i, p) in coords.iter().enumerate() {
                let side = dot(&normal, p) - &offset;
                if side.is_zero() {
                    on_plane.insert(i);
                } else if side > Coord::zero() {
                    any_pos = true;
                } else {
                    any_neg = true;
                }
                if any_pos && any_neg {
                    break;
                }
            }
            if !(any_pos && any_neg) {
                // Orient the normal outward so dumps are reproducible.
                let normal = if any_pos {
                    normal.iter().map(|x| -x).collect()
                } else {
                    normal
                };
                found.entry(on_plane).or_insert(normal);
            }
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }

    if found.is_empty() {
        return Err(GeomError::DegenerateInput(format!(
            "no supporting hyperplane found among {} points",
            n
        )));
    }
    let (sets, normals) = found.into_iter().unzip();
    Ok(FacetData { sets, normals })
}

/// The hyperplane through the given points, if they are affinely independent:
/// a normal vector and its offset.
fn hyperplane_through(coords: &[Vec<Coord>], subset: &[usize]) -> Option<(Vec<Coord>, Coord)> {
    let first = &coords[subset[0]];
    let rows: Vec<Vec<Coord>> = subset[1..]
        .iter()
        .map(|&i| {
            coords[i]
                .iter()
                .zip(first)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    let kernel = RationalMatrix::from_rows_cols(rows, first.len()).kernel_basis();
    if kernel.len() != 1 {
        return None;
    }
    let normal = kernel.into_iter().next().unwrap();
    let offset = dot(&normal, first);
    Some((normal, offset))
}

/// Advances `subset` to the next lexicographic combination from `0..n`.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Fails with the first vertex whose active facet normals do not span,
/// which certifies that the vertex is not extreme.
pub(super) fn check_extremeness(
    n: usize,
    k: usize,
    facets: &FacetData,
) -> Result<(), GeomError> {
    for v in 0..n {
        let active: Vec<Vec<Coord>> = facets
            .sets
            .iter()
            .zip(&facets.normals)
            .filter(|(s, _)| s.contains(v))
            .map(|(_, normal)| normal.clone())
            .collect();
        if RationalMatrix::from_rows_cols(active, k).rank() != k {
            return Err(GeomError::NotExtremePoint(v));
        }
    }
    Ok(())
}

/// Enumerates facet vertex sets of the convex hull of exact rational points.
///
/// Points are first projected onto their affine hull; each returned set lists
/// the vertices lying on one supporting hyperplane. Every input point must be
/// extreme.
pub fn facet_enumeration(vertices: &[Vec<Coord>]) -> Result<Vec<BitSet>, GeomError> {
    if vertices.is_empty() {
        return Err(GeomError::DegenerateInput("no vertices given".into()));
    }
    check_distinct(vertices)?;
    let (k, coords) = affine_projection(vertices);
    let data = enumerate_facets(&coords, k)?;
    check_extremeness(vertices.len(), k, &data)?;
    Ok(data.sets)
}

pub(super) fn check_distinct(vertices: &[Vec<Coord>]) -> Result<(), GeomError> {
    let mut seen: BTreeMap<&[Coord], usize> = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if seen.insert(v.as_slice(), i).is_some() {
            return Err(GeomError::NotExtremePoint(i));
        }
    }
    Ok(())
}

pub(super) fn check_consistent_rows(vertices: &[Vec<Coord>]) -> Result<usize, GeomError> {
    let m = vertices.first().map_or(0, Vec::len);
    if vertices.iter().any(|v| v.len() != m) {
        return Err(GeomError::DegenerateInput(
            "vertex coordinate vectors differ in length".into(),
        ));
    }
    Ok(m)
}

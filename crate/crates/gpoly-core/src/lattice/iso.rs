//! Lattice isomorphism testing by color refinement plus backtracking over
//! atom images. Meant for desk-scale lattices (well under 10^4 faces).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::FaceLattice;
use crate::bitset::BitSet;

/// Whether two face lattices are isomorphic as posets.
///
/// An isomorphism of polytopal lattices is determined by its restriction to
/// the atoms, so after jointly refining face colors the search runs over atom
/// bijections only, checking at the end that the induced map sends face
/// vertex sets onto face vertex sets.
pub fn are_isomorphic(a: &FaceLattice, b: &FaceLattice) -> bool {
    if a.dim() != b.dim()
        || a.counts_by_dim() != b.counts_by_dim()
        || a.n_atoms() != b.n_atoms()
        || a.num_faces() != b.num_faces()
    {
        return false;
    }
    if a.n_atoms() <= 1 {
        // With the counts equal these lattices are chains of the same shape.
        return true;
    }

    let (colors_a, colors_b) = match refine_pair(a, b) {
        Some(c) => c,
        None => return false,
    };

    let n = a.n_atoms();
    let vertex_color = |l: &FaceLattice, colors: &[usize]| -> Vec<usize> {
        let mut out = Vec::with_capacity(n);
        let mut by_atom: BTreeMap<usize, usize> = BTreeMap::new();
        for &f in l.faces_of_dim(0) {
            let atom = l.vertex_set(f).iter().next().expect("vertex has one atom");
            by_atom.insert(atom, colors[f.index()]);
        }
        for i in 0..n {
            out.push(by_atom[&i]);
        }
        out
    };
    let vcol_a = vertex_color(a, &colors_a);
    let vcol_b = vertex_color(b, &colors_b);

    let adjacency = |l: &FaceLattice| -> Vec<BitSet> {
        let mut adj = alloc::vec![BitSet::new(); n];
        for &e in l.faces_of_dim(1) {
            let vs: Vec<usize> = l.vertex_set(e).iter().collect();
            if let [u, v] = vs[..] {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        adj
    };
    let adj_a = adjacency(a);
    let adj_b = adjacency(b);

    let face_sets_b: BTreeSet<&BitSet> = b.face_ids().map(|f| b.vertex_set(f)).collect();

    let mut image = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    search(
        a,
        &SearchCtx {
            n,
            vcol_a: &vcol_a,
            vcol_b: &vcol_b,
            adj_a: &adj_a,
            adj_b: &adj_b,
            face_sets_b: &face_sets_b,
        },
        &mut image,
        &mut used,
        0,
    )
}

struct SearchCtx<'a> {
    n: usize,
    vcol_a: &'a [usize],
    vcol_b: &'a [usize],
    adj_a: &'a [BitSet],
    adj_b: &'a [BitSet],
    face_sets_b: &'a BTreeSet<&'a BitSet>,
}

fn candidates(ctx: &SearchCtx<'_>, image: &[usize], used: &[bool], v: usize) -> Vec<usize> {
    (0..ctx.n)
        .filter(|&w| {
            !used[w]
                && ctx.vcol_a[v] == ctx.vcol_b[w]
                && (0..ctx.n).all(|u| {
                    image[u] == usize::MAX
                        || ctx.adj_a[v].contains(u) == ctx.adj_b[w].contains(image[u])
                })
        })
        .collect()
}

fn search(
    a: &FaceLattice,
    ctx: &SearchCtx<'_>,
    image: &mut [usize],
    used: &mut [bool],
    assigned: usize,
) -> bool {
    if assigned == ctx.n {
        return induced_map_is_face_bijection(a, ctx, image);
    }
    // Most-constrained atom first.
    let mut best: Option<(usize, Vec<usize>)> = None;
    for v in 0..ctx.n {
        if image[v] != usize::MAX {
            continue;
        }
        let cand = candidates(ctx, image, used, v);
        if cand.is_empty() {
            return false;
        }
        if best.as_ref().is_none_or(|(_, c)| cand.len() < c.len()) {
            let single = cand.len() == 1;
            best = Some((v, cand));
            if single {
                break;
            }
        }
    }
    let (v, cand) = best.expect("an unassigned atom exists");
    for w in cand {
        image[v] = w;
        used[w] = true;
        if search(a, ctx, image, used, assigned + 1) {
            return true;
        }
        image[v] = usize::MAX;
        used[w] = false;
    }
    false
}

fn induced_map_is_face_bijection(a: &FaceLattice, ctx: &SearchCtx<'_>, image: &[usize]) -> bool {
    // The atom map is a bijection, so distinct vertex sets have distinct
    // images and matching the count makes the induced map onto.
    a.face_ids().all(|f| {
        let mapped: BitSet = a.vertex_set(f).iter().map(|i| image[i]).collect();
        ctx.face_sets_b.contains(&mapped)
    })
}

/// Jointly refines face colors of both lattices; `None` when the color class
/// sizes diverge, which certifies non-isomorphism.
fn refine_pair(a: &FaceLattice, b: &FaceLattice) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut colors_a: Vec<usize> = a.face_ids().map(|f| (a.dim_of(f) + 1) as usize).collect();
    let mut colors_b: Vec<usize> = b.face_ids().map(|f| (b.dim_of(f) + 1) as usize).collect();
    let mut classes = class_count(&colors_a);
    loop {
        let mut key_ids: BTreeMap<(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        let next =
            |l: &FaceLattice,
             colors: &[usize],
             key_ids: &mut BTreeMap<(usize, Vec<usize>, Vec<usize>), usize>| {
                let mut keys = Vec::with_capacity(l.num_faces());
                for f in l.face_ids() {
                    let mut lo: Vec<usize> =
                        l.lower_covers(f).iter().map(|c| colors[c.index()]).collect();
                    let mut hi: Vec<usize> =
                        l.upper_covers(f).iter().map(|c| colors[c.index()]).collect();
                    lo.sort_unstable();
                    hi.sort_unstable();
                    keys.push((colors[f.index()], lo, hi));
                }
                // Register keys in sorted order so ids match across lattices.
                let mut sorted: Vec<&(usize, Vec<usize>, Vec<usize>)> = keys.iter().collect();
                sorted.sort();
                for k in sorted {
                    let id = key_ids.len();
                    key_ids.entry(k.clone()).or_insert(id);
                }
                keys.iter().map(|k| key_ids[k]).collect::<Vec<usize>>()
            };
        let next_a = next(a, &colors_a, &mut key_ids);
        let next_b = next(b, &colors_b, &mut key_ids);

        if multiset(&next_a) != multiset(&next_b) {
            return None;
        }
        let next_classes = class_count(&next_a);
        colors_a = next_a;
        colors_b = next_b;
        if next_classes == classes {
            return Some((colors_a, colors_b));
        }
        classes = next_classes;
    }
}

fn class_count(colors: &[usize]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

fn multiset(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &c in colors {
        *m.entry(c).or_insert(0usize) += 1;
    }
    m
}

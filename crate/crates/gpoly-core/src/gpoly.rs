//! The polynomial recursions on a face lattice: `h`, `g`, the dual `gbar`,
//! relative `g(P, F)`, flag numbers, and the identities relating them.
//!
//! Everything runs on intervals of one lattice. Writing `g(b, t)` for the
//! `g`-polynomial of the interval `[b, t]` re-graded as a polytope lattice:
//!
//! * `h(b, t) = sum over b <= f < t of (q-1)^(dim t - dim f - 1) g(b, f)`,
//!   with `g` obtained from `h` by successive differences truncated at half
//!   the interval dimension and `g` of the trivial interval equal to 1;
//! * `gbar(b, t)` is `g` of the opposite of `[b, t]`, computed by the mirror
//!   recursion `hbar(b, t) = sum over b < f <= t of (q-1)^(dim f - dim b - 1)
//!   gbar(f, t)`;
//! * the relative polynomial `grel(b, t, f)` for `b <= f <= t` is pinned down
//!   by `sum over f <= e <= t of grel(b, e, f) g(e, t) = g(b, t)`, solved
//!   inductively from `grel(b, f, f) = g(b, f)`.
//!
//! A [`GContext`] memoizes all three tables for one lattice. Contexts are
//! cheap to create; for concurrent work instantiate one per worker.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lattice::{FaceId, FaceLattice};
use crate::poly::GPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GPolyError {
    /// A face handle does not belong to the lattice.
    NotAFace,
    /// The two faces are not comparable.
    NotComparable,
    /// The marked entry of a flag index is smaller than the face dimension.
    MarkedDimTooSmall,
    /// A relative flag count was requested without a marked position.
    UnmarkedFlag,
    /// Dimension entries not strictly increasing, below -1, or a marked
    /// position out of range.
    BadFlagIndex,
}

impl fmt::Display for GPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GPolyError::NotAFace => write!(f, "face does not belong to the lattice"),
            GPolyError::NotComparable => write!(f, "faces are not comparable"),
            GPolyError::MarkedDimTooSmall => {
                write!(f, "marked flag dimension is below the face dimension")
            }
            GPolyError::UnmarkedFlag => write!(f, "flag index carries no marked position"),
            GPolyError::BadFlagIndex => write!(f, "malformed flag index"),
        }
    }
}

impl core::error::Error for GPolyError {}

/// A strictly increasing sequence of face dimensions, optionally with one
/// marked position for relative flag counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagIndex {
    dims: Vec<i64>,
    /// Zero-based position into `dims`.
    marked: Option<usize>,
}

impl FlagIndex {
    /// Builds a flag index; entries must be strictly increasing and at least
    /// `-1`.
    pub fn new(dims: Vec<i64>) -> Result<Self, GPolyError> {
        if dims.windows(2).any(|w| w[0] >= w[1]) || dims.first().is_some_and(|&d| d < -1) {
            return Err(GPolyError::BadFlagIndex);
        }
        Ok(FlagIndex { dims, marked: None })
    }

    /// Marks the `k`-th entry, `k` counted from one.
    pub fn with_mark(mut self, k: usize) -> Result<Self, GPolyError> {
        if k == 0 || k > self.dims.len() {
            return Err(GPolyError::BadFlagIndex);
        }
        self.marked = Some(k - 1);
        Ok(self)
    }

    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    pub fn marked(&self) -> Option<usize> {
        self.marked
    }
}

#[derive(Default)]
struct MemoTables {
    g: BTreeMap<(u32, u32), GPolynomial>,
    gbar: BTreeMap<(u32, u32), GPolynomial>,
    grel: BTreeMap<(u32, u32, u32), GPolynomial>,
    entries: usize,
}

/// Computation context for one lattice: memo tables plus cached binomial
/// powers. All public polynomial operations live here or in the free
/// functions wrapping it.
pub struct GContext<'a> {
    lattice: &'a FaceLattice,
    memo: RefCell<MemoTables>,
    qm1_pows: RefCell<Vec<GPolynomial>>,
    memo_limit: Option<usize>,
}

impl<'a> GContext<'a> {
    pub fn new(lattice: &'a FaceLattice) -> Self {
        GContext {
            lattice,
            memo: RefCell::new(MemoTables::default()),
            qm1_pows: RefCell::new(Vec::new()),
            memo_limit: None,
        }
    }

    /// Like [`GContext::new`] but capping the total number of memoized
    /// polynomials; beyond the cap results are recomputed instead of stored.
    pub fn with_memo_limit(lattice: &'a FaceLattice, limit: usize) -> Self {
        GContext {
            memo_limit: Some(limit),
            ..Self::new(lattice)
        }
    }

    pub fn lattice(&self) -> &'a FaceLattice {
        self.lattice
    }

    fn check_face(&self, f: FaceId) -> Result<(), GPolyError> {
        if f.index() < self.lattice.num_faces() {
            Ok(())
        } else {
            Err(GPolyError::NotAFace)
        }
    }

    fn may_store(&self, entries: usize) -> bool {
        self.memo_limit.is_none_or(|cap| entries < cap)
    }

    fn qm1_pow(&self, k: usize) -> GPolynomial {
        let mut pows = self.qm1_pows.borrow_mut();
        while pows.len() <= k {
            let next = match pows.last() {
                None => GPolynomial::one(),
                Some(p) => p * &GPolynomial::from_ints(&[-1, 1]),
            };
            pows.push(next);
        }
        pows[k].clone()
    }

    /// `h` of the interval `[b, t]`, which must span dimension >= 0.
    pub fn h_interval(&self, b: FaceId, t: FaceId) -> GPolynomial {
        debug_assert!(self.lattice.leq(b, t));
        assert!(b != t, "h is defined for polytopes of dimension >= 0");
        let lat = self.lattice;
        let top_dim = lat.dim_of(t);
        let mut h = GPolynomial::zero();
        for f_idx in lat.down_set(t).iter() {
            let f = FaceId(f_idx as u32);
            if f == t || !lat.leq(b, f) {
                continue;
            }
            let exponent = (top_dim - lat.dim_of(f) - 1) as usize;
            let term = &self.qm1_pow(exponent) * &self.g_interval(b, f);
            h = &h + &term;
        }
        h
    }

    /// `g` of the interval `[b, t]`: successive differences of `h` truncated
    /// at half the interval dimension; 1 on the trivial interval.
    pub fn g_interval(&self, b: FaceId, t: FaceId) -> GPolynomial {
        debug_assert!(self.lattice.leq(b, t));
        if b == t {
            return GPolynomial::one();
        }
        let key = (b.0, t.0);
        if let Some(p) = self.memo.borrow().g.get(&key) {
            return p.clone();
        }
        let h = self.h_interval(b, t);
        let dim = self.lattice.dim_of(t) - self.lattice.dim_of(b) - 1;
        let g = g_from_h(&h, dim);
        debug_assert!(g.coeff(0).is_one(), "g must have constant term 1");
        let mut memo = self.memo.borrow_mut();
        if self.may_store(memo.entries) {
            memo.g.insert(key, g.clone());
            memo.entries += 1;
        }
        g
    }

    /// `g` of the opposite of the interval `[b, t]` (the polar side).
    pub fn gbar_interval(&self, b: FaceId, t: FaceId) -> GPolynomial {
        debug_assert!(self.lattice.leq(b, t));
        if b == t {
            return GPolynomial::one();
        }
        let key = (b.0, t.0);
        if let Some(p) = self.memo.borrow().gbar.get(&key) {
            return p.clone();
        }
        let lat = self.lattice;
        let bottom_dim = lat.dim_of(b);
        let mut hbar = GPolynomial::zero();
        for f_idx in lat.down_set(t).iter() {
            let f = FaceId(f_idx as u32);
            if f == b || !lat.leq(b, f) {
                continue;
            }
            let exponent = (lat.dim_of(f) - bottom_dim - 1) as usize;
            let term = &self.qm1_pow(exponent) * &self.gbar_interval(f, t);
            hbar = &hbar + &term;
        }
        let dim = lat.dim_of(t) - bottom_dim - 1;
        let gbar = g_from_h(&hbar, dim);
        let mut memo = self.memo.borrow_mut();
        if self.may_store(memo.entries) {
            memo.gbar.insert(key, gbar.clone());
            memo.entries += 1;
        }
        gbar
    }

    /// Relative polynomial of the polytope `[b, t]` with respect to its face
    /// `f`, solved from the defining convolution.
    pub fn grel_interval(&self, b: FaceId, t: FaceId, f: FaceId) -> GPolynomial {
        let lat = self.lattice;
        debug_assert!(lat.leq(b, f) && lat.leq(f, t));
        if t == f {
            return self.g_interval(b, f);
        }
        let key = (b.0, t.0, f.0);
        if let Some(p) = self.memo.borrow().grel.get(&key) {
            return p.clone();
        }
        let mut out = self.g_interval(b, t);
        for e_idx in lat.down_set(t).iter() {
            let e = FaceId(e_idx as u32);
            if e == t || !lat.leq(f, e) {
                continue;
            }
            let term = &self.grel_interval(b, e, f) * &self.g_interval(e, t);
            out = &out - &term;
        }
        let mut memo = self.memo.borrow_mut();
        if self.may_store(memo.entries) {
            memo.grel.insert(key, out.clone());
            memo.entries += 1;
        }
        out
    }

    /// `h` of the whole lattice.
    pub fn h(&self) -> GPolynomial {
        assert!(self.lattice.dim() >= 0, "h needs dimension >= 0");
        self.h_interval(self.lattice.bottom(), self.lattice.top())
    }

    /// `g` of the whole lattice; 1 for the empty polytope.
    pub fn g(&self) -> GPolynomial {
        self.g_interval(self.lattice.bottom(), self.lattice.top())
    }

    /// `g` of the opposite lattice.
    pub fn gbar(&self) -> GPolynomial {
        self.gbar_interval(self.lattice.bottom(), self.lattice.top())
    }

    /// Relative polynomial `g(P, F)` of the lattice with respect to `f`.
    pub fn g_relative(&self, f: FaceId) -> Result<GPolynomial, GPolyError> {
        self.check_face(f)?;
        Ok(self.grel_interval(self.lattice.bottom(), self.lattice.top(), f))
    }

    /// Closed-form evaluation of `g(P, F)` as the alternating sum of
    /// `g(F') gbar(P/F')` over `F <= F' <= P`. Must agree with
    /// [`GContext::g_relative`].
    pub fn g_relative_by_inversion(&self, f: FaceId) -> Result<GPolynomial, GPolyError> {
        self.check_face(f)?;
        let lat = self.lattice;
        let (bottom, top) = (lat.bottom(), lat.top());
        let top_dim = lat.dim_of(top);
        let mut out = GPolynomial::zero();
        for fp in lat.face_ids() {
            if !lat.leq(f, fp) {
                continue;
            }
            let term = &self.g_interval(bottom, fp) * &self.gbar_interval(fp, top);
            if (top_dim - lat.dim_of(fp)) % 2 == 0 {
                out = &out + &term;
            } else {
                out = &out - &term;
            }
        }
        Ok(out)
    }

    /// The alternating sum `sum over faces of (-1)^dim gbar(F) g(P/F)`,
    /// expected to vanish identically.
    pub fn stanley_residual(&self) -> GPolynomial {
        let lat = self.lattice;
        assert!(lat.dim() >= 0, "the identity concerns nonempty polytopes");
        let (bottom, top) = (lat.bottom(), lat.top());
        let mut out = GPolynomial::zero();
        for f in lat.face_ids() {
            let term = &self.gbar_interval(bottom, f) * &self.g_interval(f, top);
            if lat.dim_of(f) % 2 == 0 {
                out = &out + &term;
            } else {
                out = &out - &term;
            }
        }
        out
    }

    /// `g(P, F)` minus its decomposition over faces above `fprime`, expected
    /// to vanish: the terms are `g(E, F') g(P/E, (E v F)/E)` for `F' <= E`.
    pub fn decomposition_residual(
        &self,
        fprime: FaceId,
        f: FaceId,
    ) -> Result<GPolynomial, GPolyError> {
        self.check_face(fprime)?;
        self.check_face(f)?;
        let lat = self.lattice;
        if !lat.leq(fprime, f) {
            return Err(GPolyError::NotComparable);
        }
        let (bottom, top) = (lat.bottom(), lat.top());
        let mut sum = GPolynomial::zero();
        for e in lat.face_ids() {
            if !lat.leq(fprime, e) {
                continue;
            }
            let join = lat.join_of_faces(e, f);
            let term = &self.grel_interval(bottom, e, fprime) * &self.grel_interval(e, top, join);
            sum = &sum + &term;
        }
        Ok(&self.grel_interval(bottom, top, f) - &sum)
    }

    /// The coefficientwise deficit `g(P) - g(F) g(P/F)`.
    pub fn kalai_deficit(&self, f: FaceId) -> Result<GPolynomial, GPolyError> {
        self.check_face(f)?;
        let lat = self.lattice;
        let (bottom, top) = (lat.bottom(), lat.top());
        let product = &self.g_interval(bottom, f) * &self.g_interval(f, top);
        Ok(&self.g_interval(bottom, top) - &product)
    }

    /// Number of chains with the prescribed dimensions.
    pub fn flag_number(&self, index: &FlagIndex) -> BigInt {
        self.count_flags(index, None)
            .expect("unrestricted flag count cannot fail")
    }

    /// Number of flags whose marked member contains `f`.
    pub fn relative_flag_number(
        &self,
        f: FaceId,
        index: &FlagIndex,
    ) -> Result<BigInt, GPolyError> {
        self.check_face(f)?;
        let k = index.marked.ok_or(GPolyError::UnmarkedFlag)?;
        if index.dims[k] < self.lattice.dim_of(f) {
            return Err(GPolyError::MarkedDimTooSmall);
        }
        self.count_flags(index, Some((k, f)))
    }

    fn count_flags(
        &self,
        index: &FlagIndex,
        restriction: Option<(usize, FaceId)>,
    ) -> Result<BigInt, GPolyError> {
        let lat = self.lattice;
        let mut ways: BTreeMap<FaceId, BigInt> = BTreeMap::new();
        for (layer, &dim) in index.dims.iter().enumerate() {
            let restricted = restriction.filter(|&(k, _)| k == layer).map(|(_, f)| f);
            let mut next: BTreeMap<FaceId, BigInt> = BTreeMap::new();
            for &g in lat.faces_of_dim(dim) {
                if let Some(f) = restricted {
                    if !lat.leq(f, g) {
                        continue;
                    }
                }
                let count = if layer == 0 {
                    BigInt::one()
                } else {
                    let mut c = BigInt::zero();
                    for (&prev, n) in &ways {
                        if lat.leq(prev, g) {
                            c += n;
                        }
                    }
                    c
                };
                if !count.is_zero() {
                    next.insert(g, count);
                }
            }
            ways = next;
        }
        if index.dims.is_empty() {
            return Ok(BigInt::one());
        }
        Ok(ways.into_values().sum())
    }
}

/// Differences of `h` truncated at half the dimension.
fn g_from_h(h: &GPolynomial, dim: i64) -> GPolynomial {
    if dim < 0 {
        return GPolynomial::one();
    }
    let half = (dim / 2) as usize;
    let mut coeffs = Vec::with_capacity(half + 1);
    coeffs.push(h.coeff(0));
    for i in 1..=half {
        coeffs.push(h.coeff(i) - h.coeff(i - 1));
    }
    GPolynomial::from_coeffs(coeffs)
}

/// `h`-polynomial of a lattice of dimension >= 0.
pub fn h_poly(lattice: &FaceLattice) -> GPolynomial {
    GContext::new(lattice).h()
}

/// `g`-polynomial of a lattice (1 for the empty polytope).
pub fn g_poly(lattice: &FaceLattice) -> GPolynomial {
    GContext::new(lattice).g()
}

/// `g`-polynomial of the opposite lattice.
pub fn gbar_poly(lattice: &FaceLattice) -> GPolynomial {
    GContext::new(lattice).gbar()
}

pub fn g_relative(lattice: &FaceLattice, f: FaceId) -> Result<GPolynomial, GPolyError> {
    GContext::new(lattice).g_relative(f)
}

pub fn g_relative_by_inversion(
    lattice: &FaceLattice,
    f: FaceId,
) -> Result<GPolynomial, GPolyError> {
    GContext::new(lattice).g_relative_by_inversion(f)
}

pub fn stanley_identity_residual(lattice: &FaceLattice) -> GPolynomial {
    GContext::new(lattice).stanley_residual()
}

pub fn decomposition_residual(
    lattice: &FaceLattice,
    fprime: FaceId,
    f: FaceId,
) -> Result<GPolynomial, GPolyError> {
    GContext::new(lattice).decomposition_residual(fprime, f)
}

pub fn kalai_deficit(lattice: &FaceLattice, f: FaceId) -> Result<GPolynomial, GPolyError> {
    GContext::new(lattice).kalai_deficit(f)
}

pub fn flag_number(lattice: &FaceLattice, index: &FlagIndex) -> BigInt {
    GContext::new(lattice).flag_number(index)
}

pub fn relative_flag_number(
    lattice: &FaceLattice,
    f: FaceId,
    index: &FlagIndex,
) -> Result<BigInt, GPolyError> {
    GContext::new(lattice).relative_flag_number(f, index)
}

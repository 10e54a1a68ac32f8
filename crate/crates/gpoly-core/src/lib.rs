//! Exact combinatorial invariants of convex polytopes.
//!
//! The crate computes, over face lattices of polytopes with rational vertex
//! coordinates:
//!
//! * the toric `g`- and `h`-polynomials and their relative versions `g(P, F)`,
//! * flag numbers and relative flag numbers,
//! * residuals of the convolution, inversion and decomposition identities that
//!   relate them, together with the coefficientwise inequality
//!   `g(P) >= g(F) g(P/F)`,
//! * affine-dependence and framework-stress dimensions, which reproduce the
//!   linear and quadratic relative `g`-numbers geometrically.
//!
//! All arithmetic is exact: polynomial coefficients are arbitrary-precision
//! integers and the linear algebra runs over arbitrary-precision rationals.
//! The crate is `no_std` (it allocates, but performs no IO); file formats and
//! the command line front end live in the companion `gpoly-cli` crate.
//!
//! ```
//! use gpoly_core::geometry::cube;
//! use gpoly_core::gpoly::{g_poly, g_relative};
//! use gpoly_core::GPolynomial;
//!
//! let p = cube(3);
//! let lattice = p.face_lattice();
//! assert_eq!(g_poly(lattice), GPolynomial::from_ints(&[1, 4]));
//!
//! // Relative to a square facet: g(P) - g(F) = (1 + 4q) - (1 + q).
//! let facet = lattice.facets()[0];
//! assert_eq!(
//!     g_relative(lattice, facet).unwrap(),
//!     GPolynomial::from_ints(&[0, 3]),
//! );
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bitset;
pub mod geometry;
pub mod gpoly;
pub mod lattice;
pub mod poly;
pub mod ratmat;
pub mod stress;

pub use bitset::BitSet;
pub use geometry::{
    Coord, Framework, FrameworkEmbedding, GeomError, NUnion, Polytope, TriangulationRule,
};
pub use gpoly::{FlagIndex, GContext, GPolyError};
pub use lattice::{
    are_isomorphic, FaceId, FaceLattice, LatticeError, MappedLattice, PairedLattice,
    ValidationReport,
};
pub use poly::GPolynomial;
pub use ratmat::RationalMatrix;

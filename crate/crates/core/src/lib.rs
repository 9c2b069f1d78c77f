//! Exact computer algebra for cyclic matrix factorizations and Ulrich-sheaf
//! invariants on cyclic covers of projective space.
//!
//! * [`polyring`]: sparse polynomials over Q, Z and F_p, parsing, and the
//!   univariate layer in the cover coordinate `t`.
//! * [`exactlinalg`]: RREF and rank over fields, Bareiss rank and Smith
//!   normal form over Z, determinants and Pfaffians of polynomial matrices.
//! * [`graded`]: graded pieces of ideals, Hilbert functions and quotient
//!   structure over Z.
//! * [`matfac`]: construction and verification of cyclic matrix
//!   factorizations `A^d = b I`.
//! * [`numerics`]: closed-form cohomology calculators and the deformation
//!   dimension table.

pub mod error;
pub mod exactlinalg;
pub mod graded;
pub mod matfac;
pub mod numerics;
pub mod par;
pub mod polyring;

pub use error::{Error, Result};

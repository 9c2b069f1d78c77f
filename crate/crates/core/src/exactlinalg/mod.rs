//! Exact linear algebra: RREF over fields, Bareiss rank and Smith normal form
//! over Z, determinants and Pfaffians of small polynomial matrices.

mod field_matrix;
mod int_matrix;
mod poly_matrix;

pub use field_matrix::{FieldMatrix, Rref};
pub(crate) use field_matrix::rref_mod_p;
pub use int_matrix::{IntMatrix, SnfDecomposition, SnfResult};
pub use poly_matrix::{poly_det, Determinant, Matrix, PolyMatrix, TPolyMatrix, MAX_DET_SIZE, MAX_PFAFFIAN_SIZE};

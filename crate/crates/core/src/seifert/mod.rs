//! Seifert matrices, standard knot families and the shaking construction.

mod expr;
pub mod intmat;
mod matrix;
mod symplectic;
mod torus;
mod witness;

pub use expr::KnotExpr;
pub use intmat::IntMatrix;
pub use matrix::{connected_sum, is_alexander_trivial, mirror, shaking_matrix, MatrixKind, SeifertMatrix};
pub use symplectic::{symplectic_normalize, Move, SympBasisChange};
pub use torus::{torus_alexander, torus_seifert, twist_seifert};
pub use witness::{shake1_genus_witness, GenusWitness};

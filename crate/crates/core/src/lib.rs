//! Exact knot invariants from Seifert matrices and knot expressions, and a
//! decision procedure for Z/n-shake sliceness.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod invariants;
pub mod json;
pub mod multisig;
pub mod polyalg;
pub mod seifert;
pub mod shake;

pub use error::{Error, Result};

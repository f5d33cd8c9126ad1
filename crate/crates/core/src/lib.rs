//! Exact counts of linear codes with a prescribed Hermitian or symplectic
//! hull dimension, with brute-force censuses to check them against.

pub mod census;
pub mod cli;
pub mod code;
pub mod error;
pub mod field;
pub mod formulas;
pub mod matrix;

pub use code::LinearCode;
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use matrix::{InnerProduct, Matrix};

//! Exact linear algebra over GF(2) and binary polynomial arithmetic.

mod matrix;
mod poly;
mod vector;

pub use matrix::BitMatrix;
pub use poly::{coprime_to_x_n_minus_one, Gf2Poly};
pub use vector::BitVector;

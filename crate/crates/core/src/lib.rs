//! Complementary information set codes over GF(2) and Z4, and the
//! graph correlation immune permutations they induce.

pub mod cis;
pub mod classification;
pub mod code;
pub mod constructions;
pub mod error;
pub mod gf2;
pub mod io;
pub mod z4;

pub use code::{are_equivalent, DistanceDistribution, LinearCode, UnrestrictedCode, WeightDistribution};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector, Gf2Poly};

/// Distance distribution in exact rational arithmetic.
pub type ExactDistribution = DistanceDistribution<num_rational::BigRational>;
/// Distance distribution in double precision, for quick inspection.
pub type FloatDistribution = DistanceDistribution<f64>;
/// Exact integer for the counting formulas.
pub type Count = num_bigint::BigUint;

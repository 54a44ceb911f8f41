//! Binary codes: linear and unrestricted codes, weight and distance
//! distributions, duality and permutation equivalence.

mod canonical;
mod distribution;
mod enumerate;
mod linear;
mod unrestricted;

pub(crate) use canonical::canonicalize_rows;
pub use canonical::{CANON_MAX_DIMENSION, CANON_MAX_LENGTH};
pub use distribution::{binomial_table, krawtchouk_table, DistanceDistribution, WeightDistribution};
pub use enumerate::{enum_cap, DEFAULT_ENUM_CAP, ENUM_CAP_ENV};
pub use linear::{are_equivalent, CanonicalForm, CanonicalKey, LinearCode};
pub use unrestricted::{UnrestrictedCode, DEFAULT_MAX_CODEWORDS};

//! Explicit CIS constructions and the counting formulas around them.

mod buildup;
mod circulant;
mod counting;
mod cyclic;
mod paley;
pub mod records;

pub use buildup::{build_up, build_up_circulant, reduce, BuildUp};
pub use circulant::{double_circulant, DoubleCirculant};
pub use counting::{
    brute_b, e_n_upper, gl2_order, invertible_matrices, parity_check_distance, vg_bound_m, MAX_GL_ENUMERATION,
};
pub use cyclic::{
    binary_qr_code, binary_qr_generator, cyclic_code, extend_parity, extend_parity_at, extended_golay,
    extended_hamming, shorten,
};
pub use paley::{
    check_axioms, is_prime, paley_cis, paley_integer_matrix, paley_matrix, paley_params, srg_cis, GraphKind,
    IntMatrix, SrgCase, SrgParams,
};

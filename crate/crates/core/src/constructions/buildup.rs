//! Building up `[2n, n]` CIS codes to length `2n + 2`, and the inverse reduction.
//!
//! From `(I | A)` and vectors `x`, `y` the extended code has generator
//! `(I_{n+1} | A₁)` with
//!
//! ```text
//!        ( z  x )
//!   A₁ = ( y  A )      x = c·A,  z = 1 + c·y
//! ```
//!
//! so that `A₁` is invertible whenever `A` is.

use crate::cis::is_cis_systematic;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, Gf2Poly};

#[derive(Debug, Clone)]
pub struct BuildUp {
    pub code: LinearCode,
    /// Multipliers with `x = Σ c_i r_i`.
    pub c: BitVector,
    pub z: bool,
}

fn systematic_invertible(code: &LinearCode) -> Result<BitMatrix> {
    if !code.is_rate_half() || !is_cis_systematic(code)? {
        return Err(Error::BaseNotCis);
    }
    Ok(code.systematic_a().expect("systematic CIS has a systematic form"))
}

/// `A₁` from `A`, `x`, `y` and `z`.
fn bordered(a: &BitMatrix, x: &BitVector, y: &BitVector, z: bool) -> BitMatrix {
    let n = a.rows();
    let mut rows = Vec::with_capacity(n + 1);
    rows.push(BitVector::from_bools(&[z]).concat(x));
    for (i, r) in a.row_slice().iter().enumerate() {
        rows.push(BitVector::from_bools(&[y.get(i)]).concat(r));
    }
    BitMatrix::from_rows(rows, n + 1).expect("rows have length n + 1")
}

pub fn build_up(base: &LinearCode, x: &BitVector, y: &BitVector) -> Result<BuildUp> {
    let a = systematic_invertible(base)?;
    let n = a.rows();
    for v in [x, y] {
        if v.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a base of dimension {n}",
                v.len()
            )));
        }
    }
    let c = a.invert()?.vec_mul(x)?;
    let z = !c.dot(y);
    let a1 = bordered(&a, x, y, z);
    debug_assert!(a1.determinant_nonzero()?);
    Ok(BuildUp {
        code: LinearCode::from_systematic(&a1),
        c,
        z,
    })
}

/// Building up a double circulant code with all-one `x` and `y`.
///
/// Then `c` is all-one and `z = ε`, with `ε = 0` for odd `n` and `1` for even `n`.
pub fn build_up_circulant(f: &Gf2Poly, n: usize) -> Result<BuildUp> {
    let row = f.to_bitvector(n)?;
    if row.weight() % 2 == 0 {
        return Err(Error::EvenWeightRow);
    }
    let base = LinearCode::from_systematic(&BitMatrix::circulant(&row));
    let ones = BitVector::ones(n);
    let out = build_up(&base, &ones, &ones)?;
    debug_assert_eq!(out.z, n.is_multiple_of(2));
    Ok(out)
}

/// Inverse of building up: length `2n` to `2n − 2`.
///
/// Drops the first column of `A`; among the `n` shortened rows, the one with
/// the smallest index `j` that is a combination of the others is removed
/// together with identity column `j`.
pub fn reduce(code: &LinearCode) -> Result<LinearCode> {
    let a = systematic_invertible(code)?;
    let n = a.rows();
    if n < 2 {
        return Err(Error::OutOfRange("reduction needs dimension at least 2".into()));
    }
    let cols: Vec<usize> = (1..n).collect();
    let shortened = a.select_cols(&cols);
    let kernel = shortened.left_kernel();
    let dep = kernel.row(0);
    let j = dep.ones_iter().next().expect("kernel vector is nonzero");
    let keep: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    let a2 = shortened.select_rows(&keep);
    Ok(LinearCode::from_systematic(&a2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::are_equivalent;
    use crate::constructions::cyclic::extended_hamming;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn length6() -> LinearCode {
        LinearCode::from_systematic(&BitMatrix::parse_rows(&["011", "101", "111"]).unwrap())
    }

    #[test]
    fn worked_example_gives_extended_hamming() {
        let x = BitVector::parse("110").unwrap();
        let out = build_up(&length6(), &x, &x).unwrap();
        assert_eq!(out.c, BitVector::parse("110").unwrap());
        assert!(out.z);
        let expected = BitMatrix::parse_rows(&["10001110", "01001011", "00101101", "00010111"]).unwrap();
        assert_eq!(out.code.generator(), &expected);
        assert_eq!(out.code.min_distance().unwrap(), 4);
        assert!(are_equivalent(&out.code, &extended_hamming()).unwrap());
        assert_eq!(reduce(&out.code).unwrap(), length6());
    }

    #[test]
    fn zero_x_forces_z() {
        let zero = BitVector::zeros(3);
        let out = build_up(&length6(), &zero, &BitVector::parse("101").unwrap()).unwrap();
        assert!(out.z && out.c.is_zero());
        assert_eq!(out.code.generator().row(0), &BitVector::parse("10001000").unwrap());
    }

    #[test]
    fn every_small_build_up_is_cis_and_reduces_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for n in 1..=4usize {
            for _ in 0..10 {
                let a = loop {
                    let m = BitMatrix::from_u64_rows(&(0..n).map(|_| rng.gen_range(0..1u64 << n)).collect::<Vec<_>>(), n);
                    if m.determinant_nonzero().unwrap() {
                        break m;
                    }
                };
                let base = LinearCode::from_systematic(&a);
                for xb in 0..1u64 << n {
                    for yb in 0..1u64 << n {
                        let (x, y) = (BitVector::from_u64(n, xb), BitVector::from_u64(n, yb));
                        let out = build_up(&base, &x, &y).unwrap();
                        assert!(is_cis_systematic(&out.code).unwrap());
                        assert_eq!(reduce(&out.code).unwrap(), base);
                    }
                }
            }
        }
    }

    #[test]
    fn circulant_variant() {
        let f = Gf2Poly::from_exponents(&[0, 1, 2]);
        let out = build_up_circulant(&f, 5).unwrap();
        assert!(!out.z);
        assert!(is_cis_systematic(&out.code).unwrap());
        let even = build_up_circulant(&Gf2Poly::one(), 2).unwrap();
        assert!(even.z);
        // 1 + x + x^2 over n = 3 is the all-one circulant, which is singular.
        assert_eq!(build_up_circulant(&f, 3).unwrap_err(), Error::BaseNotCis);
        assert_eq!(
            build_up_circulant(&Gf2Poly::from_exponents(&[0, 1]), 3).unwrap_err(),
            Error::EvenWeightRow
        );
    }

    #[test]
    fn reduce_identity_pair() {
        let c = LinearCode::from_systematic(&BitMatrix::identity(2));
        let r = reduce(&c).unwrap();
        assert_eq!(r, LinearCode::from_systematic(&BitMatrix::identity(1)));
    }

    #[test]
    fn non_cis_base_rejected() {
        let c = LinearCode::from_systematic(&BitMatrix::parse_rows(&["11", "11"]).unwrap());
        let v = BitVector::zeros(2);
        assert_eq!(build_up(&c, &v, &v).unwrap_err(), Error::BaseNotCis);
        assert_eq!(reduce(&c).unwrap_err(), Error::BaseNotCis);
    }
}

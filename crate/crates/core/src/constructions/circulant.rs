use crate::code::LinearCode;
use crate::error::Result;
use crate::gf2::{coprime_to_x_n_minus_one, BitMatrix, Gf2Poly};

#[derive(Debug, Clone)]
pub struct DoubleCirculant {
    pub code: LinearCode,
    /// `gcd(f, x^n - 1) = 1`, which makes the code CIS with the systematic partition.
    pub provably_cis: bool,
}

/// The span of `(I | circ(f))` of length `2n`.
pub fn double_circulant(f: &Gf2Poly, n: usize) -> Result<DoubleCirculant> {
    let row = f.to_bitvector(n)?;
    let code = LinearCode::from_systematic(&BitMatrix::circulant(&row));
    Ok(DoubleCirculant {
        code,
        provably_cis: coprime_to_x_n_minus_one(f, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cis::is_cis_systematic;
    use crate::error::Error;

    #[test]
    fn f_one_gives_identity_pair() {
        let dc = double_circulant(&Gf2Poly::one(), 4).unwrap();
        assert!(dc.provably_cis);
        assert_eq!(dc.code.min_distance().unwrap(), 2);
        assert!(is_cis_systematic(&dc.code).unwrap());
    }

    #[test]
    fn degree_must_be_below_n() {
        let f = Gf2Poly::from_exponents(&[3, 0]);
        assert!(matches!(
            double_circulant(&f, 3),
            Err(Error::DegreeTooHigh { degree: 3, bound: 3 })
        ));
    }

    #[test]
    fn length_eighteen_is_not_covered_by_gcd_test() {
        let f = Gf2Poly::from_exponents(&[6, 3, 2, 1, 0]);
        let dc = double_circulant(&f, 9).unwrap();
        assert!(!dc.provably_cis);
        assert!(!is_cis_systematic(&dc.code).unwrap());
    }

    #[test]
    fn gcd_flag_matches_systematic_check() {
        for n in 1..=8usize {
            for bits in 0u64..(1 << n) {
                let f = Gf2Poly::from_coeffs(crate::gf2::BitVector::from_u64(n, bits));
                let dc = double_circulant(&f, n).unwrap();
                assert_eq!(dc.provably_cis, is_cis_systematic(&dc.code).unwrap());
            }
        }
    }
}

//! Explicit codes with known parameters.

use crate::code::LinearCode;
use crate::gf2::BitMatrix;

/// The `[6, 3, 3]` CIS code spanned by `(100 011), (010 101), (001 111)`.
pub fn length6_code() -> LinearCode {
    LinearCode::from_systematic(&BitMatrix::parse_rows(&["011", "101", "111"]).expect("valid rows"))
}

const LENGTH34_A: [&str; 17] = [
    "11110100111101101",
    "11001011111101101",
    "10101000001101101",
    "01101000110001101",
    "11111010101011100",
    "11111111111110111",
    "10001100110101001",
    "10011110101101111",
    "01010100010011001",
    "01000110110111111",
    "00101101111101111",
    "00111100101001001",
    "00000101011011110",
    "00001001010111101",
    "00001111001101000",
    "00010100111101010",
    "00011011111111110",
];

/// A `[34, 17, 8]` code `(I | A)`, CIS with left half `{13, .., 29}` (0-based).
///
/// `A` has rank 16, so the systematic partition is not a CIS certificate here.
pub fn length34_code() -> LinearCode {
    LinearCode::from_systematic(&BitMatrix::parse_rows(&LENGTH34_A).expect("valid rows"))
}

/// The left information set of the length-34 certificate, 0-based.
pub fn length34_left() -> Vec<usize> {
    (13..30).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cis::{find_cis_partition, is_cis_systematic, is_information_set, CisCertificate};

    #[test]
    fn length6_parameters() {
        let c = length6_code();
        assert_eq!(c.min_distance().unwrap(), 3);
        assert!(is_cis_systematic(&c).unwrap());
        assert_eq!(c.rref().1, vec![0, 1, 2]);
    }

    #[test]
    fn length34_parameters() {
        let c = length34_code();
        assert_eq!(c.min_distance().unwrap(), 8);
        assert!(!is_cis_systematic(&c).unwrap());
        assert_eq!(c.systematic_a().unwrap().rank(), 16);
        let left = length34_left();
        assert!(is_information_set(&c, &left).unwrap());
        let right: Vec<usize> = (0..13).chain(30..34).collect();
        assert!(CisCertificate { left, right }.verify(&c).unwrap());
        assert!(find_cis_partition(&c).unwrap().is_cis());
    }
}

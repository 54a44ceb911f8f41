//! Free codes over Z4, the Gray map, Hensel-lifted quadratic residue codes,
//! and the binary permutations carried by free CIS codes.

mod code;
mod matrix;
mod poly;

pub use code::{
    gray, gray_index, is_free_cis_z4, lee_weight, octacode, z4_permutation, z4_qr_code, LeeSample, Z4FreeCode,
    MAX_Z4_ENUM_DIMENSION,
};
pub use matrix::Z4Matrix;
pub use poly::{hensel_lift, Z4Poly};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cis::{gci_order_dual, gci_order_walsh};
    use crate::error::Error;
    use std::collections::HashSet;

    fn all_vectors(n: usize) -> impl Iterator<Item = Vec<u8>> {
        (0..1u32 << (2 * n)).map(move |m| (0..n).map(|i| ((m >> (2 * i)) & 3) as u8).collect())
    }

    #[test]
    fn gray_table() {
        assert_eq!(gray(&[0, 1, 2, 3]), crate::gf2::BitVector::parse("00011110").unwrap());
        assert_eq!(lee_weight(&[2]), 2);
        assert!(gray(&[0, 0, 0]).is_zero());
    }

    #[test]
    fn gray_is_injective_and_isometric() {
        for n in 1..=3 {
            let vs: Vec<Vec<u8>> = all_vectors(n).collect();
            let images: HashSet<_> = vs.iter().map(|v| gray(v)).collect();
            assert_eq!(images.len(), vs.len());
            for u in &vs {
                for v in &vs {
                    let diff: Vec<u8> = u.iter().zip(v).map(|(a, b)| (a + 4 - b) & 3).collect();
                    assert_eq!(gray(u).distance(&gray(v)), lee_weight(&diff));
                }
            }
        }
        for v in all_vectors(4) {
            assert_eq!(lee_weight(&v), gray(&v).weight());
            assert_eq!(gray_index(&v), gray(&v).to_u64());
        }
    }

    #[test]
    fn octacode_invariants() {
        let o = octacode();
        assert_eq!((o.length(), o.dimension()), (8, 4));
        assert!(o.is_self_dual());
        assert!(is_free_cis_z4(&o));
        assert_eq!(o.min_lee_weight().unwrap(), 6);
        let image = o.binary_image().unwrap();
        assert_eq!((image.size(), image.length()), (256, 16));
        assert_eq!(image.min_distance().unwrap(), Some(6));
        assert_eq!(image.dual_distance().unwrap(), Some(6));
        let b = image.distance_distribution::<num_rational::BigRational>().unwrap();
        assert_eq!(b.macwilliams(), b);
    }

    #[test]
    fn octacode_permutation_is_six_gci() {
        let o = octacode();
        let f = z4_permutation(&o).unwrap();
        assert_eq!(f.variables(), 8);
        assert_eq!(gci_order_walsh(&f).order, 6);
        assert_eq!(gci_order_dual(&f).unwrap(), 6);
        let graph: HashSet<_> = f.graph_code().codewords().iter().cloned().collect();
        let image: HashSet<_> = o.binary_image().unwrap().codewords().iter().cloned().collect();
        assert_eq!(graph, image);
    }

    #[test]
    fn identity_gives_identity_permutation() {
        let c = Z4FreeCode::from_systematic(Z4Matrix::identity(3));
        let f = z4_permutation(&c).unwrap();
        assert!(f.table().iter().enumerate().all(|(i, &v)| i as u32 == v));
    }

    #[test]
    fn even_determinant_is_not_cis() {
        let c = Z4FreeCode::from_systematic(Z4Matrix::from_rows(&[vec![1, 1], vec![3, 1]]).unwrap());
        assert!(!is_free_cis_z4(&c));
        assert_eq!(z4_permutation(&c).unwrap_err(), Error::NotFree);
    }

    #[test]
    fn larger_qr_codes() {
        for p in [23u64, 31, 47, 79] {
            let c = z4_qr_code(p).unwrap();
            assert_eq!((c.length(), c.dimension()), (p as usize + 1, (p as usize + 1) / 2));
            assert!(c.is_self_dual(), "p = {p}");
        }
        // p = 1 mod 8: the extended lift is free of rate one half but not self-dual.
        let c17 = z4_qr_code(17).unwrap();
        assert_eq!(c17.length(), 18);
        assert!(!c17.is_self_dual());
        assert_eq!(z4_qr_code(13).unwrap_err(), Error::BadPrime(13));
    }

    #[test]
    fn sampling_never_beats_exact_minimum() {
        let o = octacode();
        let s = o.sample_lee_weights(500, 1);
        assert!(!s.exhaustive);
        assert!(s.min_observed.unwrap() >= 6);
        let qr32 = z4_qr_code(31).unwrap();
        assert!(qr32.min_lee_weight().is_err());
        assert!(qr32.sample_lee_weights(2000, 7).min_observed.unwrap() >= 14);
    }
}

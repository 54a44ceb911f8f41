use std::fmt;

use super::vector::BitVector;
use crate::error::{Error, Result};

/// Polynomial over GF(2), coefficient of `x^i` at coordinate `i`.
///
/// Stored trimmed: the coefficient vector has length `degree + 1`, and is
/// empty for the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    coeffs: BitVector,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self {
            coeffs: BitVector::zeros(0),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(degree: usize) -> Self {
        Self {
            coeffs: BitVector::unit(degree + 1, degree),
        }
    }

    /// `x^n - 1`, which over GF(2) is `x^n + 1`.
    pub fn x_n_minus_one(n: usize) -> Self {
        let mut c = BitVector::unit(n + 1, n);
        c.set(0, true);
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(coeffs: BitVector) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// Polynomial with the given exponents set.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let len = exps.iter().max().map_or(0, |&m| m + 1);
        let mut c = BitVector::zeros(len);
        for &e in exps {
            c.flip(e);
        }
        Self::from_coeffs(c)
    }

    /// Parses a coefficient string, lowest degree first (`"1101"` is `1 + x + x^3`).
    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::from_coeffs(BitVector::parse(s)?))
    }

    fn trim(&mut self) {
        match self.coeffs.ones_iter().last() {
            Some(top) if top + 1 < self.coeffs.len() => {
                let keep: Vec<usize> = (0..=top).collect();
                self.coeffs = self.coeffs.select(&keep);
            }
            None if !self.coeffs.is_empty() => self.coeffs = BitVector::zeros(0),
            _ => {}
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn coeff(&self, i: usize) -> bool {
        i < self.coeffs.len() && self.coeffs.get(i)
    }

    pub fn weight(&self) -> usize {
        self.coeffs.weight()
    }

    pub fn coeffs(&self) -> &BitVector {
        &self.coeffs
    }

    /// Coefficients padded with zeros to `len` coordinates.
    pub fn to_bitvector(&self, len: usize) -> Result<BitVector> {
        if self.coeffs.len() > len {
            return Err(Error::DegreeTooHigh {
                degree: self.coeffs.len() - 1,
                bound: len,
            });
        }
        let mut v = BitVector::zeros(len);
        for i in self.coeffs.ones_iter() {
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut c = BitVector::zeros(len);
        for i in self.coeffs.ones_iter().chain(other.coeffs.ones_iter()) {
            c.flip(i);
        }
        Gf2Poly::from_coeffs(c)
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || other.is_zero() {
            return Gf2Poly::zero();
        }
        let mut c = BitVector::zeros(self.coeffs.len() + other.coeffs.len() - 1);
        for i in self.coeffs.ones_iter() {
            for j in other.coeffs.ones_iter() {
                c.flip(i + j);
            }
        }
        Gf2Poly::from_coeffs(c)
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let mut quot = BitVector::zeros(self.coeffs.len().saturating_sub(dd).max(1));
        while let Some(top) = rem.ones_iter().last() {
            if top < dd {
                break;
            }
            let shift = top - dd;
            quot.set(shift, true);
            for j in divisor.coeffs.ones_iter() {
                rem.flip(j + shift);
            }
        }
        (Gf2Poly::from_coeffs(quot), Gf2Poly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Gf2Poly) -> Gf2Poly {
        self.div_rem(divisor).1
    }

    pub fn divides(&self, other: &Gf2Poly) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Gf2Poly) -> Result<Gf2Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Reciprocal `x^deg f(1/x)`.
    pub fn reciprocal(&self) -> Gf2Poly {
        let Some(d) = self.degree() else {
            return Gf2Poly::zero();
        };
        let mut c = BitVector::zeros(d + 1);
        for i in self.coeffs.ones_iter() {
            c.set(d - i, true);
        }
        Gf2Poly::from_coeffs(c)
    }
}

/// `gcd(f, x^n - 1) == 1`: the condition under which the circulant of `f` is invertible.
pub fn coprime_to_x_n_minus_one(f: &Gf2Poly, n: usize) -> bool {
    f.gcd(&Gf2Poly::x_n_minus_one(n))
        .map(|g| g.is_one())
        .unwrap_or(false)
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .ones_iter()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    #[test]
    fn degree_and_display() {
        let f = Gf2Poly::parse("1101").unwrap();
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.to_string(), "x^3 + x + 1");
        assert_eq!(Gf2Poly::parse("0000").unwrap().degree(), None);
        assert_eq!(Gf2Poly::parse("0100").unwrap().degree(), Some(1));
    }

    #[test]
    fn gcd_with_itself() {
        let f = Gf2Poly::from_exponents(&[4, 1, 0]);
        assert_eq!(f.gcd(&f).unwrap(), f);
        assert_eq!(Gf2Poly::zero().gcd(&Gf2Poly::zero()), Err(Error::BothZero));
        assert_eq!(Gf2Poly::zero().gcd(&f).unwrap(), f);
    }

    #[test]
    fn gcd_length_eighteen_polynomial() {
        // x^6+x^3+x^2+x+1 = (x^2+x+1)(x^4+x^3+1); x^2+x+1 divides x^9+1.
        let f = Gf2Poly::from_exponents(&[6, 3, 2, 1, 0]);
        let g = f.gcd(&Gf2Poly::x_n_minus_one(9)).unwrap();
        assert_eq!(g, Gf2Poly::from_exponents(&[2, 1, 0]));
        let (q, r) = f.div_rem(&Gf2Poly::from_exponents(&[2, 1, 0]));
        assert!(r.is_zero());
        assert_eq!(q, Gf2Poly::from_exponents(&[4, 3, 0]));
    }

    #[test]
    fn gcd_length_thirty_polynomial_is_one() {
        // Frozen from an independent Euclid run: gcd(f, x^15+1) = 1.
        let f = Gf2Poly::from_exponents(&[10, 8, 7, 5, 3, 1, 0]);
        assert!(f.gcd(&Gf2Poly::x_n_minus_one(15)).unwrap().is_one());
        assert!(coprime_to_x_n_minus_one(&f, 15));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Gf2Poly::from_exponents(&[9, 7, 4, 0]);
        let b = Gf2Poly::from_exponents(&[3, 1, 0]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().map_or(true, |d| d < 3));
    }

    #[test]
    fn circulant_rank_matches_gcd_exhaustively() {
        // rank(circ(f)) = n - deg gcd(f, x^n - 1) for every f of degree < n, n <= 10.
        for n in 1..=10usize {
            let xn1 = Gf2Poly::x_n_minus_one(n);
            for bits in 0u64..(1 << n) {
                let row = BitVector::from_u64(n, bits);
                let f = Gf2Poly::from_coeffs(row.clone());
                let rank = BitMatrix::circulant(&row).rank();
                let expected = match f.gcd(&xn1).unwrap().degree() {
                    Some(d) => n - d,
                    None => unreachable!(),
                };
                let expected = if f.is_zero() { 0 } else { expected };
                assert_eq!(rank, expected, "n={n} f={f}");
            }
        }
    }
}

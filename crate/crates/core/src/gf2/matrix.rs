use std::fmt;

use super::vector::BitVector;
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self { rows, cols })
    }

    /// Rows given as `0`/`1` strings.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| BitVector::parse(r))
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(parsed, cols)
    }

    /// Rows given as integers, bit `j` of `rows[i]` is entry `(i, j)`.
    pub fn from_u64_rows(rows: &[u64], cols: usize) -> Self {
        Self {
            rows: rows.iter().map(|&r| BitVector::from_u64(cols, r)).collect(),
            cols,
        }
    }

    /// Square matrix whose row `i` is `first_row` cyclically shifted right by `i`.
    pub fn circulant(first_row: &BitVector) -> Self {
        let n = first_row.len();
        Self {
            rows: (0..n).map(|i| first_row.rotate_right(i)).collect(),
            cols: n,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn row_slice(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut c = BitVector::zeros(self.rows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones_iter() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows() != other.rows() || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows(),
                self.cols,
                other.rows(),
                other.cols
            )));
        }
        Ok(BitMatrix {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.xor(b)).collect(),
            cols: self.cols,
        })
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows(),
                self.cols,
                other.rows(),
                other.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BitVector::zeros(other.cols);
                for k in r.ones_iter() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows,
            cols: other.cols,
        })
    }

    /// Column action `A·v`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vector of length {}",
                self.rows(),
                self.cols,
                v.len()
            )));
        }
        let mut out = BitVector::zeros(self.rows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Row action `v·A`: the sum of the rows selected by `v`.
    pub fn vec_mul(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.rows() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} * {}x{}",
                v.len(),
                self.rows(),
                self.cols
            )));
        }
        let mut acc = BitVector::zeros(self.cols);
        for i in v.ones_iter() {
            acc.xor_assign(&self.rows[i]);
        }
        Ok(acc)
    }

    /// Reduced row echelon form and the pivot columns. Zero rows sink to the bottom.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows() {
                break;
            }
            let Some(p) = (r..self.rows()).find(|&i| self.rows[i].get(c)) else {
                continue;
            };
            self.rows.swap(r, p);
            let pivot = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant_nonzero(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows(),
                self.cols
            )));
        }
        Ok(self.rank() == self.cols)
    }

    /// Gauss-Jordan inverse.
    pub fn invert(&self) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows(),
                self.cols
            )));
        }
        let n = self.cols;
        let mut aug = self.hstack(&BitMatrix::identity(n))?;
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let right: Vec<usize> = (n..2 * n).collect();
        Ok(aug.select_cols(&right))
    }

    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows() != other.rows() {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows(),
                other.rows()
            )));
        }
        Ok(BitMatrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.concat(b))
                .collect(),
            cols: self.cols + other.cols,
        })
    }

    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix {
            rows,
            cols: self.cols,
        })
    }

    /// Columns in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> BitMatrix {
        BitMatrix {
            rows: self.rows.iter().map(|r| r.select(cols)).collect(),
            cols: cols.len(),
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        BitMatrix {
            rows: rows.iter().map(|&i| self.rows[i].clone()).collect(),
            cols: self.cols,
        }
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_cols(&self, perm: &[usize]) -> BitMatrix {
        self.select_cols(perm)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    /// Left kernel: a basis of `{ c : c·self = 0 }`.
    pub fn left_kernel(&self) -> BitMatrix {
        self.transpose().kernel()
    }

    /// Right kernel: a basis of `{ v : self·v = 0 }`, one vector per free column.
    pub fn kernel(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::unit(self.cols, free);
            for (i, &p) in pivots.iter().enumerate() {
                if r.rows[i].get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        BitMatrix {
            rows: basis,
            cols: self.cols,
        }
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows(), self.cols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> BitMatrix {
        let rows = (0..rows)
            .map(|_| BitVector::from_u64(cols, rng.gen()))
            .collect();
        BitMatrix::from_rows(rows, cols).unwrap()
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::zeros(3, 3).rank(), 0);
    }

    #[test]
    fn rref_identity_pivots() {
        let (r, p) = BitMatrix::identity(4).rref();
        assert_eq!(r, BitMatrix::identity(4));
        assert_eq!(p, vec![0, 1, 2, 3]);
    }

    #[test]
    fn duplicate_rows_drop_rank() {
        let m = BitMatrix::parse_rows(&["1101", "0110", "1101"]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(p.len(), 2);
        assert!(r.row(2).is_zero());
    }

    #[test]
    fn length_six_generator_pivots() {
        let g = BitMatrix::parse_rows(&["100011", "010101", "001111"]).unwrap();
        assert_eq!(g.rref().1, vec![0, 1, 2]);
    }

    #[test]
    fn invert_order_two() {
        let m = BitMatrix::parse_rows(&["01", "11"]).unwrap();
        let inv = m.invert().unwrap();
        assert_eq!(inv, BitMatrix::parse_rows(&["11", "10"]).unwrap());
        assert_eq!(m.mul(&inv).unwrap(), BitMatrix::identity(2));
    }

    #[test]
    fn invert_zero_column_is_singular() {
        let m = BitMatrix::parse_rows(&["10", "10"]).unwrap();
        assert_eq!(m.invert(), Err(Error::Singular));
        assert!(BitMatrix::zeros(2, 3).invert().is_err());
    }

    #[test]
    fn circulant_small_cases() {
        let shift = BitMatrix::circulant(&BitVector::parse("100").unwrap());
        assert_eq!(shift, BitMatrix::identity(3));
        let ones = BitMatrix::circulant(&BitVector::parse("111").unwrap());
        assert_eq!(ones.rank(), 1);
        let c = BitMatrix::circulant(&BitVector::parse("110").unwrap());
        assert_eq!(c.row(1).to_string(), "011");
        assert_eq!(c.row(2).to_string(), "101");
    }

    #[test]
    fn products() {
        let a = BitMatrix::parse_rows(&["101", "011"]).unwrap();
        assert_eq!(a.mul(&BitMatrix::identity(3)).unwrap(), a);
        assert!(a.mul(&a).is_err());
        let v = BitVector::zeros(3);
        assert!(a.mul_vec(&v).unwrap().is_zero());
        let x = BitVector::parse("11").unwrap();
        assert_eq!(a.vec_mul(&x).unwrap().to_string(), "110");
    }

    #[test]
    fn determinant_agrees_with_invert_on_random_8x8() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut seen = [0usize; 2];
        for _ in 0..500 {
            let m = random_matrix(&mut rng, 8, 8);
            let det = m.determinant_nonzero().unwrap();
            assert_eq!(det, m.invert().is_ok());
            seen[det as usize] += 1;
            if let Ok(inv) = m.invert() {
                assert_eq!(m.mul(&inv).unwrap(), BitMatrix::identity(8));
            }
        }
        assert!(seen[0] > 0 && seen[1] > 0);
    }

    #[test]
    fn kernel_is_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 5, 11);
            let k = m.kernel();
            assert_eq!(k.rows() + m.rank(), 11);
            assert!(m.mul(&k.transpose()).unwrap().is_zero());
        }
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_row_space_preserved(
            words in proptest::collection::vec(any::<u64>(), 1..8),
            cols in 1usize..20,
            probe in any::<u64>(),
        ) {
            let m = BitMatrix::from_u64_rows(&words, cols);
            let (r, pivots) = m.rref();
            prop_assert_eq!(r.rref().0, r.clone());
            prop_assert_eq!(pivots.len(), m.rank());
            // Membership of a probe vector must agree between the two row spaces.
            let v = BitVector::from_u64(cols, probe);
            let in_m = m.vstack(&BitMatrix::from_rows(vec![v.clone()], cols).unwrap()).unwrap().rank() == m.rank();
            let in_r = r.vstack(&BitMatrix::from_rows(vec![v], cols).unwrap()).unwrap().rank() == r.rank();
            prop_assert_eq!(in_m, in_r);
            // Every row of m lies in the row space of r.
            for row in m.row_slice() {
                let ext = r.vstack(&BitMatrix::from_rows(vec![row.clone()], cols).unwrap()).unwrap();
                prop_assert_eq!(ext.rank(), r.rank());
            }
        }

        #[test]
        fn invert_iff_full_rank(words in proptest::collection::vec(any::<u64>(), 6)) {
            let m = BitMatrix::from_u64_rows(&words, 6);
            let full = m.rank() == 6;
            prop_assert_eq!(m.invert().is_ok(), full);
            prop_assert_eq!(m.determinant_nonzero().unwrap(), full);
        }
    }
}

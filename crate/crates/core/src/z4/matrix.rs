use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// Dense matrix over the integers mod 4.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Z4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

fn check_entry(v: u8) -> Result<u8> {
    if v < 4 {
        Ok(v)
    } else {
        Err(Error::OutOfRange(format!("Z4 entry {v}")))
    }
}

impl Z4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for &v in r {
                data.push(check_entry(v)?);
            }
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v & 3;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// `v · M`.
    pub fn vec_mul(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("vector of length {} times {} rows", v.len(), self.rows)));
        }
        let mut out = vec![0u8; self.cols];
        for (i, &c) in v.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (o, &m) in out.iter_mut().zip(self.row(i)) {
                *o = (*o + c * m) & 3;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Z4Matrix) -> Result<Z4Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Z4Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let r = other.vec_mul(self.row(i))?;
            out.data[i * other.cols..(i + 1) * other.cols].copy_from_slice(&r);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Z4Matrix {
        let mut t = Z4Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn select_cols(&self, cols: &[usize]) -> Z4Matrix {
        let mut m = Z4Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m.set(i, k, self.get(i, j));
            }
        }
        m
    }

    /// Entrywise reduction mod 2.
    pub fn mod2(&self) -> BitMatrix {
        let rows = (0..self.rows)
            .map(|i| BitVector::from_bools(&self.row(i).iter().map(|&v| v & 1 == 1).collect::<Vec<_>>()))
            .collect();
        BitMatrix::from_rows(rows, self.cols).expect("consistent widths")
    }

    /// A square matrix over Z4 is invertible iff its reduction mod 2 is.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.mod2().determinant_nonzero().unwrap_or(false)
    }

    /// Row-reduces so that the leading `rows × rows` block becomes the identity.
    ///
    /// Fails with `NotFree` unless that block is invertible.
    pub fn systematize(&self) -> Result<Z4Matrix> {
        let k = self.rows;
        if k > self.cols {
            return Err(Error::NotFree);
        }
        let mut m = self.clone();
        for c in 0..k {
            let p = (c..k).find(|&r| m.get(r, c) & 1 == 1).ok_or(Error::NotFree)?;
            m.swap_rows(c, p);
            // Units of Z4 are self-inverse.
            let inv = m.get(c, c);
            m.scale_row(c, inv);
            for r in 0..k {
                let f = m.get(r, c);
                if r != c && f != 0 {
                    m.add_row_multiple(r, c, 4 - f);
                }
            }
        }
        Ok(m)
    }

    pub fn invert(&self) -> Result<Z4Matrix> {
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let mut aug = Z4Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let s = aug.systematize()?;
        Ok(s.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, f: u8) {
        for j in 0..self.cols {
            let v = self.get(r, j);
            self.set(r, j, v * f);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, f: u8) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + f * self.get(src, j);
            self.set(dst, j, v);
        }
    }
}

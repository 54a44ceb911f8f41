use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::matrix::Z4Matrix;
use super::poly::hensel_lift;
use crate::cis::{PermutationTable, MAX_TABLE_VARIABLES};
use crate::code::UnrestrictedCode;
use crate::constructions::binary_qr_generator;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Largest `k` for which all `4^k` codewords are enumerated.
pub const MAX_Z4_ENUM_DIMENSION: usize = 12;

/// Gray images of the symbols 0, 1, 2, 3 as (first bit, second bit).
const GRAY: [(bool, bool); 4] = [(false, false), (false, true), (true, true), (true, false)];

/// Componentwise Gray image; symbol `i` maps to coordinates `2i` and `2i + 1`.
pub fn gray(v: &[u8]) -> BitVector {
    let mut out = BitVector::zeros(2 * v.len());
    for (i, &s) in v.iter().enumerate() {
        let (a, b) = GRAY[(s & 3) as usize];
        out.set(2 * i, a);
        out.set(2 * i + 1, b);
    }
    out
}

/// Gray image packed into an integer (bit `j` = binary coordinate `j`).
pub fn gray_index(v: &[u8]) -> u64 {
    v.iter().enumerate().fold(0u64, |acc, (i, &s)| {
        let (a, b) = GRAY[(s & 3) as usize];
        acc | ((a as u64) << (2 * i)) | ((b as u64) << (2 * i + 1))
    })
}

pub fn lee_weight(v: &[u8]) -> usize {
    v.iter().map(|&s| [0, 1, 2, 1][(s & 3) as usize]).sum()
}

/// Free Z4 code with generator `(I_k | A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z4FreeCode {
    a: Z4Matrix,
}

fn message(mut index: u64, k: usize) -> Vec<u8> {
    (0..k)
        .map(|_| {
            let s = (index & 3) as u8;
            index >>= 2;
            s
        })
        .collect()
}

impl Z4FreeCode {
    pub fn from_systematic(a: Z4Matrix) -> Self {
        Self { a }
    }

    /// Systematizes an arbitrary generator; its leading square block must be invertible.
    pub fn from_generator(g: &Z4Matrix) -> Result<Self> {
        let s = g.systematize()?;
        let k = g.rows();
        Ok(Self { a: s.select_cols(&(k..g.cols()).collect::<Vec<_>>()) })
    }

    pub fn length(&self) -> usize {
        self.a.rows() + self.a.cols()
    }

    pub fn dimension(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &Z4Matrix {
        &self.a
    }

    pub fn generator(&self) -> Z4Matrix {
        let k = self.dimension();
        let rows: Vec<Vec<u8>> = (0..k)
            .map(|i| {
                let mut r = vec![0u8; k];
                r[i] = 1;
                r.extend_from_slice(self.a.row(i));
                r
            })
            .collect();
        Z4Matrix::from_rows(&rows).expect("rectangular")
    }

    /// `(u, u·A)`.
    pub fn encode(&self, u: &[u8]) -> Result<Vec<u8>> {
        let mut w = u.to_vec();
        w.extend(self.a.vec_mul(u)?);
        Ok(w)
    }

    /// Number of codewords, `4^k`.
    pub fn size(&self) -> u128 {
        1u128 << (2 * self.dimension())
    }

    fn check_enumerable(&self) -> Result<()> {
        let k = self.dimension();
        if k > MAX_Z4_ENUM_DIMENSION {
            return Err(Error::TooLarge { what: "Z4 dimension for enumeration", value: k, cap: MAX_Z4_ENUM_DIMENSION });
        }
        Ok(())
    }

    /// All `4^k` codewords.
    pub fn codewords(&self) -> Result<Vec<Vec<u8>>> {
        self.check_enumerable()?;
        let k = self.dimension();
        (0..1u64 << (2 * k))
            .into_par_iter()
            .map(|m| self.encode(&message(m, k)))
            .collect()
    }

    pub fn binary_image(&self) -> Result<UnrestrictedCode> {
        let words = self.codewords()?.iter().map(|c| gray(c)).collect();
        UnrestrictedCode::new(2 * self.length(), words)
    }

    /// Exact minimum nonzero Lee weight by enumeration.
    pub fn min_lee_weight(&self) -> Result<usize> {
        self.check_enumerable()?;
        let k = self.dimension();
        Ok((1..1u64 << (2 * k))
            .into_par_iter()
            .map(|m| lee_weight(&self.encode(&message(m, k)).expect("sizes match")))
            .min()
            .unwrap_or(0))
    }

    /// Euclidean inner products of all generator row pairs vanish and `n = 2k`.
    pub fn is_self_dual(&self) -> bool {
        if self.length() != 2 * self.dimension() {
            return false;
        }
        let g = self.generator();
        (0..g.rows()).all(|i| {
            (i..g.rows()).all(|j| g.row(i).iter().zip(g.row(j)).map(|(&x, &y)| (x * y) as u32).sum::<u32>() % 4 == 0)
        })
    }

    /// CIS with the systematic partition: `A` square and invertible over Z4.
    pub fn is_free_cis(&self) -> bool {
        self.a.is_invertible()
    }

    /// Lee weights of random nonzero codewords; the minimum is an upper bound on the true minimum.
    pub fn sample_lee_weights(&self, samples: usize, seed: u64) -> LeeSample {
        let k = self.dimension();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut min = usize::MAX;
        let mut taken = 0;
        while taken < samples {
            let u: Vec<u8> = (0..k).map(|_| rng.gen_range(0..4u8)).collect();
            if u.iter().all(|&s| s == 0) {
                continue;
            }
            min = min.min(lee_weight(&self.encode(&u).expect("sizes match")));
            taken += 1;
        }
        LeeSample { samples, min_observed: (samples > 0).then_some(min), exhaustive: false }
    }
}

/// Result of sampling codeword Lee weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeeSample {
    pub samples: usize,
    /// Smallest Lee weight seen; never below the true minimum.
    pub min_observed: Option<usize>,
    pub exhaustive: bool,
}

impl LeeSample {
    pub fn line(&self) -> String {
        format!(
            "lee-sample samples={} min-observed={} bound=upper exhaustive={}",
            self.samples,
            self.min_observed.map_or("none".into(), |m| m.to_string()),
            if self.exhaustive { "yes" } else { "no" }
        )
    }
}

pub fn is_free_cis_z4(code: &Z4FreeCode) -> bool {
    code.is_free_cis()
}

/// Extended quadratic residue code over Z4 of length `p + 1`, in systematic form.
///
/// The binary QR generator is Hensel-lifted, its cyclic code is extended by
/// the symbol `−Σ c_i`, and the result is systematized.
pub fn z4_qr_code(p: u64) -> Result<Z4FreeCode> {
    let g2 = binary_qr_generator(p)?;
    let n = p as usize;
    let g4 = hensel_lift(&g2, n)?;
    let deg = g4.degree().expect("nonzero");
    let base = g4.to_vec(n)?;
    let rows: Vec<Vec<u8>> = (0..n - deg)
        .map(|i| {
            let mut r: Vec<u8> = (0..n).map(|j| base[(j + n - i) % n]).collect();
            let s: u32 = r.iter().map(|&c| c as u32).sum();
            r.push(((4 - s % 4) % 4) as u8);
            r
        })
        .collect();
    Z4FreeCode::from_generator(&Z4Matrix::from_rows(&rows)?)
}

/// The octacode, `z4_qr_code(7)`.
pub fn octacode() -> Z4FreeCode {
    z4_qr_code(7).expect("7 = -1 mod 8")
}

/// The binary permutation with `F(gray(u)) = gray(u·A)`.
pub fn z4_permutation(code: &Z4FreeCode) -> Result<PermutationTable> {
    let k = code.dimension();
    if code.a.cols() != k || !code.is_free_cis() {
        return Err(Error::NotFree);
    }
    if 2 * k > MAX_TABLE_VARIABLES {
        return Err(Error::TooLarge { what: "permutation variables", value: 2 * k, cap: MAX_TABLE_VARIABLES });
    }
    let mut table = vec![0u32; 1 << (2 * k)];
    for m in 0..1u64 << (2 * k) {
        let u = message(m, k);
        table[gray_index(&u) as usize] = gray_index(&code.a.vec_mul(&u)?) as u32;
    }
    PermutationTable::new(2 * k, table)
}


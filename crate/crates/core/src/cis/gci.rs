//! Permutations `F` of `F_2^n`, their Walsh spectra, and the GCI order.
//!
//! `F` is d-GCI when `Ŵ(a, b) = Σ_x (-1)^{a·x + b·F(x)}` vanishes for every
//! nonzero `(a, b)` with `wt(a) + wt(b) < d`. Equivalently the graph code
//! `C_F = {(x, F(x))}` has dual distance at least `d`; both routes are
//! implemented so that each can serve as the other's oracle.

use rayon::prelude::*;

use super::partition::is_cis_systematic;
use crate::code::{LinearCode, UnrestrictedCode};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// Largest number of variables for an explicit permutation table.
pub const MAX_TABLE_VARIABLES: usize = 20;

/// A bijection of `{0, .., 2^n - 1}`; bit `i` of a value is coordinate `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationTable {
    n: usize,
    table: Vec<u32>,
}

impl PermutationTable {
    pub fn new(n: usize, table: Vec<u32>) -> Result<Self> {
        if n > MAX_TABLE_VARIABLES {
            return Err(Error::TooLarge {
                what: "permutation variables",
                value: n,
                cap: MAX_TABLE_VARIABLES,
            });
        }
        if table.len() != 1 << n {
            return Err(Error::WrongSize {
                got: table.len(),
                expected: 1 << n,
            });
        }
        let mut seen = vec![false; table.len()];
        for &v in &table {
            if v as usize >= seen.len() || std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::NotBijective);
            }
        }
        Ok(Self { n, table })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, (0..1u32 << n).collect())
    }

    /// `x ↦ x·A` for a square `A`; rows of `A` are the images of the unit vectors.
    pub fn linear(a: &BitMatrix) -> Result<Self> {
        let n = a.rows();
        if !a.is_square() {
            return Err(Error::DimensionMismatch(format!("{}x{} matrix", n, a.cols())));
        }
        if n > MAX_TABLE_VARIABLES {
            return Err(Error::TooLarge {
                what: "permutation variables",
                value: n,
                cap: MAX_TABLE_VARIABLES,
            });
        }
        let rows: Vec<u32> = a.row_slice().iter().map(|r| r.to_u64() as u32).collect();
        let mut table = vec![0u32; 1 << n];
        for x in 1usize..1 << n {
            let low = x.trailing_zeros() as usize;
            table[x] = table[x & (x - 1)] ^ rows[low];
        }
        Self::new(n, table)
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// The graph code `{(x, F(x))}` of length `2n`, `x` on the first `n` coordinates.
    pub fn graph_code(&self) -> UnrestrictedCode {
        let n = self.n;
        let words = self
            .table
            .iter()
            .enumerate()
            .map(|(x, &y)| BitVector::from_u64(2 * n, x as u64 | (y as u64) << n))
            .collect();
        UnrestrictedCode::new(2 * n, words).expect("graph of a function has distinct words")
    }
}

/// `F(x) = x·A` for a code that is CIS with the systematic partition.
pub fn extract_permutation(code: &LinearCode) -> Result<PermutationTable> {
    if !is_cis_systematic(code)? {
        return Err(Error::NotSystematicCis);
    }
    PermutationTable::linear(&code.systematic_a().expect("systematic form exists"))
}

#[inline]
fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}

/// `Ŵ(a, b) = Σ_x (-1)^{a·x + b·F(x)}`.
pub fn walsh(f: &PermutationTable, a: u32, b: u32) -> i64 {
    f.table
        .iter()
        .enumerate()
        .map(|(x, &y)| if parity(a & x as u32) ^ parity(b & y) { -1 } else { 1 })
        .sum()
}

/// In-place fast Walsh-Hadamard transform.
pub fn fwht(v: &mut [i64]) {
    let mut h = 1;
    while h < v.len() {
        for i in (0..v.len()).step_by(2 * h) {
            for j in i..i + h {
                let (x, y) = (v[j], v[j + h]);
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
        h *= 2;
    }
}

/// `b ↦ Ŵ(a, b)` for one `a`.
pub fn walsh_row(f: &PermutationTable, a: u32) -> Vec<i64> {
    let mut h = vec![0i64; f.table.len()];
    for (x, &y) in f.table.iter().enumerate() {
        h[y as usize] += if parity(a & x as u32) { -1 } else { 1 };
    }
    fwht(&mut h);
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GciReport {
    /// Largest `d` such that `F` is d-GCI.
    pub order: usize,
    /// Least `(a, b)` (by `a`, then `b`) of weight `order` with `Ŵ(a, b) != 0`.
    pub witness: (u32, u32),
    pub value: i64,
}

/// GCI order by Walsh spectra, sweeping `a` by increasing weight.
pub fn gci_order_walsh(f: &PermutationTable) -> GciReport {
    let n = f.n;
    // (weight, a, b, value); b = 0 never contributes for a bijection, so wt(a) < order.
    let mut best: Option<(usize, u32, u32, i64)> = None;
    for wa in 0..=n {
        if best.is_some_and(|b| wa + 1 > b.0) {
            break;
        }
        let class: Vec<u32> = (0..1u32 << n).filter(|a| a.count_ones() as usize == wa).collect();
        let found = class
            .par_iter()
            .filter_map(|&a| {
                let row = walsh_row(f, a);
                row.iter()
                    .enumerate()
                    .filter(|&(b, &v)| v != 0 && (a, b) != (0, 0))
                    .map(|(b, &v)| (wa + (b as u32).count_ones() as usize, a, b as u32, v))
                    .min()
            })
            .min();
        best = match (best, found) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
    }
    let (order, a, b, value) = best.expect("Parseval forces a nonzero coefficient");
    GciReport {
        order,
        witness: (a, b),
        value,
    }
}

/// GCI order as the dual distance of the graph code, via the MacWilliams transform.
pub fn gci_order_dual(f: &PermutationTable) -> Result<usize> {
    Ok(f
        .graph_code()
        .dual_distance()?
        .expect("a permutation graph code is never the full space"))
}

/// For a systematic CIS code `C` the graph code of `x ↦ x·A` is `C` itself.
pub fn gci_order_dual_linear(code: &LinearCode) -> Result<usize> {
    if !is_cis_systematic(code)? {
        return Err(Error::NotSystematicCis);
    }
    code.dual_distance()
}

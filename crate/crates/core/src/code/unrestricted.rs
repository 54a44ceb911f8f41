use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};
use rayon::prelude::*;

use super::distribution::DistanceDistribution;
use super::linear::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Default cap on `|C|` for all-pairs distance counting (`|C|^2 / 2` pair visits).
pub const DEFAULT_MAX_CODEWORDS: usize = 1 << 17;

/// A possibly nonlinear binary code, stored as a list of distinct codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrestrictedCode {
    length: usize,
    codewords: Vec<BitVector>,
}

impl UnrestrictedCode {
    pub fn new(length: usize, mut codewords: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = codewords.iter().find(|c| c.len() != length) {
            return Err(Error::DimensionMismatch(format!(
                "codeword of length {} in a code of length {length}",
                bad.len()
            )));
        }
        let before = codewords.len();
        codewords.sort();
        codewords.dedup();
        if codewords.len() != before {
            return Err(Error::DimensionMismatch(format!(
                "{} duplicate codewords",
                before - codewords.len()
            )));
        }
        Ok(Self { length, codewords })
    }

    pub fn from_linear(code: &LinearCode) -> Result<Self> {
        Self::new(code.length(), code.codewords()?)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    /// Codewords in sorted order.
    pub fn codewords(&self) -> &[BitVector] {
        &self.codewords
    }

    /// Counts of ordered pairs `(x, y)` at each distance.
    pub fn pair_counts(&self) -> Result<Vec<u64>> {
        self.pair_counts_with_cap(DEFAULT_MAX_CODEWORDS)
    }

    pub fn pair_counts_with_cap(&self, max_codewords: usize) -> Result<Vec<u64>> {
        if self.size() > max_codewords {
            return Err(Error::TooLarge {
                what: "codewords for pair counting",
                value: self.size(),
                cap: max_codewords,
            });
        }
        let n = self.length;
        let merge = |mut a: Vec<u64>, b: Vec<u64>| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        };
        let mut counts = if n <= 64 {
            let words: Vec<u64> = self.codewords.iter().map(BitVector::to_u64).collect();
            (0..words.len())
                .into_par_iter()
                .fold(
                    || vec![0u64; n + 1],
                    |mut acc, i| {
                        let x = words[i];
                        for &y in &words[i + 1..] {
                            acc[(x ^ y).count_ones() as usize] += 2;
                        }
                        acc
                    },
                )
                .reduce(|| vec![0u64; n + 1], merge)
        } else {
            let words = &self.codewords;
            (0..words.len())
                .into_par_iter()
                .fold(
                    || vec![0u64; n + 1],
                    |mut acc, i| {
                        for y in &words[i + 1..] {
                            acc[words[i].distance(y)] += 2;
                        }
                        acc
                    },
                )
                .reduce(|| vec![0u64; n + 1], merge)
        };
        counts[0] += self.size() as u64;
        Ok(counts)
    }

    /// `B_i = |{(x, y) : d(x, y) = i}| / |C|`.
    pub fn distance_distribution<T: Num + Clone + FromPrimitive>(&self) -> Result<DistanceDistribution<T>> {
        Ok(DistanceDistribution::from_pair_counts(
            &self.pair_counts()?,
            self.size() as u64,
        ))
    }

    /// Smallest nonzero distance between two codewords.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        let counts = self.pair_counts()?;
        Ok((1..counts.len()).find(|&i| counts[i] != 0))
    }

    /// Smallest `i > 0` with `B_i^⊥ != 0`, computed exactly. `None` when the dual distribution vanishes past 0.
    pub fn dual_distance(&self) -> Result<Option<usize>> {
        Ok(self
            .distance_distribution::<BigRational>()?
            .macwilliams()
            .first_nonzero_index())
    }
}

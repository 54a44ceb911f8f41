//! Gray-code enumeration of the message space of a linear code.
//!
//! Message `i` is mapped to codeword `gray(i)·G` with `gray(i) = i ^ (i >> 1)`,
//! so consecutive messages differ in one generator row and each step costs a
//! single row XOR. Any interval `[start, end)` of messages can be processed on
//! its own; per-interval minima and weight histograms merge associatively.

use std::ops::Range;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::gf2::BitVector;

/// Default cap on the dimension of a code whose codewords are fully enumerated.
pub const DEFAULT_ENUM_CAP: usize = 28;

/// Name of the environment variable that overrides [`DEFAULT_ENUM_CAP`].
pub const ENUM_CAP_ENV: &str = "CISKIT_ENUM_CAP";

const CHUNK_BITS: u32 = 16;

/// Dimension cap from `CISKIT_ENUM_CAP`, falling back to [`DEFAULT_ENUM_CAP`].
pub fn enum_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(ENUM_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_ENUM_CAP)
    })
}

/// Flattened generator rows, `words` u64 words per row.
pub(crate) struct RowSet {
    len: usize,
    words: usize,
    data: Vec<u64>,
}

impl RowSet {
    pub(crate) fn new(rows: &[BitVector], len: usize) -> Self {
        let words = len.div_ceil(64).max(1);
        let mut data = Vec::with_capacity(rows.len() * words);
        for r in rows {
            let w = r.words();
            data.extend_from_slice(w);
            data.extend(std::iter::repeat_n(0, words - w.len()));
        }
        Self { len, words, data }
    }

    fn dim(&self) -> usize {
        self.data.len() / self.words
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// Codeword for message `gray(start)`.
    fn start_word(&self, start: u64, acc: &mut [u64]) {
        acc.iter_mut().for_each(|w| *w = 0);
        let g = start ^ (start >> 1);
        for i in 0..self.dim() {
            if (g >> i) & 1 == 1 {
                for (a, r) in acc.iter_mut().zip(self.row(i)) {
                    *a ^= r;
                }
            }
        }
    }

    /// Calls `visit(weight)` for every codeword with message index in `range`.
    fn walk(&self, range: Range<u64>, mut visit: impl FnMut(usize)) {
        if range.is_empty() {
            return;
        }
        if self.words == 1 {
            let rows: Vec<u64> = (0..self.dim()).map(|i| self.data[i]).collect();
            let g = range.start ^ (range.start >> 1);
            let mut acc = rows
                .iter()
                .enumerate()
                .filter(|(i, _)| (g >> i) & 1 == 1)
                .fold(0u64, |a, (_, r)| a ^ r);
            visit(acc.count_ones() as usize);
            for i in range.start + 1..range.end {
                acc ^= rows[i.trailing_zeros() as usize];
                visit(acc.count_ones() as usize);
            }
        } else {
            let mut acc = vec![0u64; self.words];
            self.start_word(range.start, &mut acc);
            let weight = |a: &[u64]| a.iter().map(|w| w.count_ones() as usize).sum::<usize>();
            visit(weight(&acc));
            for i in range.start + 1..range.end {
                let r = self.row(i.trailing_zeros() as usize);
                for (a, b) in acc.iter_mut().zip(r) {
                    *a ^= b;
                }
                visit(weight(&acc));
            }
        }
    }

    /// Smallest nonzero weight over messages in `range`.
    pub(crate) fn min_weight_in(&self, range: Range<u64>) -> Option<usize> {
        let mut best: Option<usize> = None;
        self.walk(range, |w| {
            if w > 0 && best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        });
        best
    }

    /// Weight histogram over messages in `range`, indexed `0..=len`.
    pub(crate) fn weight_counts_in(&self, range: Range<u64>) -> Vec<u64> {
        let mut counts = vec![0u64; self.len + 1];
        self.walk(range, |w| counts[w] += 1);
        counts
    }

    fn chunks(&self) -> Vec<Range<u64>> {
        let total = 1u64 << self.dim();
        let step = 1u64 << CHUNK_BITS;
        (0..total.div_ceil(step))
            .map(|c| c * step..((c + 1) * step).min(total))
            .collect()
    }

    pub(crate) fn min_weight(&self) -> Option<usize> {
        self.chunks()
            .into_par_iter()
            .filter_map(|r| self.min_weight_in(r))
            .min()
    }

    pub(crate) fn weight_counts(&self) -> Vec<u64> {
        self.chunks()
            .into_par_iter()
            .map(|r| self.weight_counts_in(r))
            .reduce(
                || vec![0u64; self.len + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Plain binary-counter enumeration, independent of the Gray walk.
    fn brute_counts(rows: &[BitVector], len: usize) -> Vec<u64> {
        let mut counts = vec![0u64; len + 1];
        for m in 0u64..(1 << rows.len()) {
            let mut acc = BitVector::zeros(len);
            for (i, r) in rows.iter().enumerate() {
                if (m >> i) & 1 == 1 {
                    acc.xor_assign(r);
                }
            }
            counts[acc.weight()] += 1;
        }
        counts
    }

    #[test]
    fn gray_walk_matches_binary_counter() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &len in &[5usize, 40, 64, 70, 150] {
            for _ in 0..5 {
                let rows: Vec<BitVector> = (0..9)
                    .map(|_| {
                        let words = (0..len.div_ceil(64)).map(|_| rng.gen()).collect();
                        BitVector::from_words(len, words)
                    })
                    .collect();
                let set = RowSet::new(&rows, len);
                assert_eq!(set.weight_counts(), brute_counts(&rows, len));
            }
        }
    }

    #[test]
    fn ranges_merge_to_whole() {
        let rows: Vec<BitVector> = ["1100110", "0110011", "0011101", "1010101"]
            .iter()
            .map(|s| BitVector::parse(s).unwrap())
            .collect();
        let set = RowSet::new(&rows, 7);
        let whole = set.weight_counts_in(0..16);
        let mut merged = set.weight_counts_in(0..5);
        for (a, b) in merged.iter_mut().zip(set.weight_counts_in(5..16)) {
            *a += b;
        }
        assert_eq!(whole, merged);
        let m = [set.min_weight_in(0..3), set.min_weight_in(3..16)]
            .into_iter()
            .flatten()
            .min();
        assert_eq!(m, set.min_weight());
    }
}

use std::sync::OnceLock;

use num_rational::BigRational;

use super::canonical::{canonicalize_rows, CANON_MAX_LENGTH};
use super::distribution::WeightDistribution;
use super::enumerate::{enum_cap, RowSet};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// A binary `[n, k]` linear code given by a full-rank generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: BitMatrix,
    reduced: OnceLock<(BitMatrix, Vec<usize>)>,
}

impl PartialEq for LinearCode {
    /// Equality of codes as sets of codewords.
    fn eq(&self, other: &Self) -> bool {
        self.length() == other.length() && self.rref().0 == other.rref().0
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// Fails with `RankDeficient` unless the rows are independent.
    pub fn new(generator: BitMatrix) -> Result<Self> {
        let code = Self {
            generator,
            reduced: OnceLock::new(),
        };
        let rank = code.rref().1.len();
        if rank < code.generator.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: code.generator.rows(),
            });
        }
        Ok(code)
    }

    /// The span of arbitrary rows, dependent ones discarded.
    pub fn span(rows: &BitMatrix) -> Self {
        let (r, pivots) = rows.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        Self::new(r.select_rows(&keep)).expect("rref rows are independent")
    }

    /// The code with generator `(I | a)`.
    pub fn from_systematic(a: &BitMatrix) -> Self {
        let g = BitMatrix::identity(a.rows())
            .hstack(a)
            .expect("identity matches row count");
        Self::new(g).expect("(I|A) has full rank")
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// Reduced row echelon generator and its pivot columns.
    pub fn rref(&self) -> &(BitMatrix, Vec<usize>) {
        self.reduced.get_or_init(|| self.generator.rref())
    }

    /// `A` such that the code is spanned by `(I | A)`, when the first `k` columns are an information set.
    pub fn systematic_a(&self) -> Option<BitMatrix> {
        let (r, pivots) = self.rref();
        let k = self.dimension();
        if pivots.iter().copied().eq(0..k) {
            let right: Vec<usize> = (k..self.length()).collect();
            Some(r.select_cols(&right))
        } else {
            None
        }
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.length() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against code of length {}",
                v.len(),
                self.length()
            )));
        }
        let (r, pivots) = self.rref();
        let mut w = v.clone();
        for (row, &p) in r.row_slice().iter().zip(pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        Ok(w.is_zero())
    }

    /// Column `j` of the new code is column `perm[j]` of this one.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        let n = self.length();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::WrongSize {
                got: perm.len(),
                expected: n,
            });
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadIndex {
                    index: p,
                    length: n,
                });
            }
        }
        Ok(Self::new(self.generator.permute_cols(perm)).expect("permutation keeps rank"))
    }

    fn check_enumerable(&self, cap: usize) -> Result<()> {
        if self.dimension() > cap {
            return Err(Error::TooLarge {
                what: "dimension",
                value: self.dimension(),
                cap,
            });
        }
        Ok(())
    }

    fn row_set(&self) -> RowSet {
        RowSet::new(self.generator.row_slice(), self.length())
    }

    /// Exact minimum distance by enumerating all `2^k` codewords.
    ///
    /// The dimension cap is [`enum_cap`]. The zero code has no minimum distance.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with_cap(enum_cap())
    }

    pub fn min_distance_with_cap(&self, cap: usize) -> Result<usize> {
        self.check_enumerable(cap)?;
        self.row_set()
            .min_weight()
            .ok_or_else(|| Error::OutOfRange("the zero code has no minimum distance".into()))
    }

    /// Smallest row weight of the generator: an upper bound on the minimum distance at any size.
    pub fn min_distance_upper_bound(&self) -> Option<usize> {
        self.generator
            .row_slice()
            .iter()
            .chain(self.rref().0.row_slice())
            .map(BitVector::weight)
            .filter(|&w| w > 0)
            .min()
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.weight_distribution_with_cap(enum_cap())
    }

    pub fn weight_distribution_with_cap(&self, cap: usize) -> Result<WeightDistribution> {
        self.check_enumerable(cap)?;
        Ok(WeightDistribution::new(self.row_set().weight_counts()))
    }

    /// All codewords, in Gray-code message order starting at zero.
    pub fn codewords(&self) -> Result<Vec<BitVector>> {
        self.check_enumerable(enum_cap().min(24))?;
        let rows = self.generator.row_slice();
        let mut acc = BitVector::zeros(self.length());
        let mut out = Vec::with_capacity(1 << self.dimension());
        out.push(acc.clone());
        for i in 1u64..(1u64 << self.dimension()) {
            acc.xor_assign(&rows[i.trailing_zeros() as usize]);
            out.push(acc.clone());
        }
        Ok(out)
    }

    /// The dual code `{ v : v·c = 0 for all c }`.
    pub fn dual(&self) -> LinearCode {
        let h = self.generator.kernel();
        let h = if h.rows() == 0 {
            BitMatrix::zeros(0, self.length())
        } else {
            h
        };
        Self::new(h).expect("kernel basis is independent")
    }

    /// Minimum distance of the dual code.
    pub fn dual_distance(&self) -> Result<usize> {
        self.dual().min_distance()
    }

    pub fn is_rate_half(&self) -> bool {
        2 * self.dimension() == self.length()
    }

    /// `C = C⊥`: rate one half and all generator rows pairwise orthogonal.
    pub fn is_self_dual(&self) -> bool {
        let rows = self.generator.row_slice();
        self.is_rate_half()
            && rows
                .iter()
                .enumerate()
                .all(|(i, a)| rows[i..].iter().all(|b| !a.dot(b)))
    }

    /// Weight distribution fixed by the MacWilliams transform.
    pub fn is_formally_self_dual(&self) -> Result<bool> {
        if !self.is_rate_half() {
            return Ok(false);
        }
        let d = self
            .weight_distribution()?
            .to_distance_distribution::<BigRational>();
        Ok(d.macwilliams() == d)
    }

    pub fn is_even_formally_self_dual(&self) -> Result<bool> {
        Ok(self.is_formally_self_dual()? && self.weight_distribution()?.is_even())
    }

    /// Permutation equivalent to its dual. Limited to the canonical-form regime.
    pub fn is_isodual(&self) -> Result<bool> {
        Ok(self.is_rate_half() && are_equivalent(self, &self.dual())?)
    }

    /// Rows as `u32` masks (bit `j` = coordinate `j`); requires length ≤ 32.
    pub(crate) fn rows_u32(&self) -> Vec<u32> {
        debug_assert!(self.length() <= 32);
        self.generator
            .row_slice()
            .iter()
            .map(|r| r.to_u64() as u32)
            .collect()
    }

    pub(crate) fn from_rows_u32(rows: &[u32], n: usize) -> Self {
        Self::new(BitMatrix::from_u64_rows(
            &rows.iter().map(|&r| r as u64).collect::<Vec<_>>(),
            n,
        ))
        .expect("rows are independent")
    }

    /// Canonical representative under coordinate permutations.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let n = self.length();
        if n > CANON_MAX_LENGTH {
            return Err(Error::TooLarge {
                what: "length for canonical form",
                value: n,
                cap: CANON_MAX_LENGTH,
            });
        }
        let c = canonicalize_rows(&self.rows_u32(), n)?;
        Ok(CanonicalForm {
            code: Self::from_rows_u32(&c.rows, n),
            permutation: c.labeling,
            key: CanonicalKey {
                length: n,
                rows: c.rows,
            },
        })
    }
}

/// Compact, hashable identity of an equivalence class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub length: usize,
    /// RREF rows of the canonical code, bit `j` = coordinate `j`.
    pub rows: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// The canonical code in reduced row echelon form.
    pub code: LinearCode,
    /// `permutation[j]` is the original column placed at position `j`.
    pub permutation: Vec<usize>,
    pub key: CanonicalKey,
}

/// True iff the codes differ by a coordinate permutation.
pub fn are_equivalent(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    if a.length() != b.length() || a.dimension() != b.dimension() {
        return Ok(false);
    }
    Ok(a.canonical_form()?.key == b.canonical_form()?.key)
}

//! Information sets and the decision whether a `[2n, n]` code has two disjoint ones.
//!
//! The general decision is matroid partitioning on the column matroid of the
//! generator: two disjoint independent sets are grown one element at a time
//! along shortest augmenting paths in the exchange graph. When some column
//! cannot be inserted, the set of all columns is dependent in the union
//! matroid, so no partition into two bases exists.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Number of random balanced partitions tried before the exact search.
pub const RANDOM_PREPASS_TRIALS: usize = 200;
const PREPASS_SEED: u64 = 0x00C1_5C0D;

/// Two complementary information sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CisCertificate {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl CisCertificate {
    fn from_left(mut left: Vec<usize>, length: usize) -> Self {
        left.sort_unstable();
        let right = (0..length).filter(|i| left.binary_search(i).is_err()).collect();
        Self { left, right }
    }

    /// Re-checks both halves against the code.
    pub fn verify(&self, code: &LinearCode) -> Result<bool> {
        let mut all: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        all.sort_unstable();
        if !all.iter().copied().eq(0..code.length()) {
            return Ok(false);
        }
        Ok(is_information_set(code, &self.left)? && is_information_set(code, &self.right)?)
    }
}

/// Why a code is not CIS.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotCisReason {
    /// A coordinate is zero in every codeword, so the dual has a weight-1 word.
    DualWeightOne { column: usize },
    /// In `(I|A)` form, `rank(A) < n/2`.
    RankBound { rank: usize },
    /// The exact partition search found no pair of disjoint information sets.
    NoPartition,
}

impl NotCisReason {
    /// Short kebab-case tag.
    pub fn tag(&self) -> &'static str {
        match self {
            NotCisReason::DualWeightOne { .. } => "dual-weight-1",
            NotCisReason::RankBound { .. } => "rank-bound",
            NotCisReason::NoPartition => "no-partition",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CisDecision {
    Cis(CisCertificate),
    NotCis(NotCisReason),
}

impl CisDecision {
    pub fn is_cis(&self) -> bool {
        matches!(self, CisDecision::Cis(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuickVerdict {
    NotCis(NotCisReason),
    Unknown,
}

fn check_rate_half(code: &LinearCode) -> Result<()> {
    if !code.is_rate_half() {
        return Err(Error::NotRateHalf {
            length: code.length(),
            dimension: code.dimension(),
        });
    }
    Ok(())
}

/// True iff the generator restricted to `indices` is invertible.
pub fn is_information_set(code: &LinearCode, indices: &[usize]) -> Result<bool> {
    if indices.len() != code.dimension() {
        return Err(Error::WrongSize {
            got: indices.len(),
            expected: code.dimension(),
        });
    }
    if let Some(&bad) = indices.iter().find(|&&i| i >= code.length()) {
        return Err(Error::BadIndex {
            index: bad,
            length: code.length(),
        });
    }
    Ok(code.generator().select_cols(indices).rank() == code.dimension())
}

/// CIS with the systematic partition `{0..n-1} / {n..2n-1}`.
pub fn is_cis_systematic(code: &LinearCode) -> Result<bool> {
    check_rate_half(code)?;
    Ok(code
        .systematic_a()
        .is_some_and(|a| a.determinant_nonzero().expect("A is square")))
}

/// Cheap sufficient conditions for non-CIS.
pub fn quick_reject(code: &LinearCode) -> Result<QuickVerdict> {
    check_rate_half(code)?;
    let (r, pivots) = code.rref();
    let n = code.dimension();
    if let Some(column) = (0..code.length()).find(|&j| code.generator().column(j).is_zero()) {
        return Ok(QuickVerdict::NotCis(NotCisReason::DualWeightOne { column }));
    }
    let free: Vec<usize> = (0..code.length()).filter(|c| !pivots.contains(c)).collect();
    let rank = r.select_cols(&free).rank();
    if 2 * rank < n {
        return Ok(QuickVerdict::NotCis(NotCisReason::RankBound { rank }));
    }
    Ok(QuickVerdict::Unknown)
}

/// Decides whether the code has two complementary information sets.
pub fn find_cis_partition(code: &LinearCode) -> Result<CisDecision> {
    if let QuickVerdict::NotCis(reason) = quick_reject(code)? {
        return Ok(CisDecision::NotCis(reason));
    }
    let n = code.dimension();
    let len = code.length();
    let systematic: Vec<usize> = (0..n).collect();
    let cert = CisCertificate::from_left(systematic, len);
    if cert.verify(code)? {
        return Ok(CisDecision::Cis(cert));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(PREPASS_SEED);
    let mut order: Vec<usize> = (0..len).collect();
    for _ in 0..RANDOM_PREPASS_TRIALS {
        order.shuffle(&mut rng);
        let cert = CisCertificate::from_left(order[..n].to_vec(), len);
        if cert.verify(code)? {
            return Ok(CisDecision::Cis(cert));
        }
    }
    Ok(matroid_partition(code))
}

/// Exact search only, without the quick tests or the random pre-pass.
pub fn find_cis_partition_exact(code: &LinearCode) -> Result<CisDecision> {
    check_rate_half(code)?;
    Ok(matroid_partition(code))
}

/// Incremental basis of a set of columns that can express a dependent
/// column in terms of the members.
struct TrackedBasis {
    members: Vec<usize>,
    /// (reduced vector, pivot bit, combination over `members`)
    rows: Vec<(BitVector, usize, BitVector)>,
}

impl TrackedBasis {
    fn new(members: Vec<usize>, columns: &[BitVector], cap: usize) -> Self {
        let mut b = Self {
            members: Vec::new(),
            rows: Vec::new(),
        };
        for m in members {
            b.push(m, columns, cap);
        }
        b
    }

    fn push(&mut self, element: usize, columns: &[BitVector], cap: usize) {
        let idx = self.members.len();
        self.members.push(element);
        let (v, comb) = self.reduce(&columns[element], cap);
        let mut comb = comb;
        comb.flip(idx);
        let pivot = v.ones_iter().next().expect("member is independent");
        self.rows.push((v, pivot, comb));
    }

    fn reduce(&self, x: &BitVector, cap: usize) -> (BitVector, BitVector) {
        let mut v = x.clone();
        let mut comb = BitVector::zeros(cap);
        for (row, pivot, c) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                comb.xor_assign(c);
            }
        }
        (v, comb)
    }

    /// `None` if `x` extends the set; otherwise the members of its fundamental circuit.
    fn circuit(&self, x: &BitVector, cap: usize) -> Option<Vec<usize>> {
        let (v, comb) = self.reduce(x, cap);
        if v.is_zero() {
            Some(comb.ones_iter().map(|i| self.members[i]).collect())
        } else {
            None
        }
    }
}

fn matroid_partition(code: &LinearCode) -> CisDecision {
    let len = code.length();
    let g = code.generator();
    let columns: Vec<BitVector> = (0..len).map(|j| g.column(j)).collect();
    // owner[e] = Some(i) if e is in set i.
    let mut owner: Vec<Option<usize>> = vec![None; len];

    for s in 0..len {
        let sets: [Vec<usize>; 2] = [0, 1].map(|i| (0..len).filter(|&e| owner[e] == Some(i)).collect());
        let bases = sets.map(|m| TrackedBasis::new(m, &columns, len));
        // BFS over elements; prev[e] = predecessor element. Sink reached as (element, set).
        let mut prev: Vec<Option<usize>> = vec![None; len];
        let mut seen = vec![false; len];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        let mut sink: Option<(usize, usize)> = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for (i, basis) in bases.iter().enumerate() {
                if owner[x] == Some(i) {
                    continue;
                }
                match basis.circuit(&columns[x], len) {
                    None => {
                        sink = Some((x, i));
                        break 'bfs;
                    }
                    Some(circuit) => {
                        for y in circuit {
                            if !seen[y] {
                                seen[y] = true;
                                prev[y] = Some(x);
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        let Some((last, set)) = sink else {
            return CisDecision::NotCis(NotCisReason::NoPartition);
        };
        // Walk back: each element takes the set of its successor.
        let mut cur = last;
        let mut target = set;
        loop {
            let old = owner[cur];
            owner[cur] = Some(target);
            match prev[cur] {
                Some(p) => {
                    target = old.expect("path interior elements are owned");
                    cur = p;
                }
                None => break,
            }
        }
    }
    let left: Vec<usize> = (0..len).filter(|&e| owner[e] == Some(0)).collect();
    CisDecision::Cis(CisCertificate::from_left(left, len))
}

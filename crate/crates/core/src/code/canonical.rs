//! Canonical form of a binary linear code under coordinate permutations.
//!
//! The search is individualization-refinement over the columns. Columns and
//! codewords form a bipartite incidence structure; an ordered column partition
//! is refined by repeatedly coloring each codeword with the multiset of its
//! support colors and each column with the multiset of colors of the
//! codewords through it. The first non-singleton cell is split by
//! individualizing each of its columns in turn. A discrete partition is a
//! labeling, whose certificate is the reduced row echelon form of the relabeled
//! generator. The canonical labeling is the one minimizing
//! (refinement trace, certificate). Leaves with equal keys yield automorphisms,
//! which prune siblings lying in a common orbit of the pointwise stabilizer of
//! the current path.
//!
//! All signatures are hashes of isomorphism-invariant data, so a hash collision
//! only weakens refinement; it never breaks canonicity.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Longest code handled (codewords are packed in a `u32`).
pub const CANON_MAX_LENGTH: usize = 32;
/// Largest dimension handled (all `2^k` codewords are materialized).
pub const CANON_MAX_DIMENSION: usize = 12;

const MAX_STORED_AUTOMORPHISMS: usize = 64;

#[inline]
fn mix(mut x: u64) -> u64 {
    // splitmix64 finalizer
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Result of canonicalizing the rows of a code given as `u32` bitmasks.
#[derive(Debug, Clone)]
pub(crate) struct CanonicalRows {
    /// RREF rows of the relabeled code (bit `p` = canonical position `p`).
    pub rows: Vec<u32>,
    /// `labeling[p]` is the original column placed at canonical position `p`.
    pub labeling: Vec<usize>,
    /// Number of leaves visited, for diagnostics.
    #[allow(dead_code)]
    pub leaves: usize,
}

struct Incidence {
    n: usize,
    k: usize,
    rows: Vec<u32>,
    codewords: Vec<u32>,
    /// For column `j`, indices into `codewords` with a one at `j`.
    col_words: Vec<Vec<u16>>,
}

impl Incidence {
    fn new(rows: &[u32], n: usize) -> Self {
        let k = rows.len();
        let mut codewords = Vec::with_capacity((1usize << k) - 1);
        let mut acc = 0u32;
        for i in 1u32..(1u32 << k) {
            acc ^= rows[i.trailing_zeros() as usize];
            if acc != 0 {
                codewords.push(acc);
            }
        }
        let mut col_words = vec![Vec::new(); n];
        for (idx, &w) in codewords.iter().enumerate() {
            let mut b = w;
            while b != 0 {
                let j = b.trailing_zeros() as usize;
                col_words[j].push(idx as u16);
                b &= b - 1;
            }
        }
        Self {
            n,
            k,
            rows: rows.to_vec(),
            codewords,
            col_words,
        }
    }

    /// Refines `colors` (cell start positions) to a stable ordered partition.
    /// Returns a hash of the refinement trace.
    fn refine(&self, colors: &mut [u8], scratch: &mut Scratch) -> u64 {
        let n = self.n;
        let mut trace = 0x51_7c_c1_b7_27_22_0a_95u64;
        let mut cells = count_cells(colors);
        loop {
            let mix_color: Vec<u64> = colors.iter().map(|&c| mix(c as u64 + 1)).collect();
            scratch.word_sig.clear();
            scratch.word_sig.extend(self.codewords.iter().map(|&w| {
                let mut h = 0u64;
                let mut b = w;
                while b != 0 {
                    h = h.wrapping_add(mix_color[b.trailing_zeros() as usize]);
                    b &= b - 1;
                }
                mix(h ^ 0x2545_f491_4f6c_dd1d)
            }));
            scratch.keys.clear();
            for j in 0..n {
                let s = self.col_words[j]
                    .iter()
                    .fold(0u64, |a, &w| a.wrapping_add(scratch.word_sig[w as usize]));
                scratch.keys.push((colors[j], s, j as u8));
            }
            scratch.keys.sort_unstable();
            let mut new_cells = 0usize;
            let mut start = 0u8;
            for (pos, &(c, s, j)) in scratch.keys.iter().enumerate() {
                if pos == 0 || (c, s) != (scratch.keys[pos - 1].0, scratch.keys[pos - 1].1) {
                    start = pos as u8;
                    new_cells += 1;
                    trace = mix(trace ^ ((c as u64) << 56) ^ s);
                }
                colors[j as usize] = start;
            }
            if new_cells == cells {
                return trace;
            }
            cells = new_cells;
        }
    }

    /// Certificate of a discrete coloring: RREF of the relabeled generator.
    fn certificate(&self, colors: &[u8]) -> (Vec<u32>, Vec<usize>) {
        let mut labeling = vec![0usize; self.n];
        for (j, &c) in colors.iter().enumerate() {
            labeling[c as usize] = j;
        }
        let mut rows: Vec<u32> = self
            .rows
            .iter()
            .map(|&r| {
                let mut out = 0u32;
                for (p, &j) in labeling.iter().enumerate() {
                    out |= ((r >> j) & 1) << p;
                }
                out
            })
            .collect();
        rref_u32(&mut rows, self.n);
        (rows, labeling)
    }
}

#[derive(Default)]
struct Scratch {
    word_sig: Vec<u64>,
    keys: Vec<(u8, u64, u8)>,
}

fn count_cells(colors: &[u8]) -> usize {
    let mut seen = 0u64;
    for &c in colors {
        seen |= 1u64 << c;
    }
    seen.count_ones() as usize
}

/// Reduced row echelon form of `u32` rows over `n` columns; rows ordered by pivot.
pub(crate) fn rref_u32(rows: &mut Vec<u32>, n: usize) {
    let mut r = 0;
    for c in 0..n {
        let bit = 1u32 << c;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
}

struct Best {
    traces: Vec<u64>,
    cert: Vec<u32>,
    labeling: Vec<usize>,
}

struct Search<'a> {
    inc: &'a Incidence,
    scratch: Scratch,
    best: Option<Best>,
    traces: Vec<u64>,
    path: Vec<usize>,
    automorphisms: Vec<Vec<u8>>,
    leaves: usize,
}

impl Search<'_> {
    fn compare_prefix(&self) -> Ordering {
        let Some(best) = &self.best else {
            return Ordering::Less;
        };
        let l = self.traces.len();
        if best.traces.len() < l {
            // The best leaf's full trace is at most a prefix of ours.
            return match self.traces[..best.traces.len()].cmp(&best.traces) {
                Ordering::Equal => Ordering::Greater,
                o => o,
            };
        }
        self.traces.cmp(&best.traces[..l].to_vec())
    }

    fn dfs(&mut self, mut colors: Vec<u8>) {
        let trace = self.inc.refine(&mut colors, &mut self.scratch);
        self.traces.push(trace);
        let ord = self.compare_prefix();
        if ord == Ordering::Greater {
            self.traces.pop();
            return;
        }
        let n = self.inc.n;
        if count_cells(&colors) == n {
            self.leaves += 1;
            let (cert, labeling) = self.inc.certificate(&colors);
            let replace = match (&self.best, ord) {
                (None, _) | (_, Ordering::Less) => true,
                (Some(b), _) => match cert.cmp(&b.cert) {
                    Ordering::Less => true,
                    Ordering::Equal => {
                        let mut gamma = vec![0u8; n];
                        for (p, &j) in labeling.iter().enumerate() {
                            gamma[j] = b.labeling[p] as u8;
                        }
                        let identity = gamma.iter().enumerate().all(|(i, &g)| g as usize == i);
                        if !identity && self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                            self.automorphisms.push(gamma);
                        }
                        false
                    }
                    Ordering::Greater => false,
                },
            };
            if replace {
                self.best = Some(Best {
                    traces: self.traces.clone(),
                    cert,
                    labeling,
                });
            }
            self.traces.pop();
            return;
        }

        // First non-singleton cell in order.
        let mut size = vec![0u8; n];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1).expect("partition not discrete") as u8;
        let members: Vec<usize> = (0..n).filter(|&j| colors[j] == target).collect();

        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.pruned_by_orbit(v, &explored) {
                continue;
            }
            explored.push(v);
            let mut child = colors.clone();
            for (j, c) in child.iter_mut().enumerate() {
                if *c == target && j != v {
                    *c = target + 1;
                }
            }
            self.path.push(v);
            self.dfs(child);
            self.path.pop();
        }
        self.traces.pop();
    }

    /// True if `v` shares an orbit with an explored sibling under the found
    /// automorphisms that fix the current path pointwise.
    fn pruned_by_orbit(&self, v: usize, explored: &[usize]) -> bool {
        let n = self.inc.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.automorphisms {
            if self.path.iter().all(|&p| g[p] as usize == p) {
                any = true;
                for (i, &gi) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, gi as usize));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Canonicalizes a code of length `n` spanned by the linearly independent `rows`.
pub(crate) fn canonicalize_rows(rows: &[u32], n: usize) -> Result<CanonicalRows> {
    if n > CANON_MAX_LENGTH {
        return Err(Error::TooLarge {
            what: "length for canonical form",
            value: n,
            cap: CANON_MAX_LENGTH,
        });
    }
    if rows.len() > CANON_MAX_DIMENSION {
        return Err(Error::TooLarge {
            what: "dimension for canonical form",
            value: rows.len(),
            cap: CANON_MAX_DIMENSION,
        });
    }
    if n == 0 {
        return Ok(CanonicalRows {
            rows: Vec::new(),
            labeling: Vec::new(),
            leaves: 1,
        });
    }
    let inc = Incidence::new(rows, n);
    debug_assert_eq!(inc.codewords.len() + 1, 1usize << inc.k);
    let mut search = Search {
        inc: &inc,
        scratch: Scratch::default(),
        best: None,
        traces: Vec::new(),
        path: Vec::new(),
        automorphisms: Vec::new(),
        leaves: 0,
    };
    search.dfs(vec![0u8; n]);
    let best = search.best.expect("search visits at least one leaf");
    Ok(CanonicalRows {
        rows: best.cert,
        labeling: best.labeling,
        leaves: search.leaves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn permute(rows: &[u32], perm: &[usize]) -> Vec<u32> {
        rows.iter()
            .map(|&r| {
                let mut out = 0;
                for (p, &j) in perm.iter().enumerate() {
                    out |= ((r >> j) & 1) << p;
                }
                out
            })
            .collect()
    }

    fn brute_min_rref(rows: &[u32], n: usize) -> Vec<u32> {
        // Lexicographically least RREF over all n! labelings (small n only).
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u32>> = None;
        fn heap(k: usize, perm: &mut Vec<usize>, rows: &[u32], n: usize, best: &mut Option<Vec<u32>>) {
            if k == 1 {
                let mut r = permute(rows, perm);
                rref_u32(&mut r, n);
                if best.as_ref().map_or(true, |b| r < *b) {
                    *best = Some(r);
                }
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, rows, n, best);
                let j = if k % 2 == 0 { i } else { 0 };
                perm.swap(j, k - 1);
            }
        }
        heap(n, &mut perm, rows, n, &mut best);
        best.unwrap()
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let codes: [(&[u32], usize); 4] = [
            (&[0b000011, 0b001100, 0b110000], 6),
            (&[0b1110_0001, 0b1101_0010, 0b1011_0100, 0b0111_1000], 8),
            (&[0b10_0000_0001, 0b01_0000_0011, 0b00_1100_0101, 0b00_0011_1001], 10),
            (&[0b1, 0b110, 0b1_1000], 7),
        ];
        for (rows, n) in codes {
            let base = canonicalize_rows(rows, n).unwrap();
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let c = canonicalize_rows(&permute(rows, &perm), n).unwrap();
                assert_eq!(c.rows, base.rows);
            }
        }
    }

    #[test]
    fn equivalence_classes_match_brute_force_on_length_six() {
        // Two [6,3] codes are equivalent iff their brute-force minimum RREFs agree.
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut samples = Vec::new();
        while samples.len() < 60 {
            let mut rows: Vec<u32> = (0..3).map(|_| rand::Rng::gen_range(&mut rng, 1..64)).collect();
            let mut r = rows.clone();
            rref_u32(&mut r, 6);
            if r.len() == 3 {
                rows.sort();
                samples.push(rows);
            }
        }
        for a in &samples {
            for b in &samples {
                let brute = brute_min_rref(a, 6) == brute_min_rref(b, 6);
                let canon = canonicalize_rows(a, 6).unwrap().rows == canonicalize_rows(b, 6).unwrap().rows;
                assert_eq!(brute, canon);
            }
        }
    }

    #[test]
    fn labeling_reproduces_certificate() {
        let rows = [0b1110_0001u32, 0b1101_0010, 0b1011_0100, 0b0111_1000];
        let c = canonicalize_rows(&rows, 8).unwrap();
        let mut r = permute(&rows, &c.labeling);
        rref_u32(&mut r, 8);
        assert_eq!(r, c.rows);
    }

    #[test]
    fn large_automorphism_group_is_pruned() {
        // (I|I) of length 16 has 2^8 * 8! automorphisms.
        let rows: Vec<u32> = (0..8).map(|i| (1u32 << i) | (1u32 << (i + 8))).collect();
        let c = canonicalize_rows(&rows, 16).unwrap();
        assert!(c.leaves < 5000, "visited {} leaves", c.leaves);
    }
}

//! Classification of `[2n, n]` CIS codes up to coordinate permutation.
//!
//! Two independent routes are provided. The exhaustive route canonicalizes
//! `(I | A)` for one `A` per unordered basis of `F_2^n` (column order of `A` is
//! irrelevant up to equivalence). The building-up route extends every class
//! of length `2n − 2`; to be complete it re-systematizes each representative
//! on every pair of complementary information sets, keeps one matrix per
//! row-and-column permutation class, and applies the extension for all
//! `(x, y)`.

mod report;

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::cis::{find_cis_partition, CisDecision};
use crate::code::{canonicalize_rows, CanonicalKey, LinearCode};
use crate::constructions::{gl2_order, invertible_matrices};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

pub use report::{format_report_line, parse_report_line, ReportLine};

/// Largest `n` for the exhaustive route.
pub const MAX_EXHAUSTIVE_N: usize = 5;
/// Largest `n` for the building-up route.
pub const MAX_BUILDUP_N: usize = 6;

/// One equivalence class.
#[derive(Debug, Clone)]
pub struct ClassEntry {
    pub key: CanonicalKey,
    /// A member with generator `(I | A)`, `A` invertible.
    pub representative: LinearCode,
    pub min_distance: usize,
    pub self_dual: bool,
    pub formally_self_dual: bool,
    /// `|Orb(C) ∩ C_sys|`, when the producing method tallies it.
    pub systematic_count: Option<u64>,
}

impl ClassEntry {
    fn from_key(key: CanonicalKey, systematic_count: Option<u64>) -> Result<Self> {
        let n = key.length / 2;
        let canonical = LinearCode::from_rows_u32(&key.rows, key.length);
        let CisDecision::Cis(cert) = find_cis_partition(&canonical)? else {
            return Err(Error::NotSystematicCis);
        };
        let order: Vec<usize> = cert.left.iter().chain(&cert.right).copied().collect();
        let a = canonical
            .permute_columns(&order)?
            .systematic_a()
            .expect("left half is an information set");
        debug_assert_eq!(a.rows(), n);
        let representative = LinearCode::from_systematic(&a);
        Ok(Self {
            min_distance: representative.min_distance()?,
            self_dual: representative.is_self_dual(),
            formally_self_dual: representative.is_formally_self_dual()?,
            representative,
            key,
            systematic_count,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Bucket {
    pub self_dual: usize,
    pub fsd_not_sd: usize,
    pub not_fsd: usize,
}

impl Bucket {
    pub fn total(&self) -> usize {
        self.self_dual + self.fsd_not_sd + self.not_fsd
    }
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    /// Code length `2n`.
    pub length: usize,
    /// Sorted by canonical key.
    pub classes: Vec<ClassEntry>,
}

impl ClassificationReport {
    fn from_keys(length: usize, keys: impl IntoIterator<Item = (CanonicalKey, Option<u64>)>) -> Result<Self> {
        let mut entries: Vec<(CanonicalKey, Option<u64>)> = keys.into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let classes = entries
            .into_par_iter()
            .map(|(k, c)| ClassEntry::from_key(k, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { length, classes })
    }

    pub fn total(&self) -> usize {
        self.classes.len()
    }

    pub fn keys(&self) -> Vec<CanonicalKey> {
        self.classes.iter().map(|c| c.key.clone()).collect()
    }

    /// Number of classes with minimum distance `d`.
    pub fn count_with_distance(&self, d: usize) -> usize {
        self.classes.iter().filter(|c| c.min_distance == d).count()
    }

    /// Per minimum distance: (self-dual, formally self-dual but not self-dual, not formally self-dual).
    pub fn buckets(&self) -> BTreeMap<usize, Bucket> {
        let mut out: BTreeMap<usize, Bucket> = BTreeMap::new();
        for c in &self.classes {
            let b = out.entry(c.min_distance).or_default();
            if c.self_dual {
                b.self_dual += 1;
            } else if c.formally_self_dual {
                b.fsd_not_sd += 1;
            } else {
                b.not_fsd += 1;
            }
        }
        out
    }

    /// `len=.. total=.. d2=.. d3=.. d4=..` with every distance present.
    pub fn summary_line(&self) -> String {
        let mut s = format!("len={} total={}", self.length, self.total());
        let buckets = self.buckets();
        let max_d = buckets.keys().copied().max().unwrap_or(2).max(4);
        for d in 2..=max_d {
            s.push_str(&format!(" d{d}={}", buckets.get(&d).map_or(0, Bucket::total)));
        }
        s
    }

    pub fn report_lines(&self) -> Vec<String> {
        self.classes
            .iter()
            .map(|c| {
                format_report_line(&ReportLine {
                    length: self.length,
                    min_distance: c.min_distance,
                    self_dual: c.self_dual,
                    formally_self_dual: c.formally_self_dual,
                    rows: c.key.rows.clone(),
                })
            })
            .collect()
    }
}

/// `fsd_sd_buckets` as a free function over a report.
pub fn fsd_sd_buckets(report: &ClassificationReport) -> BTreeMap<usize, Bucket> {
    report.buckets()
}

/// Rows of `(I | A)` as bitmasks for `A` given by rows (bit `j` = column `j`).
fn systematic_rows(a_rows: &[u32]) -> Vec<u32> {
    let n = a_rows.len();
    a_rows.iter().enumerate().map(|(i, &r)| (1 << i) | (r << n)).collect()
}

fn key_of(rows: &[u32], length: usize) -> CanonicalKey {
    let c = canonicalize_rows(rows, length).expect("classification sizes are within the canonical-form caps");
    CanonicalKey { length, rows: c.rows }
}

/// Unordered bases of `F_2^n` as strictly increasing column lists.
fn increasing_bases(n: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, start: u32, cols: &mut Vec<u32>, span: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cols.len() == n {
            out.push(cols.clone());
            return;
        }
        for c in start..1u32 << n {
            if span.contains(&c) {
                continue;
            }
            let before = span.len();
            let more: Vec<u32> = span.iter().map(|v| v ^ c).collect();
            span.extend(more);
            cols.push(c);
            go(n, c + 1, cols, span, out);
            cols.pop();
            span.truncate(before);
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut vec![0], &mut out);
    out
}

fn columns_to_rows(cols: &[u32], n: usize) -> Vec<u32> {
    (0..n)
        .map(|i| {
            cols.iter()
                .enumerate()
                .fold(0u32, |acc, (j, &c)| acc | (((c >> i) & 1) << j))
        })
        .collect()
}

/// All classes of length `2n` by enumerating `GL(n, 2)` up to column order.
///
/// Each class also records `|Orb(C) ∩ C_sys|`, since every unordered basis
/// stands for `n!` distinct matrices in the same class.
pub fn classify_exhaustive(n: usize) -> Result<ClassificationReport> {
    if n == 0 || n > MAX_EXHAUSTIVE_N {
        return Err(Error::TooLarge {
            what: "n for exhaustive classification",
            value: n,
            cap: MAX_EXHAUSTIVE_N,
        });
    }
    let fact: u64 = (1..=n as u64).product();
    let tallies: HashMap<CanonicalKey, u64> = increasing_bases(n)
        .into_par_iter()
        .fold(HashMap::new, |mut m: HashMap<CanonicalKey, u64>, cols| {
            let rows = systematic_rows(&columns_to_rows(&cols, n));
            *m.entry(key_of(&rows, 2 * n)).or_default() += fact;
            m
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    ClassificationReport::from_keys(2 * n, tallies.into_iter().map(|(k, v)| (k, Some(v))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BuildUpConfig {
    /// Cap on the number of re-systematized variants per representative; `None` uses every CIS partition.
    pub max_variants: Option<usize>,
}

/// Canonical representative of `A` under independent row and column permutations.
fn paq_canonical(a_rows: &[u32]) -> Vec<u32> {
    let n = a_rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u32>> = None;
    loop {
        let mut cols: Vec<u32> = (0..n)
            .map(|j| (0..n).fold(0u32, |acc, i| acc | (((a_rows[perm[i]] >> j) & 1) << i)))
            .collect();
        cols.sort_unstable();
        if best.as_ref().is_none_or(|b| cols < *b) {
            best = Some(cols);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    columns_to_rows(&best.expect("at least one permutation"), n)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn column_rank(cols: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &c in cols {
        let r = basis.iter().fold(c, |v, &b| v.min(v ^ b));
        if r != 0 {
            basis.push(r);
        }
    }
    basis.len()
}

/// `A_L = G_L^{-1} G_R` for every split of the columns into two information sets.
fn systematic_variants(code: &LinearCode, max_variants: Option<usize>) -> Vec<Vec<u32>> {
    let len = code.length();
    let m = code.dimension();
    let g = code.generator();
    let cols: Vec<u32> = (0..len).map(|j| g.column(j).to_u64() as u32).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << len {
        if mask.count_ones() as usize != m {
            continue;
        }
        let left: Vec<usize> = (0..len).filter(|&j| (mask >> j) & 1 == 1).collect();
        let right: Vec<usize> = (0..len).filter(|&j| (mask >> j) & 1 == 0).collect();
        let lc: Vec<u32> = left.iter().map(|&j| cols[j]).collect();
        let rc: Vec<u32> = right.iter().map(|&j| cols[j]).collect();
        if column_rank(&lc) < m || column_rank(&rc) < m {
            continue;
        }
        let gl = g.select_cols(&left).invert().expect("information set");
        let a = gl.mul(&g.select_cols(&right)).expect("conforming");
        out.push(a.row_slice().iter().map(|r| r.to_u64() as u32).collect());
        if max_variants.is_some_and(|k| out.len() >= k) {
            break;
        }
    }
    out
}

fn invert_rows(a_rows: &[u32]) -> Vec<u32> {
    let n = a_rows.len();
    let m = BitMatrix::from_u64_rows(&a_rows.iter().map(|&r| r as u64).collect::<Vec<_>>(), n);
    m.invert()
        .expect("A is invertible")
        .row_slice()
        .iter()
        .map(|r| r.to_u64() as u32)
        .collect()
}

/// Canonical keys of all `build_up(I | A, x, y)`.
fn build_up_keys(a_rows: &[u32]) -> HashSet<CanonicalKey> {
    let m = a_rows.len();
    let inv = invert_rows(a_rows);
    let n1 = m + 1;
    let length = 2 * n1;
    let mut keys = HashSet::new();
    let mut rows = vec![0u32; n1];
    for x in 0u32..1 << m {
        // c = x A^{-1}
        let c = (0..m).filter(|&i| (x >> i) & 1 == 1).fold(0u32, |acc, i| acc ^ inv[i]);
        for y in 0u32..1 << m {
            let z = 1 ^ ((c & y).count_ones() & 1);
            rows[0] = 1 | ((z | (x << 1)) << n1);
            for (i, &r) in a_rows.iter().enumerate() {
                rows[i + 1] = (1 << (i + 1)) | ((((y >> i) & 1) | (r << 1)) << n1);
            }
            keys.insert(key_of(&rows, length));
        }
    }
    keys
}

/// Classes of length `2n` built up from the classes of length `2n − 2` in `bases`.
pub fn classify_buildup(n: usize, bases: &[ClassificationReport], config: &BuildUpConfig) -> Result<ClassificationReport> {
    if n > MAX_BUILDUP_N {
        return Err(Error::TooLarge {
            what: "n for building-up classification",
            value: n,
            cap: MAX_BUILDUP_N,
        });
    }
    if n <= 1 {
        return classify_exhaustive(1);
    }
    let base = bases
        .iter()
        .find(|r| r.length == 2 * (n - 1))
        .ok_or(Error::MissingBase(2 * (n - 1)))?;
    let mut matrices: Vec<Vec<u32>> = base
        .classes
        .par_iter()
        .flat_map_iter(|c| {
            let canonical = LinearCode::from_rows_u32(&c.key.rows, c.key.length);
            let source = if config.max_variants.is_some() { &c.representative } else { &canonical };
            systematic_variants(source, config.max_variants)
                .into_iter()
                .map(|a| if config.max_variants.is_some() { a } else { paq_canonical(&a) })
        })
        .collect();
    matrices.sort();
    matrices.dedup();
    let keys: HashSet<CanonicalKey> = matrices
        .par_iter()
        .map(|a| build_up_keys(a))
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    ClassificationReport::from_keys(2 * n, keys.into_iter().map(|k| (k, None)))
}

/// Builds every length from 2 up to `2n`; the last report is for length `2n`.
pub fn classify_buildup_chain(n: usize, config: &BuildUpConfig) -> Result<Vec<ClassificationReport>> {
    let mut reports = vec![classify_exhaustive(1)?];
    for k in 2..=n {
        let next = classify_buildup(k, &reports, config)?;
        reports.push(next);
    }
    Ok(reports)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MassCheck {
    pub n: usize,
    pub g_n: u64,
    /// `|Orb(C_j) ∩ C_sys|` for each class of the report, in report order.
    pub per_class: Vec<u64>,
    pub sum: u64,
    pub complete: bool,
}

/// Buckets every matrix of `GL(n, 2)` by the class of `(I | A)` and sums over the report's classes.
pub fn mass_check(report: &ClassificationReport) -> Result<MassCheck> {
    let n = report.length / 2;
    let all = invertible_matrices(n)?;
    let counts: HashMap<CanonicalKey, u64> = all
        .par_iter()
        .map(|a| key_of(&systematic_rows(a), 2 * n))
        .fold(HashMap::new, |mut m: HashMap<CanonicalKey, u64>, k| {
            *m.entry(k).or_default() += 1;
            m
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let per_class: Vec<u64> = report
        .classes
        .iter()
        .map(|c| counts.get(&c.key).copied().unwrap_or(0))
        .collect();
    let sum = per_class.iter().sum();
    let g_n = gl2_order::<u64>(n);
    Ok(MassCheck {
        n,
        g_n,
        per_class,
        sum,
        complete: sum == g_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases_count_matches_formula() {
        for n in 1..=4 {
            let expected = crate::constructions::e_n_upper::<u64>(n);
            assert_eq!(increasing_bases(n).len() as u64, expected);
        }
    }

    #[test]
    fn small_exhaustive_counts() {
        assert_eq!(classify_exhaustive(1).unwrap().total(), 1);
        let r2 = classify_exhaustive(2).unwrap();
        assert_eq!(r2.total(), 2);
        let r3 = classify_exhaustive(3).unwrap();
        assert_eq!(r3.total(), 6);
        assert_eq!(r3.count_with_distance(3), 1);
        assert_eq!(r3.buckets()[&3], Bucket { self_dual: 0, fsd_not_sd: 1, not_fsd: 0 });
    }

    #[test]
    fn representatives_are_systematic_cis() {
        for c in classify_exhaustive(3).unwrap().classes {
            assert!(crate::cis::is_cis_systematic(&c.representative).unwrap());
            assert_eq!(c.representative.canonical_form().unwrap().key, c.key);
        }
    }

    #[test]
    fn mass_counts_agree_with_basis_tallies() {
        for n in 2..=4 {
            let r = classify_exhaustive(n).unwrap();
            let m = mass_check(&r).unwrap();
            assert!(m.complete);
            let tallies: Vec<u64> = r.classes.iter().map(|c| c.systematic_count.unwrap()).collect();
            assert_eq!(m.per_class, tallies);
        }
    }

    #[test]
    fn dropping_a_class_breaks_mass() {
        let mut r = classify_exhaustive(3).unwrap();
        r.classes.pop();
        let m = mass_check(&r).unwrap();
        assert!(!m.complete && m.sum < 168);
    }

    #[test]
    fn paq_canonical_is_invariant() {
        let a = vec![0b011u32, 0b101, 0b111];
        let c = paq_canonical(&a);
        let swapped_rows = vec![a[2], a[0], a[1]];
        assert_eq!(paq_canonical(&swapped_rows), c);
        let swapped_cols: Vec<u32> = a.iter().map(|r| ((r & 1) << 2) | ((r >> 2) & 1) | (r & 2)).collect();
        assert_eq!(paq_canonical(&swapped_cols), c);
    }

    #[test]
    fn buildup_matches_exhaustive_small() {
        let chain = classify_buildup_chain(4, &BuildUpConfig::default()).unwrap();
        for (i, r) in chain.iter().enumerate() {
            assert_eq!(r.keys(), classify_exhaustive(i + 1).unwrap().keys());
        }
        assert!(matches!(
            classify_buildup(3, &chain[..1], &BuildUpConfig::default()),
            Err(Error::MissingBase(4))
        ));
    }
}

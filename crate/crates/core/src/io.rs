//! Text formats for generator matrices and permutation tables.
//!
//! ```text
//! bin <k> <n>        z4 <rows> <cols>       n=<N>
//! 0110...            1 0 3 2 ...            <hex value of F(0)>
//! ...                ...                    ... (2^N lines)
//! ```
//!
//! Blank lines are ignored everywhere.

use crate::cis::PermutationTable;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::z4::Z4Matrix;

/// A parsed matrix file of either alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixFile {
    Binary(BitMatrix),
    Z4(Z4Matrix),
}

fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, tag: &str) -> Result<(usize, usize, usize)> {
    let (ln, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != tag {
        return Err(perr(ln, format!("expected header `{tag} <rows> <cols>`, got {header:?}")));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|e| perr(ln, format!("bad size {s:?}: {e}")));
    Ok((ln, num(parts[1])?, num(parts[2])?))
}

fn check_row_count(got: usize, expected: usize, last_line: usize) -> Result<()> {
    if got != expected {
        return Err(perr(last_line, format!("expected {expected} rows, found {got}")));
    }
    Ok(())
}

pub fn parse_binary_matrix(s: &str) -> Result<BitMatrix> {
    let mut lines = content_lines(s);
    let (mut last, k, n) = parse_header(&mut lines, "bin")?;
    let mut rows = Vec::with_capacity(k);
    for (ln, l) in lines {
        last = ln;
        if l.len() != n {
            return Err(perr(ln, format!("row has {} characters, expected {n}", l.len())));
        }
        let bits = l
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(perr(ln, format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(BitVector::from_bools(&bits));
    }
    check_row_count(rows.len(), k, last)?;
    BitMatrix::from_rows(rows, n)
}

pub fn write_binary_matrix(m: &BitMatrix) -> String {
    let mut s = format!("bin {} {}\n", m.rows(), m.cols());
    for r in m.row_slice() {
        s.extend(r.iter().map(|b| if b { '1' } else { '0' }));
        s.push('\n');
    }
    s
}

pub fn parse_z4_matrix(s: &str) -> Result<Z4Matrix> {
    let mut lines = content_lines(s);
    let (mut last, k, n) = parse_header(&mut lines, "z4")?;
    let mut rows = Vec::with_capacity(k);
    for (ln, l) in lines {
        last = ln;
        let row = l
            .split_whitespace()
            .map(|t| match t {
                "0" | "1" | "2" | "3" => Ok(t.as_bytes()[0] - b'0'),
                _ => Err(perr(ln, format!("unexpected entry {t:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        if row.len() != n {
            return Err(perr(ln, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    check_row_count(rows.len(), k, last)?;
    if k == 0 {
        return Ok(Z4Matrix::zeros(0, n));
    }
    Z4Matrix::from_rows(&rows)
}

pub fn write_z4_matrix(m: &Z4Matrix) -> String {
    let mut s = format!("z4 {} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let r: Vec<String> = m.row(i).iter().map(u8::to_string).collect();
        s.push_str(&r.join(" "));
        s.push('\n');
    }
    s
}

/// Dispatches on the header word.
pub fn parse_matrix_file(s: &str) -> Result<MatrixFile> {
    match content_lines(s).next().and_then(|(_, l)| l.split_whitespace().next()) {
        Some("bin") => parse_binary_matrix(s).map(MatrixFile::Binary),
        Some("z4") => parse_z4_matrix(s).map(MatrixFile::Z4),
        _ => Err(perr(1, "expected a `bin` or `z4` header")),
    }
}

/// S-box text: `n=<N>` then `2^N` lowercase hex values in index order.
pub fn write_sbox(f: &PermutationTable) -> String {
    let mut s = format!("n={}\n", f.variables());
    for v in f.table() {
        s.push_str(&format!("{v:x}\n"));
    }
    s
}

pub fn parse_sbox(s: &str) -> Result<PermutationTable> {
    let mut lines = content_lines(s);
    let (ln, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| perr(ln, format!("expected `n=<N>`, got {header:?}")))?;
    let table = lines
        .map(|(ln, l)| u32::from_str_radix(l, 16).map_err(|e| perr(ln, format!("bad hex value {l:?}: {e}"))))
        .collect::<Result<Vec<u32>>>()?;
    PermutationTable::new(n, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::z4::octacode;
    use proptest::prelude::*;

    #[test]
    fn binary_round_trip_and_errors() {
        let m = BitMatrix::parse_rows(&["1001", "0110"]).unwrap();
        let text = write_binary_matrix(&m);
        assert_eq!(text, "bin 2 4\n1001\n0110\n");
        assert_eq!(parse_binary_matrix(&text).unwrap(), m);
        assert_eq!(parse_matrix_file(&text).unwrap(), MatrixFile::Binary(m));
        assert!(matches!(parse_binary_matrix("bin 2 4\n1001\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_binary_matrix("bin 1 4\n10x1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_binary_matrix("bin 1 4\n101\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_binary_matrix("binary 1 4\n1011\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn z4_round_trip() {
        let a = octacode().generator();
        let text = write_z4_matrix(&a);
        assert!(text.starts_with("z4 4 8\n"));
        assert_eq!(parse_matrix_file(&text).unwrap(), MatrixFile::Z4(a));
        assert!(parse_z4_matrix("z4 1 2\n1 4\n").is_err());
    }

    #[test]
    fn sbox_format() {
        let f = PermutationTable::new(2, vec![3, 0, 1, 2]).unwrap();
        assert_eq!(write_sbox(&f), "n=2\n3\n0\n1\n2\n");
        assert!(matches!(parse_sbox("n=2\n0\n0\n1\n2\n"), Err(Error::NotBijective)));
        assert!(parse_sbox("n=2\nzz\n").is_err());
    }

    proptest! {
        #[test]
        fn binary_files_round_trip(rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 7), 1..6)) {
            let m = BitMatrix::from_rows(rows.iter().map(|r| BitVector::from_bools(r)).collect(), 7).unwrap();
            prop_assert_eq!(parse_binary_matrix(&write_binary_matrix(&m)).unwrap(), m);
        }

        #[test]
        fn sbox_round_trip(seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut t: Vec<u32> = (0..32).collect();
            t.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let f = PermutationTable::new(5, t).unwrap();
            prop_assert_eq!(parse_sbox(&write_sbox(&f)).unwrap(), f);
        }
    }
}

//! One-line text records of classified codes.
//!
//! `len=<L> d=<d> sd=<0|1> fsd=<0|1> gen=<row>,<row>,...` where each row is
//! hexadecimal with coordinate 0 as the most significant bit, zero-padded to
//! `ceil(L / 4)` digits.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub length: usize,
    pub min_distance: usize,
    pub self_dual: bool,
    pub formally_self_dual: bool,
    /// Generator rows, bit `j` = coordinate `j`.
    pub rows: Vec<u32>,
}

fn row_to_hex(row: u32, length: usize) -> String {
    let be = (0..length).fold(0u64, |acc, j| (acc << 1) | ((row >> j) & 1) as u64);
    format!("{be:0width$x}", width = length.div_ceil(4))
}

fn hex_to_row(s: &str, length: usize) -> std::result::Result<u32, String> {
    let be = u64::from_str_radix(s, 16).map_err(|e| format!("bad hex row {s:?}: {e}"))?;
    if length < 64 && be >> length != 0 {
        return Err(format!("row {s:?} has more than {length} bits"));
    }
    Ok((0..length).fold(0u32, |acc, j| acc | ((((be >> (length - 1 - j)) & 1) as u32) << j)))
}

pub fn format_report_line(r: &ReportLine) -> String {
    let gen: Vec<String> = r.rows.iter().map(|&row| row_to_hex(row, r.length)).collect();
    format!(
        "len={} d={} sd={} fsd={} gen={}",
        r.length,
        r.min_distance,
        r.self_dual as u8,
        r.formally_self_dual as u8,
        gen.join(",")
    )
}

/// Parses one line; `line_no` is used in error messages.
pub fn parse_report_line(s: &str, line_no: usize) -> Result<ReportLine> {
    let err = |msg: String| Error::Parse { line: line_no, msg };
    let mut fields = std::collections::HashMap::new();
    for tok in s.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| err(format!("expected key=value, got {tok:?}")))?;
        fields.insert(k, v);
    }
    let get = |k: &str| fields.get(k).copied().ok_or_else(|| err(format!("missing field {k}")));
    let num = |k: &str| -> Result<usize> { get(k)?.parse().map_err(|e| err(format!("field {k}: {e}"))) };
    let flag = |k: &str| -> Result<bool> {
        match get(k)? {
            "0" => Ok(false),
            "1" => Ok(true),
            v => Err(err(format!("field {k} must be 0 or 1, got {v:?}"))),
        }
    };
    let length = num("len")?;
    if length == 0 || length > 32 {
        return Err(err(format!("length {length} outside 1..=32")));
    }
    let rows = get("gen")?
        .split(',')
        .map(|h| hex_to_row(h, length).map_err(err))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportLine {
        length,
        min_distance: num("d")?,
        self_dual: flag("sd")?,
        formally_self_dual: flag("fsd")?,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn coordinate_zero_is_most_significant() {
        let r = ReportLine { length: 6, min_distance: 2, self_dual: false, formally_self_dual: true, rows: vec![0b1, 0b100000] };
        assert_eq!(format_report_line(&r), "len=6 d=2 sd=0 fsd=1 gen=20,01");
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_report_line("len=6 d=2 sd=0 gen=20", 3).is_err());
        assert!(parse_report_line("len=6 d=2 sd=2 fsd=0 gen=20", 3).is_err());
        assert!(parse_report_line("len=4 d=2 sd=0 fsd=0 gen=1f", 3).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(length in 1usize..=32, raw in proptest::collection::vec(any::<u32>(), 1..6), d in 0usize..10, sd: bool, fsd: bool) {
            let mask = if length == 32 { u32::MAX } else { (1u32 << length) - 1 };
            let rows: Vec<u32> = raw.into_iter().map(|r| r & mask).collect();
            let r = ReportLine { length, min_distance: d, self_dual: sd, formally_self_dual: fsd, rows };
            prop_assert_eq!(parse_report_line(&format_report_line(&r), 1).unwrap(), r);
        }
    }
}

//! Counting formulas for invertible matrices and the distance bound on `(I | A)`.
//!
//! The closed forms are generic over the scalar; see [`crate::Count`] for the
//! exact default.

use num_traits::{FromPrimitive, Num};
use rayon::prelude::*;

use crate::code::binomial_table;
use crate::error::{Error, Result};

/// Largest `n` for which `GL(n, 2)` is enumerated explicitly.
pub const MAX_GL_ENUMERATION: usize = 4;

fn from_u64<T: FromPrimitive>(v: u64) -> T {
    T::from_u64(v).expect("value fits the scalar type")
}

fn pow2<T: Num + Clone + FromPrimitive>(e: usize) -> T {
    let two: T = from_u64(2);
    (0..e).fold(T::one(), |acc, _| acc * two.clone())
}

/// `g_n = |GL(n, 2)| = Π_{j<n} (2^n − 2^j)`.
pub fn gl2_order<T: Num + Clone + FromPrimitive>(n: usize) -> T {
    (0..n).fold(T::one(), |acc, j| acc * (pow2::<T>(n) - pow2::<T>(j)))
}

/// `g_n / n!`, the number of unordered bases of `F_2^n`.
pub fn e_n_upper<T: Num + Clone + FromPrimitive>(n: usize) -> T {
    let fact = (1..=n as u64).fold(T::one(), |acc, i| acc * from_u64::<T>(i));
    gl2_order::<T>(n) / fact
}

/// `M(n, d) = Σ_{j=2}^{d} Σ_{t=1}^{j−1} C(n, j−t) C(n, t) t 2^{n(n−1)}`.
pub fn vg_bound_m<T: Num + Clone + FromPrimitive>(n: usize, d: usize) -> Result<T> {
    if n == 0 || d > 2 * n {
        return Err(Error::OutOfRange(format!("M(n, d) needs n >= 1 and d <= 2n, got n={n}, d={d}")));
    }
    let c = binomial_table::<T>(n);
    let binom = |a: usize, b: usize| if b > a { T::zero() } else { c[a][b].clone() };
    let scale = pow2::<T>(n * (n - 1));
    let mut total = T::zero();
    for j in 2..=d {
        for t in 1..j {
            if j - t > n {
                continue;
            }
            total = total + binom(n, j - t) * binom(n, t) * from_u64::<T>(t as u64) * scale.clone();
        }
    }
    Ok(total)
}

/// All invertible `n × n` matrices, rows as bitmasks (bit `j` = column `j`).
pub fn invertible_matrices(n: usize) -> Result<Vec<Vec<u32>>> {
    if n > MAX_GL_ENUMERATION {
        return Err(Error::TooLarge {
            what: "order for GL(n, 2) enumeration",
            value: n,
            cap: MAX_GL_ENUMERATION,
        });
    }
    let mut out = Vec::new();
    let mut rows = Vec::with_capacity(n);
    extend_independent(n, &mut rows, &mut out);
    Ok(out)
}

fn extend_independent(n: usize, rows: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rows.len() == n {
        out.push(rows.clone());
        return;
    }
    let spanned = span_of(rows);
    for r in 1..1u32 << n {
        if spanned.contains(&r) {
            continue;
        }
        rows.push(r);
        extend_independent(n, rows, out);
        rows.pop();
    }
}

fn span_of(rows: &[u32]) -> Vec<u32> {
    let mut s = vec![0u32];
    for &r in rows {
        let more: Vec<u32> = s.iter().map(|v| v ^ r).collect();
        s.extend(more);
    }
    s
}

/// `min_{w ≠ 0} wt(A w) + wt(w)`: minimum distance of the code with parity-check matrix `(I | A)`.
pub fn parity_check_distance(a: &[u32]) -> usize {
    let n = a.len();
    (1..1u32 << n)
        .map(|w| {
            let aw = a.iter().filter(|&&r| (r & w).count_ones() % 2 == 1).count();
            aw + w.count_ones() as usize
        })
        .min()
        .unwrap_or(0)
}

/// Number of invertible `A` such that some `d` or fewer columns of `(I | A)` are dependent.
pub fn brute_b<T: Num + Clone + FromPrimitive>(n: usize, d: usize) -> Result<T> {
    let count = invertible_matrices(n)?
        .par_iter()
        .filter(|a| parity_check_distance(a) <= d)
        .count();
    Ok(from_u64(count as u64))
}

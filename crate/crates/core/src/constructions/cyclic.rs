use super::paley::is_prime;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, Gf2Poly};

/// Cyclic code of length `n` with generator `g`, rows `x^i g(x)` for `i < n - deg g`.
pub fn cyclic_code(n: usize, g: &Gf2Poly) -> Result<LinearCode> {
    if !g.divides(&Gf2Poly::x_n_minus_one(n)) {
        return Err(Error::NotDivisor { n });
    }
    let deg = g.degree().expect("divisor is nonzero");
    let base = g.to_bitvector(n)?;
    let rows = (0..n - deg).map(|i| base.rotate_right(i)).collect();
    LinearCode::new(BitMatrix::from_rows(rows, n)?)
}

/// Subcode vanishing at coordinate `i`, with that coordinate deleted.
pub fn shorten(code: &LinearCode, i: usize) -> Result<LinearCode> {
    let n = code.length();
    if i >= n {
        return Err(Error::BadIndex { index: i, length: n });
    }
    let mut rows = code.generator().row_slice().to_vec();
    if let Some(p) = rows.iter().position(|r| r.get(i)) {
        let pivot = rows.remove(p);
        for r in rows.iter_mut().filter(|r| r.get(i)) {
            r.xor_assign(&pivot);
        }
    }
    let rows = rows.into_iter().map(|r| r.remove(i)).collect();
    LinearCode::new(BitMatrix::from_rows(rows, n - 1)?)
}

/// Appends an overall parity coordinate at the end.
pub fn extend_parity(code: &LinearCode) -> LinearCode {
    extend_parity_at(code, code.length()).expect("end position is valid")
}

/// Inserts an overall parity coordinate so that it becomes coordinate `position`.
pub fn extend_parity_at(code: &LinearCode, position: usize) -> Result<LinearCode> {
    let n = code.length();
    if position > n {
        return Err(Error::BadIndex {
            index: position,
            length: n + 1,
        });
    }
    let rows = code
        .generator()
        .row_slice()
        .iter()
        .map(|r| r.insert(position, r.weight() % 2 == 1))
        .collect();
    LinearCode::new(BitMatrix::from_rows(rows, n + 1)?)
}

fn quadratic_residues(p: usize) -> Vec<usize> {
    let mut q: Vec<usize> = (1..p).map(|x| x * x % p).collect();
    q.sort_unstable();
    q.dedup();
    q
}

/// Generator polynomial of a binary quadratic residue code of prime length `p ≡ ±1 (mod 8)`.
///
/// Found as `gcd(e(x), x^p − 1)` for the idempotent among `Σ_{r∈Q} x^r`,
/// `Σ_{r∈N} x^r` and their complements that generates a code of dimension `(p+1)/2`.
pub fn binary_qr_generator(p: u64) -> Result<Gf2Poly> {
    if !is_prime(p) || !(p % 8 == 1 || p % 8 == 7) {
        return Err(Error::BadPrime(p));
    }
    let p = p as usize;
    let q = quadratic_residues(p);
    let nonres: Vec<usize> = (1..p).filter(|x| q.binary_search(x).is_err()).collect();
    let xn1 = Gf2Poly::x_n_minus_one(p);
    for set in [&q, &nonres] {
        let e = Gf2Poly::from_exponents(set);
        for cand in [e.clone(), e.add(&Gf2Poly::one())] {
            let g = cand.gcd(&xn1)?;
            if g.degree() == Some((p - 1) / 2) {
                return Ok(g);
            }
        }
    }
    unreachable!("a QR idempotent of the right dimension exists for p = ±1 mod 8")
}

/// The cyclic quadratic residue code `[p, (p+1)/2]`.
pub fn binary_qr_code(p: u64) -> Result<LinearCode> {
    cyclic_code(p as usize, &binary_qr_generator(p)?)
}

/// Extended Golay code `[24, 12, 8]`, as the extended QR code of length 23.
pub fn extended_golay() -> LinearCode {
    extend_parity(&binary_qr_code(23).expect("23 = -1 mod 8"))
}

/// Extended Hamming code `[8, 4, 4]`, as the extended QR code of length 7.
pub fn extended_hamming() -> LinearCode {
    extend_parity(&binary_qr_code(7).expect("7 = -1 mod 8"))
}

use crate::error::{Error, Result};
use crate::gf2::Gf2Poly;

/// Polynomial over Z4, coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Z4Poly {
    coeffs: Vec<u8>,
}

impl Z4Poly {
    pub fn new(coeffs: &[u8]) -> Self {
        let mut coeffs: Vec<u8> = coeffs.iter().map(|c| c & 3).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `x^n − 1`.
    pub fn x_n_minus_one(n: usize) -> Self {
        let mut c = vec![0u8; n + 1];
        c[0] = 3;
        c[n] = 1;
        Self::new(&c)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &Z4Poly) -> Z4Poly {
        if self.is_zero() || other.is_zero() {
            return Z4Poly::new(&[]);
        }
        let mut c = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) & 3;
            }
        }
        Z4Poly::new(&c)
    }

    pub fn neg(&self) -> Z4Poly {
        Z4Poly::new(&self.coeffs.iter().map(|&c| (4 - c) & 3).collect::<Vec<_>>())
    }

    /// Division by a polynomial with unit leading coefficient.
    pub fn div_rem(&self, d: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
        let dd = d.degree().ok_or(Error::Singular)?;
        let lead = d.coeffs[dd];
        if lead & 1 == 0 {
            return Err(Error::Singular);
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![0u8; r.len().saturating_sub(dd)];
        for i in (dd..r.len()).rev() {
            let f = (r[i] * lead) & 3;
            if f == 0 {
                continue;
            }
            q[i - dd] = f;
            for (k, &c) in d.coeffs.iter().enumerate() {
                let idx = i - dd + k;
                r[idx] = (r[idx] + 4 * 4 - f * c) & 3;
            }
        }
        Ok((Z4Poly::new(&q), Z4Poly::new(&r)))
    }

    pub fn divides(&self, other: &Z4Poly) -> bool {
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    pub fn mod2(&self) -> Gf2Poly {
        let exps: Vec<usize> = (0..self.coeffs.len()).filter(|&i| self.coeffs[i] & 1 == 1).collect();
        Gf2Poly::from_exponents(&exps)
    }

    /// Coefficient vector of length `n`, padded with zeros.
    pub fn to_vec(&self, n: usize) -> Result<Vec<u8>> {
        if self.coeffs.len() > n {
            return Err(Error::DegreeTooHigh { degree: self.coeffs.len() - 1, bound: n });
        }
        let mut v = self.coeffs.clone();
        v.resize(n, 0);
        Ok(v)
    }
}

/// The monic divisor of `x^N − 1` over Z4 reducing to `f2` mod 2 (Graeffe's method).
///
/// Writing `f2(x) = e(x²) + x·o(x²)`, the lift satisfies
/// `f4(x²) = ±(e(x)² − x·o(x)²)` with integer arithmetic mod 4.
pub fn hensel_lift(f2: &Gf2Poly, n: usize) -> Result<Z4Poly> {
    if n.is_multiple_of(2) || !f2.divides(&Gf2Poly::x_n_minus_one(n)) {
        return Err(Error::NotDivisor { n });
    }
    let len = f2.degree().map_or(0, |d| d + 1);
    let part = |start: usize| Z4Poly::new(&(start..len).step_by(2).map(|i| f2.coeff(i) as u8).collect::<Vec<_>>());
    let (e, o) = (part(0), part(1));
    let shifted_o2 = {
        let o2 = o.mul(&o);
        let mut v = vec![0u8];
        v.extend_from_slice(o2.coeffs());
        Z4Poly::new(&v)
    };
    let g = {
        let e2 = e.mul(&e);
        let len = e2.coeffs.len().max(shifted_o2.coeffs.len());
        let mut v = vec![0u8; len];
        for (i, slot) in v.iter_mut().enumerate() {
            let a = e2.coeffs.get(i).copied().unwrap_or(0);
            let b = shifted_o2.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + 4 - b) & 3;
        }
        Z4Poly::new(&v)
    };
    let target = Z4Poly::x_n_minus_one(n);
    [g.clone(), g.neg()]
        .into_iter()
        .find(|cand| cand.is_monic() && cand.divides(&target))
        .ok_or(Error::NotDivisor { n })
}

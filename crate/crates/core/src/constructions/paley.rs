//! Quadratic-residue (Paley) matrices and CIS codes from strongly regular
//! graphs and doubly regular tournaments.

use crate::cis::is_cis_systematic;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A square 0/1 matrix over the integers.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Strongly regular graph: symmetric adjacency, `A² = κI + λA + μ(J − I − A)`.
    Srg,
    /// Doubly regular tournament: `A + Aᵀ = J − I`, `A² = λA + μ(J − I − A)`.
    Drt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub order: usize,
    pub kappa: i64,
    pub lambda: i64,
    pub mu: i64,
    pub kind: GraphKind,
}

/// The four cases of the SRG/DRT construction, each fixing `M` in `(I | M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrgCase {
    /// SRG, κ and λ even, μ odd; `M = A + I`.
    SrgPlusIdentity = 1,
    /// DRT, κ and μ odd, λ even; `M = A`.
    Drt = 2,
    /// SRG, κ even, λ and μ odd; `M = A + J`.
    SrgPlusAllOnes = 3,
    /// DRT, κ even, λ and μ odd; `M = A + J`.
    DrtPlusAllOnes = 4,
}

impl SrgCase {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(SrgCase::SrgPlusIdentity),
            2 => Ok(SrgCase::Drt),
            3 => Ok(SrgCase::SrgPlusAllOnes),
            4 => Ok(SrgCase::DrtPlusAllOnes),
            _ => Err(Error::OutOfRange(format!("SRG case {i} (expected 1..4)"))),
        }
    }

    fn kind(self) -> GraphKind {
        match self {
            SrgCase::SrgPlusIdentity | SrgCase::SrgPlusAllOnes => GraphKind::Srg,
            SrgCase::Drt | SrgCase::DrtPlusAllOnes => GraphKind::Drt,
        }
    }
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn check_odd_prime(q: u64) -> Result<usize> {
    if q.is_multiple_of(2) || !is_prime(q) {
        return Err(Error::NotOddPrime(q));
    }
    Ok(q as usize)
}

/// `Q[i][j] = 1` iff `j − i` is a nonzero square mod `q`.
pub fn paley_integer_matrix(q: u64) -> Result<IntMatrix> {
    let q = check_odd_prime(q)?;
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    Ok((0..q)
        .map(|i| (0..q).map(|j| square[(j + q - i) % q] as i64).collect())
        .collect())
}

pub fn paley_matrix(q: u64) -> Result<BitMatrix> {
    Ok(to_gf2(&paley_integer_matrix(q)?))
}

/// SRG parameters for `q ≡ 1 (mod 4)`, DRT parameters for `q ≡ 3 (mod 4)`.
pub fn paley_params(q: u64) -> Result<SrgParams> {
    let order = check_odd_prime(q)?;
    let q = q as i64;
    Ok(if q % 4 == 1 {
        SrgParams {
            order,
            kappa: (q - 1) / 2,
            lambda: (q - 5) / 4,
            mu: (q - 1) / 4,
            kind: GraphKind::Srg,
        }
    } else {
        SrgParams {
            order,
            kappa: (q - 1) / 2,
            lambda: (q - 3) / 4,
            mu: (q + 1) / 4,
            kind: GraphKind::Drt,
        }
    })
}

fn to_gf2(a: &[Vec<i64>]) -> BitMatrix {
    let n = a.len();
    let mut m = BitMatrix::zeros(n, n);
    for (i, row) in a.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            m.set(i, j, v.rem_euclid(2) == 1);
        }
    }
    m
}

/// Checks the defining matrix equations of `params` over the integers.
pub fn check_axioms(a: &[Vec<i64>], params: &SrgParams) -> Result<()> {
    let n = params.order;
    let fail = |msg: String| Err(Error::AxiomViolation(msg));
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return fail(format!("matrix is not of order {n}"));
    }
    if a.iter().flatten().any(|&v| v != 0 && v != 1) {
        return fail("entries must be 0 or 1".into());
    }
    for i in 0..n {
        if a[i][i] != 0 {
            return fail(format!("nonzero diagonal at {i}"));
        }
        for j in 0..n {
            let ok = match params.kind {
                GraphKind::Srg => a[i][j] == a[j][i],
                GraphKind::Drt => i == j || a[i][j] + a[j][i] == 1,
            };
            if !ok {
                return fail(format!("{:?} symmetry fails at ({i}, {j})", params.kind));
            }
        }
    }
    for (i, row) in a.iter().enumerate() {
        let r: i64 = row.iter().sum();
        let c: i64 = (0..n).map(|k| a[k][i]).sum();
        if r != params.kappa || c != params.kappa {
            return fail(format!("row/column {i} sums to {r}/{c}, expected {}", params.kappa));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let sq: i64 = (0..n).map(|k| a[i][k] * a[k][j]).sum();
            let off = (i != j) as i64 - a[i][j];
            let diag = (i == j) as i64;
            let expected = match params.kind {
                GraphKind::Srg => params.kappa * diag + params.lambda * a[i][j] + params.mu * off,
                GraphKind::Drt => params.lambda * a[i][j] + params.mu * off,
            };
            if sq != expected {
                return fail(format!("(A^2)[{i}][{j}] = {sq}, expected {expected}"));
            }
        }
    }
    Ok(())
}

fn check_parities(params: &SrgParams, case: SrgCase) -> Result<()> {
    let odd = |x: i64| x.rem_euclid(2) == 1;
    let (k, l, m) = (params.kappa, params.lambda, params.mu);
    let ok = params.order % 2 == 1
        && match case {
            SrgCase::SrgPlusIdentity => !odd(k) && !odd(l) && odd(m),
            SrgCase::Drt => odd(k) && odd(m) && !odd(l),
            SrgCase::SrgPlusAllOnes | SrgCase::DrtPlusAllOnes => !odd(k) && odd(l) && odd(m),
        };
    if ok {
        Ok(())
    } else {
        Err(Error::ParityViolation(format!(
            "case {} needs different parities than order {} with (κ, λ, μ) = ({k}, {l}, {m})",
            case as u8, params.order
        )))
    }
}

/// The span of `(I | M)` for the selected case.
pub fn srg_cis(a: &[Vec<i64>], params: &SrgParams, case: SrgCase) -> Result<LinearCode> {
    check_parities(params, case)?;
    if params.kind != case.kind() {
        return Err(Error::AxiomViolation(format!(
            "case {} needs a {:?} but the parameters describe a {:?}",
            case as u8,
            case.kind(),
            params.kind
        )));
    }
    check_axioms(a, params)?;
    let n = params.order;
    let mut m = to_gf2(a);
    for i in 0..n {
        for j in 0..n {
            let flip = match case {
                SrgCase::SrgPlusIdentity => i == j,
                SrgCase::Drt => false,
                SrgCase::SrgPlusAllOnes | SrgCase::DrtPlusAllOnes => true,
            };
            if flip {
                m.set(i, j, !m.get(i, j));
            }
        }
    }
    if !m.determinant_nonzero()? {
        return Err(Error::Singular);
    }
    Ok(LinearCode::from_systematic(&m))
}

/// `(I | Q + I)` for `q ≡ 5 (mod 8)`, `(I | Q)` for `q ≡ 3 (mod 8)`.
pub fn paley_cis(q: u64) -> Result<LinearCode> {
    check_odd_prime(q)?;
    let case = match q % 8 {
        5 => SrgCase::SrgPlusIdentity,
        3 => SrgCase::Drt,
        _ => return Err(Error::BadResidueClass { q }),
    };
    let code = srg_cis(&paley_integer_matrix(q)?, &paley_params(q)?, case)?;
    debug_assert!(is_cis_systematic(&code)?);
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_paley_parameters() {
        let p5 = paley_params(5).unwrap();
        assert_eq!((p5.order, p5.kappa, p5.lambda, p5.mu, p5.kind), (5, 2, 0, 1, GraphKind::Srg));
        let p3 = paley_params(3).unwrap();
        assert_eq!((p3.order, p3.kappa, p3.lambda, p3.mu, p3.kind), (3, 1, 0, 1, GraphKind::Drt));
        let q = paley_integer_matrix(5).unwrap();
        for i in 0..5 {
            assert_eq!(q[i][i], 0);
            for j in 0..5 {
                assert_eq!(q[i][j], q[j][i]);
            }
        }
    }

    #[test]
    fn paley_matrices_satisfy_axioms() {
        for q in (3..64).filter(|&q| q % 2 == 1 && is_prime(q)) {
            check_axioms(&paley_integer_matrix(q).unwrap(), &paley_params(q).unwrap()).unwrap();
        }
    }

    #[test]
    fn paley_codes_are_systematic_cis() {
        for q in (3..64).filter(|&q| is_prime(q) && (q % 8 == 3 || q % 8 == 5)) {
            let c = paley_cis(q).unwrap();
            assert_eq!(c.length(), 2 * q as usize);
            assert!(is_cis_systematic(&c).unwrap(), "q = {q}");
        }
    }

    #[test]
    fn rejected_inputs() {
        assert_eq!(paley_cis(7).unwrap_err(), Error::BadResidueClass { q: 7 });
        assert_eq!(paley_cis(9).unwrap_err(), Error::NotOddPrime(9));
        assert_eq!(paley_matrix(2).unwrap_err(), Error::NotOddPrime(2));
        let a = paley_integer_matrix(13).unwrap();
        let p = paley_params(13).unwrap();
        assert!(matches!(srg_cis(&a, &p, SrgCase::Drt), Err(Error::ParityViolation(_))));
        assert!(srg_cis(&a, &p, SrgCase::SrgPlusIdentity).is_ok());
    }

    #[test]
    fn complete_graph_reaches_third_case() {
        // K_7: κ = 6, λ = 5, and μ is unconstrained; M = A + J = I.
        let a: IntMatrix = (0..7).map(|i| (0..7).map(|j| (i != j) as i64).collect()).collect();
        let p = SrgParams { order: 7, kappa: 6, lambda: 5, mu: 1, kind: GraphKind::Srg };
        let c = srg_cis(&a, &p, SrgCase::SrgPlusAllOnes).unwrap();
        assert!(is_cis_systematic(&c).unwrap());
    }

    #[test]
    fn axiom_violations_are_caught() {
        // Paley parameters cannot have λ and μ both odd, so cases 3 and 4 are
        // reached only with hand-made inputs.
        let mut a = paley_integer_matrix(5).unwrap();
        let fake = SrgParams { order: 5, kappa: 2, lambda: 1, mu: 1, kind: GraphKind::Srg };
        assert!(matches!(
            srg_cis(&a, &fake, SrgCase::SrgPlusAllOnes),
            Err(Error::AxiomViolation(_))
        ));
        let fake_drt = SrgParams { order: 5, kappa: 2, lambda: 1, mu: 1, kind: GraphKind::Drt };
        assert!(matches!(
            srg_cis(&a, &fake_drt, SrgCase::DrtPlusAllOnes),
            Err(Error::AxiomViolation(_))
        ));
        a[0][1] = 0;
        let p = paley_params(5).unwrap();
        assert!(matches!(
            srg_cis(&a, &p, SrgCase::SrgPlusIdentity),
            Err(Error::AxiomViolation(_))
        ));
    }
}

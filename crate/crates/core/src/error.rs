use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("{what} = {value} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("generator rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("code is not a [2n, n] code (length {length}, dimension {dimension})")]
    NotRateHalf { length: usize, dimension: usize },
    #[error("index set has size {got}, expected {expected}")]
    WrongSize { got: usize, expected: usize },
    #[error("index {index} out of range for length {length}")]
    BadIndex { index: usize, length: usize },
    #[error("code is not CIS with the systematic partition")]
    NotSystematicCis,
    #[error("base code is not CIS with the systematic partition")]
    BaseNotCis,
    #[error("polynomial degree {degree} must be below {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {q} is not congruent to 3 or 5 mod 8")]
    BadResidueClass { q: u64 },
    #[error("prime {0} is not congruent to +1 or -1 mod 8")]
    BadPrime(u64),
    #[error("adjacency axiom violated: {0}")]
    AxiomViolation(String),
    #[error("parameter parity condition violated: {0}")]
    ParityViolation(String),
    #[error("polynomial does not divide x^{n} - 1")]
    NotDivisor { n: usize },
    #[error("first row of the circulant has even weight")]
    EvenWeightRow,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("no classification available for length {0}")]
    MissingBase(usize),
    #[error("Z4 code is not free-CIS: A is not invertible over Z4")]
    NotFree,
    #[error("map is not a bijection")]
    NotBijective,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

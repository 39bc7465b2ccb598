use thiserror::Error;

/// Domain errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Even p describes a two-component link, not a knot.
    #[error("b({p},{q}): p is even, which gives a two-component link, not a knot")]
    LinkNotKnot { p: i64, q: i64 },
    /// The pair (p,q) is not coprime.
    #[error("b({p},{q}): gcd(p,q) != 1, the fraction is not reduced")]
    NotReduced { p: i64, q: i64 },
    /// A continued fraction evaluated to a formal infinity or 0/0.
    #[error("continued fraction evaluates to a degenerate value")]
    DegenerateValue,
    /// Crossing number of the trivial knot.
    #[error("crossing number of the trivial knot is defined as zero")]
    DefinedAsZero,
    /// Exact polynomial division failed.
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("polynomial division by zero")]
    DivisionByZero,
    /// Factorization degree cap exceeded.
    #[error("polynomial degree {degree} exceeds the factorization cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },
    /// A Laurent polynomial was not invariant under s -> 1/s.
    #[error("Laurent polynomial is not symmetric under s -> 1/s")]
    NotSymmetric,
    #[error("matrix determinant is not 1")]
    DeterminantNotOne,
    /// The defect matrix did not have the expected structure.
    #[error("defect matrix shape violation: {0}")]
    ShapeViolation(String),
    #[error("group word length {len} exceeds the cap of {cap}")]
    WordCapExceeded { len: usize, cap: usize },
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

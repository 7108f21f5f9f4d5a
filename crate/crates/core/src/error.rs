use thiserror::Error;

/// Errors produced by the group engine and lattice operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("mixed permutation degrees: expected {expected}, found {found}")]
    MixedDegree { expected: usize, found: usize },
    #[error("images do not form a bijection on 1..={degree}")]
    NotABijection { degree: usize },
    #[error("cycle point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group too large: order {order} exceeds cap {cap}")]
    GroupTooLarge { order: u128, cap: u128 },
    #[error("group order overflows the supported range")]
    OrderOverflow,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,
    #[error("subgroup is not maximal")]
    NotMaximal,
    #[error("operation undefined for the trivial group")]
    TrivialGroup,
    #[error("prime {p} does not divide the group order")]
    PrimeDoesNotDivide { p: u64 },
    #[error("prime ordering is not a permutation of the prime divisors")]
    BadOrdering,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

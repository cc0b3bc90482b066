use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} out of range 1..=16")]
    DegreeOutOfRange(u32),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("no element of order {n}: {n} does not divide {group_order}")]
    OrderNotDividing { n: u64, group_order: u64 },
    #[error("root string requested for proportional roots")]
    ProportionalRoots,
    #[error("invalid root coordinates ({0}, {1})")]
    NotARoot(i32, i32),
    #[error("structure constants inconsistent: {0}")]
    Inconsistent(String),
    #[error("divided power {power} of ad(e_{root}) is not integral")]
    NonIntegral { root: String, power: usize },
    #[error("coroot element needs a non-zero scalar")]
    ZeroCorootScalar,
    #[error("subgroup closure exceeded bound {0}")]
    BoundExceeded(usize),
    #[error("q = {0} must be odd and at least 3")]
    InvalidQ(u32),
    #[error("q = {q} does not divide 2^{m} - 1")]
    QNotDividing { q: u32, m: u32 },
    #[error("relation {0} fails")]
    RelationFailed(String),
    #[error("value at {0} is not in the unipotent radical")]
    NotInRadical(String),
    #[error("cocycle identity fails at ({0}, {1})")]
    CocycleIdentity(String, String),
    #[error("domain mismatch")]
    DomainMismatch,
    #[error("singular matrix")]
    Singular,
    #[error("invalid configuration: {0}")]
    Config(String),
}

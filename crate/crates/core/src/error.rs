use num_bigint::BigInt;

use crate::numeric::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn fmt_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("lattice is not even: diagonal entry {index} is odd")]
    NotEven { index: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("lattice is degenerate")]
    Degenerate,
    #[error("lattice is not negative definite")]
    NotNegativeDefinite,
    #[error("lattice is not hyperbolic")]
    NotHyperbolic,
    #[error("expected a lattice of rank {expected}, got rank {got}")]
    WrongRank { expected: usize, got: usize },
    #[error("malformed ADE symbol `{0}`")]
    MalformedSymbol(String),
    #[error("{0} is a perfect square")]
    SquareParameter(BigInt),
    #[error("embedding does not preserve the Gram matrix")]
    GramMismatch,
    #[error("embedding matrix does not have full column rank")]
    NotFullRank,
    #[error("vector lies in the rational span of the sublattice")]
    InSpan,
    #[error("vector {} does not have norm -2", fmt_vec(.0))]
    NotARoot(Vec<BigInt>),
    #[error("functional vanishes on root {}", fmt_vec(.0))]
    VanishesOnRoot(Vec<BigInt>),
    #[error("root configuration is not of ADE type")]
    NotAde,
    #[error("values involve different radicals sqrt({0}) and sqrt({1})")]
    MixedRadicals(BigInt, BigInt),
    #[error("no numeric value supplied for basis element `{0}`")]
    MissingBasisValue(String),
    #[error("basis values are not linearly independent over Q")]
    DependentBasis,
    #[error("h lies on wall λ={}", fmt_vec(.0))]
    OnWall(Vec<BigInt>),
    #[error("h has non-positive norm {0}")]
    NonPositiveNorm(String),
    #[error("vector lies outside the chosen positive cone")]
    OutsideCone,
    #[error("vector lies outside the fan's region")]
    OutsideRegion,
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("infinitely many walls in the full cone; first wall orbits: {}", .0.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>().join(", "))]
    InfinitelyManyWalls(Vec<Vec<BigInt>>),
    #[error("realizability search inconclusive for wall λ={} at norm {norm} within coordinate bound {bound}", fmt_vec(.lambda))]
    Inconclusive { lambda: Vec<BigInt>, norm: Rational, bound: u32 },
    #[error("matrix is not an isometry of the lattice")]
    NotIsometry,
    #[error("isometry swaps the two components of the positive cone")]
    SwapsComponents,
    #[error("no generator of infinite order")]
    NoInfiniteOrder,
    #[error("lattice is isotropic")]
    Isotropic,
}

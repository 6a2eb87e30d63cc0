use thiserror::Error;

/// How an [`Error`] should be treated by a front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input is well formed but the answer is negative.
    Negative,
    /// The input is malformed or violates a precondition of the operation.
    Malformed,
    /// A result that the mathematics rules out was observed.
    InternalFault,
}

/// Positions and subsets carried by errors are 0-based; [`Error::code`] and
/// the `Display` impl render them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {n} exceeds the cap {cap}")]
    DimensionTooLarge { n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not symmetric: entry ({},{}) differs from ({},{})", .row + 1, .col + 1, .col + 1, .row + 1)]
    NotSymmetric { row: usize, col: usize },

    #[error("M^2 != k*I: entry ({},{}) of M^2 is {found}, expected {expected}", .row + 1, .col + 1)]
    NotASquareRoot { row: usize, col: usize, found: String, expected: String },

    #[error("k = {k} is not a perfect square")]
    KNotPerfectSquare { k: String },

    #[error("M^2 = 0 but M is nonzero at ({},{}); no block decomposition exists for k = 0", .row + 1, .col + 1)]
    DegenerateSquareZero { row: usize, col: usize },

    #[error("M^2 != M: entry ({},{}) of M^2 is {found}, of M is {expected}", .row + 1, .col + 1)]
    NotIdempotent { row: usize, col: usize, found: String, expected: String },

    #[error("M^{high} != M^{low}: entry ({},{}) differs ({found} vs {expected})", .row + 1, .col + 1)]
    NotASolution { high: u32, low: u32, row: usize, col: usize, found: String, expected: String },

    #[error("M^{power} != I: entry ({},{}) is {found}", .row + 1, .col + 1)]
    NotARoot { power: u32, row: usize, col: usize, found: String },

    #[error("not a permutation matrix at row {}", .row + 1)]
    NotAPermutationMatrix { row: usize },

    #[error("shape violation: {0}")]
    ShapeViolation(String),

    #[error("arithmetic fault: {0}")]
    ArithmeticFault(String),

    #[error("subset is not invariant: entry ({},{}) is nonzero", .row + 1, .col + 1)]
    NotInvariant { row: usize, col: usize },

    #[error("subset is empty")]
    EmptySubset,

    #[error("complement of the subset is empty")]
    EmptyComplement,

    #[error("relation does not hold on the ambient matrix at entry ({},{})", .row + 1, .col + 1)]
    RelationNotSatisfied { row: usize, col: usize },

    #[error("search space of {size} candidates exceeds the limit {limit}")]
    SearchSpaceTooLarge { size: String, limit: u64 },

    #[error("no entry bound given and none can be derived from the relation")]
    BoundRequired,
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::DimensionTooLarge { .. } => "dimension_too_large",
            Error::Parse(_) => "parse_error",
            Error::InvalidMatrix(_) => "invalid_matrix",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::InvalidRelation(_) => "invalid_relation",
            Error::InvalidSubset(_) => "invalid_subset",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::NotASquareRoot { .. } => "not_a_square_root",
            Error::KNotPerfectSquare { .. } => "k_not_perfect_square",
            Error::DegenerateSquareZero { .. } => "degenerate_square_zero",
            Error::NotIdempotent { .. } => "not_idempotent",
            Error::NotASolution { .. } => "not_a_solution",
            Error::NotARoot { .. } => "not_a_root",
            Error::NotAPermutationMatrix { .. } => "not_a_permutation_matrix",
            Error::ShapeViolation(_) => "shape_violation",
            Error::ArithmeticFault(_) => "arithmetic_fault",
            Error::NotInvariant { .. } => "not_invariant",
            Error::EmptySubset => "empty_subset",
            Error::EmptyComplement => "empty_complement",
            Error::RelationNotSatisfied { .. } => "relation_not_satisfied",
            Error::SearchSpaceTooLarge { .. } => "search_space_too_large",
            Error::BoundRequired => "bound_required",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::DimensionMismatch { .. }
            | Error::DimensionTooLarge { .. }
            | Error::Parse(_)
            | Error::InvalidMatrix(_)
            | Error::InvalidPermutation(_)
            | Error::InvalidRelation(_)
            | Error::InvalidSubset(_)
            | Error::InvalidArgument(_)
            | Error::EmptySubset
            | Error::EmptyComplement
            | Error::SearchSpaceTooLarge { .. }
            | Error::BoundRequired => ErrorClass::Malformed,
            Error::NotSymmetric { .. }
            | Error::NotASquareRoot { .. }
            | Error::KNotPerfectSquare { .. }
            | Error::DegenerateSquareZero { .. }
            | Error::NotIdempotent { .. }
            | Error::NotASolution { .. }
            | Error::NotARoot { .. }
            | Error::NotInvariant { .. }
            | Error::RelationNotSatisfied { .. } => ErrorClass::Negative,
            Error::NotAPermutationMatrix { .. } | Error::ShapeViolation(_) | Error::ArithmeticFault(_) => {
                ErrorClass::InternalFault
            }
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

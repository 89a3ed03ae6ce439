use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    GroupAxiom(String),

    #[error("group order {order} exceeds the configured cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },

    #[error("operands live over different groups")]
    GroupMismatch,

    #[error("element index {index} is outside a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("negative coefficient at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("vertex action is not free: element {g} fixes vertex {v}")]
    NotFree { g: usize, v: usize },

    #[error("adjacency is not equivariant: A[{g}*{i}][{g}*{j}] != A[{i}][{j}]")]
    NotEquivariant { g: usize, i: usize, j: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("matrix is not inert: pi_{g}(B^{exponent})[{i}][{j}] differs from the identity coefficient")]
    NotInert {
        exponent: u32,
        g: usize,
        i: usize,
        j: usize,
    },

    #[error("witness does not verify: {0}")]
    InvalidWitness(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("enumeration budget of {0} paths exceeded")]
    BudgetExceeded(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }

    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::GroupAxiom(_) => "group_axiom",
            Error::GroupTooLarge { .. } => "group_too_large",
            Error::GroupMismatch => "group_mismatch",
            Error::ElementOutOfRange { .. } => "element_out_of_range",
            Error::LabelMismatch(_) => "label_mismatch",
            Error::NotSquare { .. } => "not_square",
            Error::NegativeEntry { .. } => "negative_entry",
            Error::NotFree { .. } => "not_free",
            Error::NotEquivariant { .. } => "not_equivariant",
            Error::InvalidAction(_) => "invalid_action",
            Error::NotInert { .. } => "not_inert",
            Error::InvalidWitness(_) => "invalid_witness",
            Error::Hypothesis(_) => "hypothesis",
            Error::NotPrime(_) => "not_prime",
            Error::BudgetExceeded(_) => "budget_exceeded",
            Error::Parse(_) => "parse",
            Error::Invariant(_) => "invariant",
        }
    }
}

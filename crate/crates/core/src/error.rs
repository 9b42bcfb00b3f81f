use crate::field::FieldKind;

/// Everything that can go wrong in this crate.
///
/// `SingularPivot` is the one *expected* failure: callers probe pivots and
/// recover from it. The remaining variants signal malformed input or misuse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch {
        expected: FieldKind,
        found: FieldKind,
    },

    #[error("{value} does not encode an element of {kind}")]
    BadElement { kind: FieldKind, value: u8 },

    #[error("`{token}` is not an element of {kind}")]
    BadToken { kind: FieldKind, token: String },

    #[error("division by zero in {kind}")]
    DivisionByZero { kind: FieldKind },

    #[error("{kind} has no automorphism other than the identity")]
    NoInversionAutomorphism { kind: FieldKind },

    #[error("unknown label `{label}`")]
    UnknownLabel { label: String },

    #[error("duplicate label `{label}`")]
    DuplicateLabel { label: String },

    #[error("invalid label `{label}`: {reason}")]
    InvalidLabel { label: String, reason: &'static str },

    #[error("ground set has {size} elements, the maximum is {max}")]
    GroundTooLarge { size: usize, max: usize },

    #[error("operands live on different ground sets")]
    GroundMismatch,

    #[error("matrix is not square")]
    NotSquare,

    #[error("bad shape: {0}")]
    Shape(String),

    #[error("pivot block is singular")]
    SingularPivot,

    #[error("matrix does not have full row rank")]
    RankDeficient,

    #[error("set system has an empty family")]
    ImproperSetSystem,

    #[error("matrix is not alpha-symmetric for the given automorphism")]
    NotAlphaSymmetric,

    #[error("representations over {kind} with the {alpha} automorphism are not supported")]
    UnsupportedRepresentation {
        kind: FieldKind,
        alpha: &'static str,
    },

    #[error("{what} is not defined over {kind}")]
    UnsupportedField { kind: FieldKind, what: &'static str },

    #[error("{0} vectors exceed the enumeration budget of {1}")]
    EnumerationBudget(u128, u128),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

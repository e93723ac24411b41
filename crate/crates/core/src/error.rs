use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed term: {0}")]
    MalformedTerm(String),
    #[error("zero has no Cantor normal form head")]
    ZeroHasNoHead,
    #[error("base must be at least 2")]
    BaseTooSmall,
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("sequence bounds differ: {0} vs {1}")]
    BoundMismatch(String, String),
    #[error("member {member} is not below bound {bound}")]
    MemberOutOfBound { member: String, bound: String },
    #[error("{0} is not dominated by the concatenation")]
    NotDominated(String),
    #[error("ascending violation: label {label} above {offending} ({which})")]
    AscendingViolation {
        label: String,
        offending: String,
        which: &'static str,
    },
    #[error("leaf alphabets are incomparable")]
    AlphabetMismatch,
    #[error("principal index {0} is out of range")]
    IndexOutOfRange(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("bound must be positive")]
    ZeroBound,
    #[error("bound {0} is finite")]
    NotInfiniteBound(String),
    #[error("input {0} is out of range")]
    InputOutOfRange(String),
    #[error("range property violated on {0}")]
    RangePropertyViolated(String),
    #[error("excluded value in range on {0}")]
    ExcludedValueInRange(String),
    #[error("dominance precondition violated: first argument embeds into the second")]
    DominancePreconditionViolated,
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("sequence is not bad at positions {0} and {1}")]
    NotBad(usize, usize),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("unknown embedding {0}")]
    UnknownEmbedding(String),
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// What went wrong while reading a presentation file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    DuplicateVertex(String),
    UnknownEndpoint(String),
    LabelTooSmall(i64),
    SelfLoop(String),
    DuplicateEdge(String, String),
    TooManyVertices(usize),
    Malformed(String),
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::DuplicateVertex(v) => write!(f, "duplicate vertex name `{v}`"),
            ParseErrorKind::UnknownEndpoint(v) => write!(f, "edge endpoint `{v}` not declared"),
            ParseErrorKind::LabelTooSmall(m) => write!(f, "label < 2 (got {m})"),
            ParseErrorKind::SelfLoop(v) => write!(f, "self-loop at `{v}`"),
            ParseErrorKind::DuplicateEdge(a, b) => write!(f, "edge {{{a}, {b}}} declared twice"),
            ParseErrorKind::TooManyVertices(n) => {
                write!(f, "{n} vertices declared, at most {} supported", crate::MAX_GENERATORS)
            }
            ParseErrorKind::Malformed(msg) => write!(f, "malformed input: {msg}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("no edge between `{0}` and `{1}`")]
    NoEdge(String, String),

    #[error("braid closure of `{word}` exceeds the cap of {cap} words")]
    CapExceeded { word: String, cap: usize },

    #[error("presentation is not right-angled (edge {0}-{1} has label {2})")]
    NotRightAngled(String, String, u32),

    #[error("presentation is not dihedral with a finite label")]
    NotDihedral,

    #[error("word `{0}` is not colored (its image in W is nontrivial)")]
    NotColored(String),

    #[error("word `{word}` is not supported on {subset}")]
    NotSupported { word: String, subset: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),

    #[error("no admissible instance found: {0}")]
    SearchExhausted(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Module-qualified error name, used by the CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "presentation::ParseError",
            Error::UnknownGenerator(_) => "presentation::UnknownGenerator",
            Error::NoEdge(..) => "presentation::NoEdge",
            Error::CapExceeded { .. } => "coxeter::CapExceeded",
            Error::NotRightAngled(..) => "artin::NotRightAngled",
            Error::NotDihedral => "artin::NotDihedral",
            Error::NotColored(_) => "retraction::NotColored",
            Error::NotSupported { .. } => "retraction::NotSupported",
            Error::PreconditionViolated(_) => "retraction::PreconditionViolated",
            Error::InternalAssertion(_) => "retraction::InternalAssertion",
            Error::SearchExhausted(_) => "retraction::SearchExhausted",
            Error::InvalidArgument(_) => "cli::InvalidArgument",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

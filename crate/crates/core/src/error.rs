use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Resource-limit variants (`*CapExceeded`, `TooLarge`) mean the answer is
/// unknown, not negative; callers should raise the limit and retry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("bond between `{0}` and itself")]
    SelfBond(String),
    #[error("bond {a}-{b} listed more than once")]
    DuplicateBond { a: String, b: String },
    #[error("invalid bond strength {label} for {a}-{b}: expected an integer >= 3 or \"inf\"")]
    InvalidBond { a: String, b: String, label: String },
    #[error("too many generators ({0}); at most 255 are supported")]
    TooManyGenerators(usize),
    #[error("malformed graph description: {0}")]
    MalformedGraph(String),
    #[error("cannot parse word `{input}`: {reason}")]
    WordParse { input: String, reason: String },

    #[error("braid orbit exceeded the cap of {cap} words; result inconclusive")]
    OrbitCapExceeded { cap: usize },
    #[error("equivalence class exceeded the cap of {cap} members")]
    ClassCapExceeded { cap: usize },
    #[error("linear extension count exceeded the cap of {cap}")]
    ExtensionCapExceeded { cap: usize },
    #[error("{what}: size {actual} exceeds the supported limit {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("word `{0}` is not reduced")]
    NotReduced(String),
    #[error("word `{0}` is not torically reduced")]
    NotToricallyReduced(String),
    #[error("vertex {0} is not a source")]
    NotASource(usize),
    #[error("vertex {0} is not a sink")]
    NotASink(usize),
    #[error("orientation contains a directed cycle")]
    NotAcyclic,
    #[error("vertex {index} out of range for {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },
    #[error("objects live over different graphs: {0}")]
    GraphMismatch(String),
    #[error("`{0}` does not use every generator exactly once")]
    NotACoxeterWord(String),
    #[error("word `{0}` does not have the shape <s,t>_m u")]
    ShapeMismatch(String),
    #[error("`{0}` is not an endpoint of the Coxeter graph")]
    NotAnEndpoint(String),
    #[error("spoke {s}-{t} does not have even finite bond strength")]
    OddSpoke { s: String, t: String },
    #[error("word `{0}` uses a spoke generator")]
    WordUsesSpoke(String),
    #[error("word `{0}` is not CFC")]
    NotCfc(String),
}

impl Error {
    /// Stable variant name, used in CLI reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateGenerator(_) => "DuplicateGenerator",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::GeneratorOutOfRange { .. } => "GeneratorOutOfRange",
            Error::SelfBond(_) => "SelfBond",
            Error::DuplicateBond { .. } => "DuplicateBond",
            Error::InvalidBond { .. } => "InvalidBond",
            Error::TooManyGenerators(_) => "TooManyGenerators",
            Error::MalformedGraph(_) => "MalformedGraph",
            Error::WordParse { .. } => "WordParse",
            Error::OrbitCapExceeded { .. } => "OrbitCapExceeded",
            Error::ClassCapExceeded { .. } => "ClassCapExceeded",
            Error::ExtensionCapExceeded { .. } => "ExtensionCapExceeded",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotReduced(_) => "NotReduced",
            Error::NotToricallyReduced(_) => "NotToricallyReduced",
            Error::NotASource(_) => "NotASource",
            Error::NotASink(_) => "NotASink",
            Error::NotAcyclic => "NotAcyclic",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::GraphMismatch(_) => "GraphMismatch",
            Error::NotACoxeterWord(_) => "NotACoxeterWord",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotAnEndpoint(_) => "NotAnEndpoint",
            Error::OddSpoke { .. } => "OddSpoke",
            Error::WordUsesSpoke(_) => "WordUsesSpoke",
            Error::NotCfc(_) => "NotCfc",
        }
    }

    /// True for errors that signal an exhausted search budget.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::OrbitCapExceeded { .. }
                | Error::ClassCapExceeded { .. }
                | Error::ExtensionCapExceeded { .. }
                | Error::TooLarge { .. }
        )
    }
}

use thiserror::Error;

/// Every failure the engine can report. The CLI maps `Capacity` to exit code 3
/// and everything else to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Structurally invalid arguments: unknown players, mismatched player
    /// sets, blocks that do not partition the player set, and so on.
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// A game was configured without data an operation needs, e.g. the votes
    /// tie rule on a table that carries no vote counts.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// A characteristic-form operation was applied to a partition-form game
    /// or vice versa.
    #[error("form mismatch: expected a {expected} game, got a {actual} game")]
    FormMismatch {
        expected: &'static str,
        actual: &'static str,
    },

    /// Player count outside the supported enumeration range. The default
    /// limit is 12 players; it can be raised to at most 15.
    #[error(
        "capacity error: {players} players exceeds the limit of {limit} \
         (the hard maximum is 15; raise the limit with --capacity)"
    )]
    Capacity { players: usize, limit: usize },

    /// Two supposedly incomparable embedded coalitions were comparable.
    #[error("antichain violation: {smaller} is a proper subset of {larger}")]
    AntichainViolation { smaller: String, larger: String },

    /// Merge identities were requested for games that are not mergeable.
    #[error("games are not mergeable: {0}")]
    NotMergeable(String),

    /// A computation whose result is undefined for this game, e.g. an index
    /// denominator of zero.
    #[error("degenerate game: {0}")]
    Degenerate(String),

    /// A game document that parsed but failed validation; `path` points at
    /// the offending field.
    #[error("validation error at `{path}`: {message}")]
    Validation { path: String, message: String },

    /// A game document that is not syntactically valid JSON or CSV.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown fixture label `{0}` (available: {1})")]
    UnknownFixture(String, String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

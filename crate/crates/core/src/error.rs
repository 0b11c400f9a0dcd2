use thiserror::Error;

/// Everything that can go wrong between reading an input file and printing a
/// verdict. The CLI maps these onto exit codes, so the split between "bad
/// input", "verification disagreement" and "resource limit" matters.
#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error in a presentation or table file.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// The input names a generator it never declared, an empty relator, etc.
    #[error("invalid presentation: {0}")]
    Presentation(String),

    /// A table that is not a group: broken identity, non-Latin row, a failing
    /// associativity triple, and friends. The message carries the witness.
    #[error("invalid group table: {0}")]
    Table(String),

    /// Caller handed us something that violates an operation's contract
    /// (wrong order, non-normal subgroup, tuple that does not generate, ...).
    #[error("{0}")]
    Input(String),

    /// Coset enumeration hit the coset limit and lookahead could not recover.
    #[error("coset enumeration overflow: more than {limit} cosets needed")]
    CosetOverflow { limit: usize },

    /// The table-to-be is larger than we are willing to materialize.
    #[error("group order {order} exceeds the table cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    /// A cross-check failed: two independent routes to the same answer
    /// disagree. This is always fatal.
    #[error("verification disagreement: {0}")]
    Disagreement(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

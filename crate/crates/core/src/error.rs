use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A facet was given as an empty vertex set.
    #[error("facets must be nonempty")]
    InvalidFacet,
    /// A facet index does not exist in the complex.
    #[error("facet index {0} out of range")]
    InvalidIndex(usize),
    /// An input exceeded a configured size cap.
    #[error("input too large: {0}")]
    TooLarge(String),
    /// A squarefree monomial was required.
    #[error("monomial `{0}` is not squarefree")]
    NotSquarefree(String),
    /// The ideal has no generators.
    #[error("the zero ideal has no Taylor complex")]
    EmptyIdeal,
    /// The complex is not a simplicial forest.
    #[error("complex is not a simplicial forest")]
    NotAForest,
    /// The complex is not a simplicial tree (connected forest).
    #[error("complex is not a simplicial tree")]
    NotATree,
    /// A field characteristic must be prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// Text input could not be parsed.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

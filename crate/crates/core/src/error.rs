use thiserror::Error;

/// Errors produced by the library.
///
/// Variants are split between user-facing problems (bad input, unmet
/// preconditions) and internal invariant failures; see [`Error::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: vertex `{token}` appears twice in one hyperedge")]
    DuplicateVertexInEdge { line: usize, token: String },
    #[error("line {line}: hyperedge has no vertices")]
    EmptyEdge { line: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid vertex token `{0}`")]
    InvalidToken(String),
    #[error("not a simplicial complex: {0}")]
    NotSimplicial(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("`{0}` is not a prime")]
    NotPrime(u64),
    #[error("operation requires field coefficients, got {0}")]
    FieldRequired(String),
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("sub-lattice is not contained in the super-lattice")]
    NotASubgroup,
    #[error("matrix dimensions do not agree: {0}")]
    DimensionMismatch(String),
    #[error("hypergraph is not contained in the ambient complex")]
    NotContained,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("Mayer-Vietoris hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("degree {0} is out of range")]
    DegreeOutOfRange(usize),
    #[error("radii must be strictly increasing and positive")]
    NonIncreasingRadii,
    #[error("distance between `{0}` and `{1}` is not symmetric")]
    AsymmetricDistance(String, String),
    #[error("invalid distance: {0}")]
    InvalidDistance(String),
    #[error("value for `{0}` is outside [0, 1]")]
    ValueOutOfRange(String),
    #[error("vertex values: {0}")]
    InvalidValues(String),
    #[error("rank matrix is not realizable (negative multiplicity at ({0}, {1}))")]
    NegativeMultiplicity(usize, usize),
    #[error("hypergraph is empty")]
    EmptyHypergraph,
    #[error("cannot mint fresh vertex tokens")]
    TokenCollision,
    #[error("step functions of different dimension")]
    DomainMismatch,
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures of a checked mathematical invariant, as opposed to
    /// bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::NegativeMultiplicity(..))
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

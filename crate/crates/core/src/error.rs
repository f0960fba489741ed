use thiserror::Error;

/// Why a line of an input file was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `n m`")]
    BadHeader,
    #[error("expected two integers `u v`")]
    BadEdgeLine,
    #[error("expected `vertex value` or `* value`")]
    BadAssignmentLine,
    #[error("`{0}` is not a vertex id")]
    BadVertexToken(String),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("no value given for vertex {0}")]
    MissingVertex(usize),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),
    #[error("a constant `*` line must be the only entry")]
    MixedConstant,
    #[error(transparent)]
    Invalid(#[from] AssignmentError),
}

/// A violated assignment invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssignmentError {
    #[error("kappa({vertex}) = {value} is negative")]
    NegativeKappa { vertex: usize, value: i64 },
    #[error("tau({vertex}) = {value} exceeds deg({vertex}) = {degree}")]
    TauAboveDegree { vertex: usize, value: i64, degree: usize },
    #[error("assignment has {found} values but the graph has {expected} vertices")]
    WrongLength { expected: usize, found: usize },
}

/// Precondition under which a bound formula has no value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Inapplicable {
    #[error("kappa({vertex}) = 0 but a positive kappa is required")]
    NonPositiveKappa { vertex: usize },
    #[error("sum of kappa ({sum_kappa}) exceeds the degree sum ({degree_sum})")]
    KappaSumExceedsDegreeSum { sum_kappa: i64, degree_sum: usize },
    #[error("beta = {beta} is not positive")]
    NonPositiveBeta { beta: i64 },
    #[error("threshold sum {sum} is negative")]
    NegativeThresholdSum { sum: i64 },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not regular")]
    NotRegular,
    #[error("k = {k} is not below the degree r = {r}")]
    KNotBelowDegree { k: i64, r: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error(transparent)]
    Assignment(#[from] AssignmentError),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set belongs to a graph on {found} vertices, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("operation needs a nonempty graph")]
    EmptyGraph,
    #[error("operation needs a nonempty vertex set")]
    EmptySet,
    #[error("assignment has the wrong role: expected {expected}")]
    WrongRole { expected: &'static str },
    #[error("seed set is not a dynamic monopoly")]
    NotADynamo,
    #[error("bound not applicable: {0}")]
    Inapplicable(#[from] Inapplicable),
    #[error("exhaustive search limited to n <= {limit}, got n = {n}")]
    OracleLimit { n: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("group order {order} exceeds the configured cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("table entry ({row},{col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("row {row} not a permutation")]
    RowNotPermutation { row: usize },
    #[error("column {col} not a permutation")]
    ColumnNotPermutation { col: usize },
    #[error("no identity element in table")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("associativity fails for ({a}*{b})*{c}")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} out of range for group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("subset belongs to a group of order {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("dihedral group needs m >= 3, got {0}")]
    InvalidDihedral(usize),
    #[error("invalid semidirect pair (p={p}, q={q}): {reason}")]
    InvalidSemidirect { p: usize, q: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SumsetError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("subsets belong to different groups")]
    GroupMismatch,
    #[error("set is empty")]
    EmptySet,
    #[error("set does not contain the identity")]
    IdentityNotInSet,
    #[error("set is not {k}-separable")]
    NotSeparable { k: usize },
    #[error("set does not generate the group")]
    NotGenerating,
    #[error("k must be positive")]
    InvalidK,
    #[error("oracle limited to order {cap}, group has order {order}")]
    OracleCapExceeded { order: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("arc ({0},{0}) is a self-loop")]
    SelfLoop(usize),
    #[error("arc endpoint {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("element lies in the subgroup; the quotient would have loops")]
    ElementInSubgroup,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not {k}-separable")]
    NotSeparable { k: usize },
    #[error("k must be positive")]
    InvalidK,
    #[error("graph dump parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Limit(String),
    #[error("flow and enumeration disagree: {flow} vs {enumerated}")]
    CrossCheck { flow: usize, enumerated: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Sumset(#[from] SumsetError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("set must have at least two elements")]
    SetTooSmall,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExampleError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("construction invariant failed: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Example(#[from] ExampleError),
    #[error("{0}")]
    Config(String),
}

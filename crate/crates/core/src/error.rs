use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relations contain a cycle through element {0}")]
    CycleDetected(usize),
    #[error("self-relation on element {0}")]
    SelfPair(usize),
    #[error("element {element} out of range for a poset on {n} elements")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("posets are limited to {max} elements, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("marked elements violate x ≱ y: {0}")]
    MarkViolation(String),
    #[error("index k = {k} outside the valid range {lo}..={hi}")]
    IndexOutOfRange { k: usize, lo: usize, hi: usize },
    #[error("set is not a lower set")]
    NotLowerSet,
    #[error("set is not an upper set")]
    NotUpperSet,
    #[error("lower and upper sets overlap")]
    Overlap,
    #[error("({0}, {1}) is not a cover pair")]
    NotCoverPair(usize, usize),
    #[error("not a linear extension: {0}")]
    NotAnExtension(String),
    #[error("P is not the union of P_-, P_+ and {{x, y}}")]
    PartitionViolated,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("vector is not in V (its y and x coordinates differ)")]
    NotInV,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("Kahn–Saks inequality violated at k = {k}: {detail}")]
    InequalityViolated { k: usize, detail: String },
}

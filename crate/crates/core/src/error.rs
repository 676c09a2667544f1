use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of [{n}]: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("n = {n} is outside the supported range 1..={max}")]
    TooLarge { n: usize, max: usize },

    #[error("the two cycles are identical")]
    SameCycle,

    #[error("bad edge {{{u},{v}}} for n = {n}")]
    BadEdge { u: usize, v: usize, n: usize },

    #[error("n = {0} is even; a Hamilton decomposition needs odd n")]
    EvenN(usize),

    #[error("{what}: size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("position {pos} out of range 1..={max}")]
    PositionOutOfRange { pos: usize, max: usize },

    #[error("{field}: {reason}")]
    Domain { field: &'static str, reason: String },

    #[error("relation `{relation}` does not apply to {universe}")]
    IncompatibleRelation {
        relation: &'static str,
        universe: &'static str,
    },

    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },

    #[error("{quantity}({n}) = {value} violates the known bound {bound} ({side})")]
    SandwichViolation {
        quantity: &'static str,
        n: usize,
        value: usize,
        bound: String,
        side: &'static str,
    },

    #[error("family file, line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

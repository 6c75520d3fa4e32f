use thiserror::Error;

use crate::group::ElementId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {n} for {what}")]
    InvalidOrder { what: &'static str, n: usize },
    #[error("group order {order} exceeds the configured cap {cap}")]
    SizeLimit { order: usize, cap: usize },

    #[error("Cayley table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("Cayley table entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(ElementId),
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: ElementId, b: ElementId, c: ElementId },
    #[error("element {element} has order {element_order}, which does not divide {group_order}")]
    Lagrange { element: ElementId, element_order: usize, group_order: usize },

    #[error("action entry for complement element {h} is not a permutation of the normal subgroup")]
    ActionNotPermutation { h: ElementId },
    #[error("action of {h} is not an automorphism: fails on ({a}, {b})")]
    ActionNotAutomorphism { h: ElementId, a: ElementId, b: ElementId },
    #[error("action is not a homomorphism: phi({h1}*{h2}) != phi({h1}) o phi({h2})")]
    ActionNotHomomorphism { h1: ElementId, h2: ElementId },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {g} * {h} * {g}^-1 leaves the subgroup")]
    NotNormal { g: ElementId, h: ElementId },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group is not cyclic")]
    NotCyclic,
    #[error("the trivial group has no geodesics")]
    NoGeodesics,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(usize, usize),
    #[error("{0} is not composite")]
    NotComposite(usize),
    #[error("witness is zero")]
    ZeroWitness,
    #[error("function is not in the kernel of the transform")]
    NotInKernel,

    #[error("representation image of the identity is not the identity matrix")]
    RepIdentity,
    #[error("representation is not a homomorphism at ({0}, {1})")]
    RepNotHomomorphism(ElementId, ElementId),
    #[error("representation image of {0} is not unitary")]
    RepNotUnitary(ElementId),
    #[error("representation is not declared unitary")]
    RepNotDeclaredUnitary,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("flow violates s(a,b)=b <=> a=b at (a, b) = ({a}, {b})")]
    FlowReflexivity { a: usize, b: usize },
    #[error("flow violates s(a,b)=c <=> s(c,b)=a at (a, b) = ({a}, {b})")]
    FlowReversibility { a: usize, b: usize },
    #[error("flow table entry ({a}, {b}) = {value} is out of range")]
    FlowOutOfRange { a: usize, b: usize, value: usize },
    #[error("flow needs at least two points, got {0}")]
    FlowTooSmall(usize),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

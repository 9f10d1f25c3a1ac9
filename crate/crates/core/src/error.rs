use alloc::string::String;
use core::fmt;

/// Errors raised by the model-checking, topology and gluing operations.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// A formula mentions a variable the valuation does not bind.
    UnboundVariable(String),
    /// Exhaustive valuation search would need more bits than allowed.
    BudgetExceeded { bits: usize, budget: usize },
    /// The operation is only defined on transitive frames.
    NotTransitive,
    /// A point index is outside the carrier.
    PointOutOfRange { point: usize, len: usize },
    /// Carrier larger than [`crate::MAX_POINTS`].
    TooManyPoints(usize),
    /// The same edge was listed twice.
    DuplicateEdge(usize, usize),
    /// A scheme was given the wrong number of arguments.
    Arity { expected: usize, got: usize },
    /// `named_axiom` does not know the name.
    UnknownAxiom(String),
    /// A set family is not a topology; the payload says which law fails.
    InvalidTopology(String),
    /// A subspace was requested on the empty set.
    EmptySubspace,
    /// A map is not total, or sends a point outside its codomain.
    InvalidMap(String),
    /// A d-morphism transfer was requested for a map that is not a
    /// surjective d-morphism.
    Precondition(String),
    /// A cluster assignment for gluing fails its invariants.
    InvalidAssignment { cluster: usize, reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnboundVariable(v) => write!(f, "variable `{v}` has no value"),
            Error::BudgetExceeded { bits, budget } => write!(
                f,
                "exhaustive check needs {bits} valuation bits, budget is {budget}"
            ),
            Error::NotTransitive => f.write_str("frame is not transitive"),
            Error::PointOutOfRange { point, len } => {
                write!(f, "point {point} out of range for carrier of size {len}")
            }
            Error::TooManyPoints(n) => {
                write!(f, "{n} points exceeds the limit of {}", crate::MAX_POINTS)
            }
            Error::DuplicateEdge(a, b) => write!(f, "duplicate edge [{a}, {b}]"),
            Error::Arity { expected, got } => {
                write!(f, "scheme expects {expected} arguments, got {got}")
            }
            Error::UnknownAxiom(name) => write!(f, "unknown axiom `{name}`"),
            Error::InvalidTopology(why) => write!(f, "not a topology: {why}"),
            Error::EmptySubspace => f.write_str("subspace on the empty set"),
            Error::InvalidMap(why) => write!(f, "invalid point map: {why}"),
            Error::Precondition(why) => write!(f, "precondition failed: {why}"),
            Error::InvalidAssignment { cluster, reason } => {
                write!(f, "cluster {cluster}: {reason}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;

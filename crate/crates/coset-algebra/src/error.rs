//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building groups, evaluating
/// operators, or running checks.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("multiplication table is not associative: ({a} * {b}) * {c} != {a} * ({b} * {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("multiplication table has no two-sided identity")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    NotInvertible { element: usize },

    #[error("table entry out of range at row {row}, column {col}: {value} (order {order})")]
    TableEntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("table is not a Latin square: duplicate {value} in {axis} {index}")]
    NotLatinSquare {
        axis: &'static str,
        index: usize,
        value: usize,
    },

    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },

    #[error("closure exceeded the element budget of {budget}")]
    ClosureBudgetExceeded { budget: usize },

    #[error("element {element} does not belong to the group (order {order})")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("subgroup does not match the group it is used with: {reason}")]
    SubgroupMismatch { reason: String },

    #[error("operands live on different spaces: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },

    #[error("exponent p={p} is not supported in exact mode (use 1, 2, or infinity)")]
    UnsupportedExponent { p: u32 },

    #[error("unknown membership tag: {tag}")]
    UnknownTag { tag: String },

    #[error("membership tag {tag} does not apply to a {object}")]
    MembershipMismatch { tag: String, object: &'static str },

    #[error("subgroup {subgroup} is not normal in {group}")]
    NotNormal { group: String, subgroup: String },

    #[error("unknown check id: {id}")]
    UnknownCheck { id: String },

    #[error("mutant run is vacuous: {subgroup} is normal in {group}")]
    NormalSubgroupUseless { group: String, subgroup: String },

    #[error("selection does not resolve in the catalog: {selection}")]
    UnknownSelection { selection: String },

    #[error("parse error at {location}: {message}")]
    ParseError { location: String, message: String },

    #[error("haar weight must be positive, got {value}")]
    NonPositiveWeight { value: String },

    #[error("representative {element} does not belong to coset {coset}")]
    BadRepresentative { element: usize, coset: usize },
}

impl Error {
    /// Shorthand used by the JSON readers.
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::ParseError {
            location: location.into(),
            message: message.into(),
        }
    }
}

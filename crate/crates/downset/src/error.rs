//! Error type shared by the whole crate.

use crate::duality::NonDualEvidence;

/// Errors produced by family construction, enumeration and dualization.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A face references an element outside `1..=n`.
    #[error("member element {element} exceeds ground size {n}{}", fmt_line(.line))]
    MemberOutOfRange {
        element: u32,
        n: usize,
        /// Source line, when the face came from a family file.
        line: Option<usize>,
    },

    /// The ground set exceeds a hard or configured cap.
    #[error("ground size {n} exceeds the maximum {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    /// A subset enumeration or a Berge intermediate outgrew the term budget.
    #[error("term budget exceeded: {required} entries needed, cap is {cap}")]
    TermBudgetExceeded { required: u128, cap: u64 },

    /// A family passed where an antichain is required has comparable members.
    #[error("family is not an antichain: member {contained} is a subset of member {container}")]
    NotAntichain { contained: String, container: String },

    /// Two families that must share a ground set do not.
    #[error("ground size mismatch: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },

    /// Facets and blockers do not describe the same down-set.
    #[error("families are not a dual pair: {evidence}")]
    NotDualPair { evidence: NonDualEvidence },

    /// A family file is malformed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An evaluation point violates a sign precondition.
    #[error("evaluation point must be nonnegative, got {value}")]
    NegativePoint { value: String },
}

fn fmt_line(line: &Option<usize>) -> String {
    match line {
        Some(l) => format!(" at line {l}"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;

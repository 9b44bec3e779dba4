use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates a documented domain constraint.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration was refused because the closed-form
    /// candidate count exceeds the cap. `candidates` is the exact count in
    /// decimal.
    #[error("candidate count {candidates} exceeds cap {cap}")]
    CapExceeded { candidates: String, cap: u64 },

    /// An identity side condition does not hold at the requested point.
    #[error("side condition violated for {identity}: requires {condition}")]
    SideCondition {
        identity: &'static str,
        condition: &'static str,
    },
}

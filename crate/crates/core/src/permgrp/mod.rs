//! Permutation groups acting on finite point sets.

mod chain;
mod group;
mod ops;
mod perm;
mod search;

pub use group::{PermGroup, DEFAULT_NODE_CAP};
pub use ops::GroupOps;
pub use perm::Perm;

use thiserror::Error;

/// Largest degree handled by the normalizer search.
pub const NORMALIZER_DEGREE_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("images {0:?} do not form a permutation")]
    NotBijective(Vec<usize>),
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    Degree { expected: usize, found: usize },
    #[error("{0} is not in the group")]
    NotInGroup(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
}

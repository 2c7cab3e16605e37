//! Finitely presented groups: parsing, coset enumeration and the
//! 4-transposition cover groups.

mod algo;
mod coset;
mod parse;
mod regular;
mod table1;

pub use algo::{is_k_transposition, similar, SIMILARITY_ORDER_CAP};
pub use coset::{coset_enumerate, group_order, CosetTable, EnumOptions, Strategy, DEFAULT_COSET_CAP};
pub use parse::{free_reduce, inverse_word, Presentation, Word};
pub use regular::RegularGroup;
pub use table1::{cover, quotient, CoverGroup, Quotient, COVER_GROUPS, QUOTIENTS};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown generator {name:?} at line {line}, column {col}")]
    UnknownGenerator { name: String, line: usize, col: usize },
    #[error("inconclusive: gave up after {cosets} cosets")]
    Inconclusive { cosets: usize },
    #[error("coset table is incomplete")]
    Incomplete,
    #[error("{0} is not an involution")]
    NotInvolution(String),
}

/// Checks that every relator acts trivially on the cosets of `t`.
pub fn satisfies_relators(t: &CosetTable, p: &Presentation) -> bool {
    p.relators.iter().all(|r| coset::relator_holds(t, r))
}

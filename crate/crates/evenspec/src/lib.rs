//! Tools for deciding whether a simple undirected graph admits a real
//! symmetric matrix, with off-diagonal support exactly the edge set and a
//! free diagonal, whose characteristic polynomial is a perfect square.
//!
//! The crate is organized bottom-up:
//!
//! * [`graphs`]: graph type, graph6 io, products, metrics, canonical
//!   labeling and exhaustive enumeration of small connected graphs;
//! * [`linalg`]: dense symmetric eigensolver, exact characteristic
//!   polynomials, polynomial square roots and square-spectrum certificates;
//! * [`obstructions`]: fast certified "no" tests (parity, trees, unique
//!   shortest paths, pendant families);
//! * [`constructions`]: certified "yes" constructions (skew pairs, cycle
//!   matrices, tensor products, joins, clique blowups, complete-graph
//!   spectra, rank-2 and tight-frame realizations);
//! * [`search`]: randomized numeric search for a square-spectrum matrix in
//!   a prescribed pattern;
//! * [`classify`]: the end-to-end decision pipeline and its batch driver.

pub mod classify;
pub mod constructions;
pub mod graphs;
pub mod linalg;
pub mod obstructions;
pub mod search;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("capacity: {0}")]
    Capacity(String),
    #[error("pattern mismatch: {0}")]
    Pattern(String),
    #[error("not realizable: {0}")]
    Unrealizable(String),
    #[error("matrix has no exact entries")]
    NoExactEntries,
    #[error("certificate: {0}")]
    Certificate(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

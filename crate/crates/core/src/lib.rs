//! Verification engine for size multipartite Ramsey numbers `m_j(nK_2, C_7)`.
//!
//! A coloring of the complete multipartite host `K_{j×t}` is *good* when its
//! red edges contain no `n` disjoint edges and its blue edges (everything
//! red leaves out) contain no 7-cycle. `m_j(nK_2, C_7)` is the least `t` for
//! which no good coloring exists.
//!
//! * [`formula`] evaluates the closed form for every `j ≥ 2`, `n ≥ 2`.
//! * [`construct`] builds extremal good colorings on `K_{j×(m-1)}`.
//! * [`search`] decides good-coloring existence exhaustively, which certifies
//!   the matching upper bound on small hosts.
//! * [`cert`] packages both directions into self-checking certificates.

pub mod bits;
pub mod cert;
pub mod construct;
pub mod detect;
pub mod formula;
pub mod graph6;
pub mod host;
pub mod io;
pub mod search;

pub use bits::Graph64;
pub use construct::{lower_bound_coloring, verify_good, GoodReport};
pub use formula::{ramsey_value, RamseyValue, Regime};
pub use host::{Coloring, EdgeSet, PartiteShape, VertexRef};

use thiserror::Error;

/// Crate version, embedded in certificates.
pub const TOOL_VERSION: &str = concat!("mrn-core ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("host has {vertices} vertices, cap is {cap}")]
    HostTooLarge { vertices: usize, cap: usize },
    #[error("vertex {0} is not in the host")]
    InvalidVertex(VertexRef),
    #[error("({0}, {1}) is not a host edge")]
    NotAHostEdge(usize, usize),
    #[error("({0}, {1}) lies inside one part")]
    WithinPartEdge(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cannot delete slot: {0}")]
    SlotDeletion(String),
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("(j, n) = ({j}, {n}) is outside j >= 2, n >= 2")]
    OutOfDomain { j: usize, n: usize },
    #[error("no witness: {0}")]
    NoWitness(String),
    #[error("construction {name} failed self-verification for (j, n) = ({j}, {n})")]
    ConstructionFailed { name: String, j: usize, n: usize },
    #[error("unknown {kind} {name:?}; known: {known}")]
    UnknownStrategy { kind: &'static str, name: String, known: String },
    #[error("CNF would need more than {cap} clauses")]
    ClauseCap { cap: usize },
    #[error("infinite value: no finite host to search")]
    InfiniteValue,
    #[error("invalid options: {0}")]
    InvalidOptions(String),
    #[error("certificate: {0}")]
    Certificate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

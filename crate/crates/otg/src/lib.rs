//! Exact order types in the plane, CC-closure of partial triple orientations
//! under Knuth's axioms, OT-graph recognition and minimization, and exit
//! graphs.
//!
//! The crate is organized around a small pipeline: exact integer geometry
//! ([`geom`]) produces a fully known [`TripleStore`]; the forward-chaining
//! engine ([`closure`]) saturates partial stores under Axioms 4, 5 and the
//! dual 5'; [`graph`] builds candidate graphs and decides whether their
//! induced triples close to the full order type; [`search`] looks for small
//! OT-graphs; [`db`] and [`report`] drive batch experiments over order-type
//! databases.

pub mod closure;
pub mod construct;
pub mod db;
pub mod enumerate;
pub mod geom;
pub mod graph;
pub mod report;
pub mod search;
pub mod store;
pub mod svg;
pub mod textio;

pub use closure::{close, emit_proof, naive_close, Closure, ClosureStats, Derivation, ProofTrace, Status};
pub use geom::{canonicalize, orient, order_type_of, Orientation, Point, PointSet, TripleKey};
pub use graph::{annotate, exit_graph, is_minimal, is_ot_graph, prune_to_minimal, seed_triples, AnnotatedGraph, EdgePartition, Graph};
pub use search::{exhaustive_minimum, greedy_ot_graph, multi_run, random_ot_graph, SearchConfig, SearchResult, Strategy};
pub use store::{AssertOutcome, RuleSet, TripleStore};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("collinear or degenerate points: {0}")]
    CollinearOrDegenerate(String),
    #[error("duplicate index in triple ({0}, {1}, {2})")]
    DuplicateIndex(usize, usize, usize),
    #[error("point index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("coordinate {0} exceeds the 32-bit signed range")]
    CoordOutOfRange(i64),
    #[error("graph is not an OT-graph under the given rules")]
    NotAnOTGraph,
    #[error("no OT-graph of size <= {max_size} exists under the given rules")]
    NotFound { max_size: usize },
    #[error("proof trace is not replayable: {0}")]
    BrokenTrace(String),
    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("database size mismatch: {0}")]
    SizeMismatch(String),
    #[error("degenerate record {index}: {reason}")]
    DegenerateRecord { index: usize, reason: String },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

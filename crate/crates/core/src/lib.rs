//! Recognition and certification of cycle-nice graphs.
//!
//! A graph with a perfect matching is *cycle-nice* if deleting the vertices
//! of any even cycle leaves a graph that still has a perfect matching. For
//! 2-connected claw-free planar multigraphs this crate decides the property
//! structurally, returning either a construction sequence that rebuilds the
//! input from a small base graph, or an even cycle whose removal destroys
//! every perfect matching.

pub mod canon;
pub mod cli;
pub mod cycles;
pub mod error;
pub mod generator;
pub mod io;
pub mod matching;
pub mod multigraph;
pub mod operations;
pub mod predicates;
pub mod recognizer;

pub use error::{Error, Result};
pub use multigraph::{EdgeId, Multigraph, Vertex};

//! Exact machinery for the coloring invariant psi(G,e) of cubic graphs:
//! edge surgeries, 3-edge-coloring counting and enumeration, cut-set and
//! cyclic-connectivity certification, the two snark constructions with edge
//! tracking, and a synthesizer that hits any target psi = 2^i * 3^j * 5^k * 7^l.

pub mod coloring;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod synthesis;

pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeRef, Graph, VertexId};

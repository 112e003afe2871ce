//! Rainbow induced subgraphs under vertex colourings.
//!
//! `G` arrows `H` when every colouring of `V(G)` with exactly `|V(H)|`
//! non-empty classes contains an induced copy of `H` whose vertices all
//! receive distinct colours. This crate provides an exact brute-force
//! decision procedure, the closed-form classification of arrowing pairs and
//! of `f(H)` (the largest order of a graph arrowing `H`), and a harness that
//! checks the two against each other on small graphs.

pub mod arrow;
pub mod classify;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
mod orbits;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};

//! Contraction, minor and topological-minor testing for small planar graphs,
//! with plane embeddings, duals, treewidth and the class of graphs obtained
//! by repeatedly gluing triangulations along cut vertices and edges.

#![allow(clippy::needless_range_loop)]

pub mod budget;
pub mod class_c;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod pipeline;
pub mod relations;
pub mod treewidth;

pub use budget::{Budget, Outcome};
pub use error::{Error, Result};
pub use graph::{Graph, Multigraph, VertexSet};

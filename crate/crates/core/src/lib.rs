pub mod error;
#[doc(hidden)]
pub mod fault;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{EdgeOrder, Graph, Hole, InducedPath, PathWeight, VertexSet};
pub mod budget;
pub mod configs;
pub mod nearprism;
pub mod evenhole;
pub mod oracle;
pub mod harness;

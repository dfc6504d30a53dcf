//! Circuit-preserving edge maps between graphs and binary matroids.
//!
//! The crate covers graph circuits and connectivity, matroids given by
//! explicit circuit families with their GF(2) span algebra, edge maps that
//! send circuits onto circuits, and the decision procedure for graphs that
//! admit no nontrivial circuit injection into a binary matroid.

pub mod edgeset;
pub mod error;
pub mod graph;
pub mod limits;
pub mod maps;
pub mod matroid;
pub mod selftest;
pub mod witness;

pub use edgeset::{mod2_add, EdgeSet, Ground, GroundTag};
pub use error::{Error, ErrorKind, Result};
pub use graph::{Graph, VertexId};
pub use limits::Limits;
pub use maps::EdgeMap;
pub use matroid::Matroid;

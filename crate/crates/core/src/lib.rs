//! Construction, verification and exact computation of 3-rainbow colorings.
//!
//! A tree in an edge-colored graph is rainbow when no color repeats on its
//! edges; a coloring is 3-rainbow when every three vertices lie on some
//! rainbow tree. This crate computes the minimum number of colors needed
//! (the 3-rainbow index) exactly at desk scale, builds colorings from
//! connected 2-dominating sets and from block decompositions, and evaluates
//! the associated upper and lower bounds.
//!
//! All types are immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

pub mod decomposition;
pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod rainbow;
pub mod steiner;
pub mod structure;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{EdgeId, Graph};
pub use rainbow::coloring::EdgeColoring;
pub use vertex_set::VertexSet;

//! Recognition, structure certificates and colorings for graphs with no
//! induced six-vertex path and no induced four-cycle.
//!
//! The pipeline is: [`detect`] decides membership and finds holes and
//! clique cutsets, [`structure::classify`] produces a checkable certificate
//! for one of the basic classes, and [`coloring::color`] uses that
//! certificate to color within `ceil(5 * omega / 4)`. [`oracle`] gives
//! independent exact values for testing.

#![forbid(unsafe_code)]

pub mod coloring;
pub mod detect;
pub mod generators;
pub mod graph;
pub mod io;
pub mod named;
pub mod oracle;
pub mod structure;
pub mod trivially_perfect;

pub use graph::{Coloring, Graph, GraphError, VertexSet};

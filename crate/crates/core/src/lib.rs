//! Left-walk dynamics of polarized graphs (rotation systems).
//!
//! A polarized graph is a multigraph with a cyclic order of darts at every
//! vertex. Left walks are the orbits of `tau`, and the genus follows from
//! `chi = S - A + F`. The crate provides the complete-walk decision
//! procedure, the valence bounds, the local surgeries and explicit optimal
//! constructions.

pub mod bounds;
pub mod constructions;
mod error;
mod faces;
pub mod format;
mod graph;
mod iso;
pub mod ops;
mod reduce;
pub mod search;
mod stats;
mod walks;

pub use error::{Error, Result};
pub use faces::{from_faces, from_vertex_faces};
pub use graph::{Dart, PolarizedGraph};
pub use iso::isomorphic;
pub use reduce::reduce_to_condition_c;
pub use stats::{fmt_q, stats, GraphStats, Q};
pub use walks::{find_complete_walk, trace_walks, CompleteWalkSearch, Walk, WalkDecomposition};

//! hyperforge: exact construction and verification of extremal intersecting
//! hypergraphs and set pair systems.
//!
//! Everything here is exact: vertex ids are integers, bound values are big
//! rationals, and the only irrational quantities that ever appear (half
//! integer powers such as k^(5/2)) are handled through certified integer
//! square root brackets, never through floating point.
//!
//! The crate is organized around a small number of independent routes to the
//! same facts. Closed-form bound evaluators live in [`bounds`], explicit
//! families attaining (or approaching) those bounds live in
//! [`constructions`], and [`oracle`] re-derives small cases by plain
//! exhaustive search so the two sides can be checked against each other.

pub mod bounds;
pub mod constructions;
pub mod diagnostics;
pub mod geometry;
pub mod hypergraph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod sps;

pub use hypergraph::{Edge, Hypergraph, VertexId};

/// Version tag carried by every JSON document the toolkit emits.
pub const SCHEMA: &str = "hyperforge/1";

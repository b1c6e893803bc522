//! Finite-window analysis of infinite locally finite graphs: vertex
//! isoperimetric profiles, Cheeger upper bounds, rooted-ball distances between
//! transitive graphs, quasitransitive reductions, and the coset-measure
//! calculus relating Følner ratios of totally disconnected groups to vertex
//! boundaries of their Cayley–Abels graphs.
//!
//! Graphs are [`GraphOracle`]s: pure neighbor functions over canonical
//! [`VertexId`] encodings. Every search works on a finite [`FiniteBall`] and
//! reports exact rationals.

pub mod ball;
pub mod bridge;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph_space;
pub mod isoperimetry;
pub mod oracle;
mod par;
pub mod refine;
pub mod sets;
pub mod vertex;

pub use ball::{ball, ball_capped, graph_distance_between, set_vertex_cap, vertex_cap, CappedDistance, FiniteBall};
pub use error::{Error, Result};
pub use exact::{format_rational, Dyadic, Rational};
pub use generators::{make_oracle, oracle_from_str, GraphSpec};
pub use oracle::{audit, CayleyGroup, GraphOracle, Oracle};
pub use sets::{edge_boundary, exterior_boundary, r_neighborhood, VertexSet};
pub use vertex::VertexId;

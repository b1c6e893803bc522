use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::generators::GraphSpec;
use crate::vertex::VertexId;

/// An infinite (or finite) locally finite graph, given by its neighbor function.
///
/// Implementations must be pure: the same vertex always yields the same
/// sorted, duplicate-free neighbor list, and adjacency must be symmetric.
/// Oracles are shared across worker threads.
///
/// This trait is also the extension point for graphs outside the catalog.
pub trait GraphOracle: Send + Sync {
    /// The catalog spec this oracle was built from.
    fn spec(&self) -> &GraphSpec;

    /// Neighbors of `v`, sorted by encoding. `v` must be an id produced by
    /// this oracle (or accepted by [`GraphOracle::parse_vertex`]).
    fn neighbors(&self, v: &VertexId) -> Vec<VertexId>;

    /// Orbit label in `0..num_orbits()`.
    fn orbit_label(&self, v: &VertexId) -> usize;

    /// One representative per orbit, the i-th carrying label i.
    fn orbit_representatives(&self) -> Vec<VertexId>;

    fn num_orbits(&self) -> usize {
        self.orbit_representatives().len()
    }

    fn degree_bound(&self) -> Option<usize>;

    /// Validates a textual vertex and returns its canonical id.
    fn parse_vertex(&self, s: &str) -> Result<VertexId>;

    /// Label of the directed edge `from -> to`. Uncolored graphs return 0.
    /// Colors let automorphism searches respect extra structure, such as a
    /// fixed end of a tree.
    fn edge_color(&self, _from: &VertexId, _to: &VertexId) -> u32 {
        0
    }

    /// Group structure, for Cayley graphs with computable normal forms.
    fn cayley(&self) -> Option<&dyn CayleyGroup> {
        None
    }

    /// Side-`k` box containing the first representative, for families with box semantics.
    fn box_set(&self, _k: usize) -> Option<Vec<VertexId>> {
        None
    }
}

pub type Oracle = Arc<dyn GraphOracle>;

/// Group multiplication on vertex encodings of a right Cayley graph:
/// `neighbors(g) = { g * s : s in generators }`.
pub trait CayleyGroup: Send + Sync {
    fn identity(&self) -> VertexId;
    /// Symmetric generating set, identity excluded.
    fn generators(&self) -> Vec<VertexId>;
    fn multiply(&self, a: &VertexId, b: &VertexId) -> VertexId;
}

/// Checks the oracle contract on `B(rep, radius)` for every orbit representative:
/// sorted duplicate-free neighbor lists, no self-loops, symmetric adjacency,
/// the degree bound, and the orbit labelling of representatives.
pub fn audit(oracle: &dyn GraphOracle, radius: usize) -> Result<()> {
    let reps = oracle.orbit_representatives();
    if reps.is_empty() {
        return Err(Error::Structural("oracle declares no orbit representatives".into()));
    }
    let labels: HashSet<usize> = reps.iter().map(|r| oracle.orbit_label(r)).collect();
    for (i, r) in reps.iter().enumerate() {
        if oracle.orbit_label(r) != i {
            return Err(Error::Structural(format!("representative {r} carries label {} instead of {i}", oracle.orbit_label(r))));
        }
    }
    if labels.len() != reps.len() {
        return Err(Error::Structural("representatives share an orbit label".into()));
    }
    for rep in &reps {
        let ball = crate::ball::ball(oracle, rep, radius)?;
        for v in &ball.vertices {
            let nbrs = oracle.neighbors(v);
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Structural(format!("neighbors of {v} are not sorted and unique")));
            }
            if nbrs.contains(v) {
                return Err(Error::Structural(format!("self-loop at {v}")));
            }
            if let Some(bound) = oracle.degree_bound() {
                if nbrs.len() > bound {
                    return Err(Error::Structural(format!("{v} has degree {} above bound {bound}", nbrs.len())));
                }
            }
            for u in &nbrs {
                if oracle.neighbors(u).binary_search(v).is_err() {
                    return Err(Error::Structural(format!("asymmetric adjacency {v} -> {u}")));
                }
            }
            if oracle.orbit_label(v) >= reps.len() {
                return Err(Error::Structural(format!("{v} has out-of-range orbit label")));
            }
        }
    }
    Ok(())
}

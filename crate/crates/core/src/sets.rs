use std::collections::{BTreeSet, HashSet};

use crate::ball::vertex_cap;
use crate::error::{Error, Result};
use crate::oracle::GraphOracle;
use crate::vertex::VertexId;

/// A finite vertex set, optionally carrying its exterior boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    members: BTreeSet<VertexId>,
    boundary: Option<BTreeSet<VertexId>>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { members: BTreeSet::new(), boundary: None }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.members.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexId> {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<VertexId> {
        &self.members
    }

    /// Members in encoding order.
    pub fn to_vec(&self) -> Vec<VertexId> {
        self.members.iter().cloned().collect()
    }

    pub fn cached_boundary(&self) -> Option<&BTreeSet<VertexId>> {
        self.boundary.as_ref()
    }

    /// Computes and stores the exterior boundary.
    pub fn with_boundary(mut self, oracle: &dyn GraphOracle) -> Self {
        let b = exterior_boundary(oracle, &self);
        self.boundary = Some(b.members);
        self
    }

    /// Boundary size, from the cache when present.
    pub fn boundary_len(&self, oracle: &dyn GraphOracle) -> usize {
        match &self.boundary {
            Some(b) => b.len(),
            None => exterior_boundary(oracle, self).len(),
        }
    }
}

impl Default for VertexSet {
    fn default() -> Self {
        Self::new()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet { members: iter.into_iter().collect(), boundary: None }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a VertexId;
    type IntoIter = std::collections::btree_set::Iter<'a, VertexId>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// `∂A`: vertices outside `A` with a neighbor in `A`.
pub fn exterior_boundary(oracle: &dyn GraphOracle, a: &VertexSet) -> VertexSet {
    let mut out = BTreeSet::new();
    for x in a {
        for y in oracle.neighbors(x) {
            if !a.contains(&y) {
                out.insert(y);
            }
        }
    }
    VertexSet { members: out, boundary: None }
}

/// Number of edges with exactly one endpoint in `A`.
pub fn edge_boundary(oracle: &dyn GraphOracle, a: &VertexSet) -> usize {
    a.iter().map(|x| oracle.neighbors(x).iter().filter(|y| !a.contains(y)).count()).sum()
}

/// `([X]_r, ∂_r X)` where `[X]_r` is the closed r-neighborhood and `∂_r X = [X]_r \ X`.
pub fn r_neighborhood(oracle: &dyn GraphOracle, x: &VertexSet, r: usize) -> Result<(VertexSet, VertexSet)> {
    r_neighborhood_capped(oracle, x, r, vertex_cap())
}

pub fn r_neighborhood_capped(
    oracle: &dyn GraphOracle,
    x: &VertexSet,
    r: usize,
    cap: usize,
) -> Result<(VertexSet, VertexSet)> {
    if x.len() > cap {
        return Err(Error::Resource { cap });
    }
    let mut seen: HashSet<VertexId> = x.iter().cloned().collect();
    let mut frontier: Vec<VertexId> = x.to_vec();
    let mut shell = BTreeSet::new();
    for _ in 0..r {
        let mut next = Vec::new();
        for v in &frontier {
            for u in oracle.neighbors(v) {
                if seen.insert(u.clone()) {
                    shell.insert(u.clone());
                    next.push(u);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::Resource { cap });
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let closed = VertexSet { members: seen.into_iter().collect(), boundary: None };
    Ok((closed, VertexSet { members: shell, boundary: None }))
}

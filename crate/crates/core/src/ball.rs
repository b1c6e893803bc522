use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::GraphOracle;
use crate::vertex::VertexId;

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

static VERTEX_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_VERTEX_CAP);

/// Upper bound on the number of vertices any breadth-first window may hold.
pub fn vertex_cap() -> usize {
    VERTEX_CAP.load(Ordering::Relaxed)
}

pub fn set_vertex_cap(cap: usize) {
    VERTEX_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Induced subgraph on `B(root, radius)`.
///
/// Vertices are listed layer by layer, each layer sorted by encoding, so local
/// index order is `(dist, encoding)` order.
#[derive(Debug, Clone)]
pub struct FiniteBall {
    pub root: VertexId,
    pub radius: usize,
    pub vertices: Vec<VertexId>,
    /// Sorted local neighbor indices, restricted to the ball.
    pub adjacency: Vec<Vec<u32>>,
    pub dist: Vec<u32>,
    index: HashMap<VertexId, u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BallJson {
    pub root: VertexId,
    pub radius: usize,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[u32; 2]>,
    pub dist: Vec<u32>,
}

impl FiniteBall {
    pub(crate) fn from_parts(
        root: VertexId,
        radius: usize,
        vertices: Vec<VertexId>,
        adjacency: Vec<Vec<u32>>,
        dist: Vec<u32>,
    ) -> Self {
        let index = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i as u32)).collect();
        FiniteBall { root, radius, vertices, adjacency, dist, index }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.index.get(v).map(|&i| i as usize)
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.index.contains_key(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as pairs of local indices `i < j`, in index order.
    pub fn edges(&self) -> Vec<[u32; 2]> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            for &j in nbrs {
                if (i as u32) < j {
                    out.push([i as u32, j]);
                }
            }
        }
        out
    }

    /// First local index whose distance exceeds `r`.
    pub fn layer_end(&self, r: usize) -> usize {
        self.dist.partition_point(|&d| d as usize <= r)
    }

    pub fn to_json(&self) -> BallJson {
        BallJson {
            root: self.root.clone(),
            radius: self.radius,
            vertices: self.vertices.clone(),
            edges: self.edges(),
            dist: self.dist.clone(),
        }
    }
}

/// Materializes `B(root, r)` using the global vertex cap.
pub fn ball(oracle: &dyn GraphOracle, root: &VertexId, r: usize) -> Result<FiniteBall> {
    ball_capped(oracle, root, r, vertex_cap())
}

/// Breadth-first materialization of `B(root, r)`.
///
/// Every ball vertex has its neighbor list fetched, so edges between two
/// vertices on the outer shell are present and asymmetric adjacency inside
/// the ball is detected.
pub fn ball_capped(oracle: &dyn GraphOracle, root: &VertexId, r: usize, cap: usize) -> Result<FiniteBall> {
    let mut vertices = vec![root.clone()];
    let mut dist = vec![0u32];
    let mut index: HashMap<VertexId, u32> = HashMap::new();
    index.insert(root.clone(), 0);
    let mut nbr_lists: Vec<Vec<VertexId>> = Vec::new();

    let mut layer_start = 0;
    for d in 0..=r {
        let layer_end = vertices.len();
        let mut next: Vec<VertexId> = Vec::new();
        for i in layer_start..layer_end {
            let nbrs = oracle.neighbors(&vertices[i]);
            if d < r {
                for u in &nbrs {
                    if !index.contains_key(u) {
                        next.push(u.clone());
                    }
                }
            }
            nbr_lists.push(nbrs);
        }
        next.sort_unstable();
        next.dedup();
        if vertices.len() + next.len() > cap {
            return Err(Error::Resource { cap });
        }
        for u in next {
            index.insert(u.clone(), vertices.len() as u32);
            vertices.push(u);
            dist.push(d as u32 + 1);
        }
        layer_start = layer_end;
        if layer_start == vertices.len() {
            break;
        }
    }
    let mut adjacency: Vec<Vec<u32>> = Vec::with_capacity(vertices.len());
    for nbrs in &nbr_lists {
        let mut local: Vec<u32> = nbrs.iter().filter_map(|u| index.get(u).copied()).collect();
        local.sort_unstable();
        adjacency.push(local);
    }
    for (i, nbrs) in adjacency.iter().enumerate() {
        for &j in nbrs {
            if j as usize == i {
                return Err(Error::Structural(format!("self-loop at {}", vertices[i])));
            }
            if adjacency[j as usize].binary_search(&(i as u32)).is_err() {
                return Err(Error::Structural(format!(
                    "asymmetric adjacency: {} lists {} but not conversely",
                    vertices[i], vertices[j as usize]
                )));
            }
        }
    }

    Ok(FiniteBall { root: root.clone(), radius: r, vertices, adjacency, dist, index })
}

/// Result of a capped distance query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CappedDistance {
    Exact(usize),
    ExceedsCap,
}

/// BFS distance from `u` to `v`, or [`CappedDistance::ExceedsCap`] when it is
/// larger than `cap` (including vertices in different components).
pub fn graph_distance_between(oracle: &dyn GraphOracle, u: &VertexId, v: &VertexId, cap: usize) -> CappedDistance {
    if u == v {
        return CappedDistance::Exact(0);
    }
    let mut seen = std::collections::HashSet::new();
    seen.insert(u.clone());
    let mut frontier = vec![u.clone()];
    for d in 1..=cap {
        let mut next = Vec::new();
        for x in &frontier {
            for y in oracle.neighbors(x) {
                if &y == v {
                    return CappedDistance::Exact(d);
                }
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    CappedDistance::ExceedsCap
}

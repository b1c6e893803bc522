use std::collections::{BTreeSet, HashMap, VecDeque};

use isoperimetrix::{GraphOracle, VertexId, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Distances from `root` by a plain breadth-first search up to `radius`.
pub fn bfs(oracle: &dyn GraphOracle, root: &VertexId, radius: usize) -> HashMap<VertexId, usize> {
    let mut dist = HashMap::from([(root.clone(), 0)]);
    let mut queue = VecDeque::from([root.clone()]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == radius {
            continue;
        }
        for w in oracle.neighbors(&v) {
            if !dist.contains_key(&w) {
                dist.insert(w.clone(), d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Multi-source breadth-first closure `[X]_r`.
pub fn closure(oracle: &dyn GraphOracle, x: &VertexSet, r: usize) -> BTreeSet<VertexId> {
    let mut seen: BTreeSet<VertexId> = x.iter().cloned().collect();
    let mut frontier: Vec<VertexId> = seen.iter().cloned().collect();
    for _ in 0..r {
        let mut next = Vec::new();
        for v in &frontier {
            for w in oracle.neighbors(v) {
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// A uniformly chosen `size`-subset of `B(root, radius)`.
pub fn random_set(oracle: &dyn GraphOracle, root: &VertexId, radius: usize, size: usize, rng: &mut impl Rng) -> VertexSet {
    let mut pool: Vec<VertexId> = bfs(oracle, root, radius).into_keys().collect();
    pool.sort();
    pool.shuffle(rng);
    pool.into_iter().take(size).collect()
}

/// Boundary computed from the definition.
pub fn boundary_of(oracle: &dyn GraphOracle, a: &VertexSet) -> BTreeSet<VertexId> {
    a.iter().flat_map(|v| oracle.neighbors(v)).filter(|w| !a.contains(w)).collect()
}

//! Exhaustive reference for the vertex isoperimetric profile.
//!
//! `brute_profile` ranges over every subset of `B(rep, 2n)` that contains the
//! representative, with no connectivity restriction on the candidates. The
//! enumeration visits sets in increasing local-index order, where local
//! indices follow breadth-first layers. Two cuts keep it tractable; neither
//! can discard a set that strictly beats the incumbent:
//!
//! * committed boundary: a boundary vertex whose index is below the next
//!   candidate, or which lies outside the membership window, stays in the
//!   boundary of every completion, and each added vertex absorbs at most one
//!   open boundary vertex;
//! * closed pieces: once every remaining candidate sits at distance at least
//!   3 from a 2-component `K` of the partial set, `K` is a 2-component of
//!   every completion `F`. The boundaries of `K` and `F \ K` are disjoint, so
//!   `|∂F|/|F| >= min(|∂K|/|K|, |∂(F\K)|/|F\K|)`. If `K` alone is no better
//!   than the incumbent, `F` can only win through `F \ K`, which is a smaller
//!   set whose translate through a transitive automorphism is covered by the
//!   value at size `n - 1`, and that value seeds the incumbent.

use std::collections::HashMap;

use isoperimetrix::{GraphOracle, Rational, VertexId};

/// Breadth-first window with plain integer adjacency.
pub struct Window {
    pub vertices: Vec<VertexId>,
    pub layer: Vec<u32>,
    /// Neighbor indices for vertices strictly inside the outer shell.
    pub adj: Vec<Vec<u32>>,
}

impl Window {
    pub fn build(oracle: &dyn GraphOracle, root: &VertexId, radius: u32) -> Window {
        let mut vertices = vec![root.clone()];
        let mut layer = vec![0u32];
        let mut index: HashMap<VertexId, u32> = HashMap::from([(root.clone(), 0)]);
        let mut adj: Vec<Vec<u32>> = Vec::new();
        let mut i = 0;
        while i < vertices.len() {
            if layer[i] == radius {
                break;
            }
            let mut row = Vec::new();
            for w in oracle.neighbors(&vertices[i]) {
                let j = *index.entry(w.clone()).or_insert_with(|| {
                    vertices.push(w);
                    layer.push(layer[i] + 1);
                    (vertices.len() - 1) as u32
                });
                row.push(j);
            }
            adj.push(row);
            i += 1;
        }
        Window { vertices, layer, adj }
    }

    fn boundary(&self, set: &[u32], scratch: &mut Vec<u32>) -> usize {
        scratch.clear();
        for &v in set {
            for &w in &self.adj[v as usize] {
                if !set.contains(&w) {
                    scratch.push(w);
                }
            }
        }
        scratch.sort_unstable();
        scratch.dedup();
        scratch.len()
    }

    fn within_two(&self, u: u32, v: u32) -> bool {
        let a = &self.adj[u as usize];
        let b = &self.adj[v as usize];
        a.contains(&v) || a.iter().any(|x| b.contains(x))
    }
}

fn lt(a: (usize, usize), b: Rational) -> bool {
    (a.0 as u128) * (*b.denom() as u128) < (*b.numer() as u128) * (a.1 as u128)
}

struct Search<'a> {
    w: &'a Window,
    allowed: u32,
    n: usize,
    best: Rational,
    set: Vec<u32>,
    scratch: Vec<u32>,
    nodes: u64,
}

impl Search<'_> {
    fn visit(&mut self) {
        self.nodes += 1;
        let a = self.set.len();
        let last = *self.set.last().unwrap();
        let mut scratch = std::mem::take(&mut self.scratch);
        let b = self.w.boundary(&self.set, &mut scratch);
        if lt((b, a), self.best) {
            self.best = Rational::new(b as u64, a as u64);
        }
        if a == self.n {
            self.scratch = scratch;
            return;
        }
        let committed = scratch.iter().filter(|&&x| x <= last || x >= self.allowed).count();
        let open = b - committed;
        self.scratch = scratch;
        let hopeful = (a + 1..=self.n).any(|s| lt((committed + open.saturating_sub(s - a), s), self.best));
        if !hopeful {
            return;
        }

        let cutoff = self.closing_layer();
        for c in last + 1..self.allowed {
            if self.w.layer[c as usize] > cutoff {
                break;
            }
            self.set.push(c);
            self.visit();
            self.set.pop();
        }
    }

    /// Largest candidate layer that keeps every no-better 2-component open.
    fn closing_layer(&mut self) -> u32 {
        let k = self.set.len();
        let mut comp: Vec<usize> = (0..k).collect();
        for i in 0..k {
            for j in 0..i {
                if self.w.within_two(self.set[i], self.set[j]) {
                    let (ci, cj) = (comp[i], comp[j]);
                    if ci != cj {
                        for c in comp.iter_mut() {
                            if *c == ci {
                                *c = cj;
                            }
                        }
                    }
                }
            }
        }
        let mut cutoff = u32::MAX;
        let mut seen = Vec::new();
        for i in 0..k {
            if seen.contains(&comp[i]) {
                continue;
            }
            seen.push(comp[i]);
            let piece: Vec<u32> = (0..k).filter(|&j| comp[j] == comp[i]).map(|j| self.set[j]).collect();
            let b = self.w.boundary(&piece, &mut self.scratch);
            if !lt((b, piece.len()), self.best) {
                let top = piece.iter().map(|&v| self.w.layer[v as usize]).max().unwrap();
                cutoff = cutoff.min(top + 2);
            }
        }
        cutoff
    }
}

/// Minimum of `|∂A|/|A|` over subsets `A` of `B(rep, 2n)` with `rep ∈ A` and
/// `|A| <= n`, given the value `seed` for size `n - 1` (pass `None` for
/// `n = 1`). Returns the value and the number of search nodes.
pub fn brute_step(oracle: &dyn GraphOracle, n: usize, seed: Option<Rational>) -> (Rational, u64) {
    let rep = &oracle.orbit_representatives()[0];
    let w = Window::build(oracle, rep, 2 * n as u32 + 1);
    let allowed = w.layer.partition_point(|&d| d as usize <= 2 * n) as u32;
    let deg = w.adj[0].len() as u64;
    let best = seed.unwrap_or(Rational::new(deg, 1)).min(Rational::new(deg, 1));
    let mut s = Search { w: &w, allowed, n, best, set: vec![0], scratch: Vec::new(), nodes: 0 };
    s.visit();
    (s.best, s.nodes)
}

/// Reference values `j(1), ..., j(n_max)`.
pub fn brute_profile(oracle: &dyn GraphOracle, n_max: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for n in 1..=n_max {
        let (v, _) = brute_step(oracle, n, out.last().copied());
        out.push(v);
    }
    out
}

/// Fully unpruned minimum over subsets of `B(rep, radius)` containing `rep`
/// with at most `n` members. Only usable on tiny windows.
pub fn naive_min(oracle: &dyn GraphOracle, n: usize, radius: u32) -> Rational {
    let rep = &oracle.orbit_representatives()[0];
    let w = Window::build(oracle, rep, radius + 1);
    let allowed = w.layer.partition_point(|&d| d <= radius) as u32;
    let mut best: Option<Rational> = None;
    let mut set = vec![0u32];
    let mut scratch = Vec::new();
    fn rec(w: &Window, allowed: u32, n: usize, set: &mut Vec<u32>, scratch: &mut Vec<u32>, best: &mut Option<Rational>) {
        let b = w.boundary(set, scratch);
        let r = Rational::new(b as u64, set.len() as u64);
        if best.map_or(true, |x| r < x) {
            *best = Some(r);
        }
        if set.len() == n {
            return;
        }
        for c in set.last().unwrap() + 1..allowed {
            set.push(c);
            rec(w, allowed, n, set, scratch, best);
            set.pop();
        }
    }
    rec(&w, allowed, n, &mut set, &mut scratch, &mut best);
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use isoperimetrix::generators::Grid;

    #[test]
    fn cuts_agree_with_plain_enumeration() {
        let g = Grid::new(2);
        let pruned = brute_profile(&g, 3);
        for n in 1..=3 {
            assert_eq!(pruned[n - 1], naive_min(&g, n, 2 * n as u32));
        }
    }
}

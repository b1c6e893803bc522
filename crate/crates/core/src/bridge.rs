//! Group-to-graph dictionary for a totally disconnected locally compact group
//! `G` acting properly and transitively on a graph with basepoint `o`.
//!
//! A compact open set `G_{o->X} = { g : g.o ∈ X }` is represented by the
//! finite vertex set `X`. With the Haar measure normalized by `μ(G_o) = 1`,
//! `μ(G_{o->X}) = |X|`, and right multiplication by `S^r`, where
//! `S = { g : d(g.o, o) <= 1 }`, sends `G_{o->X}` to `G_{o->[X]_r}`.
//! Right Følner ratios of such sets are therefore vertex-boundary ratios.
//!
//! Only right translation is modeled: left products `SU` do not stay on the
//! orbit of `o` and have no counterpart here.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::ball::{ball, graph_distance_between, CappedDistance};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::generators::{make_oracle, GraphSpec};
use crate::isoperimetry::iso_profile;
use crate::oracle::{GraphOracle, Oracle};
use crate::par;
use crate::refine::{find_isomorphism, joint_refine, ColoredGraph};
use crate::sets::VertexSet;
use crate::vertex::VertexId;

/// The compact open set `G_{o->X}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSet {
    pub graph: GraphSpec,
    pub root: VertexId,
    x: VertexSet,
}

impl CosetSet {
    pub fn new(oracle: &dyn GraphOracle, root: VertexId, x: VertexSet) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(CosetSet { graph: oracle.spec().clone(), root, x })
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.x
    }
}

/// `μ(G_{o->X}) = |X|`.
pub fn measure(u: &CosetSet) -> u64 {
    u.x.len() as u64
}

/// `U S^r = G_{o->[X]_r}`, built by applying `U -> U S` (one neighbor
/// closure) `r` times.
pub fn right_translate_power(oracle: &dyn GraphOracle, u: &CosetSet, r: usize) -> Result<CosetSet> {
    let cap = crate::ball::vertex_cap();
    let mut current: BTreeSet<VertexId> = u.x.members().clone();
    for _ in 0..r {
        let mut next = current.clone();
        for v in &current {
            next.extend(oracle.neighbors(v));
        }
        if next.len() > cap {
            return Err(Error::Resource { cap });
        }
        if next.len() == current.len() {
            break;
        }
        current = next;
    }
    Ok(CosetSet { graph: u.graph.clone(), root: u.root.clone(), x: current.into_iter().collect() })
}

/// `μ(U S^r \ U) / μ(U)`, through the measure calculus.
pub fn folner_star_ratio(oracle: &dyn GraphOracle, u: &CosetSet, r: usize) -> Result<Rational> {
    let before = measure(u);
    let after = measure(&right_translate_power(oracle, u, r)?);
    Ok(Rational::new(after - before, before))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordBall {
    Verified,
    /// An element in exactly one of `{ g : d(g.o, o) <= n }` and `S^n`.
    Violated(VertexId),
}

/// Checks `{ g : d(g.o, o) <= n } = S^n`: the left side by breadth-first
/// search in the graph, the right side by multiplying out words in the group.
pub fn word_ball_check(oracle: &dyn GraphOracle, n: usize) -> Result<WordBall> {
    let group = oracle.cayley().ok_or_else(|| Error::UnsupportedOracle(oracle.spec().to_string()))?;
    let e = group.identity();
    let metric: BTreeSet<VertexId> = ball(oracle, &e, n)?.vertices.into_iter().collect();

    let mut s = group.generators();
    s.push(e.clone());
    let mut words: BTreeSet<VertexId> = BTreeSet::from([e]);
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for w in &words {
            for g in &s {
                next.insert(group.multiply(w, g));
            }
        }
        if next.len() > crate::ball::vertex_cap() {
            return Err(Error::Resource { cap: crate::ball::vertex_cap() });
        }
        words = next;
    }
    Ok(match metric.symmetric_difference(&words).next() {
        None => WordBall::Verified,
        Some(g) => WordBall::Violated(g.clone()),
    })
}

/// Finite-radius orbit counts behind a modular-function diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularEstimate {
    pub x: VertexId,
    pub y: VertexId,
    pub radius: usize,
    /// Images of `y` under automorphisms of `B(x, radius)` fixing `x`.
    pub m_xy: u64,
    /// Images of `x` under automorphisms of `B(y, radius)` fixing `y`.
    pub m_yx: u64,
    pub ratio: Rational,
}

/// Estimates `|G_x y| / |G_y x|` from ball automorphisms respecting the
/// oracle's edge colors. A value other than 1 at some radius points to a
/// non-unimodular automorphism group; 1 at every tested radius is only
/// consistency evidence.
pub fn modular_ratio(oracle: &dyn GraphOracle, x: &VertexId, y: &VertexId, radius: usize) -> Result<ModularEstimate> {
    if radius == 0 {
        return Err(Error::InvalidInput("radius must be at least 1".into()));
    }
    match graph_distance_between(oracle, x, y, radius) {
        CappedDistance::Exact(_) => {}
        CappedDistance::ExceedsCap => {
            return Err(Error::InvalidInput(format!("radius {radius} is smaller than d({x}, {y})")));
        }
    }
    let m_xy = stabilizer_orbit(oracle, x, y, radius)?;
    let m_yx = stabilizer_orbit(oracle, y, x, radius)?;
    Ok(ModularEstimate { x: x.clone(), y: y.clone(), radius, m_xy, m_yx, ratio: Rational::new(m_xy, m_yx) })
}

/// Size of the orbit of `y` under root-fixing automorphisms of `B(x, radius)`.
fn stabilizer_orbit(oracle: &dyn GraphOracle, x: &VertexId, y: &VertexId, radius: usize) -> Result<u64> {
    let b = ball(oracle, x, radius)?;
    let g = ColoredGraph {
        adj: b
            .adjacency
            .iter()
            .enumerate()
            .map(|(v, row)| row.iter().map(|&u| (u, oracle.edge_color(&b.vertices[v], &b.vertices[u as usize]))).collect())
            .collect(),
        colors: b.dist.iter().map(|&d| d as u64).collect(),
    };
    let yi = b.index_of(y).expect("y lies within the radius");
    let stable = joint_refine(&g, &g, &[g.colors.clone(), g.colors.clone()].concat());
    let candidates: Vec<usize> = (0..b.len()).filter(|&z| stable[z] == stable[yi]).collect();
    let marked = |z: usize| {
        let mut h = g.clone();
        h.colors[z] = u64::MAX;
        h
    };
    let with_y = marked(yi);
    let hits = par::map(candidates, |z| z == yi || find_isomorphism(&with_y, &marked(z)).is_some());
    Ok(hits.into_iter().filter(|&h| h).count() as u64)
}

/// The graph on one orbit of a quasitransitive graph with `k` orbits, joining
/// orbit vertices at original distance in `[1, 2k]`.
pub struct ReducedGraph {
    base: Oracle,
    orbit: usize,
    reach: usize,
    spec: GraphSpec,
}

impl ReducedGraph {
    pub fn new(base: Oracle, orbit: usize) -> Result<Self> {
        let orbits = base.num_orbits();
        if orbit >= orbits {
            return Err(Error::InvalidOrbit { index: orbit, orbits });
        }
        let spec = GraphSpec::Reduced { base: Box::new(base.spec().clone()), orbit };
        Ok(ReducedGraph { reach: 2 * orbits, base, orbit, spec })
    }
}

impl GraphOracle for ReducedGraph {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let mut seen: BTreeSet<VertexId> = BTreeSet::from([v.clone()]);
        let mut frontier = vec![v.clone()];
        for _ in 0..self.reach {
            let mut next = Vec::new();
            for a in &frontier {
                for b in self.base.neighbors(a) {
                    if seen.insert(b.clone()) {
                        next.push(b);
                    }
                }
            }
            frontier = next;
        }
        seen.remove(v);
        seen.into_iter().filter(|u| self.base.orbit_label(u) == self.orbit).collect()
    }

    fn orbit_label(&self, _v: &VertexId) -> usize {
        0
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        vec![self.base.orbit_representatives()[self.orbit].clone()]
    }

    fn degree_bound(&self) -> Option<usize> {
        let b = self.base.degree_bound()?;
        let mut total = 0usize;
        let mut shell = b;
        for _ in 0..self.reach {
            total = total.saturating_add(shell);
            shell = shell.saturating_mul(b.saturating_sub(1).max(1));
        }
        Some(total)
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        let v = self.base.parse_vertex(s)?;
        if self.base.orbit_label(&v) == self.orbit {
            Ok(v)
        } else {
            Err(Error::Parse(format!("`{s}` is not in orbit {}", self.orbit)))
        }
    }
}

/// Radius of the window over which reductions sample distortion.
pub const DISTORTION_WINDOW: usize = 6;

pub struct ReductionResult {
    pub reduced: Oracle,
    pub orbit_index: usize,
    pub n_orbits: usize,
    /// `(vertex, d_original, d_reduced)` for orbit vertices within the
    /// window around the representative; `None` when unreached in the reduced graph.
    pub distortion_window: Vec<(VertexId, usize, Option<usize>)>,
}

impl ReductionResult {
    /// Every orbit vertex of the window is reached in the reduced graph.
    pub fn window_connected(&self) -> bool {
        self.distortion_window.iter().all(|s| s.2.is_some())
    }
}

pub fn quasitransitive_reduce(oracle: Oracle, orbit_index: usize) -> Result<ReductionResult> {
    let n_orbits = oracle.num_orbits();
    let reduced: Oracle = Arc::new(ReducedGraph::new(oracle.clone(), orbit_index)?);
    let rep = oracle.orbit_representatives()[orbit_index].clone();
    let original = ball(oracle.as_ref(), &rep, DISTORTION_WINDOW)?;
    let red = ball(reduced.as_ref(), &rep, DISTORTION_WINDOW)?;
    let mut samples = Vec::new();
    for (v, &d) in original.vertices.iter().zip(&original.dist) {
        if oracle.orbit_label(v) == orbit_index {
            samples.push((v.clone(), d as usize, red.index_of(v).map(|i| red.dist[i] as usize)));
        }
    }
    samples.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ReductionResult { reduced, orbit_index, n_orbits, distortion_window: samples })
}

/// Smallest `j(n)` over a caller-supplied family of transitive graphs, with
/// the first graph attaining it. If every graph carries a proper transitive
/// action of the same group `G`, this bounds `h_G` from above; membership is
/// the caller's claim and is not checked.
pub fn h_g_estimate(family: &[GraphSpec], n: usize) -> Result<(Rational, GraphSpec)> {
    let mut best: Option<(Rational, GraphSpec)> = None;
    for spec in family {
        let oracle = make_oracle(spec)?;
        let j = iso_profile(oracle.as_ref(), n)?.j(n).expect("profile covers n");
        if best.as_ref().is_none_or(|(b, _)| j < *b) {
            best = Some((j, spec.clone()));
        }
    }
    best.ok_or_else(|| Error::InvalidInput("empty family".into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitConnectivity {
    /// Every orbit vertex in the window was reached through orbit vertices.
    ConnectedEvidence,
    /// This orbit vertex could not be reached; decisive.
    Disconnected(VertexId),
}

/// For each orbit, tries to reach every orbit vertex of `B(rep, window)`
/// from `rep` by walking only on orbit vertices of `B(rep, window + 2)`.
pub fn orbit_connectivity_check(oracle: &dyn GraphOracle, window: usize) -> Result<Vec<OrbitConnectivity>> {
    let mut out = Vec::new();
    for (orbit, rep) in oracle.orbit_representatives().iter().enumerate() {
        let b = ball(oracle, rep, window + 2)?;
        let on_orbit: Vec<bool> = b.vertices.iter().map(|v| oracle.orbit_label(v) == orbit).collect();
        let mut reached = vec![false; b.len()];
        reached[0] = true;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for &u in &b.adjacency[v] {
                let u = u as usize;
                if on_orbit[u] && !reached[u] {
                    reached[u] = true;
                    stack.push(u);
                }
            }
        }
        let missing: BTreeMap<&VertexId, ()> = (0..b.layer_end(window))
            .filter(|&v| on_orbit[v] && !reached[v])
            .map(|v| (&b.vertices[v], ()))
            .collect();
        out.push(match missing.keys().next() {
            None => OrbitConnectivity::ConnectedEvidence,
            Some(v) => OrbitConnectivity::Disconnected((*v).clone()),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Grid;

    #[test]
    fn translation_grows_by_closed_neighborhoods() {
        let g = Grid::new(1);
        let x: VertexSet = [VertexId::from("(0)")].into_iter().collect();
        let u = CosetSet::new(&g, "(0)".into(), x).unwrap();
        assert_eq!(measure(&u), 1);
        assert_eq!(measure(&right_translate_power(&g, &u, 3).unwrap()), 7);
        assert_eq!(folner_star_ratio(&g, &u, 1).unwrap(), Rational::new(2, 1));
    }

    #[test]
    fn abelian_grid_is_unimodular() {
        let m = modular_ratio(&Grid::new(2), &"(0,0)".into(), &"(1,1)".into(), 2).unwrap();
        assert_eq!(m.ratio, Rational::new(1, 1));
    }
}

//! The space of rooted transitive graphs with `d(G, H) <= 2^-n` whenever the
//! balls of radius `n` around the roots are isomorphic.

use crate::ball::{ball, FiniteBall};
use crate::error::Result;
use crate::exact::{Dyadic, Rational};
use crate::isoperimetry::iso_profile;
use crate::oracle::GraphOracle;
use crate::refine::{find_isomorphism, refinement_signature, verify, ColoredGraph};
use crate::vertex::VertexId;

/// Local invariants checked, in this order, before the full isomorphism search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalInvariant {
    RootDegree,
    /// Number of 4-cycles in the induced ball.
    FourCycles,
    /// Sorted in-ball degrees, shell by shell.
    ShellDegrees,
    /// Jointly refined color histograms.
    Refinement,
    /// Refinement agrees but the backtracking search found no isomorphism.
    ExhaustiveSearch,
}

impl LocalInvariant {
    pub fn name(self) -> &'static str {
        match self {
            LocalInvariant::RootDegree => "root_degree",
            LocalInvariant::FourCycles => "four_cycles",
            LocalInvariant::ShellDegrees => "shell_degrees",
            LocalInvariant::Refinement => "refinement_signature",
            LocalInvariant::ExhaustiveSearch => "exhaustive_search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Root-preserving isomorphism `B1 -> B2`, as `(vertex of g1, vertex of g2)` pairs.
    Isomorphic { mapping: Vec<(VertexId, VertexId)> },
    NotIsomorphic { invariant: LocalInvariant, left: String, right: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallCertificate {
    pub radius: usize,
    pub verdict: Verdict,
}

impl BallCertificate {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self.verdict, Verdict::Isomorphic { .. })
    }
}

fn colored(b: &FiniteBall) -> ColoredGraph {
    ColoredGraph {
        adj: b.adjacency.iter().map(|row| row.iter().map(|&u| (u, 0)).collect()).collect(),
        colors: b.dist.iter().map(|&d| d as u64).collect(),
    }
}

pub(crate) fn four_cycles(b: &FiniteBall) -> u64 {
    let n = b.len();
    let mut paths = vec![0u64; n];
    let mut total = 0u64;
    for v in 0..n {
        let mut touched = Vec::new();
        for &a in &b.adjacency[v] {
            for &w in &b.adjacency[a as usize] {
                let w = w as usize;
                if w > v {
                    if paths[w] == 0 {
                        touched.push(w);
                    }
                    paths[w] += 1;
                }
            }
        }
        for w in touched {
            total += paths[w] * (paths[w] - 1) / 2;
            paths[w] = 0;
        }
    }
    // Each 4-cycle has two diagonals, and is counted once per diagonal.
    total / 2
}

fn shell_degrees(b: &FiniteBall) -> Vec<Vec<usize>> {
    let mut shells = vec![Vec::new(); b.radius + 1];
    for (v, row) in b.adjacency.iter().enumerate() {
        shells[b.dist[v] as usize].push(row.len());
    }
    for s in &mut shells {
        s.sort_unstable();
    }
    shells
}

fn compare_balls(b1: &FiniteBall, b2: &FiniteBall, radius: usize) -> BallCertificate {
    let differ = |invariant, left: String, right: String| BallCertificate {
        radius,
        verdict: Verdict::NotIsomorphic { invariant, left, right },
    };
    let (d1, d2) = (b1.adjacency[0].len(), b2.adjacency[0].len());
    if d1 != d2 {
        return differ(LocalInvariant::RootDegree, d1.to_string(), d2.to_string());
    }
    let (c1, c2) = (four_cycles(b1), four_cycles(b2));
    if c1 != c2 {
        return differ(LocalInvariant::FourCycles, c1.to_string(), c2.to_string());
    }
    let (s1, s2) = (shell_degrees(b1), shell_degrees(b2));
    if s1 != s2 {
        return differ(LocalInvariant::ShellDegrees, format!("{s1:?}"), format!("{s2:?}"));
    }
    let (g1, g2) = (colored(b1), colored(b2));
    let (h1, h2) = refinement_signature(&g1, &g2);
    if h1 != h2 {
        return differ(LocalInvariant::Refinement, format!("{h1:?}"), format!("{h2:?}"));
    }
    match find_isomorphism(&g1, &g2) {
        Some(map) => BallCertificate {
            radius,
            verdict: Verdict::Isomorphic {
                mapping: map
                    .iter()
                    .enumerate()
                    .map(|(v, &w)| (b1.vertices[v].clone(), b2.vertices[w as usize].clone()))
                    .collect(),
            },
        },
        None => differ(LocalInvariant::ExhaustiveSearch, "no isomorphism".into(), String::new()),
    }
}

/// Decides whether `B(rep1, n)` and `B(rep2, n)` are isomorphic by a
/// root-preserving map, rooting each graph at its first orbit representative.
pub fn ball_isomorphic(g1: &dyn GraphOracle, g2: &dyn GraphOracle, n: usize) -> Result<BallCertificate> {
    let b1 = ball(g1, &g1.orbit_representatives()[0], n)?;
    let b2 = ball(g2, &g2.orbit_representatives()[0], n)?;
    Ok(compare_balls(&b1, &b2, n))
}

/// Re-checks a certificate from scratch: an isomorphic mapping must be a
/// root-, distance- and adjacency-preserving bijection; a distinguishing
/// invariant must recompute to the reported (distinct) values.
pub fn verify_certificate(g1: &dyn GraphOracle, g2: &dyn GraphOracle, cert: &BallCertificate) -> Result<bool> {
    let b1 = ball(g1, &g1.orbit_representatives()[0], cert.radius)?;
    let b2 = ball(g2, &g2.orbit_representatives()[0], cert.radius)?;
    Ok(match &cert.verdict {
        Verdict::Isomorphic { mapping } => {
            if mapping.len() != b1.len() {
                return Ok(false);
            }
            let mut map = vec![u32::MAX; b1.len()];
            for (a, b) in mapping {
                match (b1.index_of(a), b2.index_of(b)) {
                    (Some(i), Some(j)) => map[i] = j as u32,
                    _ => return Ok(false),
                }
            }
            map[0] == 0 && verify(&colored(&b1), &colored(&b2), &map)
        }
        Verdict::NotIsomorphic { invariant, left, right } => {
            let (l, r) = match invariant {
                LocalInvariant::RootDegree => (b1.adjacency[0].len().to_string(), b2.adjacency[0].len().to_string()),
                LocalInvariant::FourCycles => (four_cycles(&b1).to_string(), four_cycles(&b2).to_string()),
                LocalInvariant::ShellDegrees => (format!("{:?}", shell_degrees(&b1)), format!("{:?}", shell_degrees(&b2))),
                LocalInvariant::Refinement => {
                    let (h1, h2) = refinement_signature(&colored(&b1), &colored(&b2));
                    (format!("{h1:?}"), format!("{h2:?}"))
                }
                LocalInvariant::ExhaustiveSearch => {
                    return Ok(find_isomorphism(&colored(&b1), &colored(&b2)).is_none());
                }
            };
            &l == left && &r == right && l != r
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphDistance {
    /// Exact distance when `exact`, otherwise an upper bound at the horizon.
    pub distance: Dyadic,
    pub exact: bool,
    /// Smallest radius at which the balls differ.
    pub first_difference_radius: Option<usize>,
}

/// If the balls first differ at radius `m <= n_max` the distance is exactly
/// `2^-(m-1)`; if they agree through `n_max` only `2^-n_max` is certified.
pub fn graph_distance(g1: &dyn GraphOracle, g2: &dyn GraphOracle, n_max: usize) -> Result<GraphDistance> {
    let b1 = ball(g1, &g1.orbit_representatives()[0], n_max)?;
    let b2 = ball(g2, &g2.orbit_representatives()[0], n_max)?;
    for m in 1..=n_max {
        let (s1, s2) = (restrict(&b1, m), restrict(&b2, m));
        if !compare_balls(&s1, &s2, m).is_isomorphic() {
            return Ok(GraphDistance { distance: Dyadic::pow2_neg(m as u32 - 1), exact: true, first_difference_radius: Some(m) });
        }
    }
    Ok(GraphDistance { distance: Dyadic::pow2_neg(n_max as u32), exact: false, first_difference_radius: None })
}

/// The sub-ball of radius `r`, which is a prefix in local index order.
fn restrict(b: &FiniteBall, r: usize) -> FiniteBall {
    if r >= b.radius {
        return b.clone();
    }
    let end = b.layer_end(r);
    FiniteBall::from_parts(
        b.root.clone(),
        r,
        b.vertices[..end].to_vec(),
        b.adjacency[..end].iter().map(|row| row.iter().copied().filter(|&u| (u as usize) < end).collect()).collect(),
        b.dist[..end].to_vec(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stability {
    /// Balls of radius `2n + 1` agree and so do the profile values.
    Verified { j: Rational },
    /// Balls of radius `2n + 1` differ; nothing to check.
    Inapplicable { radius: usize },
    /// Balls agree but the profiles do not. This would be a bug in the search.
    Violated { j1: Rational, j2: Rational },
}

/// `j(n)` depends only on the ball of radius `2n + 1`, so graphs that agree
/// on that ball must have equal `j(n)`.
pub fn profile_stability_check(g1: &dyn GraphOracle, g2: &dyn GraphOracle, n: usize) -> Result<Stability> {
    let radius = 2 * n + 1;
    if !ball_isomorphic(g1, g2, radius)?.is_isomorphic() {
        return Ok(Stability::Inapplicable { radius });
    }
    let j1 = iso_profile(g1, n)?.j(n).expect("profile covers n");
    let j2 = iso_profile(g2, n)?.j(n).expect("profile covers n");
    Ok(if j1 == j2 { Stability::Verified { j: j1 } } else { Stability::Violated { j1, j2 } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{Grid, RegularTree};

    #[test]
    fn first_difference_sets_the_distance() {
        let d = graph_distance(&RegularTree::new(3), &RegularTree::new(4), 3).unwrap();
        assert!(d.exact);
        assert_eq!(d.distance.to_exact_string(), "1");
        let d = graph_distance(&Grid::new(2), &Grid::new(2), 3).unwrap();
        assert!(!d.exact);
    }

    #[test]
    fn stability_needs_matching_balls() {
        let s = profile_stability_check(&Grid::new(2), &RegularTree::new(4), 1).unwrap();
        assert_eq!(s, Stability::Inapplicable { radius: 3 });
        let s = profile_stability_check(&Grid::new(1), &RegularTree::new(2), 2).unwrap();
        assert_eq!(s, Stability::Verified { j: Rational::new(1, 1) });
    }
}

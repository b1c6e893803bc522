use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::generators::GraphSpec;
use crate::oracle::{GraphOracle, Oracle};
use crate::vertex::{split_top_level, VertexId};

/// Same vertices as the base; `u ~ v` iff `1 <= d(u, v) <= r`.
pub struct PowerGraph {
    base: Oracle,
    r: usize,
    spec: GraphSpec,
}

impl PowerGraph {
    pub fn new(base: Oracle, r: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidSpec("power needs r >= 1".into()));
        }
        if base.degree_bound().is_none() {
            return Err(Error::InvalidSpec(format!("power of `{}` needs a degree bound", base.spec())));
        }
        let spec = GraphSpec::Power { base: Box::new(base.spec().clone()), r };
        Ok(PowerGraph { base, r, spec })
    }
}

impl GraphOracle for PowerGraph {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let mut seen: HashSet<VertexId> = HashSet::new();
        seen.insert(v.clone());
        let mut frontier = vec![v.clone()];
        for _ in 0..self.r {
            let mut next = Vec::new();
            for x in &frontier {
                for y in self.base.neighbors(x) {
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        seen.remove(v);
        let mut out: Vec<VertexId> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    fn orbit_label(&self, v: &VertexId) -> usize {
        self.base.orbit_label(v)
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        self.base.orbit_representatives()
    }

    fn degree_bound(&self) -> Option<usize> {
        let b = self.base.degree_bound()?;
        let mut total = 0usize;
        let mut shell = b;
        for _ in 0..self.r {
            total = total.saturating_add(shell);
            shell = shell.saturating_mul(b.saturating_sub(1).max(1));
        }
        Some(total)
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        self.base.parse_vertex(s)
    }

    fn box_set(&self, k: usize) -> Option<Vec<VertexId>> {
        self.base.box_set(k)
    }
}

/// Disjoint union; vertex `v` of operand `i` prints as `i:v`.
/// Orbit labels of operand `i` are offset by the orbit counts of operands `0..i`.
pub struct DisjointUnion {
    parts: Vec<Oracle>,
    offsets: Vec<usize>,
    spec: GraphSpec,
}

impl DisjointUnion {
    pub fn new(parts: Vec<Oracle>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidSpec("union needs at least 2 operands".into()));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for p in &parts {
            offsets.push(acc);
            acc += p.num_orbits();
        }
        let spec = GraphSpec::Union(parts.iter().map(|p| p.spec().clone()).collect());
        Ok(DisjointUnion { parts, offsets, spec })
    }

    pub fn tag(i: usize, v: &VertexId) -> VertexId {
        VertexId::from(format!("{i}:{v}"))
    }

    /// Splits `i:v` into the operand index and the operand's vertex.
    pub fn untag(v: &VertexId) -> Option<(usize, VertexId)> {
        let (i, rest) = v.as_str().split_once(':')?;
        if i.is_empty() || (i.len() > 1 && i.starts_with('0')) {
            return None;
        }
        Some((i.parse().ok()?, VertexId::from(rest)))
    }

    fn split(&self, v: &VertexId) -> (usize, VertexId) {
        match DisjointUnion::untag(v) {
            Some((i, inner)) if i < self.parts.len() => (i, inner),
            _ => panic!("`{v}` is not a vertex of {}", self.spec),
        }
    }
}

impl GraphOracle for DisjointUnion {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let (i, inner) = self.split(v);
        let mut out: Vec<VertexId> = self.parts[i].neighbors(&inner).iter().map(|u| DisjointUnion::tag(i, u)).collect();
        out.sort_unstable();
        out
    }

    fn orbit_label(&self, v: &VertexId) -> usize {
        let (i, inner) = self.split(v);
        self.offsets[i] + self.parts[i].orbit_label(&inner)
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.orbit_representatives().into_iter().map(move |r| DisjointUnion::tag(i, &r)))
            .collect()
    }

    fn degree_bound(&self) -> Option<usize> {
        self.parts.iter().map(|p| p.degree_bound()).try_fold(0, |m, b| b.map(|b| m.max(b)))
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        let v = VertexId::from(s);
        match DisjointUnion::untag(&v) {
            Some((i, inner)) if i < self.parts.len() => {
                let inner = self.parts[i].parse_vertex(inner.as_str())?;
                Ok(DisjointUnion::tag(i, &inner))
            }
            _ => Err(Error::Parse(format!("`{s}` is not a tagged vertex of {}", self.spec))),
        }
    }

    fn edge_color(&self, from: &VertexId, to: &VertexId) -> u32 {
        let (i, a) = self.split(from);
        let (_, b) = self.split(to);
        self.parts[i].edge_color(&a, &b)
    }
}

/// Every edge `{u, v}` replaced by a path `u - m - v`. Original `v` prints as
/// `o(v)`, the midpoint of `{u, v}` (with `u < v`) as `m(u|v)`.
///
/// Originals form orbit 0 and midpoints orbit 1, which is accurate when the
/// base is vertex- and edge-transitive (grids, regular trees).
pub struct Subdivision {
    base: Oracle,
    spec: GraphSpec,
}

impl Subdivision {
    pub fn new(base: Oracle) -> Result<Self> {
        if base.num_orbits() != 1 {
            return Err(Error::InvalidSpec(format!("subdivision needs a transitive base, `{}` is not", base.spec())));
        }
        let spec = GraphSpec::Subdivision(Box::new(base.spec().clone()));
        Ok(Subdivision { base, spec })
    }

    pub fn original(v: &VertexId) -> VertexId {
        VertexId::from(format!("o({v})"))
    }

    pub fn midpoint(u: &VertexId, v: &VertexId) -> VertexId {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        VertexId::from(format!("m({a}|{b})"))
    }

    fn decode(v: &VertexId) -> Option<Piece> {
        let s = v.as_str();
        if let Some(inner) = s.strip_prefix("o(").and_then(|r| r.strip_suffix(')')) {
            return Some(Piece::Original(VertexId::from(inner)));
        }
        let inner = s.strip_prefix("m(")?.strip_suffix(')')?;
        match split_top_level(inner, '|').as_slice() {
            [a, b] => Some(Piece::Midpoint(VertexId::from(*a), VertexId::from(*b))),
            _ => None,
        }
    }

    fn piece(&self, v: &VertexId) -> Piece {
        Subdivision::decode(v).unwrap_or_else(|| panic!("`{v}` is not a vertex of {}", self.spec))
    }
}

enum Piece {
    Original(VertexId),
    Midpoint(VertexId, VertexId),
}

impl GraphOracle for Subdivision {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = match self.piece(v) {
            Piece::Original(x) => self.base.neighbors(&x).iter().map(|u| Subdivision::midpoint(&x, u)).collect(),
            Piece::Midpoint(a, b) => vec![Subdivision::original(&a), Subdivision::original(&b)],
        };
        out.sort_unstable();
        out
    }

    fn orbit_label(&self, v: &VertexId) -> usize {
        match self.piece(v) {
            Piece::Original(_) => 0,
            Piece::Midpoint(..) => 1,
        }
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        let rep = self.base.orbit_representatives().remove(0);
        let first = self.base.neighbors(&rep).into_iter().next();
        let mut reps = vec![Subdivision::original(&rep)];
        if let Some(u) = first {
            reps.push(Subdivision::midpoint(&rep, &u));
        }
        reps
    }

    fn degree_bound(&self) -> Option<usize> {
        self.base.degree_bound().map(|b| b.max(2))
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        let err = || Error::Parse(format!("`{s}` is not a vertex of {}", self.spec));
        match Subdivision::decode(&VertexId::from(s)).ok_or_else(err)? {
            Piece::Original(x) => Ok(Subdivision::original(&self.base.parse_vertex(x.as_str())?)),
            Piece::Midpoint(a, b) => {
                let a = self.base.parse_vertex(a.as_str())?;
                let b = self.base.parse_vertex(b.as_str())?;
                if a < b && self.base.neighbors(&a).binary_search(&b).is_ok() {
                    Ok(Subdivision::midpoint(&a, &b))
                } else {
                    Err(err())
                }
            }
        }
    }
}

/// Cartesian product `G x T_d`; `(g, t)` prints as `p(g|t)`.
pub struct ProductWithTree {
    base: Oracle,
    tree: Oracle,
    spec: GraphSpec,
}

impl ProductWithTree {
    pub fn new(base: Oracle, d: usize) -> Self {
        let spec = GraphSpec::ProductWithTree { base: Box::new(base.spec().clone()), d };
        let tree: Oracle = std::sync::Arc::new(super::RegularTree::new(d));
        ProductWithTree { base, tree, spec }
    }

    fn pair(g: &VertexId, t: &VertexId) -> VertexId {
        VertexId::from(format!("p({g}|{t})"))
    }

    fn decode(v: &VertexId) -> Option<(VertexId, VertexId)> {
        let inner = v.as_str().strip_prefix("p(")?.strip_suffix(')')?;
        match split_top_level(inner, '|').as_slice() {
            [g, t] => Some((VertexId::from(*g), VertexId::from(*t))),
            _ => None,
        }
    }

    fn split(&self, v: &VertexId) -> (VertexId, VertexId) {
        ProductWithTree::decode(v).unwrap_or_else(|| panic!("`{v}` is not a vertex of {}", self.spec))
    }
}

impl GraphOracle for ProductWithTree {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let (g, t) = self.split(v);
        let mut out: Vec<VertexId> = self.base.neighbors(&g).iter().map(|h| ProductWithTree::pair(h, &t)).collect();
        out.extend(self.tree.neighbors(&t).iter().map(|s| ProductWithTree::pair(&g, s)));
        out.sort_unstable();
        out
    }

    fn orbit_label(&self, v: &VertexId) -> usize {
        self.base.orbit_label(&self.split(v).0)
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        let root = self.tree.orbit_representatives().remove(0);
        self.base.orbit_representatives().iter().map(|r| ProductWithTree::pair(r, &root)).collect()
    }

    fn degree_bound(&self) -> Option<usize> {
        Some(self.base.degree_bound()? + self.tree.degree_bound()?)
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        let (g, t) = ProductWithTree::decode(&VertexId::from(s))
            .ok_or_else(|| Error::Parse(format!("`{s}` is not a vertex of {}", self.spec)))?;
        Ok(ProductWithTree::pair(&self.base.parse_vertex(g.as_str())?, &self.tree.parse_vertex(t.as_str())?))
    }
}

use crate::error::{Error, Result};
use crate::generators::GraphSpec;
use crate::oracle::GraphOracle;
use crate::vertex::VertexId;

/// The grandfather graph: the 3-regular tree with a distinguished end, where
/// every vertex is also joined to its grandparent. 8-regular.
///
/// Vertices are horocyclic coordinates `(level, address)`: the vertex at
/// level `k` with address `c` is the 2-adic ball `c + 2^k Z_2`, where `c` is a
/// dyadic rational in `[0, 2^k)`. The parent of `(k, c)` is
/// `(k - 1, c mod 2^(k-1))`, its children are `(k + 1, c)` and `(k + 1, c + 2^k)`,
/// and the fixed end is reached by following parents. Addresses print as a
/// reduced dyadic fraction (`0`, `3`, `1/4`, ...).
///
/// Edge colors record the end orientation: 1 towards the parent, 2 towards a
/// child, 3 towards the grandparent, 4 towards a grandchild.
pub struct Grandfather {
    spec: GraphSpec,
}

/// `num / 2^exp`, with `exp == 0` or `num` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Dyadic {
    num: i128,
    exp: u32,
}

impl Dyadic {
    fn new(mut num: i128, mut exp: u32) -> Self {
        while exp > 0 && num % 2 == 0 {
            num /= 2;
            exp -= 1;
        }
        Dyadic { num, exp }
    }

    fn pow2(j: i64) -> Self {
        if j >= 0 {
            Dyadic { num: 1i128 << j, exp: 0 }
        } else {
            Dyadic { num: 1, exp: j.unsigned_abs() as u32 }
        }
    }

    fn common(self, other: Dyadic) -> (i128, i128, u32) {
        let exp = self.exp.max(other.exp);
        (self.num << (exp - self.exp), other.num << (exp - other.exp), exp)
    }

    fn add(self, other: Dyadic) -> Dyadic {
        let (a, b, exp) = self.common(other);
        Dyadic::new(a + b, exp)
    }

    fn sub(self, other: Dyadic) -> Dyadic {
        let (a, b, exp) = self.common(other);
        Dyadic::new(a - b, exp)
    }

    fn lt(self, other: Dyadic) -> bool {
        let (a, b, _) = self.common(other);
        a < b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Node {
    level: i64,
    address: Dyadic,
}

impl Node {
    fn parent(self) -> Node {
        let half = Dyadic::pow2(self.level - 1);
        let address = if self.address.lt(half) { self.address } else { self.address.sub(half) };
        Node { level: self.level - 1, address }
    }

    fn children(self) -> [Node; 2] {
        let level = self.level + 1;
        [
            Node { level, address: self.address },
            Node { level, address: self.address.add(Dyadic::pow2(self.level)) },
        ]
    }
}

impl Grandfather {
    pub fn new() -> Self {
        Grandfather { spec: GraphSpec::Grandfather }
    }

    fn encode(n: Node) -> VertexId {
        let a = n.address;
        if a.exp == 0 {
            VertexId::from(format!("({},{})", n.level, a.num))
        } else {
            VertexId::from(format!("({},{}/{})", n.level, a.num, 1i128 << a.exp))
        }
    }

    fn decode(v: &VertexId) -> Option<Node> {
        let inner = v.as_str().strip_prefix('(')?.strip_suffix(')')?;
        let (level, addr) = inner.split_once(',')?;
        let level: i64 = level.parse().ok()?;
        let address = match addr.split_once('/') {
            None => Dyadic { num: addr.parse().ok()?, exp: 0 },
            Some((p, q)) => {
                let q: i128 = q.parse().ok()?;
                if q < 2 || q.count_ones() != 1 {
                    return None;
                }
                Dyadic { num: p.parse().ok()?, exp: q.trailing_zeros() }
            }
        };
        if address.num < 0 || !address.lt(Dyadic::pow2(level)) || level.abs() > 100 {
            return None;
        }
        Some(Node { level, address })
    }

    fn node(v: &VertexId) -> Node {
        Grandfather::decode(v).unwrap_or_else(|| panic!("`{v}` is not a grandfather vertex"))
    }
}

impl Default for Grandfather {
    fn default() -> Self {
        Self::new()
    }
}

impl GraphOracle for Grandfather {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let n = Grandfather::node(v);
        let p = n.parent();
        let mut out = vec![Grandfather::encode(p), Grandfather::encode(p.parent())];
        for c in n.children() {
            out.push(Grandfather::encode(c));
            out.extend(c.children().map(Grandfather::encode));
        }
        out.sort_unstable();
        out
    }

    fn orbit_label(&self, _v: &VertexId) -> usize {
        0
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        vec![Grandfather::encode(Node { level: 0, address: Dyadic { num: 0, exp: 0 } })]
    }

    fn degree_bound(&self) -> Option<usize> {
        Some(8)
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        let v = VertexId::from(s);
        match Grandfather::decode(&v) {
            Some(n) if Grandfather::encode(Node { level: n.level, address: Dyadic::new(n.address.num, n.address.exp) }) == v => {
                Ok(v)
            }
            _ => Err(Error::Parse(format!("`{s}` is not a canonical grandfather vertex"))),
        }
    }

    fn edge_color(&self, from: &VertexId, to: &VertexId) -> u32 {
        let (a, b) = (Grandfather::node(from), Grandfather::node(to));
        match b.level - a.level {
            -1 => 1,
            1 => 2,
            -2 => 3,
            2 => 4,
            _ => 0,
        }
    }
}

impl Grandfather {
    /// The tree parent of `v` (one step towards the fixed end).
    pub fn parent_of(v: &VertexId) -> VertexId {
        Grandfather::encode(Grandfather::node(v).parent())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_structure() {
        let g = Grandfather::new();
        let root = g.orbit_representatives()[0].clone();
        assert_eq!(root.as_str(), "(0,0)");
        let n = g.neighbors(&root);
        assert_eq!(n.len(), 8);
        assert_eq!(Grandfather::parent_of(&root).as_str(), "(-1,0)");
        // children of (0,0) are (1,0) and (1,1); children of (1,1) are (2,1), (2,3)
        for s in ["(1,0)", "(1,1)", "(2,0)", "(2,1)", "(2,2)", "(2,3)", "(-1,0)", "(-2,0)"] {
            assert!(n.contains(&s.into()), "{s}");
        }
        assert_eq!(Grandfather::parent_of(&"(2,3)".into()).as_str(), "(1,1)");
    }

    #[test]
    fn fractional_addresses() {
        let g = Grandfather::new();
        // (-1,0) has children (0,0) and (0,1/2)
        let n = g.neighbors(&"(-1,0)".into());
        assert!(n.contains(&"(0,1/2)".into()));
        assert!(g.parse_vertex("(0,1/2)").is_ok());
        assert!(g.parse_vertex("(0,2/4)").is_err());
        assert!(g.parse_vertex("(0,1)").is_err());
        assert_eq!(Grandfather::parent_of(&"(0,1/2)".into()).as_str(), "(-1,0)");
        assert_eq!(g.edge_color(&"(0,1/2)".into(), &"(-1,0)".into()), 1);
        assert_eq!(g.edge_color(&"(-1,0)".into(), &"(1,1/2)".into()), 4);
    }
}

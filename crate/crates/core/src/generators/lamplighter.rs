use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::generators::GraphSpec;
use crate::oracle::{CayleyGroup, GraphOracle};
use crate::vertex::VertexId;

/// Cayley graph of `Z/2 wr Z` with generators {flip the lamp under the
/// lamplighter, step left, step right}; 3-regular.
///
/// Vertices print as `[l1,l2,...]@p`: the sorted positions of lit lamps and the
/// lamplighter position.
pub struct Lamplighter {
    spec: GraphSpec,
}

type State = (BTreeSet<i64>, i64);

impl Lamplighter {
    pub fn new() -> Self {
        Lamplighter { spec: GraphSpec::Lamplighter }
    }

    fn encode(lamps: &BTreeSet<i64>, pos: i64) -> VertexId {
        let body: Vec<String> = lamps.iter().map(i64::to_string).collect();
        VertexId::from(format!("[{}]@{}", body.join(","), pos))
    }

    fn decode(v: &VertexId) -> Option<State> {
        let (lamps, pos) = v.as_str().split_once('@')?;
        let inner = lamps.strip_prefix('[')?.strip_suffix(']')?;
        let lamps: BTreeSet<i64> = if inner.is_empty() {
            BTreeSet::new()
        } else {
            inner.split(',').map(|x| x.parse().ok()).collect::<Option<_>>()?
        };
        Some((lamps, pos.parse().ok()?))
    }

    fn state(v: &VertexId) -> State {
        Lamplighter::decode(v).unwrap_or_else(|| panic!("`{v}` is not a lamplighter vertex"))
    }
}

impl Default for Lamplighter {
    fn default() -> Self {
        Self::new()
    }
}

impl GraphOracle for Lamplighter {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let (mut lamps, pos) = Lamplighter::state(v);
        let mut out = vec![Lamplighter::encode(&lamps, pos - 1), Lamplighter::encode(&lamps, pos + 1)];
        if !lamps.remove(&pos) {
            lamps.insert(pos);
        }
        out.push(Lamplighter::encode(&lamps, pos));
        out.sort_unstable();
        out
    }

    fn orbit_label(&self, _v: &VertexId) -> usize {
        0
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        vec![self.identity()]
    }

    fn degree_bound(&self) -> Option<usize> {
        Some(3)
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        let v = VertexId::from(s);
        match Lamplighter::decode(&v) {
            Some((lamps, pos)) if Lamplighter::encode(&lamps, pos) == v => Ok(v),
            _ => Err(Error::Parse(format!("`{s}` is not a canonical lamplighter vertex"))),
        }
    }

    fn cayley(&self) -> Option<&dyn CayleyGroup> {
        Some(self)
    }
}

impl CayleyGroup for Lamplighter {
    fn identity(&self) -> VertexId {
        Lamplighter::encode(&BTreeSet::new(), 0)
    }

    fn generators(&self) -> Vec<VertexId> {
        self.neighbors(&self.identity())
    }

    /// `(f, p)(g, q) = (f + shift_p(g), p + q)`.
    fn multiply(&self, a: &VertexId, b: &VertexId) -> VertexId {
        let (mut f, p) = Lamplighter::state(a);
        let (g, q) = Lamplighter::state(b);
        for x in g {
            if !f.remove(&(x + p)) {
                f.insert(x + p);
            }
        }
        Lamplighter::encode(&f, p + q)
    }
}

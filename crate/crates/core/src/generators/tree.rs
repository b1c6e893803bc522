use crate::error::{Error, Result};
use crate::generators::GraphSpec;
use crate::oracle::{CayleyGroup, GraphOracle};
use crate::vertex::VertexId;

/// The d-regular tree as the Cayley graph of `Z/2 * ... * Z/2` (d factors).
///
/// Vertices are reduced words over the letters `a`, `b`, ... (no letter
/// repeated twice in a row); the identity prints as `1`.
pub struct RegularTree {
    d: usize,
    spec: GraphSpec,
}

const IDENTITY: &str = "1";

impl RegularTree {
    pub fn new(d: usize) -> Self {
        RegularTree { d, spec: GraphSpec::Tree { d } }
    }

    fn word<'a>(&self, v: &'a VertexId) -> &'a [u8] {
        let s = v.as_str();
        if s == IDENTITY {
            &[]
        } else {
            s.as_bytes()
        }
    }

    fn encode(word: &[u8]) -> VertexId {
        if word.is_empty() {
            VertexId::from(IDENTITY)
        } else {
            VertexId::from(String::from_utf8(word.to_vec()).expect("ascii letters"))
        }
    }

    fn letters(&self) -> impl Iterator<Item = u8> {
        (0..self.d as u8).map(|i| b'a' + i)
    }

    /// Right multiplication by a reduced word.
    fn append(mut word: Vec<u8>, suffix: &[u8]) -> Vec<u8> {
        for &g in suffix {
            if word.last() == Some(&g) {
                word.pop();
            } else {
                word.push(g);
            }
        }
        word
    }
}

impl GraphOracle for RegularTree {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let w = self.word(v);
        let mut out: Vec<VertexId> =
            self.letters().map(|g| RegularTree::encode(&RegularTree::append(w.to_vec(), &[g]))).collect();
        out.sort_unstable();
        out
    }

    fn orbit_label(&self, _v: &VertexId) -> usize {
        0
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        vec![VertexId::from(IDENTITY)]
    }

    fn degree_bound(&self) -> Option<usize> {
        Some(self.d)
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        if s == IDENTITY {
            return Ok(VertexId::from(s));
        }
        let max = b'a' + self.d as u8;
        let b = s.as_bytes();
        let ok = !b.is_empty() && b.iter().all(|&c| (b'a'..max).contains(&c)) && b.windows(2).all(|w| w[0] != w[1]);
        if ok {
            Ok(VertexId::from(s))
        } else {
            Err(Error::Parse(format!("`{s}` is not a reduced word for tree:d={}", self.d)))
        }
    }

    fn cayley(&self) -> Option<&dyn CayleyGroup> {
        Some(self)
    }
}

impl CayleyGroup for RegularTree {
    fn identity(&self) -> VertexId {
        VertexId::from(IDENTITY)
    }

    fn generators(&self) -> Vec<VertexId> {
        self.letters().map(|g| RegularTree::encode(&[g])).collect()
    }

    fn multiply(&self, a: &VertexId, b: &VertexId) -> VertexId {
        RegularTree::encode(&RegularTree::append(self.word(a).to_vec(), self.word(b)))
    }
}

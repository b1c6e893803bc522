use crate::error::{Error, Result};
use crate::generators::GraphSpec;
use crate::oracle::{CayleyGroup, GraphOracle};
use crate::vertex::VertexId;

/// Baumslag–Solitar group BS(1, m) realized as `Z[1/m] x| Z`, with
/// `(a, k)(b, l) = (a + m^k b, k + l)` and generators `s = (1, 0)`, `t = (0, 1)`.
///
/// The translation part is an exact rational `num / m^e` with `e` minimal;
/// vertices print as `(num,k)` or `(num/m^e,k)` with the denominator expanded.
pub struct BaumslagSolitar {
    m: i128,
    spec: GraphSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Elem {
    num: i128,
    exp: u32,
    k: i64,
}

impl BaumslagSolitar {
    pub fn new(m: u64) -> Self {
        BaumslagSolitar { m: m as i128, spec: GraphSpec::Bs { m } }
    }

    fn pow(&self, e: u32) -> i128 {
        self.m.checked_pow(e).expect("BS(1,m) coordinate overflow")
    }

    fn normalize(&self, mut num: i128, mut exp: u32, k: i64) -> Elem {
        while exp > 0 && num % self.m == 0 {
            num /= self.m;
            exp -= 1;
        }
        Elem { num, exp, k }
    }

    fn add(&self, a: (i128, u32), b: (i128, u32)) -> (i128, u32) {
        let exp = a.1.max(b.1);
        let num = a
            .0
            .checked_mul(self.pow(exp - a.1))
            .and_then(|x| b.0.checked_mul(self.pow(exp - b.1)).and_then(|y| x.checked_add(y)))
            .expect("BS(1,m) coordinate overflow");
        (num, exp)
    }

    /// `m^k * (num / m^exp)`.
    fn scale(&self, num: i128, exp: u32, k: i64) -> (i128, u32) {
        if k >= 0 {
            (num.checked_mul(self.pow(k as u32)).expect("BS(1,m) coordinate overflow"), exp)
        } else {
            (num, exp + k.unsigned_abs() as u32)
        }
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let shifted = self.scale(b.num, b.exp, a.k);
        let (num, exp) = self.add((a.num, a.exp), shifted);
        self.normalize(num, exp, a.k + b.k)
    }

    fn encode(&self, e: Elem) -> VertexId {
        if e.exp == 0 {
            VertexId::from(format!("({},{})", e.num, e.k))
        } else {
            VertexId::from(format!("({}/{},{})", e.num, self.pow(e.exp), e.k))
        }
    }

    fn decode(&self, v: &VertexId) -> Option<Elem> {
        let inner = v.as_str().strip_prefix('(')?.strip_suffix(')')?;
        let (a, k) = inner.split_once(',')?;
        let k: i64 = k.parse().ok()?;
        let (num, exp) = match a.split_once('/') {
            None => (a.parse::<i128>().ok()?, 0),
            Some((p, q)) => {
                let num: i128 = p.parse().ok()?;
                let mut q: i128 = q.parse().ok()?;
                let mut exp = 0;
                while q > 1 && q % self.m == 0 {
                    q /= self.m;
                    exp += 1;
                }
                if q != 1 || exp == 0 {
                    return None;
                }
                (num, exp)
            }
        };
        Some(Elem { num, exp, k })
    }

    fn elem(&self, v: &VertexId) -> Elem {
        self.decode(v).unwrap_or_else(|| panic!("`{v}` is not a BS(1,{}) vertex", self.m))
    }

    fn gens(&self) -> [Elem; 4] {
        [
            Elem { num: 1, exp: 0, k: 0 },
            Elem { num: -1, exp: 0, k: 0 },
            Elem { num: 0, exp: 0, k: 1 },
            Elem { num: 0, exp: 0, k: -1 },
        ]
    }
}

impl GraphOracle for BaumslagSolitar {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let g = self.elem(v);
        let mut out: Vec<VertexId> = self.gens().iter().map(|&s| self.encode(self.mul(g, s))).collect();
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
        Some(4)
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        let v = VertexId::from(s);
        match self.decode(&v) {
            Some(e) if self.encode(self.normalize(e.num, e.exp, e.k)) == v => Ok(v),
            _ => Err(Error::Parse(format!("`{s}` is not a canonical bs:m={} vertex", self.m))),
        }
    }

    fn cayley(&self) -> Option<&dyn CayleyGroup> {
        Some(self)
    }
}

impl CayleyGroup for BaumslagSolitar {
    fn identity(&self) -> VertexId {
        self.encode(Elem { num: 0, exp: 0, k: 0 })
    }

    fn generators(&self) -> Vec<VertexId> {
        self.neighbors(&self.identity())
    }

    fn multiply(&self, a: &VertexId, b: &VertexId) -> VertexId {
        self.encode(self.mul(self.elem(a), self.elem(b)))
    }
}

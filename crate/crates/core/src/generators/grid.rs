use crate::error::{Error, Result};
use crate::generators::GraphSpec;
use crate::oracle::{CayleyGroup, GraphOracle};
use crate::vertex::VertexId;

/// Z^d with generators ±e_i. Vertices print as `(x1,...,xd)`.
pub struct Grid {
    d: usize,
    spec: GraphSpec,
}

impl Grid {
    pub fn new(d: usize) -> Self {
        Grid { d, spec: GraphSpec::Grid { d } }
    }

    pub fn encode(coords: &[i64]) -> VertexId {
        let body: Vec<String> = coords.iter().map(i64::to_string).collect();
        VertexId::from(format!("({})", body.join(",")))
    }

    fn decode(&self, v: &VertexId) -> Option<Vec<i64>> {
        let inner = v.as_str().strip_prefix('(')?.strip_suffix(')')?;
        let coords: Vec<i64> = inner.split(',').map(|c| c.parse().ok()).collect::<Option<_>>()?;
        (coords.len() == self.d).then_some(coords)
    }

    fn coords(&self, v: &VertexId) -> Vec<i64> {
        self.decode(v).unwrap_or_else(|| panic!("`{v}` is not a grid:d={} vertex", self.d))
    }
}

impl GraphOracle for Grid {
    fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    fn neighbors(&self, v: &VertexId) -> Vec<VertexId> {
        let mut c = self.coords(v);
        let mut out = Vec::with_capacity(2 * self.d);
        for i in 0..self.d {
            for step in [-1, 1] {
                c[i] += step;
                out.push(Grid::encode(&c));
                c[i] -= step;
            }
        }
        out.sort_unstable();
        out
    }

    fn orbit_label(&self, _v: &VertexId) -> usize {
        0
    }

    fn orbit_representatives(&self) -> Vec<VertexId> {
        vec![Grid::encode(&vec![0; self.d])]
    }

    fn degree_bound(&self) -> Option<usize> {
        Some(2 * self.d)
    }

    fn parse_vertex(&self, s: &str) -> Result<VertexId> {
        let v = VertexId::from(s);
        match self.decode(&v) {
            Some(c) if Grid::encode(&c) == v => Ok(v),
            _ => Err(Error::Parse(format!("`{s}` is not a canonical grid:d={} vertex", self.d))),
        }
    }

    fn cayley(&self) -> Option<&dyn CayleyGroup> {
        Some(self)
    }

    fn box_set(&self, k: usize) -> Option<Vec<VertexId>> {
        let mut out = Vec::new();
        let mut c = vec![0i64; self.d];
        if k == 0 {
            return Some(out);
        }
        loop {
            out.push(Grid::encode(&c));
            let mut i = 0;
            while i < self.d {
                c[i] += 1;
                if (c[i] as usize) < k {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i == self.d {
                break;
            }
        }
        out.sort_unstable();
        Some(out)
    }
}

impl CayleyGroup for Grid {
    fn identity(&self) -> VertexId {
        Grid::encode(&vec![0; self.d])
    }

    fn generators(&self) -> Vec<VertexId> {
        self.neighbors(&self.identity())
    }

    fn multiply(&self, a: &VertexId, b: &VertexId) -> VertexId {
        let (x, y) = (self.coords(a), self.coords(b));
        Grid::encode(&x.iter().zip(&y).map(|(p, q)| p + q).collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_neighbors() {
        let g = Grid::new(2);
        let n: Vec<String> = g.neighbors(&"(0,0)".into()).iter().map(|v| v.to_string()).collect();
        assert_eq!(n, ["(-1,0)", "(0,-1)", "(0,1)", "(1,0)"]);
    }

    #[test]
    fn parse_is_canonical() {
        let g = Grid::new(2);
        assert!(g.parse_vertex("(3,-4)").is_ok());
        assert!(g.parse_vertex("(03,4)").is_err());
        assert!(g.parse_vertex("(+3,4)").is_err());
        assert!(g.parse_vertex("(1,2,3)").is_err());
        assert!(g.parse_vertex("1,2").is_err());
    }

    #[test]
    fn boxes() {
        let g = Grid::new(2);
        assert_eq!(g.box_set(3).unwrap().len(), 9);
        assert_eq!(Grid::new(3).box_set(2).unwrap().len(), 8);
    }
}

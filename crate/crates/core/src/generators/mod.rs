//! Catalog of graph oracles and graph transforms.
//!
//! Specs are written in a small string language:
//!
//! ```text
//! spec := "grid:d=" INT | "tree:d=" INT | "lamplighter" | "bs:m=" INT | "grandfather"
//!       | "power(" spec ",r=" INT ")"
//!       | "union(" spec ("," spec)+ ")"
//!       | "subdiv(" spec ")"
//!       | "product(" spec ",d=" INT ")"
//!       | "reduce(" spec ",orbit=" INT ")"
//! INT  := "0" | [1-9][0-9]*
//! ```
//!
//! No whitespace is allowed inside a spec. [`GraphSpec`]'s `Display` is the
//! canonical printer, and `parse(print(s)) == s` for every spec.

mod bs;
mod grandfather;
mod grid;
mod lamplighter;
mod transforms;
mod tree;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::vertex::split_top_level;

pub use bs::BaumslagSolitar;
pub use grandfather::Grandfather;
pub use grid::Grid;
pub use lamplighter::Lamplighter;
pub use transforms::{DisjointUnion, PowerGraph, ProductWithTree, Subdivision};
pub use tree::RegularTree;

/// Name of a catalog family or transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Grid,
    Tree,
    BiregularSubdivision,
    Lamplighter,
    Bs,
    Grandfather,
    ProductWithTree,
    Power,
    DisjointUnion,
    Reduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    /// Cayley graph of Z^d with the standard generators.
    Grid { d: usize },
    /// d-regular tree, as the Cayley graph of the free product of d copies of Z/2.
    Tree { d: usize },
    /// Z/2 wr Z with generators {lamp flip, step left, step right}.
    Lamplighter,
    /// BS(1, m) = Z[1/m] x| Z with generators {s, t}.
    Bs { m: u64 },
    /// 3-regular tree with a fixed end, plus grandparent edges.
    Grandfather,
    Power { base: Box<GraphSpec>, r: usize },
    Union(Vec<GraphSpec>),
    Subdivision(Box<GraphSpec>),
    /// Cartesian product with the d-regular tree.
    ProductWithTree { base: Box<GraphSpec>, d: usize },
    /// One orbit of a quasitransitive graph with `k` orbits, edges at distance `1..=2k`.
    Reduced { base: Box<GraphSpec>, orbit: usize },
}

impl GraphSpec {
    pub fn family(&self) -> Family {
        match self {
            GraphSpec::Grid { .. } => Family::Grid,
            GraphSpec::Tree { .. } => Family::Tree,
            GraphSpec::Lamplighter => Family::Lamplighter,
            GraphSpec::Bs { .. } => Family::Bs,
            GraphSpec::Grandfather => Family::Grandfather,
            GraphSpec::Power { .. } => Family::Power,
            GraphSpec::Union(_) => Family::DisjointUnion,
            GraphSpec::Subdivision(_) => Family::BiregularSubdivision,
            GraphSpec::ProductWithTree { .. } => Family::ProductWithTree,
            GraphSpec::Reduced { .. } => Family::Reduced,
        }
    }

    /// Checks per-family parameter constraints and transform arity.
    pub fn validate(&self) -> Result<()> {
        match self {
            GraphSpec::Grid { d } if *d < 1 => Err(Error::InvalidSpec("grid needs d >= 1".into())),
            GraphSpec::Tree { d } if *d < 2 => Err(Error::InvalidSpec("tree needs d >= 2".into())),
            GraphSpec::Tree { d } if *d > 26 => Err(Error::InvalidSpec("tree supports d <= 26".into())),
            GraphSpec::Bs { m } if *m < 2 => Err(Error::InvalidSpec("bs needs m >= 2".into())),
            GraphSpec::Bs { m } if *m > 1 << 20 => Err(Error::InvalidSpec("bs supports m <= 2^20".into())),
            GraphSpec::Power { r, .. } if *r < 1 => Err(Error::InvalidSpec("power needs r >= 1".into())),
            GraphSpec::Power { base, .. } => base.validate(),
            GraphSpec::Union(ops) if ops.len() < 2 => {
                Err(Error::InvalidSpec("union needs at least 2 operands".into()))
            }
            GraphSpec::Union(ops) => ops.iter().try_for_each(GraphSpec::validate),
            GraphSpec::Subdivision(base) => base.validate(),
            GraphSpec::ProductWithTree { d, .. } if *d < 2 => {
                Err(Error::InvalidSpec("product tree degree needs d >= 2".into()))
            }
            GraphSpec::ProductWithTree { base, .. } => base.validate(),
            GraphSpec::Reduced { base, .. } => base.validate(),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Grid { d } => write!(f, "grid:d={d}"),
            GraphSpec::Tree { d } => write!(f, "tree:d={d}"),
            GraphSpec::Lamplighter => f.write_str("lamplighter"),
            GraphSpec::Bs { m } => write!(f, "bs:m={m}"),
            GraphSpec::Grandfather => f.write_str("grandfather"),
            GraphSpec::Power { base, r } => write!(f, "power({base},r={r})"),
            GraphSpec::Union(ops) => {
                f.write_str("union(")?;
                for (i, op) in ops.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{op}")?;
                }
                f.write_str(")")
            }
            GraphSpec::Subdivision(base) => write!(f, "subdiv({base})"),
            GraphSpec::ProductWithTree { base, d } => write!(f, "product({base},d={d})"),
            GraphSpec::Reduced { base, orbit } => write!(f, "reduce({base},orbit={orbit})"),
        }
    }
}

fn parse_uint(s: &str) -> Result<u64> {
    let canonical = s == "0" || (!s.is_empty() && !s.starts_with('0') && s.bytes().all(|b| b.is_ascii_digit()));
    if !canonical {
        return Err(Error::Parse(format!("expected a non-negative integer, found `{s}`")));
    }
    s.parse().map_err(|_| Error::Parse(format!("integer out of range: `{s}`")))
}

fn parse_param(s: &str, key: &str) -> Result<u64> {
    match s.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')) {
        Some(v) => parse_uint(v),
        None => Err(Error::Parse(format!("expected `{key}=<int>`, found `{s}`"))),
    }
}

fn to_usize(v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Parse(format!("integer out of range: {v}")))
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some((head, rest)) = s.split_once('(') {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{s}`")))?;
            let parts = split_top_level(inner, ',');
            return match head {
                "power" => match parts.as_slice() {
                    [base, r] => Ok(GraphSpec::Power {
                        base: Box::new(base.parse()?),
                        r: to_usize(parse_param(r, "r")?)?,
                    }),
                    _ => Err(Error::Parse(format!("power takes `spec,r=<int>`: `{s}`"))),
                },
                "union" => {
                    if parts.len() < 2 {
                        return Err(Error::Parse(format!("union takes at least two operands: `{s}`")));
                    }
                    Ok(GraphSpec::Union(parts.iter().map(|p| p.parse()).collect::<Result<_>>()?))
                }
                "subdiv" => match parts.as_slice() {
                    [base] => Ok(GraphSpec::Subdivision(Box::new(base.parse()?))),
                    _ => Err(Error::Parse(format!("subdiv takes one operand: `{s}`"))),
                },
                "product" => match parts.as_slice() {
                    [base, d] => Ok(GraphSpec::ProductWithTree {
                        base: Box::new(base.parse()?),
                        d: to_usize(parse_param(d, "d")?)?,
                    }),
                    _ => Err(Error::Parse(format!("product takes `spec,d=<int>`: `{s}`"))),
                },
                "reduce" => match parts.as_slice() {
                    [base, o] => Ok(GraphSpec::Reduced {
                        base: Box::new(base.parse()?),
                        orbit: to_usize(parse_param(o, "orbit")?)?,
                    }),
                    _ => Err(Error::Parse(format!("reduce takes `spec,orbit=<int>`: `{s}`"))),
                },
                _ => Err(Error::Parse(format!("unknown transform `{head}`"))),
            };
        }
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        match (name, params) {
            ("grid", Some(p)) => Ok(GraphSpec::Grid { d: to_usize(parse_param(p, "d")?)? }),
            ("tree", Some(p)) => Ok(GraphSpec::Tree { d: to_usize(parse_param(p, "d")?)? }),
            ("bs", Some(p)) => Ok(GraphSpec::Bs { m: parse_param(p, "m")? }),
            ("lamplighter", None) => Ok(GraphSpec::Lamplighter),
            ("grandfather", None) => Ok(GraphSpec::Grandfather),
            ("grid" | "tree" | "bs", None) => Err(Error::Parse(format!("`{name}` needs a parameter"))),
            ("lamplighter" | "grandfather", Some(_)) => Err(Error::Parse(format!("`{name}` takes no parameters"))),
            _ => Err(Error::Parse(format!("unknown graph family `{name}`"))),
        }
    }
}

/// Builds the oracle for a validated spec.
pub fn make_oracle(spec: &GraphSpec) -> Result<Oracle> {
    spec.validate()?;
    Ok(match spec {
        GraphSpec::Grid { d } => Arc::new(Grid::new(*d)),
        GraphSpec::Tree { d } => Arc::new(RegularTree::new(*d)),
        GraphSpec::Lamplighter => Arc::new(Lamplighter::new()),
        GraphSpec::Bs { m } => Arc::new(BaumslagSolitar::new(*m)),
        GraphSpec::Grandfather => Arc::new(Grandfather::new()),
        GraphSpec::Power { base, r } => Arc::new(PowerGraph::new(make_oracle(base)?, *r)?),
        GraphSpec::Union(ops) => {
            Arc::new(DisjointUnion::new(ops.iter().map(make_oracle).collect::<Result<Vec<_>>>()?)?)
        }
        GraphSpec::Subdivision(base) => Arc::new(Subdivision::new(make_oracle(base)?)?),
        GraphSpec::ProductWithTree { base, d } => Arc::new(ProductWithTree::new(make_oracle(base)?, *d)),
        GraphSpec::Reduced { base, orbit } => Arc::new(crate::bridge::ReducedGraph::new(make_oracle(base)?, *orbit)?),
    })
}

/// Parses and builds in one step.
pub fn oracle_from_str(s: &str) -> Result<Oracle> {
    make_oracle(&s.parse()?)
}

/// `u ~ v` iff `1 <= d(u, v) <= r` in the base graph.
pub fn power_graph(spec: &GraphSpec, r: usize) -> Result<Oracle> {
    make_oracle(&GraphSpec::Power { base: Box::new(spec.clone()), r })
}

pub fn disjoint_union(specs: &[GraphSpec]) -> Result<Oracle> {
    make_oracle(&GraphSpec::Union(specs.to_vec()))
}

pub fn subdivision(spec: &GraphSpec) -> Result<Oracle> {
    make_oracle(&GraphSpec::Subdivision(Box::new(spec.clone())))
}

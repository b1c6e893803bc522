use isoperimetrix::bridge::{
    folner_star_ratio, measure, modular_ratio, quasitransitive_reduce, right_translate_power, word_ball_check, CosetSet,
    WordBall,
};
use isoperimetrix::graph_space::{graph_distance, profile_stability_check, Stability};
use isoperimetrix::isoperimetry::{iso_profile_with, IsoProfile, ProfileOptions, Pruning};
use isoperimetrix::{ball, format_rational, oracle_from_str, Error, GraphOracle, GraphSpec, Result, VertexSet};
use serde_json::{json, Value};

pub fn profile(graph: &str, n: usize, prune: bool) -> Result<IsoProfile> {
    let oracle = oracle_from_str(graph)?;
    let pruning = if prune { Pruning::On } else { Pruning::Off };
    iso_profile_with(oracle.as_ref(), n, ProfileOptions { pruning })
}

fn distance_json(g1: &dyn GraphOracle, g2: &dyn GraphOracle, n: usize) -> Result<Value> {
    let d = graph_distance(g1, g2, n)?;
    let mut out = json!({"distance": d.distance.to_exact_string(), "exact": d.exact});
    if let Some(m) = d.first_difference_radius {
        out["first_difference_radius"] = json!(m);
    }
    Ok(out)
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput(format!("{what} must be at least 1")));
    }
    Ok(())
}

pub fn gdist(graph1: &str, graph2: &str, n: usize) -> Result<Value> {
    positive(n, "--n")?;
    let (g1, g2) = (oracle_from_str(graph1)?, oracle_from_str(graph2)?);
    distance_json(g1.as_ref(), g2.as_ref(), n)
}

pub fn dmatrix(graphs: &[String], n: usize) -> Result<Value> {
    positive(n, "--n")?;
    let oracles = graphs.iter().map(|g| oracle_from_str(g)).collect::<Result<Vec<_>>>()?;
    let mut matrix = Vec::new();
    for a in &oracles {
        let mut row = Vec::new();
        for b in &oracles {
            row.push(graph_distance(a.as_ref(), b.as_ref(), n)?.distance.to_exact_string());
        }
        matrix.push(row);
    }
    let specs: Vec<String> = oracles.iter().map(|o| o.spec().to_string()).collect();
    Ok(json!({"graphs": specs, "n_max": n, "matrix": matrix}))
}

fn parse_set(oracle: &dyn GraphOracle, spec: &str) -> Result<VertexSet> {
    let root = oracle.orbit_representatives()[0].clone();
    if let Some(k) = spec.strip_prefix("ball:") {
        let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad ball radius in `{spec}`")))?;
        return Ok(ball(oracle, &root, k)?.vertices.into_iter().collect());
    }
    if let Some(list) = spec.strip_prefix("list:") {
        return list.split(';').filter(|s| !s.is_empty()).map(|s| oracle.parse_vertex(s)).collect();
    }
    Err(Error::Parse(format!("set must be `ball:K` or `list:V1;V2;...`, got `{spec}`")))
}

pub fn bridge(graph: &str, set: &str, r: usize) -> Result<Value> {
    let oracle = oracle_from_str(graph)?;
    let x = parse_set(oracle.as_ref(), set)?;
    let root = oracle.orbit_representatives()[0].clone();
    let u = CosetSet::new(oracle.as_ref(), root.clone(), x)?;
    let grown = right_translate_power(oracle.as_ref(), &u, r)?;
    let ratio = folner_star_ratio(oracle.as_ref(), &u, r)?;
    Ok(json!({
        "graph": oracle.spec().to_string(),
        "root": root,
        "X": u.vertex_set().to_vec(),
        "r": r,
        "measure_before": measure(&u),
        "measure_after": measure(&grown),
        "folner_star_ratio": format_rational(&ratio),
    }))
}

pub fn reduce(graph: &str, orbit: usize) -> Result<Value> {
    let oracle = oracle_from_str(graph)?;
    let result = quasitransitive_reduce(oracle, orbit)?;
    let rep = result.reduced.orbit_representatives()[0].clone();
    let samples: Vec<Value> = result
        .distortion_window
        .iter()
        .map(|(v, d, r)| json!({"vertex": v, "d_original": d, "d_reduced": r}))
        .collect();
    Ok(json!({
        "graph": graph.parse::<GraphSpec>()?.to_string(),
        "reduced": result.reduced.spec().to_string(),
        "orbit_index": result.orbit_index,
        "n_orbits": result.n_orbits,
        "representative": rep,
        "representative_degree": result.reduced.neighbors(&rep).len(),
        "window_connected": result.window_connected(),
        "distortion_window": samples,
    }))
}

pub fn unimod(graph: &str, x: Option<&str>, y: &str, radius: usize) -> Result<Value> {
    let oracle = oracle_from_str(graph)?;
    let x = match x {
        Some(s) => oracle.parse_vertex(s)?,
        None => oracle.orbit_representatives()[0].clone(),
    };
    let y = oracle.parse_vertex(y)?;
    let m = modular_ratio(oracle.as_ref(), &x, &y, radius)?;
    Ok(json!({
        "x": m.x,
        "y": m.y,
        "radius": m.radius,
        "m_xy": m.m_xy,
        "m_yx": m.m_yx,
        "ratio": format_rational(&m.ratio),
    }))
}

pub fn wordball(graph: &str, n: usize) -> Result<Value> {
    let oracle = oracle_from_str(graph)?;
    Ok(match word_ball_check(oracle.as_ref(), n)? {
        WordBall::Verified => json!({"graph": oracle.spec().to_string(), "n": n, "verdict": "verified"}),
        WordBall::Violated(g) => {
            json!({"graph": oracle.spec().to_string(), "n": n, "verdict": "violated", "witness": g})
        }
    })
}

const CATALOG: &[(&str, &str)] = &[
    ("grid:d=2", "Cayley graph of Z^d, vertices (x1,...,xd)"),
    ("tree:d=3", "d-regular tree as free product of d copies of Z/2, vertices are reduced words, root 1"),
    ("lamplighter", "Z/2 wr Z with generators {flip, step left, step right}, vertices [lit lamps]@position"),
    ("bs:m=2", "BS(1,m) = Z[1/m] x| Z, vertices (m-adic rational, height)"),
    ("grandfather", "3-regular tree with a fixed end plus grandparent edges, vertices (level,address)"),
    ("power(tree:d=3,r=2)", "same vertices, edges between distinct vertices at distance <= r"),
    ("union(tree:d=3,grid:d=2)", "disjoint union, vertices i:v"),
    ("subdiv(tree:d=3)", "every edge subdivided once, vertices o(v) and m(u|v)"),
    ("product(grid:d=1,d=3)", "Cartesian product with the d-regular tree, vertices p(g|t)"),
    ("reduce(subdiv(tree:d=3),orbit=0)", "one orbit, edges at original distance 1..=2k for k orbits"),
];

pub fn catalog() -> Result<Value> {
    let mut entries = Vec::new();
    for (spec, about) in CATALOG {
        let oracle = oracle_from_str(spec)?;
        let reps = oracle.orbit_representatives();
        entries.push(json!({
            "spec": spec,
            "description": about,
            "orbits": reps.len(),
            "representatives": reps,
            "degree_bound": oracle.degree_bound(),
            "cayley": oracle.cayley().is_some(),
        }));
    }
    Ok(json!({"entries": entries}))
}

pub fn stability(graph1: &str, graph2: &str, n: usize) -> Result<Value> {
    positive(n, "--n")?;
    let (g1, g2) = (oracle_from_str(graph1)?, oracle_from_str(graph2)?);
    Ok(match profile_stability_check(g1.as_ref(), g2.as_ref(), n)? {
        Stability::Verified { j } => json!({"n": n, "radius": 2 * n + 1, "verdict": "verified", "j": format_rational(&j)}),
        Stability::Inapplicable { radius } => json!({"n": n, "radius": radius, "verdict": "inapplicable"}),
        Stability::Violated { j1, j2 } => json!({
            "n": n,
            "radius": 2 * n + 1,
            "verdict": "violated",
            "j1": format_rational(&j1),
            "j2": format_rational(&j2),
        }),
    })
}

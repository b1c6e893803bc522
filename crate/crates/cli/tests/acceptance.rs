//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p isoperimetrix-cli --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use isoperimetrix::bridge::{
    measure, modular_ratio, quasitransitive_reduce, right_translate_power, CosetSet,
};
use isoperimetrix::generators::DisjointUnion;
use isoperimetrix::graph_space::{ball_isomorphic, graph_distance, profile_stability_check, verify_certificate, Stability};
use isoperimetrix::isoperimetry::{folner_witness, iso_profile, Shape};
use isoperimetrix::{ball, exterior_boundary, format_rational, oracle_from_str, Oracle, Rational, VertexId, VertexSet};
use isoperimetrix_testkit::brute::brute_profile;
use isoperimetrix_testkit::sample::{bfs, closure, random_set};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Transitive catalog entries.
const CATALOG: &[&str] =
    &["grid:d=1", "grid:d=2", "grid:d=3", "tree:d=2", "tree:d=3", "tree:d=4", "lamplighter", "bs:m=2", "grandfather"];

type Outcome = Result<String, String>;

fn oracle(s: &str) -> Oracle {
    oracle_from_str(s).unwrap()
}

fn q(p: u64, d: u64) -> Rational {
    Rational::new(p, d)
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    check(start.elapsed() <= limit, || format!("took {:.1?}, budget {:?}", start.elapsed(), limit))
}

fn profile_matches_brute_force() -> Outcome {
    let start = Instant::now();
    for s in ["grid:d=2", "tree:d=3", "tree:d=4", "lamplighter"] {
        let o = oracle(s);
        let p = iso_profile(o.as_ref(), 6).map_err(|e| e.to_string())?;
        let reference = brute_profile(o.as_ref(), 6);
        for n in 1..=6 {
            let got = p.j(n).unwrap();
            check(got == reference[n - 1], || {
                format!("{s} n={n}: profile {} vs brute force {}", format_rational(&got), format_rational(&reference[n - 1]))
            })?;
        }
    }
    within(Duration::from_secs(120), start)?;
    Ok(format!("iso_profile equals the unfiltered brute force for n <= 6 on 4 graphs ({:.1?})", start.elapsed()))
}

fn golden_values() -> Outcome {
    let grid = oracle("grid:d=2");
    let tree = oracle("tree:d=3");
    let grid_ref = brute_profile(grid.as_ref(), 9);
    let tree_ref = brute_profile(tree.as_ref(), 8);
    let grid_lib = iso_profile(grid.as_ref(), 9).map_err(|e| e.to_string())?;
    let tree_lib = iso_profile(tree.as_ref(), 8).map_err(|e| e.to_string())?;

    let mut goldens: Vec<(String, usize, Rational, Rational, Rational)> = Vec::new();
    for (n, want) in [(1, q(4, 1)), (4, q(2, 1)), (9, q(4, 3))] {
        goldens.push(("grid(2)".into(), n, want, grid_ref[n - 1], grid_lib.j(n).unwrap()));
    }
    for n in 1..=8u64 {
        let k = n as usize;
        goldens.push(("tree(3)".into(), k, q(n + 2, n), tree_ref[k - 1], tree_lib.j(k).unwrap()));
    }
    let failures: Vec<String> = goldens
        .iter()
        .filter(|(_, _, want, oracle, lib)| want != oracle || want != lib)
        .map(|(g, n, want, oracle, lib)| {
            format!(
                "j_{g}({n}) golden {} but brute force gives {} and iso_profile gives {}",
                format_rational(want),
                format_rational(oracle),
                format_rational(lib)
            )
        })
        .collect();
    if failures.is_empty() {
        Ok(format!("{} golden values reproduced by brute force and iso_profile", goldens.len()))
    } else {
        Err(failures.join("; "))
    }
}

fn bridge_identity() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    for s in CATALOG {
        let o = oracle(s);
        let rep = o.orbit_representatives()[0].clone();
        for _ in 0..100 {
            let size = rng.gen_range(1..=12);
            let r = rng.gen_range(0..=3);
            let x = random_set(o.as_ref(), &rep, 3, size, &mut rng);
            let u = CosetSet::new(o.as_ref(), rep.clone(), x.clone()).map_err(|e| e.to_string())?;
            let grown = right_translate_power(o.as_ref(), &u, r).map_err(|e| e.to_string())?;
            let expected = closure(o.as_ref(), &x, r).len() as u64;
            check(measure(&grown) == expected, || format!("{s}: measure {} vs |[X]_{r}| = {expected}", measure(&grown)))?;
            checked += 1;
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("measure(U S^r) = |[X]_r| on {checked} seeded pairs over {} graphs ({:.1?})", CATALOG.len(), start.elapsed()))
}

fn metric_facts() -> Outcome {
    let d = graph_distance(oracle("tree:d=3").as_ref(), oracle("tree:d=4").as_ref(), 5).map_err(|e| e.to_string())?;
    check(d.exact && d.distance.to_exact_string() == "1", || format!("d(tree3, tree4) = {:?}", d))?;
    let d = graph_distance(oracle("tree:d=4").as_ref(), oracle("grid:d=2").as_ref(), 5).map_err(|e| e.to_string())?;
    check(d.exact && d.distance.to_exact_string() == "1/2", || format!("d(tree4, grid2) = {:?}", d))?;

    let oracles: Vec<Oracle> = CATALOG.iter().map(|s| oracle(s)).collect();
    let mut pairs = 0;
    for i in 0..oracles.len() {
        for j in i..oracles.len() {
            let (a, b) = (oracles[i].as_ref(), oracles[j].as_ref());
            let mut previous = true;
            for r in 0..=5 {
                let cert = ball_isomorphic(a, b, r).map_err(|e| e.to_string())?;
                check(verify_certificate(a, b, &cert).map_err(|e| e.to_string())?, || {
                    format!("{} vs {} radius {r}: certificate does not verify", CATALOG[i], CATALOG[j])
                })?;
                check(previous || !cert.is_isomorphic(), || {
                    format!("{} vs {}: isomorphic at radius {r} but not below", CATALOG[i], CATALOG[j])
                })?;
                previous = cert.is_isomorphic();
            }
            pairs += 1;
        }
    }
    Ok(format!("d(T3,T4) = 1, d(T4,Z^2) = 1/2; nesting holds to radius 5 on {pairs} pairs"))
}

fn profile_stability() -> Outcome {
    let oracles: Vec<Oracle> = CATALOG.iter().map(|s| oracle(s)).collect();
    let (mut verified, mut inapplicable) = (0, 0);
    for n in 1..=2 {
        for i in 0..oracles.len() {
            for j in i..oracles.len() {
                match profile_stability_check(oracles[i].as_ref(), oracles[j].as_ref(), n).map_err(|e| e.to_string())? {
                    Stability::Verified { .. } => verified += 1,
                    Stability::Inapplicable { .. } => inapplicable += 1,
                    Stability::Violated { j1, j2 } => {
                        return Err(format!(
                            "{} vs {} at n={n}: {} != {}",
                            CATALOG[i],
                            CATALOG[j],
                            format_rational(&j1),
                            format_rational(&j2)
                        ))
                    }
                }
            }
        }
    }
    Ok(format!("no violations: {verified} verified, {inapplicable} inapplicable (n <= 2)"))
}

fn unimodularity() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for s in ["grid:d=2", "grid:d=3", "tree:d=3", "tree:d=4", "lamplighter"] {
        let o = oracle(s);
        let rep = o.orbit_representatives()[0].clone();
        let mut xs: Vec<VertexId> = bfs(o.as_ref(), &rep, 1).into_keys().collect();
        xs.sort();
        for x in &xs {
            let mut ys: Vec<(VertexId, usize)> = bfs(o.as_ref(), x, 2).into_iter().collect();
            ys.sort();
            for (y, d) in ys {
                for radius in d.max(1)..=3 {
                    let m = modular_ratio(o.as_ref(), x, &y, radius).map_err(|e| e.to_string())?;
                    check(m.ratio == q(1, 1), || {
                        format!("{s}: ({x}, {y}) radius {radius} gives {}/{}", m.m_xy, m.m_yx)
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    let gf = oracle("grandfather");
    let rep = gf.orbit_representatives()[0].clone();
    let mut ys: Vec<(VertexId, usize)> = bfs(gf.as_ref(), &rep, 2).into_iter().filter(|(_, d)| *d > 0).collect();
    ys.sort();
    let mut witness = None;
    'search: for radius in 1..=3 {
        for (y, d) in &ys {
            if *d > radius {
                continue;
            }
            let m = modular_ratio(gf.as_ref(), &rep, y, radius).map_err(|e| e.to_string())?;
            if m.ratio == q(2, 1) {
                witness = Some(format!("({rep}, {y}) at radius {radius}: {}/{}", m.m_xy, m.m_yx));
                break 'search;
            }
        }
    }
    within(Duration::from_secs(60), start)?;
    let witness = witness.ok_or("no grandfather pair with ratio 2 at radius <= 3")?;
    Ok(format!("ratio 1 on {pairs} (pair, radius) cases; grandfather {witness} ({:.1?})", start.elapsed()))
}

fn reduction_lemma() -> Outcome {
    let red = quasitransitive_reduce(oracle("subdiv(tree:d=3)"), 0).map_err(|e| e.to_string())?;
    let rep = red.reduced.orbit_representatives()[0].clone();
    let window = ball(red.reduced.as_ref(), &rep, 3).map_err(|e| e.to_string())?;
    for v in &window.vertices {
        let deg = red.reduced.neighbors(v).len();
        check(deg == 9, || format!("reduced degree {deg} at {v}"))?;
    }
    check(red.window_connected(), || "reduced graph disconnected on the window".into())?;
    for (v, d, r) in &red.distortion_window {
        let r = r.ok_or_else(|| format!("{v} unreached"))?;
        check(r <= *d && *d <= 4 * r + 4, || format!("{v}: d_original {d}, d_reduced {r}"))?;
    }
    Ok(format!(
        "9-regular on a radius-3 window, connected, {} distortion samples within bounds",
        red.distortion_window.len()
    ))
}

fn folner_witnesses() -> Outcome {
    let grid = oracle("grid:d=2");
    let found = folner_witness(grid.as_ref(), q(1, 2), Shape::MetricBalls, 10).map_err(|e| e.to_string())?;
    let (k, _, ratio) = found.found.ok_or("no grid(2) witness")?;
    check(k == 4 && ratio == q(20, 41), || format!("grid(2) witness at k={k} ratio {}", format_rational(&ratio)))?;

    let tree = oracle("tree:d=3");
    let trace = folner_witness(tree.as_ref(), q(1, 2), Shape::MetricBalls, 8).map_err(|e| e.to_string())?;
    check(trace.found.is_none() && trace.trace.len() == 8, || "tree(3) produced a witness".into())?;
    for (k, r) in &trace.trace {
        check(*r >= q(1, 1), || format!("tree(3) ball ratio {} at k={k}", format_rational(r)))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let unions = [oracle("union(grid:d=2,tree:d=3)"), oracle("union(tree:d=3,tree:d=4)")];
    for i in 0..50 {
        let u = &unions[i % 2];
        let reps = u.orbit_representatives();
        let a = random_set(u.as_ref(), &reps[0], 3, rng.gen_range(0..10), &mut rng);
        let b = random_set(u.as_ref(), &reps[1], 3, rng.gen_range(1..10), &mut rng);
        let f: VertexSet = a.iter().chain(b.iter()).cloned().collect();
        let whole = q(exterior_boundary(u.as_ref(), &f).len() as u64, f.len() as u64);
        let mut parts = [Vec::new(), Vec::new()];
        for x in f.iter() {
            parts[DisjointUnion::untag(x).unwrap().0].push(x.clone());
        }
        let best = parts
            .iter()
            .filter(|p| !p.is_empty())
            .map(|p| {
                let p: VertexSet = p.iter().cloned().collect();
                q(exterior_boundary(u.as_ref(), &p).len() as u64, p.len() as u64)
            })
            .min()
            .unwrap();
        check(best <= whole, || format!("set {i}: min part ratio {} > {}", format_rational(&best), format_rational(&whole)))?;
    }
    Ok("grid(2) witness k=4 ratio 20/41; tree(3) ratios >= 1 for k <= 8; pigeonhole on 50 seeded sets".into())
}

fn determinism() -> Outcome {
    let mut runs = 0;
    for case in common::CASES {
        let golden = std::fs::read_to_string(common::golden_path(case.name)).map_err(|e| format!("{}: {e}", case.name))?;
        for flags in common::variants(case) {
            let (code, out) = common::run(case, &flags);
            check(code == case.exit, || format!("{} {:?}: exit {code}", case.name, flags))?;
            check(common::normalize(&out) == golden, || format!("{} {:?}: output differs from golden", case.name, flags))?;
            runs += 1;
        }
    }
    Ok(format!("{} golden cases byte-identical over {runs} runs (--jobs=1/8, prune on/off)", common::CASES.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("profile correctness", profile_matches_brute_force),
        ("golden values", golden_values),
        ("bridge identity", bridge_identity),
        ("metric facts", metric_facts),
        ("profile stability", profile_stability),
        ("unimodularity diagnostics", unimodularity),
        ("reduction lemma instance", reduction_lemma),
        ("folner witnesses", folner_witnesses),
        ("determinism", determinism),
    ];
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if only.is_some_and(|k| k != i + 1) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} [{secs:.1}s] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{secs:.1}s] {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}

use isoperimetrix::bridge::*;
use isoperimetrix::generators::{power_graph, Grandfather};
use isoperimetrix::graph_space::ball_isomorphic;
use isoperimetrix::isoperimetry::r_boundary_ratio;
use isoperimetrix::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use isoperimetrix_testkit::sample::{closure, random_set};

fn oracle(s: &str) -> Oracle {
    oracle_from_str(s).unwrap()
}

fn v(s: &str) -> VertexId {
    VertexId::from(s)
}

fn q(p: u64, d: u64) -> Rational {
    Rational::new(p, d)
}

fn coset(o: &dyn GraphOracle, items: Vec<VertexId>) -> CosetSet {
    let root = o.orbit_representatives()[0].clone();
    CosetSet::new(o, root, items.into_iter().collect()).unwrap()
}

fn ball_coset(o: &dyn GraphOracle, k: usize) -> CosetSet {
    let root = o.orbit_representatives()[0].clone();
    coset(o, ball(o, &root, k).unwrap().vertices)
}

#[test]
fn measure_examples() {
    let g = oracle("grid:d=2");
    assert_eq!(measure(&coset(g.as_ref(), vec![v("(0,0)")])), 1);
    assert_eq!(measure(&ball_coset(g.as_ref(), 1)), 5);
    let t = oracle("tree:d=3");
    assert_eq!(measure(&ball_coset(t.as_ref(), 2)), 10);
    let err = CosetSet::new(g.as_ref(), v("(0,0)"), VertexSet::new()).unwrap_err();
    assert_eq!(err.code(), "empty-set-error");
}

#[test]
fn right_translation_examples() {
    let g = oracle("grid:d=2");
    let o = coset(g.as_ref(), vec![v("(0,0)")]);
    assert_eq!(right_translate_power(g.as_ref(), &o, 0).unwrap(), o);
    assert_eq!(measure(&right_translate_power(g.as_ref(), &o, 1).unwrap()), 5);
    let block = coset(g.as_ref(), g.box_set(2).unwrap());
    assert_eq!(measure(&right_translate_power(g.as_ref(), &block, 1).unwrap()), 12);
}

#[test]
fn folner_star_examples() {
    let g = oracle("grid:d=2");
    let o = coset(g.as_ref(), vec![v("(0,0)")]);
    assert_eq!(folner_star_ratio(g.as_ref(), &o, 1).unwrap(), q(4, 1));
    assert_eq!(folner_star_ratio(g.as_ref(), &o, 0).unwrap(), q(0, 1));
    assert_eq!(folner_star_ratio(g.as_ref(), &ball_coset(g.as_ref(), 4), 1).unwrap(), q(20, 41));
    let t = oracle("tree:d=3");
    assert!(folner_star_ratio(t.as_ref(), &ball_coset(t.as_ref(), 3), 1).unwrap() >= q(1, 1));
}

#[test]
fn word_ball_examples() {
    assert_eq!(word_ball_check(oracle("grid:d=2").as_ref(), 3).unwrap(), WordBall::Verified);
    assert_eq!(word_ball_check(oracle("tree:d=3").as_ref(), 2).unwrap(), WordBall::Verified);
    for s in ["grid:d=1", "grid:d=2", "grid:d=3", "tree:d=2", "tree:d=3", "tree:d=4", "lamplighter", "bs:m=2", "bs:m=3"] {
        let o = oracle(s);
        for n in 0..=4 {
            assert_eq!(word_ball_check(o.as_ref(), n).unwrap(), WordBall::Verified, "{s} n={n}");
        }
    }
    let err = word_ball_check(oracle("grandfather").as_ref(), 2).unwrap_err();
    assert_eq!(err.code(), "unsupported-oracle");
}

#[test]
fn modular_examples() {
    let g = oracle("grid:d=2");
    let m = modular_ratio(g.as_ref(), &v("(0,0)"), &v("(1,0)"), 2).unwrap();
    assert_eq!((m.m_xy, m.m_yx, m.ratio), (4, 4, q(1, 1)));
    let t = oracle("tree:d=3");
    let m = modular_ratio(t.as_ref(), &v("1"), &v("a"), 2).unwrap();
    assert_eq!((m.m_xy, m.m_yx, m.ratio), (3, 3, q(1, 1)));
}

#[test]
fn grandfather_is_not_unimodular() {
    let gf = oracle("grandfather");
    let child = gf.orbit_representatives()[0].clone();
    let parent = Grandfather::parent_of(&child);
    for radius in 1..=3 {
        let down = modular_ratio(gf.as_ref(), &parent, &child, radius).unwrap();
        assert_eq!((down.m_xy, down.m_yx, down.ratio), (2, 1, q(2, 1)));
        let up = modular_ratio(gf.as_ref(), &child, &parent, radius).unwrap();
        assert_eq!(up.ratio, q(1, 2));
    }
}

#[test]
fn modular_errors() {
    let g = oracle("grid:d=2");
    assert_eq!(modular_ratio(g.as_ref(), &v("(0,0)"), &v("(1,0)"), 0).unwrap_err().code(), "invalid-input");
    assert_eq!(modular_ratio(g.as_ref(), &v("(0,0)"), &v("(2,1)"), 2).unwrap_err().code(), "invalid-input");
}

#[test]
fn reduction_of_a_transitive_graph_is_its_square() {
    for s in ["grid:d=2", "tree:d=3", "lamplighter"] {
        let o = oracle(s);
        let red = quasitransitive_reduce(o.clone(), 0).unwrap();
        assert_eq!(red.n_orbits, 1);
        let square = power_graph(o.spec(), 2).unwrap();
        let rep = o.orbit_representatives()[0].clone();
        for x in ball(o.as_ref(), &rep, 2).unwrap().vertices {
            assert_eq!(red.reduced.neighbors(&x), square.neighbors(&x), "{s} at {x}");
        }
        assert!(ball_isomorphic(red.reduced.as_ref(), square.as_ref(), 3).unwrap().is_isomorphic());
    }
}

#[test]
fn reduction_of_subdivided_tree() {
    let red = quasitransitive_reduce(oracle("subdiv(tree:d=3)"), 0).unwrap();
    assert_eq!(red.n_orbits, 2);
    let rep = red.reduced.orbit_representatives()[0].clone();
    let b = ball(red.reduced.as_ref(), &rep, 3).unwrap();
    assert!(b.vertices.iter().all(|x| red.reduced.neighbors(x).len() == 9));
    assert!(red.window_connected());
    for (_, d, r) in &red.distortion_window {
        let r = r.unwrap();
        assert!(r <= *d && *d <= 4 * r + 4);
    }
}

#[test]
fn reduction_of_subdivided_line() {
    let red = quasitransitive_reduce(oracle("subdiv(grid:d=1)"), 0).unwrap();
    let rep = red.reduced.orbit_representatives()[0].clone();
    let expected: Vec<VertexId> = ["o((-1))", "o((-2))", "o((1))", "o((2))"].iter().map(|s| v(s)).collect();
    assert_eq!(red.reduced.neighbors(&rep), expected);
}

#[test]
fn reduction_rejects_unknown_orbits() {
    let err = quasitransitive_reduce(oracle("subdiv(tree:d=3)"), 2).err().unwrap();
    assert_eq!(err.code(), "invalid-orbit");
}

#[test]
fn h_g_examples() {
    let grid: GraphSpec = "grid:d=2".parse().unwrap();
    let tree: GraphSpec = "tree:d=3".parse().unwrap();
    assert_eq!(h_g_estimate(std::slice::from_ref(&grid), 4).unwrap(), (q(2, 1), grid.clone()));
    assert_eq!(h_g_estimate(&[tree.clone(), grid.clone()], 4).unwrap(), (q(3, 2), tree.clone()));
    assert_eq!(h_g_estimate(&[tree.clone()], 6).unwrap().0, q(4, 3));
}

#[test]
fn orbit_connectivity_examples() {
    let sub = orbit_connectivity_check(oracle("subdiv(tree:d=3)").as_ref(), 4).unwrap();
    assert!(matches!(sub[1], OrbitConnectivity::Disconnected(_)));
    for s in ["grid:d=2", "tree:d=3", "lamplighter"] {
        assert_eq!(orbit_connectivity_check(oracle(s).as_ref(), 4).unwrap(), vec![OrbitConnectivity::ConnectedEvidence]);
    }
    let uu = orbit_connectivity_check(oracle("union(grid:d=2,grid:d=2)").as_ref(), 4).unwrap();
    assert_eq!(uu, vec![OrbitConnectivity::ConnectedEvidence; 2]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_routes_to_one_ratio(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for s in ["grid:d=2", "tree:d=3", "lamplighter", "bs:m=2", "grandfather"] {
            let o = oracle(s);
            let rep = o.orbit_representatives()[0].clone();
            let x = random_set(o.as_ref(), &rep, 3, rng.gen_range(1..10), &mut rng);
            let u = CosetSet::new(o.as_ref(), rep, x.clone()).unwrap();
            let r = rng.gen_range(1..3);
            prop_assert_eq!(folner_star_ratio(o.as_ref(), &u, r).unwrap(), r_boundary_ratio(o.as_ref(), &x, r).unwrap());
            let grown = right_translate_power(o.as_ref(), &u, r).unwrap();
            prop_assert_eq!(grown.vertex_set().members(), &closure(o.as_ref(), &x, r));
        }
    }
}

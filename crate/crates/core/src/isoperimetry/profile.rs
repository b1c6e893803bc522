use std::cmp::Ordering;

use serde::Serialize;

use crate::ball::{ball, FiniteBall};
use crate::error::{Error, Result};
use crate::exact::{format_rational, Rational};
use crate::generators::GraphSpec;
use crate::oracle::GraphOracle;
use crate::par;
use crate::sets::VertexSet;
use crate::vertex::VertexId;

/// Whether the profile search may discard partial sets that provably cannot
/// reach the incumbent ratio. Both modes return identical profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pruning {
    #[default]
    On,
    Off,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ProfileOptions {
    pub pruning: Pruning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub n: usize,
    /// `j(n)`: least `|∂A| / |A|` over nonempty `A` with `|A| <= n`.
    pub j: Rational,
    /// Lexicographically least optimal set (by sorted encoding list).
    pub witness: VertexSet,
}

/// The table `n -> j(n)` for `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoProfile {
    pub graph: GraphSpec,
    pub entries: Vec<ProfileEntry>,
    /// Orbit representatives the search was anchored at.
    pub root_set: Vec<VertexId>,
}

#[derive(Serialize)]
struct EntryJson<'a> {
    n: usize,
    j: String,
    witness: Vec<&'a VertexId>,
}

#[derive(Serialize)]
struct ProfileJson<'a> {
    graph: String,
    entries: Vec<EntryJson<'a>>,
}

impl IsoProfile {
    pub fn j(&self, n: usize) -> Option<Rational> {
        self.entries.iter().find(|e| e.n == n).map(|e| e.j)
    }

    /// `{graph, entries: [{n, j: "p/q", witness: [...]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = ProfileJson {
            graph: self.graph.to_string(),
            entries: self
                .entries
                .iter()
                .map(|e| EntryJson { n: e.n, j: format_rational(&e.j), witness: e.witness.iter().collect() })
                .collect(),
        };
        serde_json::to_value(&doc).expect("profile serializes")
    }

    /// CSV with header `n,p,q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,p,q\n");
        for e in &self.entries {
            out.push_str(&format!("{},{},{}\n", e.n, e.j.numer(), e.j.denom()));
        }
        out
    }
}

/// Exact profile with pruning enabled.
pub fn iso_profile(oracle: &dyn GraphOracle, n_max: usize) -> Result<IsoProfile> {
    iso_profile_with(oracle, n_max, ProfileOptions::default())
}

/// Computes `j(n)` for `n = 1..=n_max`.
///
/// Optimal sets can be taken 2-connected (consecutive members at distance
/// at most 2), and a 2-connected set can be translated so that it contains an
/// orbit representative. For each representative the search therefore
/// enumerates, exactly once each, the sets containing it that are connected in
/// the distance-2 power graph; such sets of size `n` lie in the ball of radius
/// `2(n - 1)`. Boundaries are counted in the ball of radius `2n - 1`.
pub fn iso_profile_with(oracle: &dyn GraphOracle, n_max: usize, opts: ProfileOptions) -> Result<IsoProfile> {
    if n_max == 0 {
        return Err(Error::InvalidInput("n_max must be at least 1".into()));
    }
    let reps = oracle.orbit_representatives();
    if reps.is_empty() {
        return Err(Error::InvalidInput("oracle declares no orbit representatives".into()));
    }
    let windows: Vec<Window> = reps.iter().map(|r| Window::new(oracle, r, n_max)).collect::<Result<_>>()?;

    let mut tasks = Vec::new();
    for (w, win) in windows.iter().enumerate() {
        for branch in 0..win.power[0].len() {
            tasks.push((w, branch));
        }
    }
    let prune = opts.pruning == Pruning::On;
    let partials = par::map(tasks, |(w, branch)| {
        let mut s = Searcher::new(&windows[w], n_max, prune);
        s.run_branch(branch);
        s.best
    });

    let mut best: Vec<Option<Best>> = vec![None; n_max + 1];
    for win in &windows {
        let singleton = Best { ratio: Rational::new(win.ball.adjacency[0].len() as u64, 1), witness: vec![win.ball.root.clone()] };
        offer(&mut best[1], singleton);
    }
    for partial in partials {
        for (k, b) in partial.into_iter().enumerate() {
            if let Some(b) = b {
                offer(&mut best[k], b);
            }
        }
    }

    let mut entries = Vec::with_capacity(n_max);
    let mut running: Option<Best> = None;
    for (n, b) in best.into_iter().enumerate().skip(1) {
        if let Some(b) = b {
            offer(&mut running, b);
        }
        let r = running.clone().expect("singletons are always recorded");
        entries.push(ProfileEntry { n, j: r.ratio, witness: r.witness.into_iter().collect() });
    }
    Ok(IsoProfile { graph: oracle.spec().clone(), entries, root_set: reps })
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Best {
    ratio: Rational,
    /// Sorted by encoding.
    witness: Vec<VertexId>,
}

impl Best {
    fn key_cmp(&self, other: &Best) -> Ordering {
        self.ratio.cmp(&other.ratio).then_with(|| self.witness.cmp(&other.witness))
    }
}

fn offer(slot: &mut Option<Best>, cand: Best) {
    match slot {
        Some(cur) if cur.key_cmp(&cand) != Ordering::Greater => {}
        _ => *slot = Some(cand),
    }
}

/// The search window around one representative.
struct Window {
    ball: FiniteBall,
    /// Vertices with local index below this may join a candidate set.
    allowed: usize,
    /// Distance-1-or-2 neighbors among allowed vertices.
    power: Vec<Vec<u32>>,
}

impl Window {
    fn new(oracle: &dyn GraphOracle, rep: &VertexId, n_max: usize) -> Result<Self> {
        let ball = ball(oracle, rep, 2 * n_max - 1)?;
        let allowed = ball.layer_end(2 * (n_max - 1));
        let mut power = Vec::with_capacity(allowed);
        for v in 0..allowed {
            let mut p: Vec<u32> = Vec::new();
            for &u in &ball.adjacency[v] {
                p.push(u);
                p.extend(ball.adjacency[u as usize].iter().copied());
            }
            p.retain(|&u| u as usize != v && (u as usize) < allowed);
            p.sort_unstable();
            p.dedup();
            power.push(p);
        }
        Ok(Window { ball, allowed, power })
    }
}

const FREE: u8 = 0;
const IN: u8 = 1;
const FRONT: u8 = 2;
const EXCL: u8 = 3;

/// Reverse-search style enumeration: at each node the frontier is split into
/// "first frontier vertex taken is `f[i]`", with `f[..i]` excluded for the
/// whole subtree, so every connected set is produced once.
struct Searcher<'w> {
    win: &'w Window,
    n_max: usize,
    prune: bool,
    state: Vec<u8>,
    /// Number of set members adjacent to each ball vertex.
    hits: Vec<u16>,
    set: Vec<u32>,
    boundary: u64,
    /// Boundary vertices that can never join the set.
    committed: u64,
    best: Vec<Option<Best>>,
}

impl<'w> Searcher<'w> {
    fn new(win: &'w Window, n_max: usize, prune: bool) -> Self {
        Searcher {
            win,
            n_max,
            prune,
            state: vec![FREE; win.allowed],
            hits: vec![0; win.ball.len()],
            set: Vec::with_capacity(n_max),
            boundary: 0,
            committed: 0,
            best: vec![None; n_max + 1],
        }
    }

    fn is_committed(&self, u: usize) -> bool {
        u >= self.win.allowed || self.state[u] == EXCL
    }

    fn add(&mut self, v: u32) {
        let v = v as usize;
        if self.hits[v] > 0 {
            self.boundary -= 1;
        }
        self.state[v] = IN;
        self.set.push(v as u32);
        for &u in &self.win.ball.adjacency[v] {
            let u = u as usize;
            self.hits[u] += 1;
            if self.hits[u] == 1 && (u >= self.win.allowed || self.state[u] != IN) {
                self.boundary += 1;
                if self.is_committed(u) {
                    self.committed += 1;
                }
            }
        }
    }

    fn remove(&mut self, v: u32) {
        let v = v as usize;
        for &u in &self.win.ball.adjacency[v] {
            let u = u as usize;
            self.hits[u] -= 1;
            if self.hits[u] == 0 && (u >= self.win.allowed || self.state[u] != IN) {
                self.boundary -= 1;
                if self.is_committed(u) {
                    self.committed -= 1;
                }
            }
        }
        self.set.pop();
        self.state[v] = FRONT;
        if self.hits[v] > 0 {
            self.boundary += 1;
        }
    }

    fn exclude(&mut self, v: u32) {
        self.state[v as usize] = EXCL;
        if self.hits[v as usize] > 0 {
            self.committed += 1;
        }
    }

    fn unexclude(&mut self, v: u32) {
        self.state[v as usize] = FRONT;
        if self.hits[v as usize] > 0 {
            self.committed -= 1;
        }
    }

    fn record(&mut self) {
        let a = self.set.len();
        let ratio = Rational::new(self.boundary, a as u64);
        if let Some(cur) = &self.best[a] {
            if ratio > cur.ratio {
                return;
            }
        }
        let mut witness: Vec<VertexId> = self.set.iter().map(|&i| self.win.ball.vertices[i as usize].clone()).collect();
        witness.sort_unstable();
        offer(&mut self.best[a], Best { ratio, witness });
    }

    /// True when no extension of the current set can tie or beat the best
    /// ratio known for its final size. A final set `F` of size `s` keeps every
    /// current boundary vertex except the `s - a` it absorbs, and never absorbs
    /// a committed one.
    fn cannot_improve(&self) -> bool {
        let a = self.set.len() as u64;
        let open = self.boundary - self.committed;
        let mut inc: Option<Rational> = None;
        for (s, b) in self.best.iter().enumerate().take(self.n_max + 1).skip(1) {
            if let Some(b) = b {
                inc = Some(match inc {
                    Some(x) if x <= b.ratio => x,
                    _ => b.ratio,
                });
            }
            let s = s as u64;
            if s <= a {
                continue;
            }
            let Some(inc) = inc else { return false };
            let lb = self.committed + open.saturating_sub(s - a);
            // lb / s <= inc  <=>  lb * denom <= numer * s
            if (lb as u128) * (*inc.denom() as u128) <= (*inc.numer() as u128) * (s as u128) {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, frontier: &[u32]) {
        if self.set.len() == self.n_max || (self.prune && self.cannot_improve()) {
            return;
        }
        for i in 0..frontier.len() {
            self.take(frontier, i);
            self.exclude(frontier[i]);
        }
        for &v in frontier {
            self.unexclude(v);
        }
    }

    /// Adds `frontier[i]`, explores its subtree, and removes it again.
    fn take(&mut self, frontier: &[u32], i: usize) {
        let v = frontier[i];
        self.add(v);
        let mut next: Vec<u32> = frontier[i + 1..].to_vec();
        let fresh_from = next.len();
        for &u in &self.win.power[v as usize] {
            if self.state[u as usize] == FREE {
                self.state[u as usize] = FRONT;
                next.push(u);
            }
        }
        self.record();
        self.extend(&next);
        for &u in &next[fresh_from..] {
            self.state[u as usize] = FREE;
        }
        self.remove(v);
    }

    /// Explores the sets whose first added neighbor of the root is `power[0][branch]`.
    fn run_branch(&mut self, branch: usize) {
        self.add(0);
        let top = &self.win.power[0];
        for &u in top {
            self.state[u as usize] = FRONT;
        }
        for &u in &top[..branch] {
            self.exclude(u);
        }
        self.take(top, branch);
    }
}

//! `isoperimetrix <subcommand> <args> [--flags]`
//!
//! Every subcommand prints one JSON line
//! `{command, status, payload | error, elapsed_ms}` on stdout, except
//! `profile --format=csv`, which prints the bare CSV table. The exit code
//! identifies the error class; see [`exit_code`].

mod commands;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isoperimetrix::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "isoperimetrix", version, about = "Exact vertex isoperimetry and graph-space tools for infinite graphs")]
struct Cli {
    /// Worker threads for search commands; results do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Isoperimetric profile j(1..=n) with witnesses.
    Profile(ProfileArgs),
    /// Rooted-ball distance between two transitive graphs.
    Gdist(GdistArgs),
    /// Pairwise distance matrix over several graphs.
    Dmatrix(DmatrixArgs),
    /// Coset-measure report for a set X and right translation by S^r.
    Bridge(BridgeArgs),
    /// Reduce a quasitransitive graph to one orbit.
    Reduce(ReduceArgs),
    /// Finite-radius modular ratio m_xy / m_yx.
    Unimod(UnimodArgs),
    /// Compare the metric ball with S^n in a Cayley graph.
    Wordball(WordballArgs),
    /// List the built-in graph families.
    Catalog,
    /// Check that j(n) agrees when balls of radius 2n+1 agree.
    Stability(StabilityArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ProfileArgs {
    graph: String,
    #[arg(long)]
    n: usize,
    /// Disable branch-and-bound; output is identical, only slower.
    #[arg(long)]
    no_prune: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct GdistArgs {
    graph1: String,
    graph2: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct DmatrixArgs {
    #[arg(required = true, num_args = 2..)]
    graphs: Vec<String>,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct BridgeArgs {
    graph: String,
    /// `ball:K` for B(o, K), or `list:V1;V2;...` with vertex encodings.
    #[arg(long)]
    set: String,
    #[arg(long)]
    r: usize,
}

#[derive(Args)]
struct ReduceArgs {
    graph: String,
    #[arg(long, default_value_t = 0)]
    orbit: usize,
}

#[derive(Args)]
struct UnimodArgs {
    graph: String,
    /// Defaults to the first orbit representative.
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    y: String,
    #[arg(long, default_value_t = 2)]
    radius: usize,
}

#[derive(Args)]
struct WordballArgs {
    graph: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct StabilityArgs {
    graph1: String,
    graph2: String,
    #[arg(long)]
    n: usize,
}

/// Stable process exit codes. Usage errors reported by the argument parser
/// exit with 2.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 3,
        Error::InvalidSpec(_) => 4,
        Error::Resource { .. } => 5,
        Error::Structural(_) => 6,
        Error::InvalidInput(_) => 7,
        Error::EmptySet => 8,
        Error::UnsupportedShape { .. } => 9,
        Error::UnsupportedOracle(_) => 10,
        Error::InvalidOrbit { .. } => 11,
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Profile(_) => "profile",
        Command::Gdist(_) => "gdist",
        Command::Dmatrix(_) => "dmatrix",
        Command::Bridge(_) => "bridge",
        Command::Reduce(_) => "reduce",
        Command::Unimod(_) => "unimod",
        Command::Wordball(_) => "wordball",
        Command::Catalog => "catalog",
        Command::Stability(_) => "stability",
    }
}

fn dispatch(c: &Command) -> isoperimetrix::Result<Output> {
    Ok(match c {
        Command::Profile(a) => match a.format {
            Format::Json => Output::Json(commands::profile(&a.graph, a.n, !a.no_prune)?.to_json()),
            Format::Csv => Output::Text(commands::profile(&a.graph, a.n, !a.no_prune)?.to_csv()),
        },
        Command::Gdist(a) => Output::Json(commands::gdist(&a.graph1, &a.graph2, a.n)?),
        Command::Dmatrix(a) => Output::Json(commands::dmatrix(&a.graphs, a.n)?),
        Command::Bridge(a) => Output::Json(commands::bridge(&a.graph, &a.set, a.r)?),
        Command::Reduce(a) => Output::Json(commands::reduce(&a.graph, a.orbit)?),
        Command::Unimod(a) => Output::Json(commands::unimod(&a.graph, a.x.as_deref(), &a.y, a.radius)?),
        Command::Wordball(a) => Output::Json(commands::wordball(&a.graph, a.n)?),
        Command::Catalog => Output::Json(commands::catalog()?),
        Command::Stability(a) => Output::Json(commands::stability(&a.graph1, &a.graph2, a.n)?),
    })
}

fn apply_vertex_cap() -> isoperimetrix::Result<()> {
    if let Ok(raw) = std::env::var("ISOPX_VERTEX_CAP") {
        let cap: usize = raw
            .parse()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| Error::InvalidInput(format!("ISOPX_VERTEX_CAP must be a positive integer, got `{raw}`")))?;
        isoperimetrix::set_vertex_cap(cap);
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<T: Send>(_jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    f()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = name(&cli.command);
    let start = Instant::now();
    let result = apply_vertex_cap().and_then(|()| with_jobs(cli.jobs, || dispatch(&cli.command)));
    let elapsed_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json(payload)) => {
            println!("{}", json!({"command": command, "status": "ok", "payload": payload, "elapsed_ms": elapsed_ms}));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let error = json!({"code": e.code(), "message": e.to_string()});
            println!("{}", json!({"command": command, "status": "error", "error": error, "elapsed_ms": elapsed_ms}));
            ExitCode::from(exit_code(&e))
        }
    }
}

//! Golden-case table and process helpers shared by the CLI test targets.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub env: &'static [(&'static str, &'static str)],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, env: &[], exit }
}

pub const CASES: &[Case] = &[
    case("profile_grid2_n4", &["profile", "grid:d=2", "--n=4"], 0),
    case("profile_tree3_n1", &["profile", "tree:d=3", "--n=1"], 0),
    case("profile_tree3_n6", &["profile", "tree:d=3", "--n=6"], 0),
    case("profile_lamplighter_n5", &["profile", "lamplighter", "--n=5"], 0),
    case("profile_grandfather_n3", &["profile", "grandfather", "--n=3"], 0),
    case("profile_subdiv_tree3_n4", &["profile", "subdiv(tree:d=3)", "--n=4"], 0),
    case("profile_tree3_csv", &["profile", "tree:d=3", "--n=4", "--format=csv"], 0),
    case("profile_bad_spec", &["profile", "nonsense:x=1", "--n=2"], 3),
    case("profile_bad_params", &["profile", "grid:d=0", "--n=2"], 4),
    case("profile_n0", &["profile", "grid:d=2", "--n=0"], 7),
    Case {
        name: "profile_over_cap",
        args: &["profile", "grid:d=2", "--n=3"],
        env: &[("ISOPX_VERTEX_CAP", "10")],
        exit: 5,
    },
    case("gdist_tree3_tree4", &["gdist", "tree:d=3", "tree:d=4", "--n=5"], 0),
    case("gdist_tree4_grid2", &["gdist", "tree:d=4", "grid:d=2", "--n=5"], 0),
    case("gdist_grid2_grid2", &["gdist", "grid:d=2", "grid:d=2", "--n=6"], 0),
    case("dmatrix_lines_and_trees", &["dmatrix", "grid:d=1", "tree:d=2", "tree:d=3", "grid:d=2", "--n=4"], 0),
    case("bridge_grid2_ball4", &["bridge", "grid:d=2", "--set=ball:4", "--r=1"], 0),
    case("bridge_grid2_r0", &["bridge", "grid:d=2", "--set=ball:0", "--r=0"], 0),
    case("bridge_tree3_ball3", &["bridge", "tree:d=3", "--set=ball:3", "--r=1"], 0),
    case("bridge_grid2_list", &["bridge", "grid:d=2", "--set=list:(0,0);(0,1)", "--r=2"], 0),
    case("bridge_bad_set", &["bridge", "grid:d=2", "--set=box:3", "--r=1"], 3),
    case("reduce_subdiv_tree3", &["reduce", "subdiv(tree:d=3)", "--orbit=0"], 0),
    case("reduce_bad_orbit", &["reduce", "subdiv(tree:d=3)", "--orbit=5"], 11),
    case("unimod_grid2", &["unimod", "grid:d=2", "--y=(1,0)"], 0),
    case("unimod_grandfather", &["unimod", "grandfather", "--x=(-1,0)", "--y=(0,0)", "--radius=3"], 0),
    case("unimod_too_far", &["unimod", "grid:d=2", "--y=(3,0)", "--radius=2"], 7),
    case("wordball_lamplighter", &["wordball", "lamplighter", "--n=3"], 0),
    case("wordball_grandfather", &["wordball", "grandfather", "--n=2"], 10),
    case("catalog", &["catalog"], 0),
    case("stability_line", &["stability", "grid:d=1", "tree:d=2", "--n=2"], 0),
    case("stability_tree4_grid2", &["stability", "tree:d=4", "grid:d=2", "--n=1"], 0),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

pub fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas/v1").join(format!("{name}.schema.json"))
}

/// Runs the binary and returns `(exit code, stdout)`.
pub fn run(case: &Case, extra: &[&str]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_isoperimetrix"));
    cmd.args(case.args).args(extra).env_remove("ISOPX_VERTEX_CAP").envs(case.env.iter().copied());
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

/// Zeroes the only nondeterministic field.
pub fn normalize(stdout: &str) -> String {
    let key = "\"elapsed_ms\":";
    match stdout.find(key) {
        None => stdout.to_string(),
        Some(i) => {
            let start = i + key.len();
            let end = start + stdout[start..].bytes().take_while(u8::is_ascii_digit).count();
            format!("{}0{}", &stdout[..start], &stdout[end..])
        }
    }
}

/// Flag sets whose outputs must all be byte-identical for `case`.
pub fn variants(case: &Case) -> Vec<Vec<&'static str>> {
    let mut out = vec![vec!["--jobs=1"], vec!["--jobs=8"]];
    if case.args[0] == "profile" {
        out.push(vec!["--jobs=1", "--no-prune"]);
        out.push(vec!["--jobs=8", "--no-prune"]);
    }
    out
}

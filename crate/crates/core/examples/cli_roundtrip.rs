//! Drives the command-line front end in-process: validates a shipped graph
//! and computes `τ` of the boundary twist from generated moves.

use fatgraph_johnson::cli::run;

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data/g0_genus1.fg");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["fatjohnson", "validate", "--graph", data], &mut out, &mut err);
    print!("validate -> {code}\n{}", String::from_utf8_lossy(&out));

    out.clear();
    let code = run(
        ["fatjohnson", "gen-twist", "--boundary", "--graph", data, "--format", "json"],
        &mut out,
        &mut err,
    );
    print!("gen-twist -> {code}\n{}", String::from_utf8_lossy(&out));
}

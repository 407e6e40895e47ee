//! The `fatjohnson` command-line driver.
//!
//! Exit codes: 0 on success, 1 when an input parses but fails validation
//! (bad marking, illegal move, failed certification), 2 when an input cannot
//! be read or parsed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::ia::dual_to_string;
use crate::algebra::io::{from_text, to_json};
use crate::algebra::lie::to_lie_string;
use crate::algebra::{LinearMap, Tensor};
use crate::cocycle::{j1_path, j2_path, Lambda3};
use crate::fatgraph::io::{parse_fatgraph, parse_moves, write_moves};
use crate::fatgraph::{
    apply_path, edge_of, pi_verify, rooted_isomorphism, symplectic_graph, MarkedFatgraph,
};
use crate::johnson::{graded_dual, tau_path};
use crate::magnus::MagnusTable;
use crate::twist::{omega_square, separating_twist, tau3_recipe, twist_action};

#[derive(Parser, Debug)]
#[command(
    name = "fatjohnson",
    version,
    about = "Fatgraph Magnus expansions and Johnson homomorphism lifts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Truncation degree (`τ_1..τ_N` for `tau` and `gen-twist`, tensor
    /// degree for `magnus`).
    #[arg(long, global = true)]
    pub degree: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every marking condition of a fatgraph file.
    Validate {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Print `ℓ` and `θ` for every edge.
    Magnus {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Johnson values of a move sequence, with the summed `j₁` and composed `j₂`.
    Tau {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        moves: PathBuf,
    },
    /// Generate and certify the move sequence of a separating twist on the
    /// symplectic fatgraph.
    GenTwist {
        /// Twist along the boundary.
        #[arg(long, conflicts_with = "genus", required_unless_present = "genus")]
        boundary: bool,
        /// Twist along the curve cutting off the first `h` handles.
        #[arg(long, value_name = "h")]
        genus: Option<usize>,
        /// The symplectic fatgraph to start from (edge ids are translated to
        /// this file's numbering).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Genus of the surface when no graph file is given (defaults to `h`).
        #[arg(long, value_name = "g")]
        surface: Option<usize>,
    },
    /// `τ₃` of a separating twist conjugated by a mapping class `γ`, from
    /// `τ₁(γ)` and the action of `γ` on homology.
    Tau3Recipe {
        /// `τ₁(γ)` as a tensor file (`H ⊗ 𝓛₂`, `H` factor first).
        #[arg(long)]
        tau1: PathBuf,
        /// The action of `γ` on `H` as `2g` integer rows, row `i` the image
        /// of basis vector `i`.
        #[arg(long)]
        action: PathBuf,
        /// Number of handles cut off by the twisted curve.
        #[arg(long, value_name = "h")]
        genus: usize,
    },
}

/// Failure of a command, classified by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Parse(_) | CliError::Io(_) => 2,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<MarkedFatgraph, CliError> {
    parse_fatgraph(&read(path)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_valid_graph(path: &Path) -> Result<MarkedFatgraph, CliError> {
    let m = load_graph(path)?;
    m.validate()
        .map_err(|d| CliError::Invalid(format!("{}: {d}", path.display())))?;
    Ok(m)
}

/// Parses `2g` rows of `2g` integers.
pub fn parse_matrix(text: &str) -> crate::Result<LinearMap> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|x| {
                x.parse::<i64>().map_err(|_| crate::Error::Parse {
                    line: i + 1,
                    msg: format!("expected an integer, found `{x}`"),
                })
            })
            .collect::<crate::Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.is_empty() || rows.len() % 2 != 0 {
        return Err(crate::Error::Parse {
            line: 0,
            msg: format!("expected an even number of rows, found {}", rows.len()),
        });
    }
    LinearMap::from_int_rows(rows.len() / 2, &rows)
}

fn lambda3_json(x: &Lambda3) -> Value {
    use crate::algebra::hvector::letter_name;
    let g = x.genus();
    Value::Array(
        x.terms()
            .map(|(k, c)| {
                json!({
                    "coeff": crate::algebra::scalar::format(c),
                    "wedge": k.iter().map(|&l| letter_name(g, l)).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn degree_or(cli: &Cli, default: usize, lo: usize, hi: usize) -> Result<usize, CliError> {
    let d = cli.degree.unwrap_or(default);
    if d < lo || d > hi {
        return Err(CliError::Parse(format!(
            "--degree must lie in {lo}..={hi}, got {d}"
        )));
    }
    Ok(d)
}

fn cmd_validate(cli: &Cli, graph: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let m = load_graph(graph)?;
    let defect = m.validate().err();
    match cli.format {
        Format::Text => match &defect {
            None => writeln!(out, "ok: genus {}, {} edges", m.genus(), m.graph().num_edges())?,
            Some(d) => writeln!(out, "invalid: {d}")?,
        },
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "valid": defect.is_none(),
                "genus": m.genus(),
                "edges": m.graph().num_edges(),
                "witness": defect.as_ref().map(|d| d.to_string()),
            })
        )?,
    }
    match defect {
        None => Ok(()),
        Some(d) => Err(CliError::Invalid(format!("validation failed: {d}"))),
    }
}

fn cmd_magnus(cli: &Cli, graph: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let n = degree_or(cli, 4, 1, crate::algebra::MAX_DEGREE)?;
    let m = load_valid_graph(graph)?;
    let table = MagnusTable::new(&m, n).map_err(invalid)?;
    let edges = 0..m.graph().num_edges();
    match cli.format {
        Format::Text => {
            for k in edges {
                let x = 2 * k;
                writeln!(out, "ell[{x}] = {}", to_lie_string(table.ell(x)))?;
                writeln!(out, "theta[{x}] = {}", table.theta(x).to_word_string())?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = edges
                .map(|k| {
                    let x = 2 * k;
                    json!({
                        "half_edge": x,
                        "h": m.h(x).to_string(),
                        "ell": to_json(table.ell(x)),
                        "theta": to_json(&table.theta(x)),
                    })
                })
                .collect();
            writeln!(out, "{}", json!({ "degree": n, "edges": rows }))?;
        }
    }
    Ok(())
}

/// `τ_1..τ_m` of an IA map as dual tensors.
fn graded_parts(tau: &crate::algebra::IaMap, m: usize) -> Vec<Tensor> {
    (1..=m).map(|k| graded_dual(tau, k)).collect()
}

fn write_taus(cli: &Cli, taus: &[Tensor], out: &mut dyn Write) -> Result<Vec<Value>, CliError> {
    let mut js = Vec::new();
    for (i, t) in taus.iter().enumerate() {
        match cli.format {
            Format::Text => writeln!(out, "tau{} = {}", i + 1, dual_to_string(t))?,
            Format::Json => js.push(json!({ "k": i + 1, "tensor": to_json(t) })),
        }
    }
    Ok(js)
}

fn cmd_tau(cli: &Cli, graph: &Path, moves: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let m = degree_or(cli, 3, 1, 4)?;
    let g0 = load_valid_graph(graph)?;
    let edges = parse_moves(&read(moves)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", moves.display())))?;
    let path = apply_path(&g0, &edges).map_err(invalid)?;
    let tau = tau_path(&path, m).map_err(invalid)?;
    let taus = graded_parts(&tau, m);
    let j1 = j1_path(&path);
    let j2 = j2_path(&path).map_err(invalid)?;
    let js = write_taus(cli, &taus, out)?;
    match cli.format {
        Format::Text => {
            writeln!(out, "moves = {}", path.len())?;
            writeln!(out, "j1 = {j1}")?;
            writeln!(out, "j2.s = {}", dual_to_string(&j2.s))?;
            writeln!(out, "j2.xi = {}", j2.xi)?;
        }
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "moves": path.len(),
                "tau": js,
                "j1": lambda3_json(&j1),
                "j2": { "s": to_json(&j2.s), "xi": lambda3_json(&j2.xi) },
            })
        )?,
    }
    Ok(())
}

fn cmd_gen_twist(
    cli: &Cli,
    h: Option<usize>,
    graph: Option<&Path>,
    surface: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let m = degree_or(cli, 3, 1, 4)?;
    let file = graph.map(load_valid_graph).transpose()?;
    let genus = match (&file, surface, h) {
        (Some(f), _, _) => f.genus(),
        (None, Some(g), _) => g,
        (None, None, Some(h)) => h,
        (None, None, None) => {
            return Err(CliError::Parse(
                "--boundary needs --graph or --surface to fix the genus".into(),
            ))
        }
    };
    let h = h.unwrap_or(genus);
    let path = separating_twist(genus, h).map_err(invalid)?;
    let edges = match &file {
        None => path.edges.clone(),
        Some(f) => {
            let g0 = symplectic_graph(genus).map_err(invalid)?;
            let psi = rooted_isomorphism(g0.graph(), f.graph())
                .filter(|psi| (0..psi.len()).all(|x| g0.h(x) == f.h(psi[x])))
                .ok_or_else(|| invalid("the graph is not the symplectic fatgraph"))?;
            path.edges.iter().map(|&e| edge_of(psi[2 * e])).collect()
        }
    };
    let certified = pi_verify(&path, &twist_action(genus, h)).map_err(invalid)?;
    let tau = tau_path(&path, m).map_err(invalid)?;
    let taus = graded_parts(&tau, m);
    let tau2_ok = m < 2 || taus[1].with_max_degree(4) == omega_square(genus, h, 4);
    let others_zero = taus
        .iter()
        .enumerate()
        .all(|(i, t)| i == 1 || t.is_zero());
    match cli.format {
        Format::Text => {
            write!(out, "{}", write_moves(&edges))?;
            writeln!(out, "# genus {genus}, twist on {h} handles, {} moves", edges.len())?;
            writeln!(out, "# pi certified (conjugation by the partial boundary): {certified}")?;
            writeln!(out, "# tau2 equals omega_h squared: {tau2_ok}")?;
            writeln!(out, "# other tau vanish: {others_zero}")?;
            for (i, t) in taus.iter().enumerate() {
                writeln!(out, "# tau{} = {}", i + 1, dual_to_string(t))?;
            }
        }
        Format::Json => {
            let js: Vec<Value> = taus
                .iter()
                .enumerate()
                .map(|(i, t)| json!({ "k": i + 1, "tensor": to_json(t) }))
                .collect();
            writeln!(
                out,
                "{}",
                json!({
                    "genus": genus,
                    "h": h,
                    "moves": edges,
                    "pi_certified": certified,
                    "tau2_is_omega_square": tau2_ok,
                    "other_tau_vanish": others_zero,
                    "tau": js,
                })
            )?;
        }
    }
    if certified && tau2_ok && others_zero {
        Ok(())
    } else {
        Err(invalid("twist certification failed"))
    }
}

fn cmd_tau3_recipe(
    cli: &Cli,
    tau1: &Path,
    action: &Path,
    h: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let phi = parse_matrix(&read(action)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", action.display())))?;
    let t1 = from_text(&read(tau1)?, Some(phi.genus()), Some(5))
        .map_err(|e| CliError::Parse(format!("{}: {e}", tau1.display())))?;
    if !phi.is_symplectic() {
        return Err(invalid("the action is not symplectic"));
    }
    let t3 = tau3_recipe(&t1, &phi, h).map_err(invalid)?;
    match cli.format {
        Format::Text => writeln!(out, "tau3 = {}", dual_to_string(&t3))?,
        Format::Json => writeln!(out, "{}", json!({ "h": h, "tau3": to_json(&t3) }))?,
    }
    Ok(())
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Validate { graph } => cmd_validate(cli, graph, out),
        Command::Magnus { graph } => cmd_magnus(cli, graph, out),
        Command::Tau { graph, moves } => cmd_tau(cli, graph, moves, out),
        Command::GenTwist {
            boundary: _,
            genus,
            graph,
            surface,
        } => cmd_gen_twist(cli, *genus, graph.as_deref(), *surface, out),
        Command::Tau3Recipe { tau1, action, genus } => {
            cmd_tau3_recipe(cli, tau1, action, *genus, out)
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            if shown {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["fatjohnson"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["bogus"]).0, 2);
        assert_eq!(run_str(&["gen-twist"]).0, 2);
        assert_eq!(run_str(&["gen-twist", "--boundary", "--genus", "1"]).0, 2);
        assert_eq!(run_str(&["validate", "--graph", "/nonexistent"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn gen_twist_certifies() {
        let (code, out, _) = run_str(&["gen-twist", "--boundary", "--surface", "1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("pi certified (conjugation by the partial boundary): true"));
        let (code, out, _) = run_str(&["gen-twist", "--genus", "1", "--surface", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["moves"].as_array().unwrap().len(), 6);
        assert_eq!(v["pi_certified"], true);
    }

    #[test]
    fn matrix_parsing() {
        let phi = parse_matrix("1 0\n# c\n0 1\n").unwrap();
        assert_eq!(phi.genus(), 1);
        assert!(parse_matrix("1 0 0\n").is_err());
        assert!(parse_matrix("1 x\n0 1").is_err());
    }
}

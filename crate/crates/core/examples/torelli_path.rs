//! A random walk in the Whitehead groupoid: `τ₁` and `τ₂` of the path, the
//! sum of `j₁` and the composed `j₂`.

use fatgraph_johnson::algebra::ia::dual_to_string;
use fatgraph_johnson::cocycle::{j1_path, j2_path};
use fatgraph_johnson::fatgraph::{apply_path, symplectic_graph, whitehead};
use fatgraph_johnson::johnson::{graded_dual, tau_path};
use rand::{Rng, SeedableRng};

fn main() -> fatgraph_johnson::Result<()> {
    let m = symplectic_graph(2)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut cur = m.clone();
    let mut edges = Vec::new();
    while edges.len() < 6 {
        let e = rng.gen_range(0..cur.graph().num_edges());
        if let Ok(w) = whitehead(&cur, e) {
            edges.push(e);
            cur = w.result;
        }
    }
    let path = apply_path(&m, &edges)?;
    let tau = tau_path(&path, 2)?;
    println!("moves: {edges:?}");
    println!("tau1 = {}", dual_to_string(&graded_dual(&tau, 1)));
    println!("tau2 = {}", dual_to_string(&graded_dual(&tau, 2)));
    println!("sum j1 = {}", j1_path(&path));
    let j2 = j2_path(&path)?;
    println!("j2.xi = {}", j2.xi);
    println!("j2.s = {}", dual_to_string(&j2.s));
    Ok(())
}

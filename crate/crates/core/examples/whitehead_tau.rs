//! Johnson values of a single Whitehead move: the closed formula against the
//! difference-of-expansions oracle, and the explicit low-degree formulas.

use fatgraph_johnson::algebra::ia::dual_to_string;
use fatgraph_johnson::fatgraph::{symplectic_graph, whitehead};
use fatgraph_johnson::johnson::{graded_dual, tau2_printed, tau3_printed, tau_move, tau_move_oracle};

fn main() -> fatgraph_johnson::Result<()> {
    let m = symplectic_graph(2)?;
    let w = whitehead(&m, 1)?;
    let closed = tau_move(&w, 3)?;
    let oracle = tau_move_oracle(&w, 3)?;
    println!("closed formula = oracle: {}", closed == oracle);
    for k in 1..=3 {
        println!("tau{k} = {}", dual_to_string(&graded_dual(&closed, k)));
    }
    let t2 = graded_dual(&tau_move(&w, 2)?, 2).scale_int(36);
    println!("36 tau2 matches explicit formula: {}", t2 == tau2_printed(&w)?);
    let t3 = graded_dual(&closed, 3).scale_int(216);
    println!("216 tau3 matches explicit formula: {}", t3 == tau3_printed(&w)?);
    Ok(())
}

//! The fatgraph Magnus expansion of the symplectic fatgraph: `ℓ` on every
//! oriented edge through degree 4, and `θ` of the tail.

use fatgraph_johnson::algebra::to_lie_string;
use fatgraph_johnson::fatgraph::symplectic_graph;
use fatgraph_johnson::magnus::MagnusTable;

fn main() -> fatgraph_johnson::Result<()> {
    let m = symplectic_graph(2)?;
    let table = MagnusTable::new(&m, 4)?;
    for k in 0..m.graph().num_edges() {
        let x = 2 * k;
        println!("h = {:<12} ell = {}", m.h(x).to_string(), to_lie_string(table.ell(x)));
    }
    let t = m.graph().tail();
    println!("theta(tail) = {}", table.theta(t).to_word_string());
    Ok(())
}

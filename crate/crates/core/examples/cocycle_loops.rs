//! The canonical cocycles `j₁` and `j₂` around closed move sequences near the
//! symplectic fatgraph: involutions, commuting squares and pentagons.

use fatgraph_johnson::fatgraph::symplectic_graph;
use fatgraph_johnson::loops::{
    check_loop, commutativity_loops, involution_loops, neighborhood, pentagon_loops,
};

fn main() -> fatgraph_johnson::Result<()> {
    let m = symplectic_graph(2)?;
    let mut loops = involution_loops(&m);
    loops.extend(commutativity_loops(&m, 4));
    for g in neighborhood(&m, 1) {
        loops.extend(pentagon_loops(&g).into_iter().take(1));
        if loops.len() > 20 {
            break;
        }
    }
    for (kind, path) in &loops {
        let r = check_loop(*kind, path, 3)?;
        println!("{kind:?} {:?}: j1 = 0 {}, j2 = id {}, tau = id {}", r.edges, r.j1_zero, r.j2_identity, r.tau_trivial);
    }
    Ok(())
}

//! Marking validation: the symplectic fatgraph passes; flipping the sign of
//! one edge breaks a vertex condition, and the witness names the vertex.

use fatgraph_johnson::fatgraph::io::{parse_fatgraph, write_fatgraph};
use fatgraph_johnson::fatgraph::symplectic_graph;

fn main() -> fatgraph_johnson::Result<()> {
    let m = symplectic_graph(1)?;
    println!("symplectic graph: {:?}", m.validate());

    let text = write_fatgraph(&m.without_pi()).replace("h 2: 0 1", "h 2: 0 -1");
    let broken = parse_fatgraph(&text)?;
    match broken.validate() {
        Ok(()) => println!("flipped edge unexpectedly valid"),
        Err(d) => println!("flipped edge: {d}"),
    }
    Ok(())
}

//! Prints the symplectic fatgraph of the given genus in the text format,
//! together with its separating edges.
//!
//! ```text
//! cargo run --example symplectic_graph -- 2
//! ```

use fatgraph_johnson::fatgraph::io::write_fatgraph;
use fatgraph_johnson::fatgraph::symplectic_graph_with_separators;

fn main() -> fatgraph_johnson::Result<()> {
    let genus: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let (m, separators) = symplectic_graph_with_separators(genus)?;
    print!("{}", write_fatgraph(&m));
    println!("# separating edges (first h handles, h = 1..{genus}): {separators:?}");
    Ok(())
}

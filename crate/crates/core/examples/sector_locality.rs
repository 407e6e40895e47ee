//! Locality of a Whitehead move: the four sector contributions in each
//! degree, which sum to zero.

use fatgraph_johnson::algebra::ia::dual_to_string;
use fatgraph_johnson::fatgraph::{symplectic_graph, whitehead};
use fatgraph_johnson::johnson::sector_contributions;

fn main() -> fatgraph_johnson::Result<()> {
    let m = symplectic_graph(1)?;
    let w = whitehead(&m, 0)?;
    let sectors = sector_contributions(&w, 3)?;
    for d in 3..=4 {
        let mut total = sectors.values[0].degree_part(d);
        for (i, s) in sectors.values.iter().enumerate() {
            println!("degree {d}, sector {}: {}", i + 1, dual_to_string(&s.degree_part(d)));
            if i > 0 {
                total += &s.degree_part(d);
            }
        }
        println!("degree {d}, sum: {}", dual_to_string(&total));
    }
    Ok(())
}

//! The boundary twist as a Whitehead move sequence on the symplectic
//! fatgraph: its moves, π-action certificate and Johnson values.

use fatgraph_johnson::algebra::ia::dual_to_string;
use fatgraph_johnson::fatgraph::pi_verify;
use fatgraph_johnson::johnson::{graded_dual, tau_path};
use fatgraph_johnson::twist::{boundary_twist, omega_square, twist_action};

fn main() -> fatgraph_johnson::Result<()> {
    for genus in 1..=3 {
        let path = boundary_twist(genus)?;
        let tau = tau_path(&path, 3)?;
        println!("genus {genus}: {} moves {:?}", path.len(), path.edges);
        println!("  conjugation by the boundary: {}", pi_verify(&path, &twist_action(genus, genus))?);
        println!("  tau1 = {}", dual_to_string(&graded_dual(&tau, 1)));
        let t2 = graded_dual(&tau, 2).with_max_degree(4);
        println!("  tau2 = omega^2: {}", t2 == omega_square(genus, genus, 4));
        println!("  tau3 = {}", dual_to_string(&graded_dual(&tau, 3)));
    }
    Ok(())
}

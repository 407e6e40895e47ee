//! Twists on the separating curves cutting off the first `h` handles, for
//! every `h` at genus 3.

use fatgraph_johnson::fatgraph::pi_verify;
use fatgraph_johnson::johnson::{graded_dual, tau_path};
use fatgraph_johnson::twist::{omega_square, separating_twist, twist_action};

fn main() -> fatgraph_johnson::Result<()> {
    let genus = 3;
    for h in 1..=genus {
        let path = separating_twist(genus, h)?;
        let tau = tau_path(&path, 3)?;
        let t2 = graded_dual(&tau, 2).with_max_degree(4);
        println!(
            "h = {h}: {} moves, π certified {}, tau1 = 0 {}, tau2 = omega_h^2 {}, tau3 = 0 {}",
            path.len(),
            pi_verify(&path, &twist_action(genus, h))?,
            graded_dual(&tau, 1).is_zero(),
            t2 == omega_square(genus, h, 4),
            graded_dual(&tau, 3).is_zero(),
        );
    }
    Ok(())
}

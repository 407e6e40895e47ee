//! `τ₃` of a separating twist conjugated by the Lickorish generator `ν_h`,
//! from `τ₁(ν_h)` and the action of `ν_h` on homology.

use fatgraph_johnson::algebra::ia::dual_to_string;
use fatgraph_johnson::twist::{nu_action, nu_tau1, nu_tau3_closed, tau3_recipe};

fn main() -> fatgraph_johnson::Result<()> {
    let (genus, h) = (2, 1);
    let tau1 = nu_tau1(genus, h)?;
    let action = nu_action(genus, h)?;
    println!("tau1(nu) = {}", dual_to_string(&tau1));
    let t3 = tau3_recipe(&tau1, &action, h)?;
    println!("2 tau3 = {}", dual_to_string(&t3.scale_int(2)));
    println!("matches closed form: {}", t3.scale_int(2) == nu_tau3_closed(genus, h)?);
    for other in 2..=genus {
        println!("h = {other}: zero = {}", tau3_recipe(&tau1, &action, other)?.is_zero());
    }
    Ok(())
}

//! Equivariance under a change of symplectic basis: transforming every
//! H-marking by an integral symplectic matrix transforms `τ` of a move by
//! the same matrix.

use fatgraph_johnson::algebra::LinearMap;
use fatgraph_johnson::fatgraph::{symplectic_graph, whitehead};
use fatgraph_johnson::johnson::{graded_dual, tau_move};
use rand::SeedableRng;

fn main() -> fatgraph_johnson::Result<()> {
    let m = symplectic_graph(2)?.without_pi();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let phi = LinearMap::random_symplectic(2, &mut rng);
    let moved = m.map_h(|x| phi.apply(x));
    let (w, w_phi) = (whitehead(&m, 2)?, whitehead(&moved, 2)?);
    for k in 1..=3 {
        let a = phi.apply_tensor(&graded_dual(&tau_move(&w, 3)?, k));
        let b = graded_dual(&tau_move(&w_phi, 3)?, k);
        println!("tau{k} equivariant: {}", a == b);
    }
    Ok(())
}

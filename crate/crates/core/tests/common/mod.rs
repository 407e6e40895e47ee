//! Shared generators and property checks for the integration tests and the
//! acceptance harness.

#![allow(dead_code)]

use fatgraph_johnson::algebra::scalar;
use fatgraph_johnson::algebra::{LinearMap, Tensor};
use fatgraph_johnson::cocycle::tau2_bar;
use fatgraph_johnson::fatgraph::{symplectic_graph, whitehead, MarkedFatgraph, WhiteheadMove};
use fatgraph_johnson::johnson::{graded_dual, tau_move};
use fatgraph_johnson::magnus::{check_move_relations, check_vertex_relations, MagnusTable};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A walk of `steps` legal Whitehead moves from the symplectic fatgraph.
pub fn random_walk(genus: usize, steps: usize, seed: u64) -> Vec<WhiteheadMove> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = symplectic_graph(genus).expect("symplectic graph");
    let mut out = Vec::with_capacity(steps);
    while out.len() < steps {
        let e = rng.gen_range(0..cur.graph().num_edges());
        if let Ok(w) = whitehead(&cur, e) {
            cur = w.result.clone();
            out.push(w);
        }
    }
    out
}

/// The graph reached by a random walk of `steps` moves.
pub fn random_graph(genus: usize, steps: usize, seed: u64) -> MarkedFatgraph {
    random_walk(genus, steps, seed)
        .pop()
        .map(|w| w.result)
        .unwrap_or_else(|| symplectic_graph(genus).expect("symplectic graph"))
}

/// Strategy for tensors with zero constant term: up to six terms with small
/// integer coefficients over `2g` letters, truncated at `n`.
pub fn tensor_strategy(genus: usize, n: usize) -> impl Strategy<Value = Tensor> {
    prop::collection::vec(
        (prop::collection::vec(0..2 * genus, 1..=n), -4i64..=4),
        0..6,
    )
    .prop_map(move |terms| {
        let mut t = Tensor::zero(genus, n);
        for (w, c) in terms {
            t.add_term(&w, scalar::int(c));
        }
        t
    })
}

/// Strategy for Lie elements: sums of brackets of letters and of length-two
/// brackets, with small integer coefficients.
pub fn lie_strategy(genus: usize, n: usize) -> impl Strategy<Value = Tensor> {
    prop::collection::vec((0..2 * genus, 0..2 * genus, 0..2 * genus, -3i64..=3, 0usize..3), 0..5)
        .prop_map(move |terms| {
            let mut t = Tensor::zero(genus, n);
            for (a, b, c, k, shape) in terms {
                let (la, lb, lc) = (
                    Tensor::letter(genus, n, a),
                    Tensor::letter(genus, n, b),
                    Tensor::letter(genus, n, c),
                );
                let x = match shape {
                    0 => la,
                    1 => la.bracket(&lb),
                    _ => la.bracket(&lb.bracket(&lc)),
                };
                t += &x.scale_int(k);
            }
            t
        })
}

pub fn exp_log_round_trip(x: &Tensor) -> Result<(), String> {
    let e = x.exp().map_err(|e| e.to_string())?;
    let back = e.log().map_err(|e| e.to_string())?;
    if &back == x {
        Ok(())
    } else {
        Err(format!("log(exp(x)) ≠ x for x = {}", x.to_word_string()))
    }
}

pub fn star_associative(x: &Tensor, y: &Tensor, z: &Tensor) -> Result<(), String> {
    let left = x.star(y).star(z);
    let right = x.star(&y.star(z));
    (left == right).then_some(()).ok_or_else(|| "star is not associative".into())
}

pub fn hausdorff_antipode(x: &Tensor, y: &Tensor) -> Result<(), String> {
    let lhs = Tensor::hausdorff_all(&-y, &-x);
    let rhs = -&Tensor::hausdorff_all(x, y);
    (lhs == rhs)
        .then_some(())
        .ok_or_else(|| "h(-Y,-X) ≠ -h(X,Y)".into())
}

/// Every `ℓ` value of a random graph is a Lie element.
pub fn ell_is_lie(genus: usize, steps: usize, seed: u64) -> Result<(), String> {
    let m = random_graph(genus, steps, seed);
    let t = MagnusTable::new(&m, 4).map_err(|e| e.to_string())?;
    for x in 0..m.graph().num_half_edges() {
        if !t.ell(x).is_lie() {
            return Err(format!("ℓ({x}) is not Lie"));
        }
    }
    Ok(())
}

/// Vertex relations of the combinatorial integrals on the graph, and the
/// move relations on the next move.
pub fn integral_relations(genus: usize, steps: usize, seed: u64) -> Result<(), String> {
    let walk = random_walk(genus, steps + 1, seed);
    let w = walk.last().expect("nonempty walk");
    check_vertex_relations(&w.source)?;
    check_move_relations(w)
}

/// `τ̄₂` of a move is minus `τ̄₂` of the move undoing it.
pub fn tau2_bar_antisymmetric(genus: usize, steps: usize, seed: u64) -> Result<(), String> {
    let walk = random_walk(genus, steps + 1, seed);
    let w = walk.last().expect("nonempty walk");
    let back = whitehead(&w.result, w.edge).map_err(|e| e.to_string())?;
    let (f, b) = (
        tau2_bar(w).map_err(|e| e.to_string())?,
        tau2_bar(&back).map_err(|e| e.to_string())?,
    );
    (f == -&b)
        .then_some(())
        .ok_or_else(|| format!("τ̄₂ not antisymmetric on edge {}", w.edge))
}

/// `τ` of a move on a graph whose H-marking is changed by an integral
/// symplectic matrix is the transformed `τ`, in degrees 1..=3.
pub fn equivariant(genus: usize, steps: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let phi = LinearMap::random_symplectic(genus, &mut rng);
    if !(phi.is_symplectic() && phi.is_integral()) {
        return Err("random basis change is not integral symplectic".into());
    }
    let walk = random_walk(genus, steps + 1, seed);
    let w = walk.last().expect("nonempty walk");
    let moved = w.source.without_pi().map_h(|x| phi.apply(x));
    let w_phi = whitehead(&moved, w.edge).map_err(|e| e.to_string())?;
    let (t, t_phi) = (
        tau_move(w, 3).map_err(|e| e.to_string())?,
        tau_move(&w_phi, 3).map_err(|e| e.to_string())?,
    );
    for k in 1..=3 {
        if phi.apply_tensor(&graded_dual(&t, k)) != graded_dual(&t_phi, k) {
            return Err(format!("τ{k} not equivariant"));
        }
    }
    Ok(())
}

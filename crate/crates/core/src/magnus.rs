//! The canonical fatgraph Magnus expansion `θ^G = exp(ℓ^G)` and the integral
//! iterated integrals `P`, `Q`, `R`.
//!
//! For an oriented edge `x` whose tail-avoiding boundary arc
//! `x = f_0, …, f_k = x̄` exists, `ℓ_1(x) = h(x)` and for `n ≥ 2`
//!
//! ```text
//! ℓ_n(x) = -1/3 Σ_{i=1..k} h(ℓ(f_{i-1}), -ℓ(f_i))_(n)
//! ```
//!
//! where `h` is the Hausdorff series; otherwise `ℓ(x) = -ℓ(x̄)`. The tail uses
//! the whole boundary cycle. All edges are computed in degree `n` before any
//! edge in degree `n + 1`.

use crate::algebra::lie::to_lie_string;
use crate::algebra::{scalar, Tensor, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::fatgraph::{pair, HalfEdge, MarkedFatgraph, WhiteheadMove};

/// Memoized values of `ℓ^G` on every oriented edge.
#[derive(Clone, Debug)]
pub struct MagnusTable {
    graph: MarkedFatgraph,
    max_degree: usize,
    ell: Vec<Tensor>,
}

fn check_trivalent(m: &MarkedFatgraph) -> Result<()> {
    if !m.is_trivalent() {
        return Err(Error::InvalidGraph(
            "the Magnus expansion is defined for trivalent fatgraphs only".into(),
        ));
    }
    Ok(())
}

/// Boundary arc endpoints `(p, q)` in the boundary cycle for every oriented
/// edge that has a tail-avoiding arc.
fn arcs(m: &MarkedFatgraph) -> Vec<Option<(usize, usize)>> {
    let g = m.graph();
    (0..g.num_half_edges())
        .map(|x| {
            let (p, q) = (g.boundary_position(x), g.boundary_position(pair(x)));
            (p < q).then_some((p, q))
        })
        .collect()
}

impl MagnusTable {
    pub fn new(m: &MarkedFatgraph, max_degree: usize) -> Result<Self> {
        check_trivalent(m)?;
        if max_degree == 0 || max_degree > MAX_DEGREE {
            return Err(Error::Degree(max_degree));
        }
        let g = m.graph();
        let genus = m.genus();
        let n_half = g.num_half_edges();
        let cycle = g.boundary_cycle();
        let arcs = arcs(m);

        let mut ell: Vec<Tensor> = (0..n_half)
            .map(|x| Tensor::from_h(m.h(x), max_degree))
            .collect();
        let third = scalar::q(-1, 3);
        for n in 2..=max_degree {
            // Corner terms c_j = h(ℓ(f_j), -ℓ(f_{j+1}))_(n) along the cycle and
            // their prefix sums, so every arc sum is a difference.
            let mut prefix = Vec::with_capacity(cycle.len());
            let mut acc = Tensor::zero(genus, max_degree);
            prefix.push(acc.clone());
            for j in 0..cycle.len() - 1 {
                let y = -&ell[cycle[j + 1]];
                acc += &Tensor::hausdorff(&ell[cycle[j]], &y, n);
                prefix.push(acc.clone());
            }
            let mut layer = vec![Tensor::zero(genus, max_degree); n_half];
            for x in 0..n_half {
                if let Some((p, q)) = arcs[x] {
                    let v = (&prefix[q] - &prefix[p]).scale(&third);
                    layer[pair(x)] = -&v;
                    layer[x] = v;
                }
            }
            for (x, v) in layer.into_iter().enumerate() {
                ell[x] += &v;
            }
        }
        Ok(MagnusTable {
            graph: m.clone(),
            max_degree,
            ell,
        })
    }

    /// A table with precomputed values (indexed by the half-edges of `graph`).
    pub(crate) fn from_values(graph: &MarkedFatgraph, max_degree: usize, ell: Vec<Tensor>) -> Self {
        MagnusTable {
            graph: graph.clone(),
            max_degree,
            ell,
        }
    }

    pub fn graph(&self) -> &MarkedFatgraph {
        &self.graph
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn genus(&self) -> usize {
        self.graph.genus()
    }

    /// `ℓ^G(x)` through the truncation degree.
    pub fn ell(&self, x: HalfEdge) -> &Tensor {
        &self.ell[x]
    }

    /// `θ^G(x) = exp(ℓ^G(x))`.
    pub fn theta(&self, x: HalfEdge) -> Tensor {
        self.ell[x].exp_trunc(self.max_degree)
    }

    /// `ℓ^G` of the product of oriented edges `x_1 x_2 ⋯`, i.e. the iterated
    /// star product `ℓ(x_1) * ℓ(x_2) * ⋯`.
    pub fn ell_word(&self, word: &[HalfEdge]) -> Tensor {
        let mut prod = Tensor::one(self.genus(), self.max_degree);
        for &x in word {
            prod = &prod * &self.theta(x);
        }
        prod.log_trunc(self.max_degree)
    }

    /// One line per oriented edge `x` (one orientation per edge): the
    /// Lyndon-basis display of `ℓ(x)`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for k in 0..self.graph.graph().num_edges() {
            let x = 2 * k;
            s.push_str(&format!("ell[{x}] = {}\n", to_lie_string(&self.ell[x])));
        }
        s
    }
}

/// Convenience wrapper: `ℓ^G(x)` through degree `n`.
pub fn ell(m: &MarkedFatgraph, x: HalfEdge, n: usize) -> Result<Tensor> {
    Ok(MagnusTable::new(m, n)?.ell(x).clone())
}

/// The integral iterated integrals `P_x`, `Q_x`, `R_x` (degrees 2, 3, 4),
/// computed from their own summation formulas.
#[derive(Clone, Debug)]
pub struct Integrals {
    pub p: Vec<Tensor>,
    pub q: Vec<Tensor>,
    pub r: Vec<Tensor>,
    /// The alternative degree-3 integral `Q̂_x = Σ [f_{i-1}, P_{f_i}] + [P_{f_{i-1}}, f_i]`.
    pub q_hat: Vec<Tensor>,
}

impl Integrals {
    /// Tensors are truncated at degree `max(4, max_degree)`.
    pub fn new(m: &MarkedFatgraph) -> Result<Self> {
        check_trivalent(m)?;
        let g = m.graph();
        let genus = m.genus();
        let n = 4;
        let nh = g.num_half_edges();
        let cycle = g.boundary_cycle();
        let arcs = arcs(m);
        let f: Vec<Tensor> = (0..nh).map(|x| Tensor::from_h(m.h(x), n)).collect();
        let br = |x: &Tensor, y: &Tensor| x.bracket(y);

        // Sums over arcs of a per-corner term, antisymmetrized over reversal.
        let integrate = |corner: &dyn Fn(HalfEdge, HalfEdge) -> Tensor| {
            let mut prefix = vec![Tensor::zero(genus, n)];
            for j in 0..cycle.len() - 1 {
                let next = prefix[j].clone() + corner(cycle[j], cycle[j + 1]);
                prefix.push(next);
            }
            let mut out = vec![Tensor::zero(genus, n); nh];
            for x in 0..nh {
                if let Some((p, q)) = arcs[x] {
                    let v = &prefix[q] - &prefix[p];
                    out[pair(x)] = -&v;
                    out[x] = v;
                }
            }
            out
        };

        let p = integrate(&|a, b| br(&f[a], &f[b]));
        let q = integrate(&|a, b| {
            let ab = br(&f[a], &f[b]);
            let mut t = br(&f[a], &ab);
            t += &br(&f[b], &ab);
            t += &br(&f[a], &p[b]);
            t += &br(&p[a], &f[b]);
            t
        });
        let q_hat = integrate(&|a, b| &br(&f[a], &p[b]) + &br(&p[a], &f[b]));
        let r = integrate(&|a, b| {
            let (x, y) = (&f[a], &f[b]);
            let xy = br(x, y);
            let mut t = br(y, &br(x, &xy)).scale_int(3);
            t += &br(x, &br(x, &p[b]));
            t += &br(x, &br(&p[a], y));
            t += &br(&p[a], &xy);
            t += &br(y, &br(x, &p[b]));
            t += &br(y, &br(&p[a], y));
            t += &br(&p[b], &xy);
            t += &br(&p[a], &p[b]);
            t += &br(x, &q[b]);
            t += &br(&q[a], y);
            t
        });
        Ok(Integrals { p, q, r, q_hat })
    }
}

/// Checks the relations among `h`, `P`, `Q` at the two vertices of a move and
/// across it; returns the name of the first violated relation.
pub fn check_move_relations(w: &WhiteheadMove) -> std::result::Result<(), String> {
    let m = &w.source;
    let ints = Integrals::new(m).map_err(|e| e.to_string())?;
    let n = 4;
    let hv = |x: HalfEdge| Tensor::from_h(m.h(x), n);
    let (a, b, c, d, e) = (w.a(), w.b(), w.c(), w.d(), w.e());
    let (ta, tb, tc, td, te) = (hv(a), hv(b), hv(c), hv(d), hv(e));
    let p = |x: HalfEdge| &ints.p[x];
    let q = |x: HalfEdge| &ints.q[x];

    if !(&(&ta + &tb) + &te).is_zero() {
        return Err("a + b + e = 0".into());
    }
    if !(&(&(&ta + &tb) + &tc) + &td).is_zero() {
        return Err("a + b + c + d = 0".into());
    }
    let ab = ta.bracket(&tb);
    let cd = tc.bracket(&td);
    if &(p(a) + p(b)) + p(e) != ab.scale_int(-3) {
        return Err("P_a + P_b + P_e = -3[a,b]".into());
    }
    if &(&(p(a) + p(b)) + p(c)) + p(d) != &ab.scale_int(-3) + &cd.scale_int(-3) {
        return Err("P_a + P_b + P_c + P_d = -3[a,b] - 3[c,d]".into());
    }
    let rhs = (p(a).bracket(&tb) + ta.bracket(p(b)) + ta.bracket(&ab) - tb.bracket(&ab))
        .scale_int(-3);
    if &(q(a) + q(b)) + q(e) != rhs {
        return Err("Q_a + Q_b + Q_e = -3([P_a,b] + [a,P_b] + [a,[a,b]] - [b,[a,b]])".into());
    }
    Ok(())
}

/// Checks the vertex relations `P_a + P_b + P_e = -3[a,b]` and the `Q`
/// relation (for both `Q` and `Q̂`) at every trivalent vertex `[e, a, b]`.
pub fn check_vertex_relations(m: &MarkedFatgraph) -> std::result::Result<(), String> {
    let ints = Integrals::new(m).map_err(|e| e.to_string())?;
    let n = 4;
    for (id, vs) in m.graph().vertices().iter().enumerate().skip(1) {
        let (e, a, b) = (vs[0], vs[1], vs[2]);
        let ta = Tensor::from_h(m.h(a), n);
        let tb = Tensor::from_h(m.h(b), n);
        let ab = ta.bracket(&tb);
        if &(&ints.p[a] + &ints.p[b]) + &ints.p[e] != ab.scale_int(-3) {
            return Err(format!("P relation fails at vertex {id}"));
        }
        let rhs = (ints.p[a].bracket(&tb) + ta.bracket(&ints.p[b]) + ta.bracket(&ab)
            - tb.bracket(&ab))
        .scale_int(-3);
        for (name, q) in [("Q", &ints.q), ("Q-hat", &ints.q_hat)] {
            if &(&q[a] + &q[b]) + &q[e] != rhs {
                return Err(format!("{name} relation fails at vertex {id}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hvector, lie::omega};
    use crate::fatgraph::symplectic_graph;

    #[test]
    fn tail_theta_on_symplectic_graph() {
        for g in 1..=2 {
            let m = symplectic_graph(g).unwrap();
            let t = MagnusTable::new(&m, 4).unwrap();
            let th = t.theta(m.graph().tail());
            assert!(th.degree_part(1).is_zero());
            assert_eq!(th.degree_part(2), -&omega(g, 4));
            assert!(th.degree_part(3).is_zero());
        }
    }

    #[test]
    fn orientation_and_vertex_conditions() {
        let m = symplectic_graph(2).unwrap();
        let t = MagnusTable::new(&m, 5).unwrap();
        for x in 0..m.graph().num_half_edges() {
            assert_eq!(t.ell(pair(x)), &-t.ell(x));
            assert!(t.ell(x).is_lie());
            assert!(t.ell_word(&[x, pair(x)]).is_zero());
        }
        for vs in m.graph().vertices().iter().skip(1) {
            assert!(t.ell_word(vs).is_zero());
        }
    }

    #[test]
    fn integrals_match_scaled_ell() {
        let m = symplectic_graph(2).unwrap();
        let t = MagnusTable::new(&m, 4).unwrap();
        let ints = Integrals::new(&m).unwrap();
        for x in 0..m.graph().num_half_edges() {
            assert_eq!(ints.p[x], t.ell(x).degree_part(2).scale_int(6));
            assert_eq!(ints.q[x], t.ell(x).degree_part(3).scale_int(36));
            assert_eq!(ints.r[x], t.ell(x).degree_part(4).scale_int(216));
        }
        let tail = m.graph().tail();
        assert_eq!(ints.p[tail], omega(2, 4).scale_int(-6));
        check_vertex_relations(&m).unwrap();
    }

    #[test]
    fn symplectic_series_genus_one() {
        let m = symplectic_graph(1).unwrap();
        let t = MagnusTable::new(&m, 4).unwrap();
        let g = 1;
        let n = 4;
        let u = Tensor::letter(g, n, hvector::u(g, 1));
        let v = Tensor::letter(g, n, hvector::v(g, 1));
        let uv = u.bracket(&v);
        let expected = u.clone()
            + uv.scale(&scalar::q(1, 2))
            - u.bracket(&uv).scale(&scalar::q(1, 9))
            - v.bracket(&uv).scale(&scalar::q(1, 18))
            + (u.bracket(&u.bracket(&uv)) + u.bracket(&v.bracket(&uv))
                - v.bracket(&v.bracket(&uv)))
            .scale(&scalar::q(1, 72));
        let x = (0..m.graph().num_half_edges())
            .find(|&x| m.h(x) == &hvector::HVector::basis(g, 0))
            .unwrap();
        // Several edges may carry u; at least one carries the printed series.
        let found = (0..m.graph().num_half_edges())
            .filter(|&y| m.h(y) == m.h(x))
            .any(|y| t.ell(y) == &expected);
        assert!(found, "{}", t.to_text());
    }
}

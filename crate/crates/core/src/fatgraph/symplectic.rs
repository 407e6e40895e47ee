//! The symplectic fatgraph `G₀` of genus `g`.
//!
//! Each handle `i` is a block of three trivalent vertices `R, P, Q` with
//! edges `α (R–P)`, `β (R–Q)`, `μ, ν (P–Q)` and a stem leaving `R`:
//!
//! ```text
//! R = [stem, α, β]   P = [α, μ, ν]   Q = [β, μ, ν]
//! ```
//!
//! marked by `μ ↦ u_i`, `ν ↦ v_i` (oriented into `P`), `α ↦ v_i⁻¹u_i⁻¹`,
//! `β ↦ v_i u_i` (into `P`, `Q`), so the stem carries `[u_i, v_i]`.
//! Handles are chained by trivalent vertices `S = [out, previous, handle]`
//! and the last stem ends at the univalent vertex, giving
//! `π(t̄) = Π_i [u_i, v_i]`.

use super::freegroup::FreeWord;
use super::graph::{pair, Fatgraph, HalfEdge};
use super::marking::MarkedFatgraph;
use crate::algebra::hvector;
use crate::error::{Error, Result};

struct Builder {
    next: Vec<HalfEdge>,
    pi: Vec<FreeWord>,
}

impl Builder {
    /// A new edge; returns its two half-edges `(x, pair(x))` and marks the
    /// first with `w`.
    fn edge(&mut self, w: FreeWord) -> (HalfEdge, HalfEdge) {
        let x = self.next.len();
        self.next.extend([x, x + 1]);
        self.pi.push(w.clone());
        self.pi.push(w.inverse());
        (x, x + 1)
    }

    fn vertex(&mut self, hs: &[HalfEdge]) {
        for i in 0..hs.len() {
            self.next[hs[i]] = hs[(i + 1) % hs.len()];
        }
    }

    /// Builds handle `i` and returns the stem half-edge pointing out of the
    /// block, marked `[u_i, v_i]`.
    fn handle(&mut self, genus: usize, i: usize) -> HalfEdge {
        let u = FreeWord::generator(hvector::u(genus, i));
        let v = FreeWord::generator(hvector::v(genus, i));
        let (mu_p, mu_q) = self.edge(u.clone());
        let (nu_p, nu_q) = self.edge(v.clone());
        let (alpha_p, alpha_r) = self.edge(v.inverse().mul(&u.inverse()));
        let (beta_q, beta_r) = self.edge(v.mul(&u));
        let (stem_out, stem_r) = self.edge(FreeWord::commutator(&u, &v));
        self.vertex(&[stem_r, alpha_r, beta_r]);
        self.vertex(&[alpha_p, mu_p, nu_p]);
        self.vertex(&[beta_q, mu_q, nu_q]);
        stem_out
    }
}

/// The symplectic fatgraph of genus `g` with its standard π-marking, together
/// with the edge ids of the separating edges `t'_1, …, t'_g`: `t'_h` cuts off
/// the first `h` handles (`t'_g` is the tail).
pub fn symplectic_graph_with_separators(genus: usize) -> Result<(MarkedFatgraph, Vec<usize>)> {
    if genus == 0 {
        return Err(Error::Genus);
    }
    let mut b = Builder {
        next: Vec::new(),
        pi: Vec::new(),
    };
    let mut current = b.handle(genus, 1);
    let mut separators = vec![current / 2];
    for i in 2..=genus {
        let handle = b.handle(genus, i);
        let w = b.pi[current].mul(&b.pi[handle]);
        let (out, s_in) = b.edge(w);
        b.vertex(&[s_in, current, handle]);
        current = out;
        separators.push(current / 2);
    }
    b.vertex(&[current]);
    let graph = Fatgraph::new(b.next, current)?;
    debug_assert_eq!(pair(graph.tail()), current);
    let m = MarkedFatgraph::from_pi(graph, b.pi)?;
    Ok((m, separators))
}

/// The symplectic fatgraph of genus `g` with its standard π-marking.
pub fn symplectic_graph(genus: usize) -> Result<MarkedFatgraph> {
    Ok(symplectic_graph_with_separators(genus)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HVector;

    #[test]
    fn genus_and_geometricity() {
        for g in 1..=3 {
            let m = symplectic_graph(g).unwrap();
            assert_eq!(m.graph().genus(), g);
            assert!(m.is_trivalent());
            assert_eq!(m.graph().num_edges(), 6 * g - 1);
            assert_eq!(m.validate(), Ok(()), "genus {g}");
            assert!(m.h(m.graph().root()).is_zero());
        }
        assert!(matches!(symplectic_graph(0), Err(Error::Genus)));
    }

    #[test]
    fn scaled_marking_is_not_geometric() {
        let m = symplectic_graph(1).unwrap();
        let doubled = m.map_h(|x| {
            let mut c = x.coords().to_vec();
            c[0] = &c[0] * crate::algebra::scalar::int(2);
            HVector::from_coords(1, c)
        });
        assert!(doubled.check_algebraic().is_none());
        assert!(!doubled.is_geometric());
        let zero = MarkedFatgraph::new_unchecked(
            m.graph().clone(),
            1,
            vec![HVector::zero(1); m.graph().num_half_edges()],
            None,
        );
        assert!(!zero.is_geometric());
    }

    #[test]
    fn separators_cut_off_handles() {
        let (m, seps) = symplectic_graph_with_separators(3).unwrap();
        assert_eq!(seps.len(), 3);
        assert_eq!(*seps.last().unwrap(), m.graph().tail_edge());
        let g = 3;
        for (h, &e) in seps.iter().enumerate() {
            let expected = (1..=h + 1).fold(FreeWord::identity(), |acc, i| {
                acc.mul(&FreeWord::commutator(
                    &FreeWord::generator(hvector::u(g, i)),
                    &FreeWord::generator(hvector::v(g, i)),
                ))
            });
            assert_eq!(m.pi(2 * e).unwrap(), &expected);
        }
    }
}

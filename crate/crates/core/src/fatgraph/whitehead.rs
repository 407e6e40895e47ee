//! Whitehead moves with marking transport, move paths and rooted
//! isomorphisms.
//!
//! Collapsing edge `k` with half-edges `e = 2k` (at `v₁ = [e, a, b]`) and
//! `ē = 2k + 1` (at `v₂ = [ē, c, d]`) and expanding the other way gives the
//! vertices `[f, b, c]` and `[f̄, d, a]`. The new edge `f` reuses the ids of
//! `e`, with `f = 2k` at the first new vertex. Its markings are forced by the
//! vertex conditions: `h(f) = -(h(b) + h(c))` and `π(f) = (π(b) π(c))⁻¹`.
//!
//! The labels `a, b, c, d` are the oriented edges pointing into the two
//! endpoints of `e`; they satisfy `h(a) + h(b) + h(e) = 0` and
//! `h(a) + h(b) + h(c) + h(d) = 0`.

use super::freegroup::FreeWord;
use super::graph::{pair, Fatgraph, HalfEdge};
use super::marking::MarkedFatgraph;
use crate::error::{Error, Result};

/// One Whitehead move together with its source and result.
#[derive(Clone, Debug)]
pub struct WhiteheadMove {
    pub source: MarkedFatgraph,
    pub result: MarkedFatgraph,
    /// Edge id of the collapsed edge `e` (and of the new edge `f`).
    pub edge: usize,
    /// The oriented edges `(a, b, c, d)` around `e`, valid in both graphs.
    pub labels: [HalfEdge; 4],
}

impl WhiteheadMove {
    pub fn a(&self) -> HalfEdge {
        self.labels[0]
    }
    pub fn b(&self) -> HalfEdge {
        self.labels[1]
    }
    pub fn c(&self) -> HalfEdge {
        self.labels[2]
    }
    pub fn d(&self) -> HalfEdge {
        self.labels[3]
    }
    /// The collapsed edge `e`, oriented into the vertex carrying `a, b`.
    pub fn e(&self) -> HalfEdge {
        2 * self.edge
    }
}

/// Labels `(a, b, c, d)` for a move on `edge`, after checking that the move
/// is allowed.
pub fn move_labels(g: &Fatgraph, edge: usize) -> Result<[HalfEdge; 4]> {
    let err = |reason: &str| Error::Move {
        edge,
        reason: reason.into(),
    };
    if edge >= g.num_edges() {
        return Err(err("no such edge"));
    }
    if edge == g.tail_edge() {
        return Err(err("the tail cannot be collapsed"));
    }
    let e = 2 * edge;
    let eb = e + 1;
    if g.vertex_of(e) == g.vertex_of(eb) {
        return Err(err("edge is a loop"));
    }
    if g.valence(e) != 3 || g.valence(eb) != 3 {
        return Err(err("endpoints must be trivalent"));
    }
    let a = g.next(e);
    let b = g.next(a);
    let c = g.next(eb);
    let d = g.next(c);
    Ok([a, b, c, d])
}

/// Performs the Whitehead move on `edge`.
pub fn whitehead(m: &MarkedFatgraph, edge: usize) -> Result<WhiteheadMove> {
    let g = m.graph();
    let [a, b, c, d] = move_labels(g, edge)?;
    let e = 2 * edge;
    let eb = e + 1;
    let mut next = g.rotation().to_vec();
    next[e] = b;
    next[b] = c;
    next[c] = e;
    next[eb] = d;
    next[d] = a;
    next[a] = eb;
    let graph = Fatgraph::new(next, g.root()).map_err(|err| Error::Move {
        edge,
        reason: format!("result is invalid: {err}"),
    })?;

    let mut h = m.h_marking().to_vec();
    let hf = -&(m.h(b) + m.h(c));
    h[eb] = -&hf;
    h[e] = hf;
    let pi = m.pi_marking().map(|p| {
        let mut p = p.to_vec();
        let w = p[b].mul(&p[c]).inverse();
        p[eb] = w.inverse();
        p[e] = w;
        p
    });
    let result = MarkedFatgraph::new_unchecked(graph, m.genus(), h, pi);
    debug_assert!(result.check_algebraic().is_none());
    Ok(WhiteheadMove {
        source: m.clone(),
        result,
        edge,
        labels: [a, b, c, d],
    })
}

/// A sequence of Whitehead moves with every intermediate graph retained.
#[derive(Clone, Debug)]
pub struct MovePath {
    pub initial: MarkedFatgraph,
    pub edges: Vec<usize>,
    pub moves: Vec<WhiteheadMove>,
}

impl MovePath {
    pub fn final_graph(&self) -> &MarkedFatgraph {
        self.moves.last().map_or(&self.initial, |m| &m.result)
    }

    /// All graphs along the path, starting with the initial one.
    pub fn graphs(&self) -> impl Iterator<Item = &MarkedFatgraph> {
        std::iter::once(&self.initial).chain(self.moves.iter().map(|m| &m.result))
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Applies the moves on `edges` in order.
pub fn apply_path(m: &MarkedFatgraph, edges: &[usize]) -> Result<MovePath> {
    let mut moves: Vec<WhiteheadMove> = Vec::with_capacity(edges.len());
    for (step, &edge) in edges.iter().enumerate() {
        let cur = moves.last().map_or(m, |w| &w.result);
        let w = whitehead(cur, edge).map_err(|e| Error::PathStep {
            step,
            source: Box::new(e),
        })?;
        moves.push(w);
    }
    Ok(MovePath {
        initial: m.clone(),
        edges: edges.to_vec(),
        moves,
    })
}

/// The move sequence undoing `edges`: each move is undone by repeating it on
/// the same edge id, in reverse order.
pub fn reverse_edges(edges: &[usize]) -> Vec<usize> {
    edges.iter().rev().copied().collect()
}

/// The unique isomorphism `ψ` of half-edges with `ψ(root) = root'` commuting
/// with `next` and `pair`, if it exists.
pub fn rooted_isomorphism(g: &Fatgraph, h: &Fatgraph) -> Option<Vec<HalfEdge>> {
    let n = g.num_half_edges();
    if h.num_half_edges() != n {
        return None;
    }
    let mut psi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    psi[g.root()] = h.root();
    used[h.root()] = true;
    let mut stack = vec![g.root()];
    while let Some(x) = stack.pop() {
        let y = psi[x];
        for (xn, yn) in [(g.next(x), h.next(y)), (pair(x), pair(y))] {
            if psi[xn] == usize::MAX {
                if used[yn] {
                    return None;
                }
                psi[xn] = yn;
                used[yn] = true;
                stack.push(xn);
            } else if psi[xn] != yn {
                return None;
            }
        }
    }
    psi.iter().all(|&p| p != usize::MAX).then_some(psi)
}

/// Checks that the path realizes the free-group automorphism `φ`, given by
/// the images of the generators: transporting the π-marking along the path
/// and pulling back through the rooted isomorphism to the initial graph must
/// give `φ` applied to the initial π-marking, on every oriented edge.
pub fn pi_verify(path: &MovePath, phi: &[FreeWord]) -> Result<bool> {
    let start = &path.initial;
    let end = path.final_graph();
    let psi = rooted_isomorphism(start.graph(), end.graph()).ok_or(Error::NotIsomorphic)?;
    let (p0, p1) = match (start.pi_marking(), end.pi_marking()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::InvalidMarking(
                "pi_verify needs π-markings on the path".into(),
            ))
        }
    };
    Ok((0..start.graph().num_half_edges()).all(|x| p1[psi[x]] == p0[x].substitute(phi)))
}

/// Whether the end of the path is isomorphic to its start with identical
/// H-markings (and π-markings when both are present).
pub fn returns_to_start(path: &MovePath) -> bool {
    let start = &path.initial;
    let end = path.final_graph();
    let Some(psi) = rooted_isomorphism(start.graph(), end.graph()) else {
        return false;
    };
    let n = start.graph().num_half_edges();
    (0..n).all(|x| start.h(x) == end.h(psi[x]))
        && match (start.pi_marking(), end.pi_marking()) {
            (Some(a), Some(b)) => (0..n).all(|x| a[x] == b[psi[x]]),
            _ => true,
        }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::symplectic::symplectic_graph;

    #[test]
    fn move_preserves_marking_conditions() {
        let m = symplectic_graph(2).unwrap();
        for edge in 0..m.graph().num_edges() {
            let Ok(w) = whitehead(&m, edge) else { continue };
            assert_eq!(w.result.check_algebraic(), None);
            assert!(w.result.is_geometric());
            assert_eq!(w.result.graph().genus(), 2);
            let (a, b, c, d) = (w.a(), w.b(), w.c(), w.d());
            let s = &(&(m.h(a) + m.h(b)) + m.h(c)) + m.h(d);
            assert!(s.is_zero());
            assert!((&(m.h(a) + m.h(b)) + m.h(w.e())).is_zero());
        }
    }

    #[test]
    fn move_twice_returns() {
        let m = symplectic_graph(1).unwrap();
        for edge in 0..m.graph().num_edges() {
            if whitehead(&m, edge).is_err() {
                continue;
            }
            let p = apply_path(&m, &[edge, edge]).unwrap();
            assert!(returns_to_start(&p));
            let id: Vec<FreeWord> = (0..2).map(FreeWord::generator).collect();
            assert!(pi_verify(&p, &id).unwrap());
        }
    }

    #[test]
    fn invalid_moves() {
        let m = symplectic_graph(1).unwrap();
        let t = m.graph().tail_edge();
        assert!(matches!(whitehead(&m, t), Err(Error::Move { .. })));
        assert!(whitehead(&m, 99).is_err());
        let err = apply_path(&m, &[0, t]).unwrap_err();
        assert!(matches!(err, Error::PathStep { step: 1, .. }));
    }

    #[test]
    fn empty_path_is_identity() {
        let m = symplectic_graph(2).unwrap();
        let p = apply_path(&m, &[]).unwrap();
        let id: Vec<FreeWord> = (0..4).map(FreeWord::generator).collect();
        assert!(pi_verify(&p, &id).unwrap());
    }
}

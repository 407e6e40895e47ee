//! Closed move sequences in the fatgraph groupoid: involutions, commuting
//! squares and pentagons, and the check that every lifted invariant is
//! trivial around them.

use crate::cocycle::{j1_path, j2_path};
use crate::error::Result;
use crate::fatgraph::{apply_path, returns_to_start, whitehead, MarkedFatgraph, MovePath};
use crate::johnson::tau_path;

/// The kind of relation a loop witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopKind {
    /// `W_e W_e`.
    Involution,
    /// `W_e W_f W_e W_f` for moves with disjoint support.
    Commutativity,
    /// Five alternating moves on two adjacent edges.
    Pentagon,
}

/// What the invariants evaluate to around a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopReport {
    pub kind: LoopKind,
    pub edges: Vec<usize>,
    pub j1_zero: bool,
    pub j2_identity: bool,
    /// `tau_path` is the identity through the checked degree.
    pub tau_trivial: bool,
}

impl LoopReport {
    pub fn passed(&self) -> bool {
        self.j1_zero && self.j2_identity && self.tau_trivial
    }
}

/// Edge ids on which a Whitehead move is defined.
pub fn movable_edges(m: &MarkedFatgraph) -> Vec<usize> {
    (0..m.graph().num_edges())
        .filter(|&e| whitehead(m, e).is_ok())
        .collect()
}

fn endpoints(m: &MarkedFatgraph, e: usize) -> [usize; 2] {
    let g = m.graph();
    [g.vertex_of(2 * e), g.vertex_of(2 * e + 1)]
}

fn closed(m: &MarkedFatgraph, edges: &[usize]) -> Option<MovePath> {
    let path = apply_path(m, edges).ok()?;
    returns_to_start(&path).then_some(path)
}

/// One involution loop per movable edge.
pub fn involution_loops(m: &MarkedFatgraph) -> Vec<(LoopKind, MovePath)> {
    movable_edges(m)
        .into_iter()
        .filter_map(|e| closed(m, &[e, e]).map(|p| (LoopKind::Involution, p)))
        .collect()
}

/// Commuting squares on pairs of movable edges with no common endpoint.
pub fn commutativity_loops(m: &MarkedFatgraph, limit: usize) -> Vec<(LoopKind, MovePath)> {
    let edges = movable_edges(m);
    let mut out = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if out.len() >= limit {
                return out;
            }
            let (pe, pf) = (endpoints(m, e), endpoints(m, f));
            if pe.iter().any(|v| pf.contains(v)) {
                continue;
            }
            if let Some(p) = closed(m, &[e, f, e, f]) {
                out.push((LoopKind::Commutativity, p));
            }
        }
    }
    out
}

/// Pentagons `e f e f e` on adjacent movable edges that close up.
pub fn pentagon_loops(m: &MarkedFatgraph) -> Vec<(LoopKind, MovePath)> {
    let edges = movable_edges(m);
    let mut out = Vec::new();
    for &e in &edges {
        for &f in &edges {
            if e == f {
                continue;
            }
            let (pe, pf) = (endpoints(m, e), endpoints(m, f));
            if !pe.iter().any(|v| pf.contains(v)) {
                continue;
            }
            if let Some(p) = closed(m, &[e, f, e, f, e]) {
                out.push((LoopKind::Pentagon, p));
            }
        }
    }
    out
}

/// Every graph reachable from `m` in at most `radius` moves, with
/// duplicates (by rooted isomorphism and H-marking) removed.
pub fn neighborhood(m: &MarkedFatgraph, radius: usize) -> Vec<MarkedFatgraph> {
    let same = |a: &MarkedFatgraph, b: &MarkedFatgraph| {
        crate::fatgraph::rooted_isomorphism(a.graph(), b.graph()).is_some_and(|psi| {
            (0..a.graph().num_half_edges()).all(|x| a.h(x) == b.h(psi[x]))
        })
    };
    let mut seen = vec![m.clone()];
    let mut frontier = vec![m.clone()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            for e in movable_edges(g) {
                let Ok(w) = whitehead(g, e) else { continue };
                if !seen.iter().any(|s| same(s, &w.result)) {
                    seen.push(w.result.clone());
                    next.push(w.result);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Evaluates `j₁`, `j₂` and `τ_{≤m}` around a closed path.
pub fn check_loop(kind: LoopKind, path: &MovePath, m: usize) -> Result<LoopReport> {
    Ok(LoopReport {
        kind,
        edges: path.edges.clone(),
        j1_zero: j1_path(path).is_zero(),
        j2_identity: j2_path(path)?.is_identity(),
        tau_trivial: tau_path(path, m)?.is_identity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::symplectic_graph;

    #[test]
    fn loops_near_the_symplectic_graph() {
        let m = symplectic_graph(2).unwrap();
        let inv = involution_loops(&m);
        assert_eq!(inv.len(), movable_edges(&m).len());
        let comm = commutativity_loops(&m, 5);
        assert_eq!(comm.len(), 5);
        for (kind, path) in inv.iter().chain(&comm) {
            let r = check_loop(*kind, path, 3).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn pentagons_exist_nearby() {
        let m = symplectic_graph(1).unwrap();
        let found: Vec<_> = neighborhood(&m, 2)
            .iter()
            .flat_map(pentagon_loops)
            .collect();
        assert!(!found.is_empty());
        for (kind, path) in &found {
            let r = check_loop(*kind, path, 3).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

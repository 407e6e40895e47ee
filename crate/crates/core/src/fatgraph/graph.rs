//! Combinatorial once-bordered fatgraphs in half-edge form.
//!
//! Edge `k` consists of the half-edges `2k` and `2k + 1`, so `pair(h) = h ^ 1`.
//! `next` is the cyclic order of half-edges around each vertex. An oriented
//! edge is identified with the half-edge at its terminal end; its reverse is
//! the paired half-edge.
//!
//! The boundary successor of an oriented edge `h` is `pair(next(h))`: arrive
//! at a vertex along `h`, turn to the next half-edge there, and leave along it.

use crate::error::{Error, Result};

pub type HalfEdge = usize;

pub fn pair(h: HalfEdge) -> HalfEdge {
    h ^ 1
}

pub fn edge_of(h: HalfEdge) -> usize {
    h / 2
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fatgraph {
    next: Vec<HalfEdge>,
    root: HalfEdge,
    vertex_of: Vec<usize>,
    vertices: Vec<Vec<HalfEdge>>,
    cycle: Vec<HalfEdge>,
    position: Vec<usize>,
}

impl Fatgraph {
    /// Builds and validates a fatgraph from its vertex rotation and the
    /// half-edge at the univalent vertex.
    ///
    /// Requirements: `next` is a permutation of `0..2E`; the root's vertex is
    /// univalent and every other vertex has valence at least 3; the graph is
    /// connected and has exactly one boundary cycle.
    pub fn new(next: Vec<HalfEdge>, root: HalfEdge) -> Result<Self> {
        let n = next.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::InvalidGraph("half-edge count must be even and positive".into()));
        }
        let mut seen = vec![false; n];
        for &h in &next {
            if h >= n || seen[h] {
                return Err(Error::InvalidGraph("rotation is not a permutation".into()));
            }
            seen[h] = true;
        }
        if root >= n {
            return Err(Error::InvalidGraph(format!("tail half-edge {root} out of range")));
        }

        let mut vertex_of = vec![usize::MAX; n];
        let mut vertices = Vec::new();
        // Enumerate vertices starting from the root so ids are deterministic.
        for start in std::iter::once(root).chain(0..n) {
            if vertex_of[start] != usize::MAX {
                continue;
            }
            let id = vertices.len();
            let mut orbit = Vec::new();
            let mut h = start;
            loop {
                vertex_of[h] = id;
                orbit.push(h);
                h = next[h];
                if h == start {
                    break;
                }
            }
            vertices.push(orbit);
        }
        if vertices[0].len() != 1 {
            return Err(Error::InvalidGraph(format!(
                "tail half-edge {root} is not at a univalent vertex"
            )));
        }
        for (id, vs) in vertices.iter().enumerate().skip(1) {
            if vs.len() < 3 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {id} (half-edges {vs:?}) has valence {} < 3",
                    vs.len()
                )));
            }
        }

        // Connectivity over vertices via edges.
        let mut reached = vec![false; vertices.len()];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for &h in &vertices[v] {
                let w = vertex_of[pair(h)];
                if !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = reached.iter().position(|r| !r) {
            return Err(Error::InvalidGraph(format!("graph is disconnected (vertex {v} unreachable)")));
        }

        // The boundary cycle listed from the tail t = pair(root).
        let t = pair(root);
        let mut cycle = Vec::with_capacity(n);
        let mut h = t;
        loop {
            cycle.push(h);
            h = pair(next[h]);
            if h == t {
                break;
            }
        }
        if cycle.len() != n {
            return Err(Error::InvalidGraph(format!(
                "not once-bordered: boundary cycle through the tail has length {} of {n}",
                cycle.len()
            )));
        }
        let mut position = vec![0; n];
        for (i, &h) in cycle.iter().enumerate() {
            position[h] = i;
        }
        Ok(Fatgraph {
            next,
            root,
            vertex_of,
            vertices,
            cycle,
            position,
        })
    }

    pub fn num_half_edges(&self) -> usize {
        self.next.len()
    }

    pub fn num_edges(&self) -> usize {
        self.next.len() / 2
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn next(&self, h: HalfEdge) -> HalfEdge {
        self.next[h]
    }

    pub fn rotation(&self) -> &[HalfEdge] {
        &self.next
    }

    /// Half-edge at the univalent vertex (the reversed tail `t̄`).
    pub fn root(&self) -> HalfEdge {
        self.root
    }

    /// The tail `t`, oriented away from the univalent vertex.
    pub fn tail(&self) -> HalfEdge {
        pair(self.root)
    }

    pub fn tail_edge(&self) -> usize {
        edge_of(self.root)
    }

    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        self.vertex_of[h]
    }

    /// Vertices as cyclically ordered half-edge lists; vertex 0 is univalent.
    pub fn vertices(&self) -> &[Vec<HalfEdge>] {
        &self.vertices
    }

    pub fn valence(&self, h: HalfEdge) -> usize {
        self.vertices[self.vertex_of[h]].len()
    }

    /// Every vertex other than the tail's is trivalent.
    pub fn is_trivalent(&self) -> bool {
        self.vertices.iter().skip(1).all(|v| v.len() == 3)
    }

    pub fn genus(&self) -> usize {
        // V - E = 1 - 2g
        (1 + self.num_edges() - self.num_vertices()) / 2
    }

    pub fn boundary_successor(&self, h: HalfEdge) -> HalfEdge {
        pair(self.next[h])
    }

    /// The boundary cycle starting at the tail `t` and ending at `t̄`.
    pub fn boundary_cycle(&self) -> &[HalfEdge] {
        &self.cycle
    }

    /// Position of an oriented edge in [`Fatgraph::boundary_cycle`].
    pub fn boundary_position(&self, h: HalfEdge) -> usize {
        self.position[h]
    }

    /// The boundary arc `x = f_0, f_1, ..., f_k = x̄` avoiding the tail in its
    /// interior, if it exists. For `x = t` this is the whole boundary cycle.
    pub fn edge_path(&self, x: HalfEdge) -> Option<&[HalfEdge]> {
        let (p, q) = (self.position[x], self.position[pair(x)]);
        if p < q {
            Some(&self.cycle[p..=q])
        } else {
            None
        }
    }

    /// Skew pairing of oriented edges read off the boundary order starting
    /// at `a`: `-1` for `(a, b, ā, b̄)`, `+1` for `(a, b̄, ā, b)`, else `0`.
    pub fn skew_pair(&self, a: HalfEdge, b: HalfEdge) -> i64 {
        if edge_of(a) == edge_of(b) {
            return 0;
        }
        let n = self.cycle.len();
        let rel = |h: HalfEdge| (self.position[h] + n - self.position[a]) % n;
        let (pb, pab, pbb) = (rel(b), rel(pair(a)), rel(pair(b)));
        if pb < pab && pab < pbb {
            -1
        } else if pbb < pab && pab < pb {
            1
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The genus-one handle: a root vertex and three trivalent vertices.
    fn handle() -> Fatgraph {
        // Edges: t=0 (0 root,1 at R), α=1 (2 at R,3 at P), β=2 (4 at R,5 at Q),
        // μ=3 (6 at P,7 at Q), ν=4 (8 at P,9 at Q).
        let mut next = vec![0; 10];
        let mut cyc = |vs: &[usize]| {
            for i in 0..vs.len() {
                next[vs[i]] = vs[(i + 1) % vs.len()];
            }
        };
        cyc(&[0]);
        cyc(&[1, 2, 4]);
        cyc(&[3, 6, 8]);
        cyc(&[5, 7, 9]);
        Fatgraph::new(next, 0).unwrap()
    }

    #[test]
    fn handle_is_genus_one_and_once_bordered() {
        let g = handle();
        assert_eq!(g.genus(), 1);
        assert_eq!(g.boundary_cycle().len(), 10);
        assert_eq!(g.boundary_cycle()[0], g.tail());
        assert_eq!(*g.boundary_cycle().last().unwrap(), g.root());
        assert!(g.is_trivalent());
    }

    #[test]
    fn edge_paths_partition() {
        let g = handle();
        assert_eq!(g.edge_path(g.tail()).unwrap().len(), 10);
        assert!(g.edge_path(g.root()).is_none());
        for h in 2..10 {
            assert!(g.edge_path(h).is_some() ^ g.edge_path(pair(h)).is_some());
        }
    }

    #[test]
    fn skew_pair_is_skew() {
        let g = handle();
        for a in 0..10 {
            assert_eq!(g.skew_pair(a, a), 0);
            assert_eq!(g.skew_pair(a, pair(a)), 0);
            for b in 0..10 {
                assert_eq!(g.skew_pair(a, b), -g.skew_pair(b, a));
            }
        }
    }

    #[test]
    fn rejects_bad_graphs() {
        // A tree with a second univalent vertex.
        let next = vec![0, 2, 4, 1, 3, 5];
        assert!(Fatgraph::new(next, 0).is_err());
        // Not a permutation.
        assert!(Fatgraph::new(vec![0, 0], 0).is_err());
        // Creates a second univalent vertex.
        let mut g = handle().rotation().to_vec();
        g.swap(1, 2);
        assert!(Fatgraph::new(g, 0).is_err());
    }
}

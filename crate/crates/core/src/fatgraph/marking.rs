//! H- and π-markings of once-bordered fatgraphs.

use super::freegroup::FreeWord;
use super::graph::{edge_of, pair, Fatgraph, HalfEdge};
use crate::algebra::hvector::{dot, HVector};
use crate::algebra::linalg;
use crate::algebra::scalar;
use crate::error::{Error, Result};

/// A fatgraph with an H-marking on oriented edges and an optional π-marking.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedFatgraph {
    graph: Fatgraph,
    genus: usize,
    h: Vec<HVector>,
    pi: Option<Vec<FreeWord>>,
}

/// First violated marking condition, with a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MarkingDefect {
    Orientation { half_edge: HalfEdge },
    Vertex { vertex: usize, half_edges: Vec<HalfEdge> },
    Tail,
    Rank { rank: usize },
    Geometric { a: HalfEdge, b: HalfEdge, skew: i64, dot: String },
    PiOrientation { half_edge: HalfEdge },
    PiVertex { vertex: usize },
    PiBoundary { found: String },
    PiAbelianization { half_edge: HalfEdge },
}

impl std::fmt::Display for MarkingDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MarkingDefect::Orientation { half_edge } => write!(
                f,
                "orientation condition fails on edge {} (h(ē) ≠ -h(e) at half-edge {half_edge})",
                edge_of(*half_edge)
            ),
            MarkingDefect::Vertex { vertex, half_edges } => write!(
                f,
                "vertex condition fails at vertex {vertex} (half-edges {half_edges:?} do not sum to 0)"
            ),
            MarkingDefect::Tail => write!(f, "the tail is not marked 0"),
            MarkingDefect::Rank { rank } => {
                write!(f, "marking values span a subspace of rank {rank} < 2g")
            }
            MarkingDefect::Geometric { a, b, skew, dot } => write!(
                f,
                "not geometric: skew pairing of half-edges {a}, {b} is {skew} but h(a)·h(b) = {dot}"
            ),
            MarkingDefect::PiOrientation { half_edge } => {
                write!(f, "π-marking orientation fails at half-edge {half_edge}")
            }
            MarkingDefect::PiVertex { vertex } => {
                write!(f, "π-marking vertex product is not 1 at vertex {vertex}")
            }
            MarkingDefect::PiBoundary { found } => {
                write!(f, "π-marking of the reversed tail is {found}, expected the boundary word")
            }
            MarkingDefect::PiAbelianization { half_edge } => write!(
                f,
                "π-marking does not abelianize to the H-marking at half-edge {half_edge}"
            ),
        }
    }
}

impl MarkedFatgraph {
    /// Attaches markings without validation; see [`MarkedFatgraph::validate`].
    pub fn new_unchecked(
        graph: Fatgraph,
        genus: usize,
        h: Vec<HVector>,
        pi: Option<Vec<FreeWord>>,
    ) -> Self {
        MarkedFatgraph { graph, genus, h, pi }
    }

    /// Attaches markings and checks the orientation, vertex and tail
    /// conditions and the π/H consistency. Geometricity is not required.
    pub fn new(
        graph: Fatgraph,
        h: Vec<HVector>,
        pi: Option<Vec<FreeWord>>,
    ) -> Result<Self> {
        let genus = graph.genus();
        if genus == 0 {
            return Err(Error::Genus);
        }
        if h.len() != graph.num_half_edges() || h.iter().any(|v| v.genus() != genus) {
            return Err(Error::InvalidMarking("H-marking has the wrong shape".into()));
        }
        if let Some(p) = &pi {
            if p.len() != graph.num_half_edges() || p.iter().any(|w| w.max_letter() > 2 * genus) {
                return Err(Error::InvalidMarking("π-marking has the wrong shape".into()));
            }
        }
        let m = MarkedFatgraph { graph, genus, h, pi };
        if let Some(d) = m.check_algebraic() {
            return Err(Error::InvalidMarking(d.to_string()));
        }
        Ok(m)
    }

    /// Derives the H-marking from a π-marking by abelianization.
    pub fn from_pi(graph: Fatgraph, pi: Vec<FreeWord>) -> Result<Self> {
        let g = graph.genus();
        let h = pi.iter().map(|w| w.abelianize(g)).collect();
        Self::new(graph, h, Some(pi))
    }

    pub fn graph(&self) -> &Fatgraph {
        &self.graph
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn h(&self, e: HalfEdge) -> &HVector {
        &self.h[e]
    }

    pub fn h_marking(&self) -> &[HVector] {
        &self.h
    }

    pub fn pi(&self, e: HalfEdge) -> Option<&FreeWord> {
        self.pi.as_ref().map(|p| &p[e])
    }

    pub fn pi_marking(&self) -> Option<&[FreeWord]> {
        self.pi.as_deref()
    }

    /// The same fatgraph with the π-marking discarded.
    pub fn without_pi(&self) -> Self {
        MarkedFatgraph {
            pi: None,
            ..self.clone()
        }
    }

    /// Orientation, vertex, tail, rank and π conditions; `None` if all hold.
    pub fn check_algebraic(&self) -> Option<MarkingDefect> {
        let g = &self.graph;
        for e in 0..g.num_half_edges() {
            if self.h[pair(e)] != -&self.h[e] {
                return Some(MarkingDefect::Orientation { half_edge: e });
            }
        }
        for (id, vs) in g.vertices().iter().enumerate().skip(1) {
            let sum = vs.iter().fold(HVector::zero(self.genus), |s, &x| &s + &self.h[x]);
            if !sum.is_zero() {
                return Some(MarkingDefect::Vertex {
                    vertex: id,
                    half_edges: vs.clone(),
                });
            }
        }
        if !self.h[g.root()].is_zero() {
            return Some(MarkingDefect::Tail);
        }
        let rows: linalg::Matrix = (0..g.num_edges())
            .map(|k| self.h[2 * k].coords().to_vec())
            .collect();
        let rank = linalg::rank(&rows);
        if rank < 2 * self.genus {
            return Some(MarkingDefect::Rank { rank });
        }
        if let Some(pi) = &self.pi {
            for e in 0..g.num_half_edges() {
                if !pi[pair(e)].mul(&pi[e]).is_identity() {
                    return Some(MarkingDefect::PiOrientation { half_edge: e });
                }
            }
            for (id, vs) in g.vertices().iter().enumerate().skip(1) {
                let prod = vs.iter().fold(FreeWord::identity(), |acc, &x| acc.mul(&pi[x]));
                if !prod.is_identity() {
                    return Some(MarkingDefect::PiVertex { vertex: id });
                }
            }
            let boundary = FreeWord::boundary(self.genus);
            if pi[g.root()] != boundary {
                return Some(MarkingDefect::PiBoundary {
                    found: pi[g.root()].to_string_with(self.genus),
                });
            }
            for e in 0..g.num_half_edges() {
                if pi[e].abelianize(self.genus) != self.h[e] {
                    return Some(MarkingDefect::PiAbelianization { half_edge: e });
                }
            }
        }
        None
    }

    /// First pair of oriented edges whose skew pairing differs from the
    /// intersection pairing of their markings.
    pub fn geometric_witness(&self) -> Option<MarkingDefect> {
        let n = self.graph.num_half_edges();
        for a in 0..n {
            for b in (a + 1)..n {
                let s = self.graph.skew_pair(a, b);
                let d = dot(&self.h[a], &self.h[b]);
                if d != scalar::int(s) {
                    return Some(MarkingDefect::Geometric {
                        a,
                        b,
                        skew: s,
                        dot: scalar::format(&d),
                    });
                }
            }
        }
        None
    }

    /// Skew pairing agrees with the intersection pairing on all pairs.
    pub fn is_geometric(&self) -> bool {
        self.geometric_witness().is_none()
    }

    /// All marking conditions including geometricity.
    pub fn validate(&self) -> std::result::Result<(), MarkingDefect> {
        match self.check_algebraic().or_else(|| self.geometric_witness()) {
            Some(d) => Err(d),
            None => Ok(()),
        }
    }

    /// Applies a linear map to every H-marking value (the π-marking is
    /// dropped, since it no longer abelianizes correctly).
    pub fn map_h(&self, f: impl Fn(&HVector) -> HVector) -> Self {
        MarkedFatgraph {
            graph: self.graph.clone(),
            genus: self.genus,
            h: self.h.iter().map(f).collect(),
            pi: None,
        }
    }

    /// Replaces the H-marking (π-marking dropped), checking the algebraic
    /// conditions.
    pub fn with_h(&self, h: Vec<HVector>) -> Result<Self> {
        Self::new(self.graph.clone(), h, None)
    }

    /// `2g` edges (as oriented half-edges) whose markings form a basis of `H`.
    pub fn marking_basis(&self) -> Option<Vec<HalfEdge>> {
        let mut chosen: Vec<HalfEdge> = Vec::new();
        let mut rows: linalg::Matrix = Vec::new();
        for k in 0..self.graph.num_edges() {
            let e = 2 * k;
            if self.h[e].is_zero() {
                continue;
            }
            rows.push(self.h[e].coords().to_vec());
            if linalg::rank(&rows) > chosen.len() {
                chosen.push(e);
                if chosen.len() == 2 * self.genus {
                    return Some(chosen);
                }
            } else {
                rows.pop();
            }
        }
        None
    }

    /// Whether every vertex apart from the tail's has valence three.
    pub fn is_trivalent(&self) -> bool {
        self.graph.is_trivalent()
    }

}

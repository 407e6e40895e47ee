//! Once-bordered fatgraphs with H- and π-markings, Whitehead moves and the
//! symplectic fatgraph.

pub mod freegroup;
pub mod graph;
pub mod io;
pub mod marking;
pub mod symplectic;
pub mod whitehead;

pub use freegroup::FreeWord;
pub use graph::{edge_of, pair, Fatgraph, HalfEdge};
pub use marking::{MarkedFatgraph, MarkingDefect};
pub use symplectic::{symplectic_graph, symplectic_graph_with_separators};
pub use whitehead::{
    apply_path, move_labels, pi_verify, returns_to_start, reverse_edges, rooted_isomorphism,
    whitehead, MovePath, WhiteheadMove,
};

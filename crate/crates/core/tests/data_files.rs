//! The shipped data files parse, validate and round-trip exactly.

use fatgraph_johnson::algebra::io::{from_text, to_text};
use fatgraph_johnson::cli::parse_matrix;
use fatgraph_johnson::fatgraph::io::{parse_fatgraph, parse_moves, write_fatgraph, write_moves};
use fatgraph_johnson::fatgraph::{symplectic_graph, returns_to_start};
use fatgraph_johnson::twist::{nu_action, nu_tau1};

fn data(name: &str) -> String {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn symplectic_graph_files_round_trip() {
    for g in 1..=3 {
        let text = data(&format!("g0_genus{g}.fg"));
        let m = parse_fatgraph(&text).unwrap();
        assert_eq!(m.validate(), Ok(()));
        let again = write_fatgraph(&m);
        assert_eq!(again, text, "genus {g} is not reproduced byte for byte");
        assert_eq!(parse_fatgraph(&again).unwrap(), m);
        assert_eq!(m, symplectic_graph(g).unwrap());
    }
}

#[test]
fn twist_moves_file() {
    let edges = parse_moves(&data("g0_genus1_twist.moves")).unwrap();
    assert_eq!(parse_moves(&write_moves(&edges)).unwrap(), edges);
    let m = parse_fatgraph(&data("g0_genus1.fg")).unwrap().without_pi();
    let path = fatgraph_johnson::fatgraph::apply_path(&m, &edges).unwrap();
    assert!(returns_to_start(&path));
}

#[test]
fn recipe_inputs_match_generators() {
    let t = from_text(&data("nu1_genus2_tau1.txt"), None, None).unwrap();
    assert_eq!(t, nu_tau1(2, 1).unwrap().with_max_degree(3));
    assert_eq!(parse_matrix(&data("nu1_genus2_action.txt")).unwrap(), nu_action(2, 1).unwrap());
    let t2 = from_text(&to_text(&t), None, None).unwrap();
    assert_eq!(t2, t);
}

//! Text format for marked fatgraphs and move lists.
//!
//! ```text
//! # comment
//! genus 1
//! vertex 0: 9
//! vertex 1: 8 5 7
//! edge 0: 0 1
//! tail 9
//! h 0: 1 0
//! pi 0: u1 V1
//! ```
//!
//! * `vertex <label>: <half-edges>` lists the half-edges at a vertex in
//!   cyclic order; labels are informational.
//! * `edge <label>: <x> <y>` glues two half-edges. The `k`-th edge line
//!   becomes edge `k`, with `x ↦ 2k` and `y ↦ 2k + 1`.
//! * `tail <x>` names the half-edge at the univalent vertex.
//! * `h <x>: <coords>` gives the H-marking of the oriented edge ending at
//!   half-edge `x` in the basis `u1..ug v1..vg`; the reverse orientation is
//!   implied. Rational entries `p/q` are allowed.
//! * `pi <x>: <word>` gives the π-marking as symbols `u1 … vg`, inverses
//!   written `U1 … Vg`, the identity as `1`.
//!
//! When `h` lines are absent the H-marking is the abelianized π-marking.
//! The parser checks the combinatorics (a valid once-bordered fatgraph) but
//! not the marking conditions; see [`MarkedFatgraph::validate`].
//!
//! A move list is a whitespace-separated list of edge ids; `#` starts a
//! comment.

use rustc_hash::FxHashMap;

use super::freegroup::FreeWord;
use super::graph::{pair, Fatgraph};
use super::marking::MarkedFatgraph;
use crate::algebra::hvector::HVector;
use crate::algebra::scalar;
use crate::error::{Error, Result};

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn split_label<'a>(rest: &'a str, line: usize, what: &str) -> Result<(&'a str, &'a str)> {
    rest.split_once(':')
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| Error::parse(line, format!("expected `{what} <id>: ...`")))
}

fn parse_ids(s: &str, line: usize) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|x| {
            x.parse()
                .map_err(|_| Error::parse(line, format!("expected a half-edge id, found `{x}`")))
        })
        .collect()
}

fn parse_id(s: &str, line: usize) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a half-edge id, found `{s}`")))
}

pub fn parse_fatgraph(text: &str) -> Result<MarkedFatgraph> {
    let mut genus: Option<(usize, usize)> = None;
    let mut vertices: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut tail: Option<(usize, usize)> = None;
    let mut hs: Vec<(usize, usize, Vec<scalar::Scalar>)> = Vec::new();
    let mut pis: Vec<(usize, usize, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "genus" => genus = Some((parse_id(rest, ln)?, ln)),
            "vertex" => {
                let (_, ids) = split_label(rest, ln, "vertex")?;
                vertices.push((ln, parse_ids(ids, ln)?));
            }
            "edge" => {
                let (_, ids) = split_label(rest, ln, "edge")?;
                let ids = parse_ids(ids, ln)?;
                if ids.len() != 2 {
                    return Err(Error::parse(ln, "an edge has exactly two half-edges"));
                }
                edges.push((ln, ids[0], ids[1]));
            }
            "tail" => tail = Some((parse_id(rest, ln)?, ln)),
            "h" => {
                let (x, coords) = split_label(rest, ln, "h")?;
                let coords = coords
                    .split_whitespace()
                    .map(|c| {
                        scalar::parse(c)
                            .ok_or_else(|| Error::parse(ln, format!("bad coordinate `{c}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                hs.push((ln, parse_id(x, ln)?, coords));
            }
            "pi" => {
                let (x, word) = split_label(rest, ln, "pi")?;
                pis.push((ln, parse_id(x, ln)?, word.to_string()));
            }
            other => return Err(Error::parse(ln, format!("unknown keyword `{other}`"))),
        }
    }

    // Canonical half-edge ids from the edge list.
    let mut canon: FxHashMap<usize, usize> = FxHashMap::default();
    for (k, &(ln, x, y)) in edges.iter().enumerate() {
        for (id, c) in [(x, 2 * k), (y, 2 * k + 1)] {
            if canon.insert(id, c).is_some() {
                return Err(Error::parse(ln, format!("half-edge {id} appears in two edges")));
            }
        }
    }
    let n = 2 * edges.len();
    if n == 0 {
        return Err(Error::parse(0, "no edges"));
    }
    let lookup = |id: usize, ln: usize| {
        canon
            .get(&id)
            .copied()
            .ok_or_else(|| Error::parse(ln, format!("half-edge {id} is not in any edge")))
    };
    let mut next = vec![usize::MAX; n];
    for (ln, vs) in &vertices {
        if vs.is_empty() {
            return Err(Error::parse(*ln, "empty vertex"));
        }
        let c = vs.iter().map(|&x| lookup(x, *ln)).collect::<Result<Vec<_>>>()?;
        for i in 0..c.len() {
            if next[c[i]] != usize::MAX {
                return Err(Error::parse(*ln, format!("half-edge {} appears at two vertices", vs[i])));
            }
            next[c[i]] = c[(i + 1) % c.len()];
        }
    }
    if let Some(h) = next.iter().position(|&x| x == usize::MAX) {
        let orig = canon.iter().find(|(_, &c)| c == h).map_or(h, |(&o, _)| o);
        return Err(Error::parse(0, format!("half-edge {orig} is not at any vertex")));
    }
    let (tail_id, tail_ln) = tail.ok_or_else(|| Error::parse(0, "missing `tail` line"))?;
    let root = lookup(tail_id, tail_ln)?;
    let graph = Fatgraph::new(next, root).map_err(|e| Error::parse(0, e.to_string()))?;
    let g = graph.genus();
    if g == 0 {
        return Err(Error::parse(0, "fatgraph has genus 0"));
    }
    if let Some((declared, ln)) = genus {
        if declared != g {
            return Err(Error::parse(ln, format!("declared genus {declared} but the fatgraph has genus {g}")));
        }
    }

    let pi = if pis.is_empty() {
        None
    } else {
        let mut p: Vec<Option<FreeWord>> = vec![None; n];
        for (ln, x, word) in &pis {
            let c = lookup(*x, *ln)?;
            let w = FreeWord::parse(g, word)
                .ok_or_else(|| Error::parse(*ln, format!("bad word `{word}`")))?;
            for (slot, val) in [(c, w.clone()), (pair(c), w.inverse())] {
                match &p[slot] {
                    Some(old) if *old != val => {
                        return Err(Error::parse(*ln, "conflicting π-markings for one edge"))
                    }
                    _ => p[slot] = Some(val),
                }
            }
        }
        Some(
            p.into_iter()
                .enumerate()
                .map(|(i, w)| w.ok_or_else(|| Error::parse(0, format!("edge {} has no π-marking", i / 2))))
                .collect::<Result<Vec<_>>>()?,
        )
    };

    let h = if hs.is_empty() {
        let p = pi
            .as_ref()
            .ok_or_else(|| Error::parse(0, "no `h` or `pi` marking given"))?;
        p.iter().map(|w| w.abelianize(g)).collect()
    } else {
        let mut h: Vec<Option<HVector>> = vec![None; n];
        for (ln, x, coords) in hs {
            if coords.len() != 2 * g {
                return Err(Error::parse(ln, format!("expected {} coordinates", 2 * g)));
            }
            let c = lookup(x, ln)?;
            let v = HVector::from_coords(g, coords);
            for (slot, val) in [(c, v.clone()), (pair(c), -&v)] {
                match &h[slot] {
                    Some(old) if *old != val => {
                        return Err(Error::parse(ln, "conflicting H-markings for one edge"))
                    }
                    _ => h[slot] = Some(val),
                }
            }
        }
        h.into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::parse(0, format!("edge {} has no H-marking", i / 2))))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(MarkedFatgraph::new_unchecked(graph, g, h, pi))
}

/// Serializes with canonical half-edge ids; parsing the output reproduces
/// the input exactly.
pub fn write_fatgraph(m: &MarkedFatgraph) -> String {
    let g = m.graph();
    let genus = m.genus();
    let mut s = format!("genus {genus}\n");
    for (id, vs) in g.vertices().iter().enumerate() {
        let ids: Vec<String> = vs.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("vertex {id}: {}\n", ids.join(" ")));
    }
    for k in 0..g.num_edges() {
        s.push_str(&format!("edge {k}: {} {}\n", 2 * k, 2 * k + 1));
    }
    s.push_str(&format!("tail {}\n", g.root()));
    for k in 0..g.num_edges() {
        let c: Vec<String> = m.h(2 * k).coords().iter().map(scalar::format).collect();
        s.push_str(&format!("h {}: {}\n", 2 * k, c.join(" ")));
    }
    if let Some(p) = m.pi_marking() {
        for k in 0..g.num_edges() {
            s.push_str(&format!("pi {}: {}\n", 2 * k, p[2 * k].to_string_with(genus)));
        }
    }
    s
}

pub fn parse_moves(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        for tok in strip_comment(raw).split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            out.push(
                tok.parse()
                    .map_err(|_| Error::parse(i + 1, format!("expected an edge id, found `{tok}`")))?,
            );
        }
    }
    Ok(out)
}

pub fn write_moves(edges: &[usize]) -> String {
    let ids: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
    format!("{}\n", ids.join(" "))
}

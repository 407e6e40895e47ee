//! Text and JSON serialization of tensors.
//!
//! Text form:
//!
//! ```text
//! genus 2
//! degree 4
//! 2 1/2 u1 v1
//! 2 -1/2 v1 u1
//! ```
//!
//! Header lines `genus G` and `degree N` are optional when the caller
//! supplies the shape. Each term line is `degree coeff word`, the word being
//! space-separated basis symbols (empty for degree 0). Blank lines and lines
//! starting with `#` are ignored.

use serde::{Deserialize, Serialize};

use super::hvector::{letter_name, parse_letter};
use super::scalar;
use super::tensor::Tensor;
use crate::error::{Error, Result};

pub fn to_text(t: &Tensor) -> String {
    let mut s = format!("genus {}\ndegree {}\n", t.genus(), t.max_degree());
    for (w, c) in t.terms() {
        s.push_str(&format!("{} {}", w.len(), scalar::format(&c)));
        for l in w {
            s.push(' ');
            s.push_str(&letter_name(t.genus(), l));
        }
        s.push('\n');
    }
    s
}

/// Parses the text form. `genus` and `max_degree` override or supply the
/// header values.
pub fn from_text(text: &str, genus: Option<usize>, max_degree: Option<usize>) -> Result<Tensor> {
    let mut g = genus;
    let mut n = max_degree;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "genus" | "degree" => {
                let val: usize = fields
                    .get(1)
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| Error::parse(line_no, format!("bad {} header", fields[0])))?;
                let slot = if fields[0] == "genus" { &mut g } else { &mut n };
                slot.get_or_insert(val);
            }
            _ => {
                let d: usize = fields[0]
                    .parse()
                    .map_err(|_| Error::parse(line_no, "expected a degree"))?;
                let c = fields
                    .get(1)
                    .and_then(|x| scalar::parse(x))
                    .ok_or_else(|| Error::parse(line_no, "expected a rational coefficient"))?;
                let word: Vec<String> = fields[2..].iter().map(|x| x.to_string()).collect();
                if word.len() != d {
                    return Err(Error::parse(
                        line_no,
                        format!("degree {d} but word has {} letters", word.len()),
                    ));
                }
                terms.push((line_no, word, c));
            }
        }
    }
    let g = g.ok_or_else(|| Error::parse(0, "missing genus"))?;
    let n = n.unwrap_or_else(|| terms.iter().map(|t| t.1.len()).max().unwrap_or(0));
    let mut t = Tensor::checked_zero(g, n).map_err(|e| Error::parse(0, e.to_string()))?;
    for (line_no, word, c) in terms {
        if word.len() > n {
            return Err(Error::parse(line_no, "term exceeds truncation degree"));
        }
        let letters = word
            .iter()
            .map(|s| {
                parse_letter(g, s)
                    .ok_or_else(|| Error::parse(line_no, format!("unknown basis symbol `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        t.add_term(&letters, c);
    }
    Ok(t)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub degree: usize,
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TensorJson {
    pub genus: usize,
    pub max_degree: usize,
    pub terms: Vec<TermJson>,
}

pub fn to_json(t: &Tensor) -> TensorJson {
    TensorJson {
        genus: t.genus(),
        max_degree: t.max_degree(),
        terms: t
            .terms()
            .into_iter()
            .map(|(w, c)| TermJson {
                degree: w.len(),
                coeff: scalar::format(&c),
                word: w.iter().map(|&l| letter_name(t.genus(), l)).collect(),
            })
            .collect(),
    }
}

pub fn from_json(j: &TensorJson) -> Result<Tensor> {
    let mut t = Tensor::checked_zero(j.genus, j.max_degree)?;
    for term in &j.terms {
        let c = scalar::parse(&term.coeff)
            .ok_or_else(|| Error::parse(0, format!("bad coefficient `{}`", term.coeff)))?;
        let letters = term
            .word
            .iter()
            .map(|s| {
                parse_letter(j.genus, s)
                    .ok_or_else(|| Error::parse(0, format!("unknown basis symbol `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.len() != term.degree || term.degree > j.max_degree {
            return Err(Error::parse(0, "term degree does not match its word"));
        }
        t.add_term(&letters, c);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lie::omega;

    #[test]
    fn text_round_trip() {
        let mut t = omega(2, 4).scale(&scalar::q(-3, 7));
        t += &Tensor::one(2, 4);
        let s = to_text(&t);
        assert_eq!(from_text(&s, None, None).unwrap(), t);
        assert!(s.contains("0 1\n"));
    }

    #[test]
    fn json_round_trip() {
        let t = omega(1, 3);
        let j = serde_json::to_string(&to_json(&t)).unwrap();
        let back: TensorJson = serde_json::from_str(&j).unwrap();
        assert_eq!(from_json(&back).unwrap(), t);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            from_text("genus 1\n2 1 u1", None, None),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(from_text("genus 1\n1 1 w1", None, None).is_err());
        assert!(from_text("1 1 u1", None, None).is_err());
        assert_eq!(
            from_text("1 2/4 u1", Some(1), None).unwrap(),
            Tensor::word(1, 1, &[0], scalar::q(1, 2))
        );
    }
}

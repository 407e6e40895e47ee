//! Free Lie algebra helpers: the symplectic class and Lyndon-basis display.
//!
//! Lie elements are stored as [`Tensor`]s; this module only provides
//! constructors and a human-readable decomposition into standard brackets
//! of Lyndon words.

use num_traits::{One, Zero};

use super::hvector::{self, letter_name};
use super::scalar::{self, Scalar};
use super::tensor::Tensor;
use super::word;
use crate::error::{Error, Result};

/// The symplectic class `ω = Σ_i [u_i, v_i]`.
pub fn omega(genus: usize, max_degree: usize) -> Tensor {
    omega_partial(genus, max_degree, genus)
}

/// `ω_h = Σ_{i ≤ h} [u_i, v_i]`.
pub fn omega_partial(genus: usize, max_degree: usize, h: usize) -> Tensor {
    let mut t = Tensor::zero(genus, max_degree);
    for i in 1..=h {
        let a = Tensor::letter(genus, max_degree, hvector::u(genus, i));
        let b = Tensor::letter(genus, max_degree, hvector::v(genus, i));
        t += &a.bracket(&b);
    }
    t
}

pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard factorization `w = u v` with `v` the longest proper Lyndon suffix.
fn standard_split(w: &[usize]) -> usize {
    (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("a word of length >= 2 has a Lyndon suffix")
}

/// The standard bracketing of a Lyndon word as a tensor and as text.
pub fn standard_bracket(genus: usize, max_degree: usize, w: &[usize]) -> (Tensor, String) {
    if w.len() == 1 {
        return (
            Tensor::letter(genus, max_degree, w[0]),
            letter_name(genus, w[0]),
        );
    }
    let k = standard_split(w);
    let (a, sa) = standard_bracket(genus, max_degree, &w[..k]);
    let (b, sb) = standard_bracket(genus, max_degree, &w[k..]);
    (a.bracket(&b), format!("[{sa},{sb}]"))
}

/// Coordinates of a Lie element in the Lyndon basis, as
/// `(lyndon word, coefficient)` pairs ordered by degree and word.
///
/// Fails if the input is not a Lie element.
pub fn lyndon_coordinates(x: &Tensor) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let (g, n) = (x.genus(), x.max_degree());
    if !x.constant().is_zero() {
        return Err(Error::Shape("Lie elements have zero constant term".into()));
    }
    let mut out = Vec::new();
    for d in 1..=n {
        let mut rest = x.degree_part(d);
        while !rest.is_zero() {
            let m = rest
                .part(d)
                .keys()
                .map(|w| word::unpack(*w, d))
                .min()
                .expect("nonempty component");
            if !is_lyndon(&m) {
                return Err(Error::Shape(format!(
                    "not a Lie element (leading word {} is not Lyndon)",
                    m.iter().map(|&l| letter_name(g, l)).collect::<Vec<_>>().join(".")
                )));
            }
            let c = rest.coeff(&m);
            let (p, _) = standard_bracket(g, n, &m);
            rest -= &p.scale(&c);
            out.push((m, c));
        }
    }
    Ok(out)
}

/// Lyndon-basis rendering, e.g. `u1 + 1/2 [u1,v1]`. Falls back to the raw
/// word expansion for non-Lie input.
pub fn to_lie_string(x: &Tensor) -> String {
    let coords = match lyndon_coordinates(x) {
        Ok(c) => c,
        Err(_) => return x.to_word_string(),
    };
    if coords.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (w, c)) in coords.iter().enumerate() {
        let (_, text) = standard_bracket(x.genus(), w.len(), w);
        let neg = c < &Scalar::zero();
        let mag = scalar::abs(c);
        if i > 0 {
            s.push_str(if neg { " - " } else { " + " });
        } else if neg {
            s.push('-');
        }
        if !mag.is_one() {
            s.push_str(&scalar::format(&mag));
            s.push(' ');
        }
        s.push_str(&text);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_words() {
        assert!(is_lyndon(&[0]));
        assert!(is_lyndon(&[0, 1]));
        assert!(is_lyndon(&[0, 0, 1]));
        assert!(is_lyndon(&[0, 1, 1]));
        assert!(!is_lyndon(&[1, 0]));
        assert!(!is_lyndon(&[0, 1, 0, 1]));
        assert_eq!(standard_split(&[0, 0, 1, 1]), 1);
    }

    #[test]
    fn display_round_trip() {
        let (g, n) = (1, 4);
        let u1 = Tensor::letter(g, n, 0);
        let v1 = Tensor::letter(g, n, 1);
        let uv = u1.bracket(&v1);
        let x = &(&u1 + &uv.scale(&scalar::q(1, 2))) - &v1.bracket(&uv).scale(&scalar::q(1, 18));
        assert_eq!(to_lie_string(&x), "u1 + 1/2 [u1,v1] + 1/18 [[u1,v1],v1]");
        let coords = lyndon_coordinates(&x).unwrap();
        let mut rebuilt = Tensor::zero(g, n);
        for (w, c) in coords {
            rebuilt += &standard_bracket(g, n, &w).0.scale(&c);
        }
        assert_eq!(rebuilt, x);
        assert!(lyndon_coordinates(&(&u1 * &v1)).is_err());
    }

    #[test]
    fn omega_genus_two() {
        let w = omega(2, 3);
        assert!(w.is_lie());
        assert_eq!(w.coeff(&[0, 2]), scalar::one());
        assert_eq!(w.coeff(&[3, 1]), scalar::int(-1));
        assert_eq!(omega_partial(2, 3, 1).len(), 2);
    }
}

//! Reduced words in the free group on `u1..ug, v1..vg`.
//!
//! A letter is a nonzero `i32`: `+(k+1)` for basis letter `k`, `-(k+1)` for
//! its inverse. Inverses are written with capitals (`U1`, `V2`).

use std::fmt;

use crate::algebra::hvector::{self, HVector};
use crate::algebra::scalar;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// The generator with basis index `idx`.
    pub fn generator(idx: usize) -> Self {
        FreeWord {
            letters: vec![idx as i32 + 1],
        }
    }

    /// Builds and freely reduces a word from signed letters.
    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = FreeWord::identity();
        for &l in letters {
            assert!(l != 0, "zero is not a letter");
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    /// The commutator `[a, b] = a b a^{-1} b^{-1}`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// `∂ = Π_i [u_i, v_i]`.
    pub fn boundary(genus: usize) -> Self {
        (1..=genus).fold(FreeWord::identity(), |acc, i| {
            acc.mul(&Self::commutator(
                &Self::generator(hvector::u(genus, i)),
                &Self::generator(hvector::v(genus, i)),
            ))
        })
    }

    /// Substitutes `images[k]` for generator `k`.
    pub fn substitute(&self, images: &[FreeWord]) -> Self {
        let mut out = FreeWord::identity();
        for &l in &self.letters {
            let im = &images[l.unsigned_abs() as usize - 1];
            out = out.mul(&if l > 0 { im.clone() } else { im.inverse() });
        }
        out
    }

    pub fn abelianize(&self, genus: usize) -> HVector {
        let mut c = vec![0i64; 2 * genus];
        for &l in &self.letters {
            c[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        HVector::from_coords(genus, c.into_iter().map(scalar::int).collect())
    }

    pub fn max_letter(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn to_symbols(&self, genus: usize) -> Vec<String> {
        self.letters
            .iter()
            .map(|&l| {
                let name = hvector::letter_name(genus, l.unsigned_abs() as usize - 1);
                if l > 0 {
                    name
                } else {
                    name.to_uppercase()
                }
            })
            .collect()
    }

    /// Parses space-separated symbols such as `u1 V1`; `1` alone is the
    /// identity.
    pub fn parse(genus: usize, s: &str) -> Option<Self> {
        let mut w = FreeWord::identity();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let inverse = tok.starts_with(['U', 'V']);
            let idx = hvector::parse_letter(genus, &tok.to_lowercase())?;
            let l = idx as i32 + 1;
            w.push(if inverse { -l } else { l });
        }
        Some(w)
    }

    pub fn to_string_with(&self, genus: usize) -> String {
        if self.is_identity() {
            "1".into()
        } else {
            self.to_symbols(genus).join(" ")
        }
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord{:?}", self.letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_inverse() {
        let w = FreeWord::from_letters(&[1, 2, -2, -1, 3]);
        assert_eq!(w.letters(), &[3]);
        let x = FreeWord::from_letters(&[1, 2]);
        assert!(x.mul(&x.inverse()).is_identity());
    }

    #[test]
    fn boundary_abelianizes_to_zero() {
        let d = FreeWord::boundary(2);
        assert_eq!(d.len(), 8);
        assert!(d.abelianize(2).is_zero());
        assert_eq!(d.to_string_with(2), "u1 v1 U1 V1 u2 v2 U2 V2");
    }

    #[test]
    fn parse_round_trip() {
        let d = FreeWord::boundary(3);
        assert_eq!(FreeWord::parse(3, &d.to_string_with(3)), Some(d));
        assert_eq!(FreeWord::parse(1, "1"), Some(FreeWord::identity()));
        assert_eq!(FreeWord::parse(1, "u2"), None);
    }

    #[test]
    fn substitution() {
        let g = 1;
        let conj = |x: &FreeWord| {
            let d = FreeWord::boundary(g);
            d.mul(x).mul(&d.inverse())
        };
        let images = vec![conj(&FreeWord::generator(0)), conj(&FreeWord::generator(1))];
        let d = FreeWord::boundary(g);
        assert_eq!(d.substitute(&images), d);
    }
}

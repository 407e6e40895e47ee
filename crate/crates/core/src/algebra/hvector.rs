//! Vectors in `H = H_1(surface; Q)` with the ordered symplectic basis
//! `u1..ug, v1..vg`, and the intersection pairing.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::scalar::{self, Scalar};

/// Global sign of the intersection form: `u_i . v_i = SIGMA`.
///
/// Pinned by requiring the symplectic fatgraph's skew sector pairing to agree
/// with `dot` (see `fatgraph::is_geometric`).
pub const SIGMA: i64 = 1;

/// Index of the basis letter `u_i` (1-based `i`).
pub fn u(genus: usize, i: usize) -> usize {
    debug_assert!(i >= 1 && i <= genus);
    i - 1
}

/// Index of the basis letter `v_i` (1-based `i`).
pub fn v(genus: usize, i: usize) -> usize {
    debug_assert!(i >= 1 && i <= genus);
    genus + i - 1
}

pub fn letter_name(genus: usize, idx: usize) -> String {
    if idx < genus {
        format!("u{}", idx + 1)
    } else {
        format!("v{}", idx - genus + 1)
    }
}

/// Parses `u3` / `v1` into a letter index.
pub fn parse_letter(genus: usize, s: &str) -> Option<usize> {
    let (kind, rest) = s.split_at(1.min(s.len()));
    let i: usize = rest.parse().ok()?;
    if i == 0 || i > genus {
        return None;
    }
    match kind {
        "u" => Some(u(genus, i)),
        "v" => Some(v(genus, i)),
        _ => None,
    }
}

/// Symplectic partner of a basis letter and the value of `dot(letter, partner)`.
pub fn partner(genus: usize, idx: usize) -> (usize, i64) {
    if idx < genus {
        (idx + genus, SIGMA)
    } else {
        (idx - genus, -SIGMA)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HVector {
    genus: usize,
    coords: Vec<Scalar>,
}

impl HVector {
    pub fn zero(genus: usize) -> Self {
        HVector {
            genus,
            coords: vec![Scalar::zero(); 2 * genus],
        }
    }

    pub fn basis(genus: usize, idx: usize) -> Self {
        let mut x = Self::zero(genus);
        x.coords[idx] = scalar::one();
        x
    }

    pub fn from_coords(genus: usize, coords: Vec<Scalar>) -> Self {
        assert_eq!(coords.len(), 2 * genus, "coordinate length must be 2*genus");
        HVector { genus, coords }
    }

    pub fn from_ints(genus: usize, coords: &[i64]) -> Self {
        Self::from_coords(genus, coords.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, idx: usize) -> &Scalar {
        &self.coords[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        HVector {
            genus: self.genus,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(scalar::is_integer)
    }
}

/// The intersection pairing `a . b`.
pub fn dot(a: &HVector, b: &HVector) -> Scalar {
    assert_eq!(a.genus, b.genus, "genus mismatch in dot");
    let g = a.genus;
    let mut s = Scalar::zero();
    for i in 0..g {
        s += &a.coords[i] * &b.coords[g + i];
        s -= &a.coords[g + i] * &b.coords[i];
    }
    if SIGMA < 0 {
        -s
    } else {
        s
    }
}

impl Add for &HVector {
    type Output = HVector;
    fn add(self, rhs: &HVector) -> HVector {
        assert_eq!(self.genus, rhs.genus);
        HVector {
            genus: self.genus,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &HVector {
    type Output = HVector;
    fn sub(self, rhs: &HVector) -> HVector {
        assert_eq!(self.genus, rhs.genus);
        HVector {
            genus: self.genus,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &HVector {
    type Output = HVector;
    fn neg(self) -> HVector {
        HVector {
            genus: self.genus,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = letter_name(self.genus, i);
            let neg = c < &Scalar::zero();
            let mag = scalar::abs(c);
            if wrote {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            if mag == scalar::one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}{name}", scalar::format(&mag))?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HVector({self})")
    }
}

//! Truncated tensor algebra `T/T_{N+1}` over `H`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::hvector::{self, HVector};
use super::scalar::{self, Scalar};
use super::word::{self, Word};
use super::MAX_DEGREE;
use crate::error::{Error, Result};

type Part = FxHashMap<Word, Scalar>;

/// An element of `⊕_{i ≤ N} H^{⊗i}` with exact coefficients.
///
/// Each graded component is a sparse map from packed words to nonzero
/// coefficients. The degree-0 component uses the empty word `0`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    genus: usize,
    max_degree: usize,
    parts: Vec<Part>,
}

fn add_into(part: &mut Part, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match part.entry(w) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl Tensor {
    /// The zero tensor. Panics if `genus == 0`, `2 * genus > 256` or
    /// `max_degree > MAX_DEGREE`; use [`Tensor::checked_zero`] for a fallible
    /// constructor.
    pub fn zero(genus: usize, max_degree: usize) -> Self {
        Self::checked_zero(genus, max_degree).expect("invalid tensor shape")
    }

    pub fn checked_zero(genus: usize, max_degree: usize) -> Result<Self> {
        if genus == 0 || 2 * genus > 256 {
            return Err(Error::Genus);
        }
        if max_degree > MAX_DEGREE {
            return Err(Error::Degree(max_degree));
        }
        Ok(Tensor {
            genus,
            max_degree,
            parts: vec![Part::default(); max_degree + 1],
        })
    }

    pub fn scalar(genus: usize, max_degree: usize, c: Scalar) -> Self {
        let mut t = Self::zero(genus, max_degree);
        add_into(&mut t.parts[0], 0, c);
        t
    }

    pub fn one(genus: usize, max_degree: usize) -> Self {
        Self::scalar(genus, max_degree, scalar::one())
    }

    /// The basis letter with index `idx` (see [`hvector::u`], [`hvector::v`]).
    pub fn letter(genus: usize, max_degree: usize, idx: usize) -> Self {
        Self::word(genus, max_degree, &[idx], scalar::one())
    }

    /// `c` times the given word (dropped if longer than `max_degree`).
    pub fn word(genus: usize, max_degree: usize, letters: &[usize], c: Scalar) -> Self {
        let mut t = Self::zero(genus, max_degree);
        t.add_term(letters, c);
        t
    }

    /// Embeds a vector of `H` in degree 1.
    pub fn from_h(v: &HVector, max_degree: usize) -> Self {
        let mut t = Self::zero(v.genus(), max_degree);
        if max_degree >= 1 {
            for (i, c) in v.coords().iter().enumerate() {
                add_into(&mut t.parts[1], word::pack(&[i]), c.clone());
            }
        }
        t
    }

    /// Reads off the degree-1 component as a vector of `H`.
    pub fn to_h(&self) -> HVector {
        let mut coords = vec![Scalar::zero(); 2 * self.genus];
        if self.max_degree >= 1 {
            for (w, c) in &self.parts[1] {
                coords[*w as usize] = c.clone();
            }
        }
        HVector::from_coords(self.genus, coords)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Number of basis letters, `2g`.
    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn add_term(&mut self, letters: &[usize], c: Scalar) {
        let d = letters.len();
        assert!(letters.iter().all(|&l| l < self.rank()), "letter out of range");
        if d <= self.max_degree {
            add_into(&mut self.parts[d], word::pack(letters), c);
        }
    }

    pub(crate) fn add_packed(&mut self, degree: usize, w: Word, c: Scalar) {
        if degree <= self.max_degree {
            add_into(&mut self.parts[degree], w, c);
        }
    }

    pub fn coeff(&self, letters: &[usize]) -> Scalar {
        let d = letters.len();
        if d > self.max_degree {
            return Scalar::zero();
        }
        self.parts[d]
            .get(&word::pack(letters))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn constant(&self) -> Scalar {
        self.parts[0].get(&0).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty())
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Lowest degree with a nonzero component, if any.
    pub fn min_degree(&self) -> Option<usize> {
        self.parts.iter().position(|p| !p.is_empty())
    }

    /// Iterates over `(degree, packed word, coefficient)`, unordered.
    pub(crate) fn iter_packed(&self) -> impl Iterator<Item = (usize, Word, &Scalar)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(d, p)| p.iter().map(move |(w, c)| (d, *w, c)))
    }

    pub(crate) fn part(&self, degree: usize) -> &Part {
        &self.parts[degree]
    }

    /// Terms as `(letters, coefficient)` sorted by degree, then lexicographically.
    pub fn terms(&self) -> Vec<(Vec<usize>, Scalar)> {
        let mut out: Vec<(Vec<usize>, Scalar)> = self
            .iter_packed()
            .map(|(d, w, c)| (word::unpack(w, d), c.clone()))
            .collect();
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// The homogeneous component of degree `n`.
    pub fn degree_part(&self, n: usize) -> Self {
        let mut t = Self::zero(self.genus, self.max_degree);
        if n <= self.max_degree {
            t.parts[n] = self.parts[n].clone();
        }
        t
    }

    /// Drops every component of degree greater than `n`.
    pub fn truncated(&self, n: usize) -> Self {
        let mut t = self.clone();
        for d in (n + 1)..=self.max_degree {
            t.parts[d].clear();
        }
        t
    }

    /// Components of degree in `lo..=hi`.
    pub fn degree_range(&self, lo: usize, hi: usize) -> Self {
        let mut t = Self::zero(self.genus, self.max_degree);
        for d in lo..=hi.min(self.max_degree) {
            t.parts[d] = self.parts[d].clone();
        }
        t
    }

    /// The same element viewed with another truncation degree.
    pub fn with_max_degree(&self, n: usize) -> Self {
        let mut t = Self::zero(self.genus, n);
        for d in 0..=n.min(self.max_degree) {
            t.parts[d] = self.parts[d].clone();
        }
        t
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.genus != other.genus || self.max_degree != other.max_degree {
            return Err(Error::Shape(format!(
                "(genus {}, degree {}) vs (genus {}, degree {})",
                self.genus, self.max_degree, other.genus, other.max_degree
            )));
        }
        Ok(())
    }

    fn assert_shape(&self, other: &Self) {
        if let Err(e) = self.check_shape(other) {
            panic!("{e}");
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut t = Self::zero(self.genus, self.max_degree);
        if c.is_zero() {
            return t;
        }
        for (d, p) in self.parts.iter().enumerate() {
            t.parts[d] = p.iter().map(|(w, x)| (*w, x * c)).collect();
        }
        t
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&scalar::int(c))
    }

    /// Truncated product keeping degrees `<= limit`.
    pub fn mul_trunc(&self, other: &Self, limit: usize) -> Self {
        self.assert_shape(other);
        let limit = limit.min(self.max_degree);
        let mut t = Self::zero(self.genus, self.max_degree);
        for (d1, p1) in self.parts.iter().enumerate() {
            if p1.is_empty() {
                continue;
            }
            for (d2, p2) in other.parts.iter().enumerate() {
                if d1 + d2 > limit {
                    break;
                }
                let out = &mut t.parts[d1 + d2];
                for (w1, c1) in p1 {
                    for (w2, c2) in p2 {
                        add_into(out, word::concat(*w1, d1, *w2), c1 * c2);
                    }
                }
            }
        }
        t
    }

    /// Checked product; fails on genus or truncation mismatch.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.mul_trunc(other, self.max_degree))
    }

    /// Commutator `xy - yx`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.bracket_trunc(other, self.max_degree)
    }

    pub(crate) fn bracket_trunc(&self, other: &Self, limit: usize) -> Self {
        let mut t = self.mul_trunc(other, limit);
        t -= &other.mul_trunc(self, limit);
        t
    }

    /// `exp` of an element with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::Shape(
                "exp requires an input with zero constant term".into(),
            ));
        }
        Ok(self.exp_trunc(self.max_degree))
    }

    /// `exp` truncated at `limit`, ignoring the constant term of the input.
    pub(crate) fn exp_trunc(&self, limit: usize) -> Self {
        let mut x = self.truncated(limit);
        x.parts[0].clear();
        let mut result = Self::one(self.genus, self.max_degree);
        let mut power = Self::one(self.genus, self.max_degree);
        let mut fact = scalar::one();
        for k in 1..=limit {
            power = power.mul_trunc(&x, limit);
            if power.is_zero() {
                break;
            }
            fact *= scalar::int(k as i64);
            result += &power.scale(&fact.recip());
        }
        result
    }

    /// `log` of a group-like element (constant term exactly 1).
    pub fn log(&self) -> Result<Self> {
        if !self.constant().is_one() {
            return Err(Error::NotGroupLike(scalar::format(&self.constant())));
        }
        Ok(self.log_trunc(self.max_degree))
    }

    /// `log` truncated at `limit`, treating the constant term as 1.
    pub(crate) fn log_trunc(&self, limit: usize) -> Self {
        let mut y = self.truncated(limit);
        y.parts[0].clear();
        let mut result = Self::zero(self.genus, self.max_degree);
        let mut power = Self::one(self.genus, self.max_degree);
        for k in 1..=limit {
            power = power.mul_trunc(&y, limit);
            if power.is_zero() {
                break;
            }
            let c = scalar::q(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            result += &power.scale(&c);
        }
        result
    }

    /// `log(exp X exp Y)`, truncated.
    pub fn star(&self, other: &Self) -> Self {
        self.assert_shape(other);
        let n = self.max_degree;
        self.exp_trunc(n)
            .mul_trunc(&other.exp_trunc(n), n)
            .log_trunc(n)
    }

    /// Degree-`n` component of the Hausdorff series
    /// `h(X, Y) = log(exp X exp Y) - X - Y`.
    ///
    /// Only the components of `X` and `Y` below degree `n` contribute.
    pub fn hausdorff(x: &Self, y: &Self, n: usize) -> Self {
        x.assert_shape(y);
        assert!(n <= x.max_degree, "hausdorff degree exceeds truncation");
        if n <= 1 {
            return Self::zero(x.genus, x.max_degree);
        }
        let xs = x.degree_range(1, n - 1);
        let ys = y.degree_range(1, n - 1);
        let z = xs
            .exp_trunc(n)
            .mul_trunc(&ys.exp_trunc(n), n)
            .log_trunc(n);
        z.degree_part(n)
    }

    /// Full Hausdorff series `h(X, Y)` through the truncation degree.
    pub fn hausdorff_all(x: &Self, y: &Self) -> Self {
        let mut z = x.star(y);
        z -= x;
        z -= y;
        z
    }

    /// Image under the algebra endomorphism sending letter `i` to
    /// `images[i]`. Every image must have zero constant term.
    pub fn substitute(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.rank(), "one image per letter required");
        for im in images {
            self.assert_shape(im);
            assert!(im.constant().is_zero(), "substituted letters need zero constant term");
        }
        self.substitute_rec(images, self.max_degree)
    }

    fn substitute_rec(&self, images: &[Self], limit: usize) -> Self {
        let mut result = Self::scalar(self.genus, self.max_degree, self.constant());
        if limit == 0 {
            return result;
        }
        // Split by first letter: x = c + Σ_i h_i x_i.
        let mut tails: Vec<Option<Self>> = vec![None; self.rank()];
        for d in 1..=limit.min(self.max_degree) {
            for (w, c) in &self.parts[d] {
                let (first, rest) = word::split_first(*w);
                let t = tails[first].get_or_insert_with(|| Self::zero(self.genus, self.max_degree));
                add_into(&mut t.parts[d - 1], rest, c.clone());
            }
        }
        for (i, tail) in tails.into_iter().enumerate() {
            if let Some(tail) = tail {
                let sub = tail.substitute_rec(images, limit - 1);
                result += &images[i].mul_trunc(&sub, limit);
            }
        }
        result
    }

    /// Applies a linear map of `H`, given by the images of the basis letters,
    /// to every tensor factor.
    pub fn map_linear(&self, images: &[HVector]) -> Self {
        let ims: Vec<Self> = images
            .iter()
            .map(|v| Self::from_h(v, self.max_degree))
            .collect();
        self.substitute(&ims)
    }

    /// The Dynkin operator: left-normed bracketing `w ↦ [..[[l1,l2],l3]..,ln]`.
    pub fn dynkin(&self) -> Self {
        let mut out = Self::zero(self.genus, self.max_degree);
        for d in 1..=self.max_degree {
            for (w, c) in &self.parts[d] {
                let letters = word::unpack(*w, d);
                // Expansion of the left-normed bracket as signed words.
                let mut cur: Vec<(Vec<usize>, i64)> = vec![(vec![letters[0]], 1)];
                for &l in &letters[1..] {
                    let mut next = Vec::with_capacity(cur.len() * 2);
                    for (u, s) in &cur {
                        let mut a = u.clone();
                        a.push(l);
                        next.push((a, *s));
                        let mut b = Vec::with_capacity(u.len() + 1);
                        b.push(l);
                        b.extend_from_slice(u);
                        next.push((b, -*s));
                    }
                    cur = next;
                }
                for (u, s) in cur {
                    add_into(&mut out.parts[d], word::pack(&u), c * scalar::int(s));
                }
            }
        }
        out
    }

    /// Membership in the free Lie algebra: zero constant term and Dynkin's
    /// criterion `D(x_n) = n x_n` in every degree.
    pub fn is_lie(&self) -> bool {
        if !self.parts[0].is_empty() {
            return false;
        }
        let d = self.dynkin();
        (1..=self.max_degree).all(|n| {
            let scaled: Part = self.parts[n]
                .iter()
                .map(|(w, c)| (*w, c * scalar::int(n as i64)))
                .collect();
            scaled == d.parts[n]
        })
    }

    /// Writes each term as `coeff*word` with words spelled in basis symbols.
    pub fn to_word_string(&self) -> String {
        let terms = self.terms();
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = scalar::abs(c);
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let body: Vec<String> = w.iter().map(|&l| hvector::letter_name(self.genus, l)).collect();
            if w.is_empty() {
                s.push_str(&scalar::format(&mag));
            } else {
                if !mag.is_one() {
                    s.push_str(&scalar::format(&mag));
                    s.push('*');
                }
                s.push_str(&body.join("."));
            }
        }
        s
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor(g={}, N={}: {})", self.genus, self.max_degree, self.to_word_string())
    }
}

impl AddAssign<&Tensor> for Tensor {
    fn add_assign(&mut self, rhs: &Tensor) {
        self.assert_shape(rhs);
        for (d, p) in rhs.parts.iter().enumerate() {
            for (w, c) in p {
                add_into(&mut self.parts[d], *w, c.clone());
            }
        }
    }
}

impl SubAssign<&Tensor> for Tensor {
    fn sub_assign(&mut self, rhs: &Tensor) {
        self.assert_shape(rhs);
        for (d, p) in rhs.parts.iter().enumerate() {
            for (w, c) in p {
                add_into(&mut self.parts[d], *w, -c);
            }
        }
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        let mut t = self.clone();
        t += rhs;
        t
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        let mut t = self.clone();
        t -= rhs;
        t
    }
}

impl Add for Tensor {
    type Output = Tensor;
    fn add(mut self, rhs: Tensor) -> Tensor {
        self += &rhs;
        self
    }
}

impl Sub for Tensor {
    type Output = Tensor;
    fn sub(mut self, rhs: Tensor) -> Tensor {
        self -= &rhs;
        self
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        self.scale(&scalar::int(-1))
    }
}

/// Truncated concatenation product. Panics on shape mismatch; see
/// [`Tensor::checked_mul`].
impl Mul for &Tensor {
    type Output = Tensor;
    fn mul(self, rhs: &Tensor) -> Tensor {
        self.mul_trunc(rhs, self.max_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hvector::{u, v};

    fn gen(g: usize, n: usize, idx: usize) -> Tensor {
        Tensor::letter(g, n, idx)
    }

    #[test]
    fn unit_and_concatenation() {
        let (g, n) = (1, 4);
        let one = Tensor::one(g, n);
        let u1 = gen(g, n, u(g, 1));
        let v1 = gen(g, n, v(g, 1));
        assert_eq!(&one * &u1, u1);
        let uv = &u1 * &v1;
        assert_eq!(uv.coeff(&[0, 1]), scalar::one());
        assert_eq!(uv.len(), 1);
        let a = &one + &u1;
        let b = &one - &u1;
        let expected = &one - &(&u1 * &u1);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = Tensor::one(1, 3);
        let b = Tensor::one(2, 3);
        assert!(matches!(a.checked_mul(&b), Err(Error::Shape(_))));
        assert!(matches!(Tensor::checked_zero(1, MAX_DEGREE + 1), Err(Error::Degree(_))));
    }

    #[test]
    fn bracket_basics() {
        let (g, n) = (2, 4);
        let u1 = gen(g, n, u(g, 1));
        let v1 = gen(g, n, v(g, 1));
        let u2 = gen(g, n, u(g, 2));
        assert!(u1.bracket(&u1).is_zero());
        let b = u1.bracket(&v1);
        assert_eq!(b, &(&u1 * &v1) - &(&v1 * &u1));
        let jac = &(&u1.bracket(&v1.bracket(&u2)) + &v1.bracket(&u2.bracket(&u1)))
            + &u2.bracket(&u1.bracket(&v1));
        assert!(jac.is_zero());
        assert!(b.is_lie());
        assert!(!(&u1 * &v1).is_lie());
    }

    #[test]
    fn exp_log_and_errors() {
        let (g, n) = (1, 4);
        let u1 = gen(g, n, 0);
        let e = u1.exp().unwrap();
        assert_eq!(e.coeff(&[0, 0]), scalar::q(1, 2));
        assert_eq!(e.coeff(&[0, 0, 0, 0]), scalar::q(1, 24));
        assert_eq!(e.log().unwrap(), u1);
        assert!(Tensor::zero(g, n).exp().unwrap() == Tensor::one(g, n));
        assert!(Tensor::one(g, n).log().unwrap().is_zero());
        assert!(matches!(u1.log(), Err(Error::NotGroupLike(_))));
        assert!(Tensor::one(g, n).exp().is_err());
    }

    #[test]
    fn hausdorff_low_degrees() {
        let (g, n) = (1, 4);
        let x = gen(g, n, 0);
        let y = gen(g, n, 1);
        let xy = x.bracket(&y);
        assert!(Tensor::hausdorff(&x, &y, 1).is_zero());
        assert_eq!(Tensor::hausdorff(&x, &y, 2), xy.scale(&scalar::q(1, 2)));
        let h4 = Tensor::hausdorff(&x, &y, 4);
        let expected = x.bracket(&y.bracket(&xy)).scale(&scalar::q(-1, 24));
        assert_eq!(h4, expected);
        assert!(Tensor::hausdorff(&x, &Tensor::zero(g, n), 3).is_zero());
        let star = x.star(&y);
        assert_eq!(star.degree_part(2), xy.scale(&scalar::q(1, 2)));
        assert!(x.star(&-&x).is_zero());
    }

    #[test]
    fn substitution_is_multiplicative() {
        let (g, n) = (1, 4);
        let u1 = gen(g, n, 0);
        let v1 = gen(g, n, 1);
        let c = u1.bracket(&v1).scale(&scalar::q(1, 6));
        let images = vec![&u1 + &c, v1.clone()];
        let uu = &u1 * &u1;
        let got = uu.substitute(&images);
        let expected = &(&(&uu + &(&u1 * &c)) + &(&c * &u1)) + &(&c * &c);
        assert_eq!(got, expected);
    }

    #[test]
    fn word_string() {
        let t = Tensor::word(1, 3, &[0, 1], scalar::q(-1, 2));
        assert_eq!(t.to_word_string(), "-1/2*u1.v1");
        assert_eq!(Tensor::zero(1, 2).to_word_string(), "0");
    }
}

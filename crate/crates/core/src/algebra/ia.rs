//! IA automorphisms of the truncated tensor algebra.
//!
//! An IA automorphism `φ` acts trivially on `T_1/T_2`, so it is determined by
//! the corrections `t(h) = φ(h) - h ∈ T_2` on the basis of `H`.

use num_traits::Zero;

use super::hvector::{self, HVector};
use super::scalar;
use super::tensor::Tensor;
use super::word;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IaMap {
    genus: usize,
    max_degree: usize,
    corrections: Vec<Tensor>,
}

impl IaMap {
    pub fn identity(genus: usize, max_degree: usize) -> Self {
        IaMap {
            genus,
            max_degree,
            corrections: vec![Tensor::zero(genus, max_degree); 2 * genus],
        }
    }

    /// Builds the map from the corrections of the basis letters. Each
    /// correction must live in degrees `>= 2`.
    pub fn from_corrections(corrections: Vec<Tensor>) -> Result<Self> {
        let first = corrections
            .first()
            .ok_or_else(|| Error::Shape("an IA map needs at least one letter".into()))?;
        let (genus, max_degree) = (first.genus(), first.max_degree());
        if corrections.len() != 2 * genus {
            return Err(Error::Shape(format!(
                "expected {} corrections, got {}",
                2 * genus,
                corrections.len()
            )));
        }
        for c in &corrections {
            if c.genus() != genus || c.max_degree() != max_degree {
                return Err(Error::Shape("corrections have mismatched shapes".into()));
            }
            if c.min_degree().is_some_and(|d| d < 2) {
                return Err(Error::Shape(
                    "IA corrections must have no degree-0 or degree-1 part".into(),
                ));
            }
        }
        Ok(IaMap {
            genus,
            max_degree,
            corrections,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn correction(&self, letter: usize) -> &Tensor {
        &self.corrections[letter]
    }

    pub fn corrections(&self) -> &[Tensor] {
        &self.corrections
    }

    /// `t(x)` for an arbitrary vector `x ∈ H`.
    pub fn correction_of(&self, x: &HVector) -> Tensor {
        let mut out = Tensor::zero(self.genus, self.max_degree);
        for (i, c) in x.coords().iter().enumerate() {
            if !c.is_zero() {
                out += &self.corrections[i].scale(c);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.corrections.iter().all(Tensor::is_zero)
    }

    fn letter_images(&self) -> Vec<Tensor> {
        self.corrections
            .iter()
            .enumerate()
            .map(|(i, c)| c + &Tensor::letter(self.genus, self.max_degree, i))
            .collect()
    }

    /// Applies the automorphism `h ↦ h + t(h)`, extended multiplicatively.
    pub fn apply(&self, x: &Tensor) -> Tensor {
        x.substitute(&self.letter_images())
    }

    /// The composite `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            (self.genus, self.max_degree),
            (other.genus, other.max_degree),
            "IA maps of different shapes"
        );
        let images = self.letter_images();
        let corrections = self
            .corrections
            .iter()
            .zip(&other.corrections)
            .map(|(t1, t2)| t1 + &t2.substitute(&images))
            .collect();
        IaMap {
            genus: self.genus,
            max_degree: self.max_degree,
            corrections,
        }
    }

    /// The inverse automorphism, solved degree by degree.
    pub fn inverse(&self) -> Self {
        let images = self.letter_images();
        let mut inv = Self::identity(self.genus, self.max_degree);
        for n in 2..=self.max_degree {
            for i in 0..2 * self.genus {
                // φ(h + s(h)) = h forces s_n = -t_n - [φ(s_{<n}) - s_{<n}]_n.
                let s = inv.corrections[i].clone();
                let mut drift = s.substitute(&images);
                drift -= &s;
                let mut step = self.corrections[i].degree_part(n);
                step += &drift.degree_part(n);
                inv.corrections[i] -= &step;
            }
        }
        inv
    }

    /// Only the corrections of degree `k + 1` (the graded piece `τ_k`).
    pub fn graded(&self, k: usize) -> Self {
        self.map_corrections(|c| c.degree_part(k + 1))
    }

    /// Corrections of degree `<= m + 1` (the truncation `τ_{≤m}`).
    pub fn truncated(&self, m: usize) -> Self {
        self.map_corrections(|c| c.truncated(m + 1))
    }

    fn map_corrections(&self, f: impl Fn(&Tensor) -> Tensor) -> Self {
        IaMap {
            genus: self.genus,
            max_degree: self.max_degree,
            corrections: self.corrections.iter().map(f).collect(),
        }
    }

    /// The conjugate `S ∘ φ ∘ S^{-1}` by a linear automorphism `S` of `H`,
    /// given by the images of the basis under `S` and under `S^{-1}`.
    pub fn conjugate_linear(&self, s: &[HVector], s_inv: &[HVector]) -> Self {
        let corrections = (0..2 * self.genus)
            .map(|i| self.correction_of(&s_inv[i]).map_linear(s))
            .collect();
        IaMap {
            genus: self.genus,
            max_degree: self.max_degree,
            corrections,
        }
    }

    /// The derivation extending the corrections: each word `x_1 ⋯ x_n` maps
    /// to `Σ_i x_1 ⋯ t(x_i) ⋯ x_n`, truncated at the degree of `x`.
    pub fn derive(&self, x: &Tensor) -> Tensor {
        let n = x.max_degree();
        let mut out = Tensor::zero(self.genus, n);
        for (letters, c) in x.terms() {
            for (i, &l) in letters.iter().enumerate() {
                let left = Tensor::word(self.genus, n, &letters[..i], scalar::one());
                let right = Tensor::word(self.genus, n, &letters[i + 1..], c.clone());
                let mid = self.corrections[l].with_max_degree(n);
                out += &(&(&left * &mid) * &right);
            }
        }
        out
    }

    /// The element of `H ⊗ T` dual to this map under `a ⊗ X ↔ (x ↦ (a·x) X)`,
    /// written as a tensor with the `H` factor first. The result has
    /// truncation degree `max_degree + 1`.
    pub fn to_dual_tensor(&self) -> Tensor {
        let g = self.genus;
        let n = self.max_degree + 1;
        let mut out = Tensor::zero(g, n);
        for i in 0..2 * g {
            // t(h_i) = (h_p · h_i) Y_p with h_p · h_i = -d = ±1, so Y_p = -d t(h_i).
            let (p, d) = hvector::partner(g, i);
            let sign = scalar::int(-d);
            let head = Tensor::letter(g, n, p);
            let body = self.corrections[i].with_max_degree(n);
            out += &(&head * &body).scale(&sign);
        }
        out
    }

    /// Inverse of [`IaMap::to_dual_tensor`]; the tensor must have no
    /// components of degree below 3.
    pub fn from_dual_tensor(t: &Tensor) -> Result<Self> {
        let g = t.genus();
        if t.max_degree() == 0 {
            return Err(Error::Shape("dual tensor needs positive degree".into()));
        }
        if t.min_degree().is_some_and(|d| d < 3) {
            return Err(Error::Shape(
                "H ⊗ T_2 tensors start in degree 3".into(),
            ));
        }
        let n = t.max_degree() - 1;
        let mut corrections = vec![Tensor::zero(g, n); 2 * g];
        for (d, w, c) in t.iter_packed() {
            let (first, rest) = word::split_first(w);
            let (p, dp) = hvector::partner(g, first);
            // t(h_p) collects (first · h_p) X for the word `first X`.
            corrections[p].add_packed(d - 1, rest, c * scalar::int(dp));
        }
        Self::from_corrections(corrections)
    }
}

/// The bracket map `H ⊗ L → L`, `a ⊗ X ↦ [a, X]`, on a dual tensor.
pub fn bracket_map(t: &Tensor) -> Tensor {
    let g = t.genus();
    let n = t.max_degree();
    let mut out = Tensor::zero(g, n);
    for (d, w, c) in t.iter_packed() {
        if d == 0 {
            continue;
        }
        let (first, rest) = word::split_first(w);
        let mut x = Tensor::zero(g, n);
        x.add_packed(d - 1, rest, c.clone());
        out += &Tensor::letter(g, n, first).bracket(&x);
    }
    out
}

/// Splits a dual tensor into its `H` components: `(letter, X)` with the
/// tensor equal to `Σ letter ⊗ X`. Zero components are omitted.
pub fn dual_components(t: &Tensor) -> Vec<(usize, Tensor)> {
    let g = t.genus();
    let n = t.max_degree().saturating_sub(1);
    let mut parts = vec![Tensor::zero(g, n); 2 * g];
    for (d, w, c) in t.iter_packed() {
        if d == 0 {
            continue;
        }
        let (first, rest) = word::split_first(w);
        parts[first].add_packed(d - 1, rest, c.clone());
    }
    parts
        .into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// Renders a dual tensor as `u1 ⊗ (…) + v1 ⊗ (…)`, each body in the Lyndon
/// basis.
pub fn dual_to_string(t: &Tensor) -> String {
    let parts = dual_components(t);
    if parts.is_empty() {
        return "0".into();
    }
    parts
        .iter()
        .map(|(l, x)| {
            format!(
                "{} ⊗ ({})",
                hvector::letter_name(t.genus(), *l),
                super::lie::to_lie_string(x)
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `a ⊗ X` as a tensor with `a ∈ H` first.
pub fn h_tensor(a: &HVector, x: &Tensor) -> Tensor {
    &Tensor::from_h(a, x.max_degree()) * x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lie::omega;

    fn sample(g: usize, n: usize) -> IaMap {
        let u1 = Tensor::letter(g, n, 0);
        let v1 = Tensor::letter(g, n, g);
        let c = u1.bracket(&v1);
        let mut cs = vec![Tensor::zero(g, n); 2 * g];
        cs[0] = c.scale(&scalar::q(1, 6));
        cs[g] = u1.bracket(&c);
        IaMap::from_corrections(cs).unwrap()
    }

    #[test]
    fn identity_is_unit() {
        let t = sample(1, 4);
        let id = IaMap::identity(1, 4);
        assert_eq!(t.compose(&id), t);
        assert_eq!(id.compose(&t), t);
        let x = Tensor::letter(1, 4, 0);
        assert_eq!(id.apply(&x), x);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let t = sample(2, 5);
        let inv = t.inverse();
        assert!(t.compose(&inv).is_identity());
        assert!(inv.compose(&t).is_identity());
    }

    #[test]
    fn apply_example() {
        let (g, n) = (1, 4);
        let t = sample(g, n);
        let u1 = Tensor::letter(g, n, 0);
        let uu = &u1 * &u1;
        let c = t.correction(0);
        let expected = &(&(&uu + &(&u1 * c)) + &(c * &u1)) + &(c * c);
        assert_eq!(t.apply(&uu), expected);
    }

    #[test]
    fn rejects_low_degree_corrections() {
        let cs = vec![Tensor::letter(1, 3, 0), Tensor::zero(1, 3)];
        assert!(IaMap::from_corrections(cs).is_err());
    }

    #[test]
    fn dual_round_trip_and_omega() {
        let (g, n) = (2, 4);
        let t = sample(g, n);
        let d = t.to_dual_tensor();
        assert_eq!(IaMap::from_dual_tensor(&d).unwrap(), t);

        // x ↦ σ[x, ω] is dual to Σ u_i ⊗ [v_i, ω] - v_i ⊗ [u_i, ω].
        let w = omega(g, n);
        let sigma = scalar::int(hvector::SIGMA);
        let cs = (0..2 * g)
            .map(|i| Tensor::letter(g, n, i).bracket(&w).scale(&sigma))
            .collect();
        let m = IaMap::from_corrections(cs).unwrap();
        let big = omega(g, n + 1);
        let mut expected = Tensor::zero(g, n + 1);
        for i in 1..=g {
            let ui = Tensor::letter(g, n + 1, hvector::u(g, i));
            let vi = Tensor::letter(g, n + 1, hvector::v(g, i));
            expected += &(&ui * &vi.bracket(&big));
            expected -= &(&vi * &ui.bracket(&big));
        }
        assert_eq!(m.to_dual_tensor(), expected);
        assert!(bracket_map(&expected).is_zero());
    }
}

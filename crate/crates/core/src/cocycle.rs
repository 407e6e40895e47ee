//! Cocycles on the Torelli groupoid: `j_1 ∈ Λ³H` and `j_2` with values in
//! the central extension of `Λ³H` by the module `𝓗_2 ⊂ H ⊗ 𝓛_3`.
//!
//! Elements of `H ⊗ 𝓛_k` are stored as dual tensors with the `H` factor
//! first, as produced by [`crate::algebra::ia::IaMap::to_dual_tensor`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::hvector::{self, dot, HVector};
use crate::algebra::ia::IaMap;
use crate::algebra::scalar::{self, Scalar};
use crate::algebra::symplectic::LinearMap;
use crate::algebra::tensor::Tensor;
use crate::error::{Error, Result};
use crate::fatgraph::{MovePath, WhiteheadMove};
use crate::johnson::{graded_dual, label_vectors, tau_move};
use crate::magnus::Integrals;

/// An element of `Λ³H`, stored by its coefficients on the basis wedges
/// `e_i ∧ e_j ∧ e_k` with `i < j < k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lambda3 {
    genus: usize,
    coeffs: BTreeMap<[usize; 3], Scalar>,
}

impl Lambda3 {
    pub fn zero(genus: usize) -> Self {
        Lambda3 {
            genus,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `e_i ∧ e_j ∧ e_k` for arbitrary basis indices.
    pub fn basis_wedge(genus: usize, i: usize, j: usize, k: usize) -> Self {
        let mut out = Self::zero(genus);
        out.add_basis(i, j, k, scalar::one());
        out
    }

    fn add_basis(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        if i == j || j == k || i == k || c.is_zero() {
            return;
        }
        let mut idx = [i, j, k];
        let mut sign = 1;
        for p in 0..3 {
            for q in 0..2 - p {
                if idx[q] > idx[q + 1] {
                    idx.swap(q, q + 1);
                    sign = -sign;
                }
            }
        }
        let entry = self.coeffs.entry(idx).or_insert_with(Scalar::zero);
        *entry += c * scalar::int(sign);
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    /// The trilinear wedge `a ∧ b ∧ c`.
    pub fn wedge(a: &HVector, b: &HVector, c: &HVector) -> Self {
        let g = a.genus();
        let mut out = Self::zero(g);
        for (i, x) in a.coords().iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.coords().iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for (k, z) in c.coords().iter().enumerate().filter(|(_, z)| !z.is_zero()) {
                    out.add_basis(i, j, k, x * y * z);
                }
            }
        }
        out
    }

    /// Coefficient of `e_i ∧ e_j ∧ e_k` (antisymmetric in the indices).
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        let mut probe = Self::zero(self.genus);
        probe.add_basis(i, j, k, scalar::one());
        match probe.coeffs.iter().next() {
            Some((idx, s)) => self.coeffs.get(idx).map_or_else(Scalar::zero, |c| c * s),
            None => Scalar::zero(),
        }
    }

    /// Nonzero terms `(i, j, k, c)` with `i < j < k`.
    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(scalar::is_integer)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.genus);
        for (k, v) in &self.coeffs {
            out.add_basis(k[0], k[1], k[2], v * c);
        }
        out
    }

    /// The image in `H ⊗ 𝓛_2` under
    /// `a ∧ b ∧ c ↦ a ⊗ [b,c] + b ⊗ [c,a] + c ⊗ [a,b]`, as a dual tensor of
    /// the given truncation (at least 3).
    pub fn to_tensor(&self, max_degree: usize) -> Tensor {
        let g = self.genus;
        let mut out = Tensor::zero(g, max_degree);
        for ([i, j, k], c) in &self.coeffs {
            for (x, y, z) in [(*i, *j, *k), (*j, *k, *i), (*k, *i, *j)] {
                out.add_term(&[x, y, z], c.clone());
                out.add_term(&[x, z, y], -c.clone());
            }
        }
        out
    }

    /// Inverse of [`Lambda3::to_tensor`] on its image; the degree-3 part of
    /// the tensor is read off and must be totally antisymmetric.
    pub fn from_tensor(t: &Tensor) -> Result<Self> {
        let g = t.genus();
        let part = t.degree_part(3);
        let mut out = Self::zero(g);
        for (w, c) in part.terms() {
            if w[0] < w[1] && w[1] < w[2] {
                out.add_basis(w[0], w[1], w[2], c);
            }
        }
        if out.to_tensor(t.max_degree()) != part {
            return Err(Error::Shape(
                "tensor is not in the image of Λ³H in H ⊗ 𝓛_2".into(),
            ));
        }
        Ok(out)
    }

    /// Image under a linear map of `H`.
    pub fn map_linear(&self, s: &LinearMap) -> Self {
        let ims = s.images();
        let mut out = Self::zero(self.genus);
        for ([i, j, k], c) in &self.coeffs {
            out = &out + &Self::wedge(&ims[*i], &ims[*j], &ims[*k]).scale(c);
        }
        out
    }
}

impl std::ops::Add for &Lambda3 {
    type Output = Lambda3;
    fn add(self, other: &Lambda3) -> Lambda3 {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_basis(k[0], k[1], k[2], v.clone());
        }
        out
    }
}

impl std::ops::Sub for &Lambda3 {
    type Output = Lambda3;
    fn sub(self, other: &Lambda3) -> Lambda3 {
        self + &-other
    }
}

impl std::ops::Neg for &Lambda3 {
    type Output = Lambda3;
    fn neg(self) -> Lambda3 {
        self.scale(&scalar::int(-1))
    }
}

impl fmt::Display for Lambda3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let name = |i: usize| hvector::letter_name(self.genus, i);
        for (n, ([i, j, k], c)) in self.coeffs.iter().enumerate() {
            let neg = *c < Scalar::zero();
            let abs = scalar::abs(c);
            let sep = match (n, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sep}")?;
            if abs != scalar::one() {
                write!(f, "{}*", scalar::format(&abs))?;
            }
            write!(f, "{}∧{}∧{}", name(*i), name(*j), name(*k))?;
        }
        Ok(())
    }
}

/// Coefficients `c_{ij}` (`i < j`) of a degree-2 Lie element
/// `Σ c_{ij} [e_i, e_j]`, i.e. its image in `Λ²H`.
fn lambda2_coords(t: &Tensor) -> Vec<(usize, usize, Scalar)> {
    t.degree_part(2)
        .terms()
        .into_iter()
        .filter(|(w, _)| w[0] < w[1])
        .map(|(w, c)| (w[0], w[1], c))
        .collect()
}

/// `ϖ(t_1 ⊗ t_2)` for degree-2 Lie elements, extending
/// `ϖ(a∧b ⊗ c∧d) = a ⊗ [b,[c,d]] - b ⊗ [a,[c,d]]` linearly. The result is a
/// dual tensor of truncation 4.
pub fn varpi(t1: &Tensor, t2: &Tensor) -> Tensor {
    let g = t1.genus();
    let t2 = t2.degree_part(2).with_max_degree(4);
    let mut out = Tensor::zero(g, 4);
    for (i, j, c) in lambda2_coords(t1) {
        let ei = Tensor::letter(g, 4, i);
        let ej = Tensor::letter(g, 4, j);
        let term = &(&ei * &ej.bracket(&t2)) - &(&ej * &ei.bracket(&t2));
        out += &term.scale(&c);
    }
    out
}

/// The symmetric product `t_1 ↔ t_2 = ϖ(t_1 ⊗ t_2 + t_2 ⊗ t_1)`.
pub fn sym(t1: &Tensor, t2: &Tensor) -> Tensor {
    &varpi(t1, t2) + &varpi(t2, t1)
}

/// The projection `H ⊗ 𝓛_3 → 𝓗_2`,
/// `x ⊗ [y,[z,w]] ↦ ¼ [x,y] ↔ [z,w]`, applied to the degree-4 part of a
/// dual tensor. Fails if some `H`-component is not a Lie element.
pub fn bar_project(t: &Tensor) -> Result<Tensor> {
    let g = t.genus();
    let part = t.degree_part(4);
    let mut by_head: BTreeMap<usize, Tensor> = BTreeMap::new();
    for (w, c) in part.terms() {
        by_head
            .entry(w[0])
            .or_insert_with(|| Tensor::zero(g, 3))
            .add_term(&w[1..], c);
    }
    let mut out = Tensor::zero(g, 4);
    let letter = |i: usize| Tensor::letter(g, 4, i);
    for (x, body) in by_head {
        if !body.is_lie() {
            return Err(Error::Shape(format!(
                "the {} component is not in 𝓛_3",
                hvector::letter_name(g, x)
            )));
        }
        // A Lie element of degree 3 is a third of its left-normed bracketing,
        // and [[p,q],r] = -[r,[p,q]].
        for (w, c) in body.terms() {
            let (p, q, r) = (letter(w[0]), letter(w[1]), letter(w[2]));
            let image = sym(&letter(x).bracket(&r), &p.bracket(&q));
            out += &image.scale(&(-c * scalar::q(1, 12)));
        }
    }
    Ok(out)
}

/// Intersection number of two basis letters.
fn basis_dot(g: usize, i: usize, j: usize) -> Scalar {
    dot(&HVector::basis(g, i), &HVector::basis(g, j))
}

/// The nine-term expression `-2 (ξ·η) = Σ (x·x') [y,z] ↔ [y',z']`, summed
/// over the rows `(a,[b,c]), (b,[c,a]), (c,[a,b])` of `ξ = a∧b∧c` and the
/// corresponding rows of `η`, extended bilinearly.
pub fn morita_display(xi: &Lambda3, eta: &Lambda3) -> Tensor {
    let g = xi.genus();
    let mut out = Tensor::zero(g, 4);
    let letter = |i: usize| Tensor::letter(g, 4, i);
    let rows = |[a, b, c]: [usize; 3]| [(a, b, c), (b, c, a), (c, a, b)];
    for (s, cs) in xi.terms() {
        for (t, ct) in eta.terms() {
            let coeff = cs * ct;
            for (x, y, z) in rows(s) {
                for (x2, y2, z2) in rows(t) {
                    let d = basis_dot(g, x, x2);
                    if d.is_zero() {
                        continue;
                    }
                    let term = sym(&letter(y).bracket(&letter(z)), &letter(y2).bracket(&letter(z2)));
                    out += &term.scale(&(&coeff * &d));
                }
            }
        }
    }
    out
}

/// The pairing `ξ·η ∈ 𝓗_2`, half the negative of [`morita_display`].
pub fn morita_pair(xi: &Lambda3, eta: &Lambda3) -> Tensor {
    morita_display(xi, eta).scale(&scalar::q(-1, 2))
}

/// The degree-4 part of `(1⊗τ + τ⊗1) ∘ τ'` for `τ, τ' ∈ H ⊗ 𝓛_2`, i.e. the
/// degree-2 part of the composite `τ ∘ τ'` of the corresponding IA maps.
pub fn mixing(tau: &Tensor, tau_next: &Tensor) -> Result<Tensor> {
    let first = IaMap::from_dual_tensor(&tau.degree_part(3).with_max_degree(4))?;
    let second = IaMap::from_dual_tensor(&tau_next.degree_part(3).with_max_degree(4))?;
    Ok(graded_dual(&first.compose(&second), 2))
}

/// `j_1(W) = a ∧ b ∧ c`, so that `τ_1(W) = j_1(W) / 6`.
pub fn j1(w: &WhiteheadMove) -> Lambda3 {
    let [a, b, c, _] = label_vectors(w);
    Lambda3::wedge(&a, &b, &c)
}

/// `τ̄_2(W)`: the projection of `τ_2(W)` to `𝓗_2` (dual tensor, truncation 4).
pub fn tau2_bar(w: &WhiteheadMove) -> Result<Tensor> {
    bar_project(&graded_dual(&tau_move(w, 2)?, 2))
}

/// `72 τ̄_2(W) = [a,b]↔P_c + [b,c]↔P_a + [c,a]↔P_b + 3[a,b]↔[b,c]`.
pub fn tau2_bar_formula(w: &WhiteheadMove) -> Result<Tensor> {
    let ints = Integrals::new(&w.source)?;
    let [va, vb, vc, _] = label_vectors(w);
    let [la, lb, lc, _] = w.labels;
    let (a, b, c) = (Tensor::from_h(&va, 4), Tensor::from_h(&vb, 4), Tensor::from_h(&vc, 4));
    let p = |x: usize| ints.p[x].with_max_degree(4);
    let (ab, bc, ca) = (a.bracket(&b), b.bracket(&c), c.bracket(&a));
    let mut out = sym(&ab, &p(lc));
    out += &sym(&bc, &p(la));
    out += &sym(&ca, &p(lb));
    out += &sym(&ab, &bc).scale_int(3);
    Ok(out)
}

/// A value of `j_2` in `𝓗_2 ×̃ Λ³H`: the `𝓗_2` part `s` (a dual tensor of
/// truncation 4) and the `Λ³H` part `ξ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct J2Value {
    pub s: Tensor,
    pub xi: Lambda3,
}

/// Multiple of [`morita_display`] added by the group law of the extension.
///
/// With `ξ = 6τ_1` and `s = 72τ̄_2`, composing two moves adds
/// `72·τ̄(mixing(τ_1, τ_1')) = 2·τ̄(mixing(ξ, η))`, and the projected
/// mixing equals `-(ξ·η) = ½ morita_display(ξ, η)`.
pub const EXTENSION_SCALE: i64 = 1;

impl J2Value {
    pub fn identity(genus: usize) -> Self {
        J2Value {
            s: Tensor::zero(genus, 4),
            xi: Lambda3::zero(genus),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_zero() && self.xi.is_zero()
    }

    /// The group law `(s,ξ)·(t,η) = (s + t + κ χ(ξ,η), ξ + η)` with
    /// `χ = morita_display` and `κ = EXTENSION_SCALE`.
    pub fn compose(&self, other: &Self) -> Self {
        let chi = morita_display(&self.xi, &other.xi).scale_int(EXTENSION_SCALE);
        J2Value {
            s: &(&self.s + &other.s) + &chi,
            xi: &self.xi + &other.xi,
        }
    }

    /// The inverse `(-s + κ χ(ξ,ξ), -ξ)`; the correction vanishes since the
    /// pairing is skew.
    pub fn inverse(&self) -> Self {
        let chi = morita_display(&self.xi, &self.xi).scale_int(EXTENSION_SCALE);
        J2Value {
            s: &(-&self.s) + &chi,
            xi: -&self.xi,
        }
    }

    /// All coefficients of both parts are integers.
    pub fn is_integral(&self) -> bool {
        self.xi.is_integral() && self.s.terms().iter().all(|(_, c)| scalar::is_integer(c))
    }
}

/// `j_2(W) = (72 τ̄_2(W), j_1(W))`.
pub fn j2(w: &WhiteheadMove) -> Result<J2Value> {
    Ok(J2Value {
        s: tau2_bar(w)?.scale_int(72),
        xi: j1(w),
    })
}

/// Ordered product of `j_2` along a path.
pub fn j2_path(path: &MovePath) -> Result<J2Value> {
    let mut acc = J2Value::identity(path.initial.genus());
    for w in &path.moves {
        acc = acc.compose(&j2(w)?);
    }
    Ok(acc)
}

/// Sum of `j_1` along a path.
pub fn j1_path(path: &MovePath) -> Lambda3 {
    path.moves
        .iter()
        .fold(Lambda3::zero(path.initial.genus()), |acc, w| &acc + &j1(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hvector::{u, v};
    use crate::algebra::ia::bracket_map;
    use crate::fatgraph::{apply_path, symplectic_graph, whitehead};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_lambda3(g: usize, rng: &mut ChaCha8Rng) -> Lambda3 {
        let mut out = Lambda3::zero(g);
        for _ in 0..3 {
            let c: Vec<i64> = (0..3).map(|_| rng.gen_range(0..2 * g as i64)).collect();
            out.add_basis(c[0] as usize, c[1] as usize, c[2] as usize, scalar::int(rng.gen_range(-2..=2)));
        }
        out
    }

    fn random_lie2(g: usize, rng: &mut ChaCha8Rng) -> Tensor {
        let mut out = Tensor::zero(g, 4);
        for _ in 0..3 {
            let i = rng.gen_range(0..2 * g);
            let j = rng.gen_range(0..2 * g);
            let c = rng.gen_range(-2..=2);
            out += &Tensor::letter(g, 4, i).bracket(&Tensor::letter(g, 4, j)).scale_int(c);
        }
        out
    }

    fn random_path(g: usize, len: usize, seed: u64) -> MovePath {
        let m = symplectic_graph(g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cur = m.clone();
        let mut edges = Vec::new();
        while edges.len() < len {
            let e = rng.gen_range(0..cur.graph().num_edges());
            if let Ok(w) = whitehead(&cur, e) {
                edges.push(e);
                cur = w.result.clone();
            }
        }
        apply_path(&m, &edges).unwrap()
    }

    #[test]
    fn wedge_embedding_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let x = random_lambda3(2, &mut rng);
            let t = x.to_tensor(3);
            assert!(bracket_map(&t).is_zero());
            assert_eq!(Lambda3::from_tensor(&t).unwrap(), x);
        }
        let bad = Tensor::word(2, 3, &[0, 0, 1], scalar::one());
        assert!(Lambda3::from_tensor(&bad).is_err());
    }

    #[test]
    fn varpi_on_a_symplectic_pair() {
        let g = 1;
        let (u1, v1) = (Tensor::letter(g, 4, u(g, 1)), Tensor::letter(g, 4, v(g, 1)));
        let w = u1.bracket(&v1);
        let expected = &(&u1 * &v1.bracket(&w)) - &(&v1 * &u1.bracket(&w));
        assert_eq!(varpi(&w, &w), expected);
    }

    #[test]
    fn symmetric_products_lie_in_the_kernel_and_are_fixed_by_bar() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let (t1, t2) = (random_lie2(2, &mut rng), random_lie2(2, &mut rng));
            let s = sym(&t1, &t2);
            assert!(bracket_map(&s).is_zero());
            assert_eq!(bar_project(&s).unwrap(), s);
        }
    }

    #[test]
    fn bar_is_a_projection() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = 2;
        for _ in 0..20 {
            let mut t = Tensor::zero(g, 4);
            for _ in 0..3 {
                let l: Vec<Tensor> = (0..4).map(|_| Tensor::letter(g, 4, rng.gen_range(0..2 * g))).collect();
                t += &(&l[0] * &l[1].bracket(&l[2].bracket(&l[3]))).scale_int(rng.gen_range(-3..=3));
            }
            let once = bar_project(&t).unwrap();
            assert_eq!(bar_project(&once).unwrap(), once);
        }
    }

    #[test]
    fn morita_pairing_is_skew() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let (x, y) = (random_lambda3(2, &mut rng), random_lambda3(2, &mut rng));
            assert_eq!(morita_display(&x, &y), -&morita_display(&y, &x));
            assert!(morita_display(&x, &x).is_zero());
        }
    }

    #[test]
    fn projected_mixing_is_minus_the_pairing() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let (x, y) = (random_lambda3(2, &mut rng), random_lambda3(2, &mut rng));
            let mix = mixing(&x.to_tensor(3), &y.to_tensor(3)).unwrap();
            assert_eq!(bar_project(&mix).unwrap(), -&morita_pair(&x, &y));
        }
    }

    #[test]
    fn j1_is_six_tau1() {
        let path = random_path(2, 12, 6);
        for w in &path.moves {
            let t1 = graded_dual(&tau_move(w, 1).unwrap(), 1);
            assert_eq!(j1(w).to_tensor(3), t1.scale_int(6));
            let back = whitehead(&w.result, w.edge).unwrap();
            assert_eq!(j1(&back), -&j1(w));
        }
    }

    #[test]
    fn tau2_bar_matches_formula_and_is_antisymmetric() {
        let path = random_path(2, 12, 7);
        for w in &path.moves {
            let bar = tau2_bar(w).unwrap();
            assert_eq!(bar.scale_int(72), tau2_bar_formula(w).unwrap());
            let back = whitehead(&w.result, w.edge).unwrap();
            assert_eq!(tau2_bar(&back).unwrap(), -&bar);
        }
    }

    #[test]
    fn group_law_reproduces_projected_composition() {
        for seed in 0..4 {
            let path = random_path(2, 6, 10 + seed);
            let tau = crate::johnson::tau_path(&path, 2).unwrap();
            let bar = bar_project(&graded_dual(&tau, 2)).unwrap().scale_int(72);
            let composed = j2_path(&path).unwrap();
            assert_eq!(composed.s, bar);
            assert_eq!(composed.xi.to_tensor(4), graded_dual(&tau, 1).scale_int(6));
        }
    }

    #[test]
    fn group_law_is_associative_with_inverses() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mk = |rng: &mut ChaCha8Rng| J2Value {
            s: sym(&random_lie2(2, rng), &random_lie2(2, rng)),
            xi: random_lambda3(2, rng),
        };
        for _ in 0..10 {
            let (x, y, z) = (mk(&mut rng), mk(&mut rng), mk(&mut rng));
            assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
            assert!(x.compose(&x.inverse()).is_identity());
            let kernel = J2Value { xi: Lambda3::zero(2), ..x.clone() };
            let kernel2 = J2Value { xi: Lambda3::zero(2), ..y.clone() };
            assert_eq!(kernel.compose(&kernel2).s, &x.s + &y.s);
        }
    }

    #[test]
    fn values_are_integral_and_vanish_on_b_zero_moves() {
        let path = random_path(2, 30, 9);
        let mut seen = 0;
        for w in &path.moves {
            let j = j2(w).unwrap();
            assert!(j.is_integral());
            if crate::johnson::is_b_zero(w) {
                assert!(j.xi.is_zero());
                let ints = Integrals::new(&w.source).unwrap();
                let [a, _, c, _] = label_vectors(w);
                let ca = Tensor::from_h(&c, 4).bracket(&Tensor::from_h(&a, 4));
                assert_eq!(j.s, sym(&ca, &ints.p[w.b()].with_max_degree(4)));
                seen += 1;
            }
        }
        assert!(seen > 0);
    }
}

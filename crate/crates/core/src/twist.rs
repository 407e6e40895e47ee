//! Dehn twists on the standard separating curves of the symplectic fatgraph,
//! realized as Whitehead move sequences, and the degree-3 value of a
//! conjugated separating twist computed from `τ₁` and `τ₂`.

use crate::algebra::hvector::{self, HVector};
use crate::algebra::ia::{h_tensor, IaMap};
use crate::algebra::lie::omega_partial;
use crate::algebra::scalar;
use crate::algebra::{LinearMap, Tensor};
use crate::cocycle::Lambda3;
use crate::error::{Error, Result};
use crate::fatgraph::{
    apply_path, edge_of, pair, rooted_isomorphism, symplectic_graph_with_separators, whitehead,
    FreeWord, HalfEdge, MarkedFatgraph, MovePath,
};
use crate::johnson::label_vectors;

/// Upper bound on the length of a single slide; the twist on `h` handles
/// needs `12h - 6` moves.
const MAX_SLIDE: usize = 64 * crate::algebra::MAX_DEGREE;

/// Slides the half-edge `s` around its subgraph: repeatedly moves on the edge
/// that follows `s` in the cyclic order at its vertex until the graph is
/// isomorphic to the start (as a rooted fatgraph) with the same H-marking.
/// Returns the moved edge ids.
pub fn slide(m: &MarkedFatgraph, s: HalfEdge, max_steps: usize) -> Result<Vec<usize>> {
    let mut cur = m.clone();
    let mut edges = Vec::new();
    for _ in 0..max_steps {
        let e = edge_of(cur.graph().next(s));
        cur = whitehead(&cur, e)?.result;
        edges.push(e);
        if let Some(psi) = rooted_isomorphism(m.graph(), cur.graph()) {
            if (0..m.graph().num_half_edges()).all(|x| m.h(x) == cur.h(psi[x])) {
                return Ok(edges);
            }
        }
    }
    Err(Error::Other(format!(
        "slide did not return within {max_steps} moves"
    )))
}

/// The half-edge of the separating edge `t'_h` that lies on the side of the
/// first `h` handles.
fn separator_half_edge(separators: &[usize], h: usize) -> HalfEdge {
    pair(2 * separators[h - 1])
}

fn check_h(genus: usize, h: usize) -> Result<()> {
    if genus == 0 {
        return Err(Error::Genus);
    }
    if h == 0 || h > genus {
        return Err(Error::Other(format!(
            "handle count {h} must lie in 1..={genus}"
        )));
    }
    Ok(())
}

/// The move sequence on the symplectic fatgraph of genus `g` realizing the
/// twist `T_h` on the curve cutting off the first `h` handles.
pub fn separating_twist(genus: usize, h: usize) -> Result<MovePath> {
    check_h(genus, h)?;
    let (m, separators) = symplectic_graph_with_separators(genus)?;
    let s = separator_half_edge(&separators, h);
    let edges = slide(&m, s, MAX_SLIDE)?;
    apply_path(&m, &edges)
}

/// The boundary twist `T_∂`, the case `h = g` of [`separating_twist`].
pub fn boundary_twist(genus: usize) -> Result<MovePath> {
    separating_twist(genus, genus)
}

/// `∂_h = Π_{i ≤ h} [u_i, v_i]`.
pub fn partial_boundary(genus: usize, h: usize) -> FreeWord {
    (1..=h).fold(FreeWord::identity(), |acc, i| {
        let u = FreeWord::generator(hvector::u(genus, i));
        let v = FreeWord::generator(hvector::v(genus, i));
        acc.mul(&FreeWord::commutator(&u, &v))
    })
}

/// The action of `T_h` on the free generators: `x ↦ ∂_h⁻¹ x ∂_h` for the
/// generators of the first `h` handles, identity on the others.
pub fn twist_action(genus: usize, h: usize) -> Vec<FreeWord> {
    let d = partial_boundary(genus, h);
    (0..2 * genus)
        .map(|idx| {
            let x = FreeWord::generator(idx);
            let i = if idx < genus { idx + 1 } else { idx - genus + 1 };
            if i <= h {
                d.inverse().mul(&x).mul(&d)
            } else {
                x
            }
        })
        .collect()
}

/// `ω_h^{⊗2} = Σ_{i ≤ h} u_i ⊗ [v_i, ω_h] − v_i ⊗ [u_i, ω_h]` in `H ⊗ 𝓛_3`.
pub fn omega_square(genus: usize, h: usize, max_degree: usize) -> Tensor {
    let w = omega_partial(genus, max_degree, h);
    let mut out = Tensor::zero(genus, max_degree);
    for i in 1..=h {
        let ui = HVector::basis(genus, hvector::u(genus, i));
        let vi = HVector::basis(genus, hvector::v(genus, i));
        let lu = Tensor::from_h(&ui, max_degree);
        let lv = Tensor::from_h(&vi, max_degree);
        out += &h_tensor(&ui, &lv.bracket(&w));
        out -= &h_tensor(&vi, &lu.bracket(&w));
    }
    out
}

/// The `(a, c)` vectors of each move of a slide of `s`, oriented so that the
/// moving half-edge plays the role of `b`. Moves where `s` is not adjacent to
/// the moved edge are reported as `None`.
pub fn sector_pairs(path: &MovePath, s: HalfEdge) -> Vec<Option<(HVector, HVector)>> {
    path.moves
        .iter()
        .map(|w| {
            let [a, _, c, _] = label_vectors(w);
            if w.b() == s {
                Some((a, c))
            } else if w.d() == s {
                Some((c, a))
            } else {
                None
            }
        })
        .collect()
}

/// The six `(a, c)` pairs met while the tail crosses handle `i`.
pub fn expected_sector_pairs(genus: usize, i: usize) -> [(HVector, HVector); 6] {
    let u = HVector::basis(genus, hvector::u(genus, i));
    let v = HVector::basis(genus, hvector::v(genus, i));
    let uv = &u + &v;
    [
        (-&uv, u.clone()),
        (-&u, -&v),
        (v.clone(), -&uv),
        (uv.clone(), -&u),
        (u.clone(), v.clone()),
        (-&v, uv),
    ]
}

/// The separating half-edge used by [`separating_twist`].
pub fn twist_half_edge(genus: usize, h: usize) -> Result<HalfEdge> {
    check_h(genus, h)?;
    let (_, separators) = symplectic_graph_with_separators(genus)?;
    Ok(separator_half_edge(&separators, h))
}

/// `τ₃(γ, h) = D_{τ₁(γ)} ∘ ᵞτ₂(T_h) − D_{ᵞτ₂(T_h)} ∘ τ₁(γ)` where `ᵞτ₂(T_h)`
/// is `ω_h^{⊗2}` transported by the symplectic action `|γ|` and `D_A` is the
/// derivation extending `A`. Input and output are dual tensors in `H ⊗ T`;
/// the result lives in degree 5.
pub fn tau3_recipe(tau1: &Tensor, action: &LinearMap, h: usize) -> Result<Tensor> {
    let g = action.genus();
    check_h(g, h)?;
    if tau1.genus() != g {
        return Err(Error::Shape("τ₁ and the action have different genus".into()));
    }
    let tau1 = tau1.with_max_degree(5);
    if !(&tau1 - &tau1.degree_part(3)).is_zero() {
        return Err(Error::Shape("τ₁ must be homogeneous of degree 3".into()));
    }
    let a = IaMap::from_dual_tensor(&tau1)?;
    let b = IaMap::from_dual_tensor(&action.apply_tensor(&omega_square(g, h, 5)))?;
    let corrections = (0..2 * g)
        .map(|i| {
            let mut c = a.derive(b.correction(i));
            c -= &b.derive(a.correction(i));
            c
        })
        .collect();
    Ok(IaMap::from_corrections(corrections)?
        .to_dual_tensor()
        .degree_part(5))
}

/// The Lickorish generator `ν_h` acts on `H` by
/// `u_h ↦ u_h − v_h + v_{h+1}`, `u_{h+1} ↦ u_{h+1} + v_h − v_{h+1}`.
pub fn nu_action(genus: usize, h: usize) -> Result<LinearMap> {
    if h == 0 || h >= genus {
        return Err(Error::Other(format!("ν_h needs 1 ≤ h < {genus}")));
    }
    let mut images: Vec<HVector> = (0..2 * genus).map(|i| HVector::basis(genus, i)).collect();
    let d = &HVector::basis(genus, hvector::v(genus, h + 1))
        - &HVector::basis(genus, hvector::v(genus, h));
    images[hvector::u(genus, h)] = &images[hvector::u(genus, h)] + &d;
    images[hvector::u(genus, h + 1)] = &images[hvector::u(genus, h + 1)] - &d;
    LinearMap::from_images(images)
}

/// `τ₁(ν_h) = ½ (u_h + u_{h+1}) ∧ v_h ∧ v_{h+1}` as a dual tensor.
pub fn nu_tau1(genus: usize, h: usize) -> Result<Tensor> {
    if h == 0 || h >= genus {
        return Err(Error::Other(format!("ν_h needs 1 ≤ h < {genus}")));
    }
    let uu = &HVector::basis(genus, hvector::u(genus, h))
        + &HVector::basis(genus, hvector::u(genus, h + 1));
    let vh = HVector::basis(genus, hvector::v(genus, h));
    let vh1 = HVector::basis(genus, hvector::v(genus, h + 1));
    let wedge = Lambda3::wedge(&uu, &vh, &vh1).scale(&scalar::q(1, 2));
    Ok(wedge.to_tensor(5))
}

/// The closed form of `2τ₃(ν_h, h)` in terms of `ω'_h = ω_h − [v_h, v_{h+1}]`
/// and `α = 2τ₁(ν_h)(ω'_h)`.
pub fn nu_tau3_closed(genus: usize, h: usize) -> Result<Tensor> {
    if h == 0 || h >= genus {
        return Err(Error::Other(format!("ν_h needs 1 ≤ h < {genus}")));
    }
    let n = 5;
    let l = |idx: usize| Tensor::letter(genus, n, idx);
    let hv = |idx: usize| HVector::basis(genus, idx);
    let (uh, uh1) = (hvector::u(genus, h), hvector::u(genus, h + 1));
    let (vh, vh1) = (hvector::v(genus, h), hvector::v(genus, h + 1));
    let br = |x: &Tensor, y: &Tensor| x.bracket(y);

    let wp = &omega_partial(genus, n, h) - &br(&l(vh), &l(vh1));
    let alpha = {
        let mut a = -&br(&l(vh1), &br(&l(uh), &l(vh)));
        a -= &br(&l(vh), &br(&l(uh1), &l(vh1)));
        a -= &br(&l(vh), &br(&l(vh), &l(vh1)));
        a += &br(&l(vh1), &br(&l(vh), &l(vh1)));
        a
    };
    let uu = &l(uh) + &l(uh1);
    let dv = &l(vh1) - &l(vh);
    let vv = br(&l(vh), &l(vh1));

    let mut out = Tensor::zero(genus, n);
    for i in 1..=h {
        let (ui, vi) = (hvector::u(genus, i), hvector::v(genus, i));
        out += &h_tensor(&hv(ui), &br(&l(vi), &alpha));
        out -= &h_tensor(&hv(vi), &br(&l(ui), &alpha));
    }
    out += &h_tensor(&hv(uh), &br(&l(vh), &br(&l(vh1), &wp)));
    out += &h_tensor(&hv(uh1), &br(&l(vh1), &br(&l(vh), &wp)));

    let mut xh = -&br(&l(vh1), &alpha);
    xh -= &br(&vv, &wp);
    xh += &br(&br(&l(vh1), &uu), &wp);
    xh -= &br(&l(vh1), &br(&l(uh), &wp));
    xh -= &br(&l(vh1), &br(&dv, &wp));
    out += &h_tensor(&hv(vh), &xh);

    let mut xh1 = br(&l(vh), &alpha);
    xh1 += &br(&vv, &wp);
    xh1 += &br(&l(vh), &br(&l(uh), &wp));
    xh1 -= &br(&uu, &br(&l(vh), &wp));
    xh1 += &br(&l(vh), &br(&dv, &wp));
    out += &h_tensor(&hv(vh1), &xh1);
    Ok(out)
}

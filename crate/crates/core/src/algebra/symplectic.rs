//! Linear automorphisms of `H`, in particular integral symplectic ones.

use num_traits::Zero;
use rand::Rng;

use super::hvector::{dot, HVector};
use super::linalg;
use super::scalar::{self, Scalar};
use super::tensor::Tensor;
use crate::error::{Error, Result};

/// A linear map `H → H`, stored as the images of the basis letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    genus: usize,
    images: Vec<HVector>,
}

impl LinearMap {
    pub fn identity(genus: usize) -> Self {
        LinearMap {
            genus,
            images: (0..2 * genus).map(|i| HVector::basis(genus, i)).collect(),
        }
    }

    pub fn from_images(images: Vec<HVector>) -> Result<Self> {
        let genus = images
            .first()
            .map(HVector::genus)
            .ok_or_else(|| Error::Shape("linear map needs images".into()))?;
        if images.len() != 2 * genus || images.iter().any(|v| v.genus() != genus) {
            return Err(Error::Shape(format!(
                "a linear map of H needs {} images of genus {genus}",
                2 * genus
            )));
        }
        Ok(LinearMap { genus, images })
    }

    /// Builds the map from integer rows, row `i` being the image of basis
    /// letter `i`.
    pub fn from_int_rows(genus: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() != 2 * genus || rows.iter().any(|r| r.len() != 2 * genus) {
            return Err(Error::Shape(format!("expected a {0}x{0} matrix", 2 * genus)));
        }
        Self::from_images(rows.iter().map(|r| HVector::from_ints(genus, r)).collect())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn images(&self) -> &[HVector] {
        &self.images
    }

    pub fn apply(&self, x: &HVector) -> HVector {
        let mut out = HVector::zero(self.genus);
        for (c, im) in x.coords().iter().zip(&self.images) {
            if !c.is_zero() {
                out = &out + &im.scale(c);
            }
        }
        out
    }

    /// Applies the map to every tensor factor.
    pub fn apply_tensor(&self, t: &Tensor) -> Tensor {
        t.map_linear(&self.images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        LinearMap {
            genus: self.genus,
            images: other.images.iter().map(|v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        // Rows are images, so the matrix acts on row vectors from the right.
        let m: linalg::Matrix = self.images.iter().map(|v| v.coords().to_vec()).collect();
        let inv = linalg::inverse(&m)?;
        Some(LinearMap {
            genus: self.genus,
            images: inv
                .into_iter()
                .map(|r| HVector::from_coords(self.genus, r))
                .collect(),
        })
    }

    /// Preserves the intersection pairing on basis pairs.
    pub fn is_symplectic(&self) -> bool {
        let n = 2 * self.genus;
        (0..n).all(|i| {
            (0..n).all(|j| {
                dot(&self.images[i], &self.images[j])
                    == dot(&HVector::basis(self.genus, i), &HVector::basis(self.genus, j))
            })
        })
    }

    pub fn is_integral(&self) -> bool {
        self.images.iter().all(HVector::is_integral)
    }

    /// The symplectic transvection `x ↦ x + k (x · v) v`.
    pub fn transvection(v: &HVector, k: &Scalar) -> Self {
        let g = v.genus();
        LinearMap {
            genus: g,
            images: (0..2 * g)
                .map(|i| {
                    let e = HVector::basis(g, i);
                    let c = dot(&e, v) * k;
                    &e + &v.scale(&c)
                })
                .collect(),
        }
    }

    /// A product of a few random integral transvections (an element of
    /// `Sp(2g, Z)`).
    pub fn random_symplectic<R: Rng>(genus: usize, rng: &mut R) -> Self {
        let mut m = Self::identity(genus);
        for _ in 0..3 {
            let coords: Vec<i64> = (0..2 * genus).map(|_| rng.gen_range(-1..=1)).collect();
            let v = HVector::from_ints(genus, &coords);
            if v.is_zero() {
                continue;
            }
            let k = scalar::int(if rng.gen_bool(0.5) { 1 } else { -1 });
            m = Self::transvection(&v, &k).compose(&m);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_maps_are_integral_symplectic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in 1..=3 {
            for _ in 0..10 {
                let m = LinearMap::random_symplectic(g, &mut rng);
                assert!(m.is_symplectic());
                assert!(m.is_integral());
                let inv = m.inverse().unwrap();
                assert_eq!(m.compose(&inv), LinearMap::identity(g));
                assert!(inv.is_integral());
            }
        }
    }

    #[test]
    fn tensor_action_is_multiplicative() {
        let g = 2;
        let m = LinearMap::from_int_rows(
            g,
            &[vec![1, 0, 0, 1], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        )
        .unwrap();
        let x = Tensor::letter(g, 3, 0);
        let y = Tensor::letter(g, 3, 2);
        let xy = &x * &y;
        assert_eq!(m.apply_tensor(&xy), &m.apply_tensor(&x) * &m.apply_tensor(&y));
    }
}

//! Representations of enumerated groups.
//!
//! A [`Rep`] is fixed by the images of the group generators. The image of
//! every element is computed along the Cayley spanning tree at construction
//! and the map is then checked on every non-tree edge, so a `Rep` that
//! exists is a homomorphism.
//!
//! `SL_2` acts on homogeneous polynomials of degree `a` by linear
//! substitution: `[[α,β],[γ,δ]]` sends `X -> αX + γY` and `Y -> βX + δY`.
//! This is a left action. The basis is `e_j = X^(a-j) Y^j`, `j = 0..=a`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Elem, Field};
use crate::grp::{close_group, frobenius_mat, product_components, GroupTable, DEFAULT_CAP};
use crate::matlin::Mat;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Rep {
    group: Arc<GroupTable>,
    field: Field,
    dim: usize,
    gen_images: Vec<Mat>,
    images: Vec<Mat>,
}

impl Rep {
    /// Build and validate a representation from generator images.
    pub fn from_generators(group: &Arc<GroupTable>, target: &Field, gen_images: Vec<Mat>) -> Result<Rep> {
        if gen_images.len() != group.ngens() {
            return Err(Error::DimMismatch(alloc::format!(
                "{} images for {} generators",
                gen_images.len(),
                group.ngens()
            )));
        }
        let dim = gen_images.first().map_or(0, |m| m.rows());
        for m in &gen_images {
            if m.field() != target {
                return Err(Error::FieldMismatch);
            }
            if !m.is_square() || m.rows() != dim {
                return Err(Error::DimMismatch("images must be square of equal size".into()));
            }
            if !m.is_invertible() {
                return Err(Error::NotInvertible);
            }
        }
        let mut images = Vec::with_capacity(group.len());
        images.push(Mat::identity(target, dim));
        for g in 1..group.len() {
            let (parent, s) = group.tree(g).expect("non-identity element has a parent");
            images.push(images[parent].mul(&gen_images[s]));
        }
        for (g, s, h) in group.nontree_edges() {
            if images[g].mul(&gen_images[s]) != images[h] {
                return Err(Error::NotAHomomorphism { element: g, generator: s });
            }
        }
        Ok(Rep { group: group.clone(), field: target.clone(), dim, gen_images, images })
    }

    /// Generator images computed from the generator matrices themselves.
    pub fn from_fn(group: &Arc<GroupTable>, target: &Field, f: impl Fn(&Mat) -> Result<Mat>) -> Result<Rep> {
        let gens = group.gens().iter().map(f).collect::<Result<Vec<_>>>()?;
        Rep::from_generators(group, target, gens)
    }

    pub fn trivial(group: &Arc<GroupTable>, target: &Field, dim: usize) -> Rep {
        let gens = vec![Mat::identity(target, dim); group.ngens()];
        Rep::from_generators(group, target, gens).expect("trivial map is a homomorphism")
    }

    /// The defining representation of a matrix group.
    pub fn natural(group: &Arc<GroupTable>) -> Rep {
        Rep::from_generators(group, group.field(), group.gens().to_vec())
            .expect("identity map is a homomorphism")
    }

    /// Permutation module: `perms[s][i]` is the image of point `i` under
    /// generator `s`, and `e_i -> e_perm(i)`.
    pub fn permutation(group: &Arc<GroupTable>, target: &Field, perms: &[Vec<usize>]) -> Result<Rep> {
        let gens = perms
            .iter()
            .map(|perm| {
                let n = perm.len();
                let mut m = Mat::zeros(target, n, n);
                for (i, &j) in perm.iter().enumerate() {
                    m.set(j, i, Elem::ONE);
                }
                m
            })
            .collect();
        Rep::from_generators(group, target, gens)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gen_images(&self) -> &[Mat] {
        &self.gen_images
    }

    pub fn image(&self, g: usize) -> &Mat {
        &self.images[g]
    }

    pub fn images(&self) -> &[Mat] {
        &self.images
    }

    fn check_compatible(&self, other: &Rep) -> Result<()> {
        let same = Arc::ptr_eq(&self.group, &other.group) || self.group.same_group(&other.group);
        if !same || self.field != other.field {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// `g -> (ρ(g)^-1)^T`.
    pub fn dual(&self) -> Rep {
        let gens = self
            .gen_images
            .iter()
            .map(|m| m.inverse().expect("validated images are invertible").transpose())
            .collect();
        Rep::from_generators(&self.group, &self.field, gens).expect("dual of a representation")
    }

    /// `g -> ρ(g) ⊗ σ(g)`, Kronecker ordering with `self` as the outer factor.
    pub fn tensor(&self, other: &Rep) -> Result<Rep> {
        self.check_compatible(other)?;
        let gens = self
            .gen_images
            .iter()
            .zip(&other.gen_images)
            .map(|(a, b)| a.kron(b))
            .collect::<Result<Vec<_>>>()?;
        Rep::from_generators(&self.group, &self.field, gens)
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        self.check_compatible(other)?;
        let gens = self
            .gen_images
            .iter()
            .zip(&other.gen_images)
            .map(|(a, b)| Mat::block_diag(&self.field, &[a, b]))
            .collect();
        Rep::from_generators(&self.group, &self.field, gens)
    }

    /// `Hom(v, w)` as `w ⊗ v*`: a map `φ` is a `dim w x dim v` matrix
    /// flattened row-major, and `g·φ = ρ_w(g) φ ρ_v(g)^-1`.
    pub fn hom(v: &Rep, w: &Rep) -> Result<Rep> {
        w.tensor(&v.dual())
    }

    /// `End(V) = Hom(V, V)`.
    pub fn end(&self) -> Rep {
        Rep::hom(self, self).expect("a representation is compatible with itself")
    }

    /// Frobenius twist `g -> ρ(F^b(g))`, where `F^b` raises the entries of the
    /// group's matrices to the power `p^b`.
    pub fn twist(&self, b: u32) -> Result<Rep> {
        let k = self.group.field().k();
        if b >= k {
            return Err(Error::TwistDegreeOutOfRange { b, k });
        }
        if b == 0 {
            return Ok(self.clone());
        }
        let gens = self
            .group
            .gens()
            .iter()
            .map(|s| {
                let idx = self.group.index_of(&frobenius_mat(s, b)).ok_or(Error::NotInGroup)?;
                Ok(self.images[idx].clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Rep::from_generators(&self.group, &self.field, gens)
    }

    /// Restriction to the subgroup generated by `sub_gens`.
    pub fn restrict(&self, sub_gens: &[Mat]) -> Result<Rep> {
        let sub = Arc::new(close_group(sub_gens, DEFAULT_CAP)?);
        let gens = sub_gens
            .iter()
            .map(|s| self.group.index_of(s).map(|i| self.images[i].clone()).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Rep::from_generators(&sub, &self.field, gens)
    }

    /// `P^-1 ρ(g) P`.
    pub fn conjugate(&self, p: &Mat) -> Result<Rep> {
        let pinv = p.inverse()?;
        let gens = self.gen_images.iter().map(|m| pinv.mul(m).mul(p)).collect();
        Rep::from_generators(&self.group, &self.field, gens)
    }
}

/// Matrix of `g` on degree-`a` homogeneous polynomials.
pub fn sym_power_matrix(g: &Mat, a: usize, target: &Field) -> Mat {
    let f = target;
    let (al, be, ga, de) = (g.get(0, 0), g.get(0, 1), g.get(1, 0), g.get(1, 1));
    // Linear forms in the basis (X, Y), indexed by the power of Y.
    let x_img = [al, ga];
    let y_img = [be, de];
    let mul = |p: &[Elem], q: &[Elem]| -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; p.len() + q.len() - 1];
        for (i, &c) in p.iter().enumerate() {
            f.axpy(&mut out[i..i + q.len()], c, q);
        }
        out
    };
    let mut xp = vec![vec![Elem::ONE]];
    let mut yp = vec![vec![Elem::ONE]];
    for i in 0..a {
        xp.push(mul(&xp[i], &x_img));
        yp.push(mul(&yp[i], &y_img));
    }
    let mut m = Mat::zeros(f, a + 1, a + 1);
    for j in 0..=a {
        let col = mul(&xp[a - j], &yp[j]);
        for (i, &c) in col.iter().enumerate() {
            m.set(i, j, c);
        }
    }
    m
}

/// `L(a)` for an `SL_2` group table, realised on `Sym^a` of the natural
/// module over `target`.
///
/// `target` must have the defining characteristic and either equal the
/// group's field or contain it as the prime field.
pub fn sym_power_sl2(group: &Arc<GroupTable>, a: u32, target: &Field) -> Result<Rep> {
    let p = group.field().p();
    if group.degree() != 2 || target.p() != p {
        return Err(Error::FieldMismatch);
    }
    if group.field() != target && group.field().k() != 1 {
        return Err(Error::FieldMismatch);
    }
    if a >= p {
        return Err(Error::WeightOutOfRange { weight: a, p });
    }
    Rep::from_fn(group, target, |g| Ok(sym_power_matrix(&g.with_field(target)?, a as usize, target)))
}

/// Steinberg tensor product `⊗_i L(a_i)^(p^i)` for digits `a_0, a_1, ...`.
pub fn steinberg_tensor(group: &Arc<GroupTable>, digits: &[u32], target: &Field) -> Result<Rep> {
    let mut acc = Rep::trivial(group, target, 1);
    for (i, &a) in digits.iter().enumerate() {
        let factor = sym_power_sl2(group, a, target)?.twist(i as u32)?;
        acc = acc.tensor(&factor)?;
    }
    Ok(acc)
}

/// Outer tensor product `v ⊠ w` on a block-diagonal direct product of the
/// groups of `v` and `w`.
pub fn outer_tensor(product: &Arc<GroupTable>, v: &Rep, w: &Rep) -> Result<Rep> {
    if v.field() != w.field() {
        return Err(Error::GroupMismatch);
    }
    let deg_a = v.group().degree();
    Rep::from_fn(product, v.field(), |g| {
        let (a, b) = product_components(g, deg_a);
        let ia = v.group().index_of(&a).ok_or(Error::NotInGroup)?;
        let ib = w.group().index_of(&b).ok_or(Error::NotInGroup)?;
        v.image(ia).kron(w.image(ib))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::sl2;

    #[test]
    fn unipotent_on_quadratics_is_pinned() {
        let f = Field::make(5, 1).unwrap();
        let u = Mat::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let m = sym_power_matrix(&u, 2, &f);
        assert_eq!(m, Mat::from_ints(&f, &[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]]));
    }

    #[test]
    fn small_weights() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let f = g.field().clone();
        let l0 = sym_power_sl2(&g, 0, &f).unwrap();
        assert!(l0.images().iter().all(|m| m.is_identity()));
        let l1 = sym_power_sl2(&g, 1, &f).unwrap();
        assert_eq!(l1.dim(), 2);
        assert_eq!(
            sym_power_sl2(&g, 5, &f).unwrap_err(),
            Error::WeightOutOfRange { weight: 5, p: 5 }
        );
    }

    #[test]
    fn swapped_generators_fail() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let mut gens = g.gens().to_vec();
        gens.swap(0, 1);
        let err = Rep::from_generators(&g, g.field(), gens).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { .. }));
    }

    #[test]
    fn double_dual_is_identical() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let l3 = sym_power_sl2(&g, 3, g.field()).unwrap();
        assert_eq!(l3.dual().dual().images(), l3.images());
    }

    #[test]
    fn tensor_dims_and_twists() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let f = g.field().clone();
        let l2 = sym_power_sl2(&g, 2, &f).unwrap();
        let l3 = sym_power_sl2(&g, 3, &f).unwrap();
        assert_eq!(l2.tensor(&l3).unwrap().dim(), 12);
        assert_eq!(l2.twist(0).unwrap().images(), l2.images());
        assert_eq!(l2.twist(1).unwrap_err(), Error::TwistDegreeOutOfRange { b: 1, k: 1 });
    }
}

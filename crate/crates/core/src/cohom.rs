//! First cohomology and `Ext^1` by the spanning-tree cocycle method.
//!
//! A 1-cocycle `f: G -> M` satisfies `f(gh) = g·f(h) + f(g)`, so it is
//! determined by its values on the generators. These `|gens| · dim M`
//! scalars are the unknowns. Walking the Cayley tree expresses `f(g)` for
//! every element as a linear form in them:
//! `f(parent · s) = ρ(parent) f(s) + f(parent)`. Each non-tree edge
//! `(g, s, gs)` then yields the constraint `f(gs) = ρ(g) f(s) + f(g)`.
//!
//! Coboundaries `f(g) = g·m - m` always solve the system, so the constraint
//! rank never exceeds `|gens| · dim M - dim B^1`; the solver stops reading
//! edges as soon as that bound is reached.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::gf::Elem;
use crate::matlin::{EchelonBasis, Mat};
use crate::rep::Rep;
use crate::{Error, Result};

/// `Z^1`, `B^1` and representatives of `H^1`, with cocycles stored as their
/// generator values concatenated (generator `s` occupies
/// `s·dim M .. (s+1)·dim M`).
#[derive(Clone, Debug)]
pub struct CocycleBasis {
    pub z1_dim: usize,
    pub b1_dim: usize,
    pub h1_dim: usize,
    pub dim: usize,
    pub ngens: usize,
    pub z1: Vec<Vec<Elem>>,
    pub h1: Vec<Vec<Elem>>,
    b1: EchelonBasis,
}

impl CocycleBasis {
    pub fn is_coboundary(&self, c: &[Elem]) -> bool {
        self.b1.contains(c)
    }

    /// Value of cocycle `c` on generator `s`.
    pub fn gen_value<'a>(&self, c: &'a [Elem], s: usize) -> &'a [Elem] {
        &c[s * self.dim..(s + 1) * self.dim]
    }
}

/// `Ext^1` dimensions as `z1 - b1 = h1` for the coefficient module `Hom(v, w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtReport {
    pub z1: usize,
    pub b1: usize,
    pub h1: usize,
}

/// Generator values of the coboundary `g -> g·x - x`.
pub fn coboundary(m: &Rep, x: &[Elem]) -> Vec<Elem> {
    let f = m.field();
    let mut out = Vec::with_capacity(m.gen_images().len() * m.dim());
    for g in m.gen_images() {
        let mut v = g.mul_vec(x);
        for (a, &b) in v.iter_mut().zip(x) {
            *a = f.sub(*a, b);
        }
        out.extend(v);
    }
    out
}

/// Solve for `Z^1(G, M)`.
pub fn z1_basis(m: &Rep) -> CocycleBasis {
    let f = m.field().clone();
    let group = m.group();
    let d = m.dim();
    let ngens = group.ngens();
    let nu = ngens * d;

    let mut b1 = EchelonBasis::new(&f, nu);
    for j in 0..d {
        let mut e = vec![Elem::ZERO; d];
        e[j] = Elem::ONE;
        b1.insert(coboundary(m, &e));
    }
    let b1_dim = b1.rank();

    // forms[g] is f(g) as a d x nu matrix, flattened row-major.
    let mut forms: Vec<Vec<Elem>> = Vec::with_capacity(group.len());
    forms.push(vec![Elem::ZERO; d * nu]);
    for g in 1..group.len() {
        let (parent, s) = group.tree(g).expect("non-identity element has a parent");
        let mut form = forms[parent].clone();
        add_block(&f, &mut form, nu, s * d, m.image(parent));
        forms.push(form);
    }

    let target = nu - b1_dim;
    let mut cons = EchelonBasis::new(&f, nu);
    if target > 0 {
        'edges: for (g, s, h) in group.nontree_edges() {
            let mut row = forms[h].clone();
            for (a, &b) in row.iter_mut().zip(&forms[g]) {
                *a = f.sub(*a, b);
            }
            let neg = m.image(g).scale(f.neg(Elem::ONE));
            add_block(&f, &mut row, nu, s * d, &neg);
            for i in 0..d {
                cons.insert(row[i * nu..(i + 1) * nu].to_vec());
                if cons.rank() == target {
                    break 'edges;
                }
            }
        }
    }
    let mut sys = Mat::zeros(&f, cons.rank(), nu);
    for (i, r) in cons.rows().iter().enumerate() {
        sys.row_mut(i).copy_from_slice(r);
    }
    let z1 = if cons.rank() == target { b1.rref_rows() } else { sys.kernel_basis() };
    let z1_dim = z1.len();
    let mut ext = b1.clone();
    let h1: Vec<Vec<Elem>> = z1.iter().filter(|c| ext.insert((*c).clone())).cloned().collect();
    CocycleBasis { z1_dim, b1_dim, h1_dim: h1.len(), dim: d, ngens, z1, h1, b1 }
}

/// `dst[i][col0 + j] += m[i][j]` for a `d x nu` row-major `dst`.
fn add_block(f: &crate::Field, dst: &mut [Elem], nu: usize, col0: usize, m: &Mat) {
    for i in 0..m.rows() {
        let start = i * nu + col0;
        f.axpy(&mut dst[start..start + m.cols()], Elem::ONE, m.row(i));
    }
}

/// `H^1(G, M)`.
pub fn h1(m: &Rep) -> ExtReport {
    let c = z1_basis(m);
    ExtReport { z1: c.z1_dim, b1: c.b1_dim, h1: c.h1_dim }
}

/// `Ext^1_G(v, w) = H^1(G, Hom(v, w))`.
pub fn ext1(v: &Rep, w: &Rep) -> Result<ExtReport> {
    Ok(h1(&Rep::hom(v, w)?))
}

pub fn ext1_dim(v: &Rep, w: &Rep) -> Result<usize> {
    Ok(ext1(v, w)?.h1)
}

/// The extension `0 -> w -> E -> v -> 0` given by a cocycle `c` with values
/// in `Hom(v, w)`: `E(g) = [[ρ_w(g), c(g) ρ_v(g)], [0, ρ_v(g)]]`, with `w`
/// spanning the first `dim w` coordinates.
pub fn build_extension(v: &Rep, w: &Rep, c: &[Elem]) -> Result<Rep> {
    let f = v.field();
    let (dv, dw) = (v.dim(), w.dim());
    let ngens = v.group().ngens();
    if c.len() != ngens * dv * dw {
        return Err(Error::DimMismatch("cocycle has the wrong length".into()));
    }
    let gens = (0..ngens)
        .map(|s| {
            let cs = Mat::from_flat(f, dw, dv, c[s * dv * dw..(s + 1) * dv * dw].to_vec())?;
            let mut e = Mat::zeros(f, dv + dw, dv + dw);
            e.set_block(0, 0, &w.gen_images()[s]);
            e.set_block(0, dw, &cs.mul(&v.gen_images()[s]));
            e.set_block(dw, dw, &v.gen_images()[s]);
            Ok(e)
        })
        .collect::<Result<Vec<_>>>()?;
    Rep::from_generators(v.group(), f, gens).map_err(|e| match e {
        Error::NotAHomomorphism { .. } => Error::NotACocycle,
        other => other,
    })
}

/// A nonsplit extension of `v` by `w` from the first `H^1` representative,
/// if one exists.
pub fn nonsplit_extension(v: &Rep, w: &Rep) -> Result<Option<Rep>> {
    let basis = z1_basis(&Rep::hom(v, w)?);
    match basis.h1.first() {
        Some(c) => Ok(Some(build_extension(v, w, c)?)),
        None => Ok(None),
    }
}

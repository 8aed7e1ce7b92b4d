//! Finite matrix groups enumerated by breadth-first closure.
//!
//! Elements are discovered in BFS order from the identity by right
//! multiplication with the generators. The discovery edges form a spanning
//! tree of the Cayley graph: every element except the identity is
//! `parent * gens[s]` for a recorded `(parent, s)`. Representations and
//! cocycles are transported along this tree, and the remaining (non-tree)
//! edges carry exactly the relations that must be checked.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::gf::{Elem, Field};
use crate::matlin::Mat;
use crate::{Error, Result};

pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct GroupTable {
    field: Field,
    dim: usize,
    gens: Vec<Mat>,
    elements: Vec<Mat>,
    index: HashMap<Vec<u8>, u32>,
    tree: Vec<Option<(u32, u32)>>,
    right_mul: Vec<u32>,
    orders: Vec<u64>,
    exponent: u64,
}

/// Collision-free key: the packed code of every entry, row-major, in a fixed
/// width.
fn encode(m: &Mat) -> Vec<u8> {
    let q = m.field().order();
    if q <= 256 {
        m.data().iter().map(|e| e.code() as u8).collect()
    } else if q <= 1 << 16 {
        m.data().iter().flat_map(|e| (e.code() as u16).to_le_bytes()).collect()
    } else {
        m.data().iter().flat_map(|e| e.code().to_le_bytes()).collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Enumerate the group generated by `gens`, failing once more than `cap`
/// elements have been found.
pub fn close_group(gens: &[Mat], cap: usize) -> Result<GroupTable> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    let field = first.field().clone();
    let dim = first.rows();
    for g in gens {
        if g.field() != &field {
            return Err(Error::FieldMismatch);
        }
        if !g.is_square() || g.rows() != dim {
            return Err(Error::DimMismatch("generators must be square of equal size".into()));
        }
        if !g.is_invertible() {
            return Err(Error::NotInvertible);
        }
    }
    let ngens = gens.len();
    let id = Mat::identity(&field, dim);
    let mut index = HashMap::new();
    index.insert(encode(&id), 0u32);
    let mut elements = vec![id];
    let mut tree = vec![None];
    let mut right_mul = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        for (s, gen) in gens.iter().enumerate() {
            let h = elements[head].mul(gen);
            let key = encode(&h);
            let idx = match index.get(&key) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    let i = elements.len() as u32;
                    index.insert(key, i);
                    elements.push(h);
                    tree.push(Some((head as u32, s as u32)));
                    i
                }
            };
            right_mul.push(idx);
        }
        head += 1;
    }
    debug_assert_eq!(right_mul.len(), elements.len() * ngens);
    let n = elements.len() as u64;
    let orders: Vec<u64> = elements
        .iter()
        .map(|g| g.matrix_order(n + 1).expect("element of a finite group"))
        .collect();
    let exponent = orders.iter().fold(1u64, |acc, &o| acc / gcd(acc, o) * o);
    Ok(GroupTable {
        field,
        dim,
        gens: gens.to_vec(),
        elements,
        index,
        tree,
        right_mul,
        orders,
        exponent,
    })
}

impl GroupTable {
    /// The defining field of the matrices.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Size of the defining matrices.
    pub fn degree(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Mat] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, g: usize) -> &Mat {
        &self.elements[g]
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        if m.field() != &self.field || m.rows() != self.dim || m.cols() != self.dim {
            return None;
        }
        self.index.get(&encode(m)).map(|&i| i as usize)
    }

    /// `(parent, generator)` of the discovery edge, `None` for the identity.
    pub fn tree(&self, g: usize) -> Option<(usize, usize)> {
        self.tree[g].map(|(a, s)| (a as usize, s as usize))
    }

    /// Index of `g * gens[s]`.
    #[inline]
    pub fn right_mul(&self, g: usize, s: usize) -> usize {
        self.right_mul[g * self.gens.len() + s] as usize
    }

    /// Index of the product of two elements.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].mul(&self.elements[b]);
        self.index_of(&m).expect("closed under products")
    }

    pub fn inverse(&self, g: usize) -> usize {
        let m = self.elements[g].pow(self.orders[g] - 1);
        self.index_of(&m).expect("closed under inverses")
    }

    pub fn order(&self, g: usize) -> u64 {
        self.orders[g]
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_p_regular(&self, g: usize, p: u32) -> bool {
        !self.orders[g].is_multiple_of(p as u64)
    }

    /// Every `(g, s, g * gens[s])` that is not a discovery edge; there are
    /// `|G| * |gens| - (|G| - 1)` of them.
    pub fn nontree_edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let ngens = self.gens.len();
        (0..self.elements.len()).flat_map(move |g| {
            (0..ngens).filter_map(move |s| {
                let h = self.right_mul(g, s);
                (self.tree(h) != Some((g, s))).then_some((g, s, h))
            })
        })
    }

    /// Number of non-tree edges.
    pub fn nontree_count(&self) -> usize {
        self.len() * self.ngens() + 1 - self.len()
    }

    /// Write `g` as a word in the generators, read left to right.
    pub fn word(&self, mut g: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((parent, s)) = self.tree(g) {
            w.push(s);
            g = parent;
        }
        w.reverse();
        w
    }

    /// Do the two tables enumerate the same set of matrices?
    pub fn same_group(&self, other: &GroupTable) -> bool {
        self.field == other.field
            && self.len() == other.len()
            && other.gens.iter().all(|g| self.index_of(g).is_some())
            && self.gens.iter().all(|g| other.index_of(g).is_some())
    }
}

/// Generators of `SL_2(q)` over `field`.
///
/// Over a prime field these are `[[1,1],[0,1]]` and `[[0,-1],[1,0]]`. Those
/// only generate `SL_2(p)`, so over an extension the pair is
/// `diag(w, w^-1)` (with `w` a primitive element) and `[[-1,1],[-1,0]]`.
pub fn sl2_generators(field: &Field) -> Vec<Mat> {
    if field.k() == 1 {
        vec![
            Mat::from_ints(field, &[&[1, 1], &[0, 1]]),
            Mat::from_ints(field, &[&[0, -1], &[1, 0]]),
        ]
    } else {
        let w = field.generator();
        let winv = field.inv_nonzero(w);
        vec![Mat::diag(field, &[w, winv]), Mat::from_ints(field, &[&[-1, 1], &[-1, 0]])]
    }
}

/// `SL_2(q)` for `q = p^k`.
pub fn sl2(p: u32, k: u32) -> Result<GroupTable> {
    let field = Field::make(p, k)?;
    close_group(&sl2_generators(&field), DEFAULT_CAP)
}

/// Direct product of two groups as block-diagonal matrices over a shared
/// field; the generators of `a` (acting on the first block) come first.
pub fn direct_product(a: &GroupTable, b: &GroupTable, cap: usize) -> Result<GroupTable> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let f = a.field();
    let ia = Mat::identity(f, a.degree());
    let ib = Mat::identity(f, b.degree());
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(Mat::block_diag(f, &[g, &ib]));
    }
    for g in b.gens() {
        gens.push(Mat::block_diag(f, &[&ia, g]));
    }
    close_group(&gens, cap)
}

/// The two factors of an element of a block-diagonal direct product.
pub fn product_components(g: &Mat, deg_a: usize) -> (Mat, Mat) {
    let n = g.rows();
    (g.block(0, 0, deg_a, deg_a), g.block(deg_a, deg_a, n - deg_a, n - deg_a))
}

/// Entrywise image of a matrix under `x -> x^(p^b)`.
pub fn frobenius_mat(m: &Mat, b: u32) -> Mat {
    let f = m.field().clone();
    m.map(|e: Elem| f.frob(e, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_orders() {
        assert_eq!(sl2(5, 1).unwrap().len(), 120);
        assert_eq!(sl2(3, 1).unwrap().len(), 24);
        assert_eq!(sl2(2, 2).unwrap().len(), 60);
        assert_eq!(sl2(3, 2).unwrap().len(), 720);
        assert_eq!(sl2(7, 1).unwrap().len(), 336);
    }

    #[test]
    fn trivial_and_cyclic() {
        let f = Field::make(5, 1).unwrap();
        let t = close_group(&[Mat::identity(&f, 2)], 10).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.nontree_edges().count(), 1);
        let c = close_group(&[Mat::from_ints(&f, &[&[1, 1], &[0, 1]])], 10).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.nontree_edges().count(), 1);
    }

    #[test]
    fn edges_and_regularity() {
        let g = sl2(5, 1).unwrap();
        assert_eq!(g.nontree_edges().count(), 121);
        assert_eq!(g.nontree_count(), 121);
        assert!(g.is_p_regular(0, 5));
        let u = g.index_of(&g.gens()[0]).unwrap();
        let w = g.index_of(&g.gens()[1]).unwrap();
        assert!(!g.is_p_regular(u, 5));
        assert!(g.is_p_regular(w, 5));
        assert_eq!(g.exponent(), 60);
        assert_eq!(g.orders()[0], 1);
    }

    #[test]
    fn errors() {
        let f = Field::make(5, 1).unwrap();
        assert_eq!(close_group(&[], 10).unwrap_err(), Error::NoGenerators);
        let sing = Mat::from_ints(&f, &[&[1, 0], &[0, 0]]);
        assert_eq!(close_group(&[sing], 10).unwrap_err(), Error::NotInvertible);
        let gens = sl2_generators(&f);
        assert_eq!(close_group(&gens, 50).unwrap_err(), Error::GroupTooLarge(50));
    }

    #[test]
    fn words_rebuild_elements() {
        let g = sl2(5, 1).unwrap();
        for i in [0, 7, 63, 119] {
            let m = g
                .word(i)
                .iter()
                .fold(Mat::identity(g.field(), 2), |acc, &s| acc.mul(&g.gens()[s]));
            assert_eq!(&m, g.element(i));
        }
    }
}

//! Univariate polynomials over a [`Field`], constant term first.
//!
//! Only what the MeatAxe needs: arithmetic, gcd, modular powers and a
//! factor finder that handles the small fields this crate works over
//! (distinct-degree splitting, then exhaustive search when a degree class
//! holds several factors).

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Elem, Field};

const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(Vec<Elem>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Elem::ONE])
    }

    pub fn x() -> Poly {
        Poly(vec![Elem::ZERO, Elem::ONE])
    }

    /// `x - a`.
    pub fn linear(f: &Field, a: Elem) -> Poly {
        Poly(vec![f.neg(a), Elem::ONE])
    }

    pub fn from_coeffs(mut c: Vec<Elem>) -> Poly {
        while c.last().is_some_and(|e| e.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Elem {
        self.0.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.0.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::from_coeffs((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::from_coeffs((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            f.axpy(&mut out[i..i + other.0.len()], a, &other.0);
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, f: &Field, c: Elem) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f, f.inv_nonzero(self.lead()))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, f: &Field, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), Poly::from_coeffs(r));
        }
        let inv = f.inv_nonzero(d.lead());
        let mut q = vec![Elem::ZERO; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = f.mul(r[i + dd], inv);
            q[i] = c;
            if !c.is_zero() {
                f.axpy(&mut r[i..=i + dd], f.neg(c), &d.0);
            }
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, f: &Field, d: &Poly) -> Poly {
        self.divrem(f, d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, f: &Field, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.0.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, f: &Field, mut e: u64, m: &Poly) -> Poly {
        let mut acc = Poly::one().rem(f, m);
        let mut base = self.rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// Does `d` divide `self`?
    pub fn divisible_by(&self, f: &Field, d: &Poly) -> bool {
        self.rem(f, d).is_zero()
    }
}

/// Roots of `poly` lying in `f`, in code order. Exhaustive over the field, so
/// only available for fields of order at most `2^16`; larger fields return
/// `None`.
pub fn roots(f: &Field, poly: &Poly) -> Option<Vec<Elem>> {
    if poly.is_zero() {
        return None;
    }
    if f.order() as u64 > EXHAUSTIVE_LIMIT {
        return None;
    }
    // Restrict to the split part first: gcd(poly, x^q - x).
    let xq = Poly::x().powmod(f, f.order() as u64, poly);
    let split = poly.gcd(f, &xq.sub(f, &Poly::x()));
    if split.degree() == Some(0) {
        return Some(Vec::new());
    }
    Some(f.elements().filter(|&a| split.eval(f, a).is_zero()).collect())
}

/// Distinct monic irreducible factors of `poly` that can be isolated, sorted
/// by degree then coefficients.
///
/// Distinct-degree splitting isolates every factor whose degree class holds a
/// single irreducible. Classes holding several are split by exhaustive search
/// when `q^d <= 2^16`; otherwise they are skipped, so the list can be
/// incomplete for large fields.
pub fn irreducible_factors(f: &Field, poly: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    let Some(deg) = poly.degree() else {
        return out;
    };
    if deg == 0 {
        return out;
    }
    let q = f.order() as u64;
    let x = Poly::x();
    let mut rest = poly.monic(f);
    let mut xqd = x.clone();
    let mut d = 1usize;
    loop {
        let n = rest.degree().unwrap_or(0);
        if n == 0 {
            break;
        }
        // Every factor left has degree >= d, so fewer than 2d means one factor.
        if n < 2 * d {
            out.push(rest);
            break;
        }
        xqd = xqd.powmod(f, q, &rest);
        let g = rest.gcd(f, &xqd.sub(f, &x));
        if g.degree().unwrap_or(0) > 0 {
            if g.degree() == Some(d) {
                out.push(g.clone());
            } else if let Some(found) = split_equal_degree(f, &g, d) {
                out.extend(found);
            }
            loop {
                let h = rest.gcd(f, &g);
                if h.degree() == Some(0) {
                    break;
                }
                rest = rest.divrem(f, &h).0;
            }
            xqd = xqd.rem(f, &rest);
        }
        d += 1;
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)));
    out.dedup();
    out
}

/// Split a product of distinct irreducibles of degree `d` by trial division
/// over every monic polynomial of degree `d`.
fn split_equal_degree(f: &Field, g: &Poly, d: usize) -> Option<Vec<Poly>> {
    let q = f.order() as u64;
    if d == 1 {
        return roots(f, g).map(|rs| rs.into_iter().map(|a| Poly::linear(f, a)).collect());
    }
    let total = q.checked_pow(d as u32)?;
    if total > EXHAUSTIVE_LIMIT {
        return None;
    }
    let mut found = Vec::new();
    let mut rest = g.clone();
    for idx in 0..total {
        let mut c = Vec::with_capacity(d + 1);
        let mut v = idx;
        for _ in 0..d {
            c.push(Elem((v % q) as u32));
            v /= q;
        }
        c.push(Elem::ONE);
        let cand = Poly(c);
        if rest.divisible_by(f, &cand) {
            rest = rest.divrem(f, &cand).0;
            found.push(cand);
            if rest.degree() == Some(0) {
                break;
            }
        }
    }
    Some(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&v| f.from_int(v)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let f = Field::make(7, 1).unwrap();
        let a = p(&f, &[3, 0, 5, 1, 2]);
        let b = p(&f, &[1, 4, 1]);
        let (q, r) = a.divrem(&f, &b);
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn roots_over_f5() {
        let f = Field::make(5, 1).unwrap();
        // (x-1)(x-3)(x^2+2), x^2+2 has no root mod 5
        let poly = p(&f, &[-1, 1])
            .mul(&f, &p(&f, &[-3, 1]))
            .mul(&f, &p(&f, &[2, 0, 1]));
        assert_eq!(roots(&f, &poly).unwrap(), vec![Elem(1), Elem(3)]);
    }

    #[test]
    fn factors_with_multiplicity_and_shared_degree() {
        let f = Field::make(5, 1).unwrap();
        let a = p(&f, &[2, 0, 1]); // x^2+2
        let b = p(&f, &[3, 0, 1]); // x^2+3
        let c = p(&f, &[-1, 1]);
        let poly = a.mul(&f, &a).mul(&f, &b).mul(&f, &c).mul(&f, &c).mul(&f, &c);
        let fs = irreducible_factors(&f, &poly);
        assert_eq!(fs, vec![c, a, b]);
    }

    #[test]
    fn irreducible_polynomial_is_its_own_factor() {
        let f = Field::make(2, 1).unwrap();
        let poly = p(&f, &[1, 1, 1]);
        assert_eq!(irreducible_factors(&f, &poly), vec![poly.clone()]);
        let f3 = Field::make(3, 1).unwrap();
        // x^4 + x + 2 is irreducible over F_3
        let quartic = p(&f3, &[2, 1, 0, 0, 1]);
        assert!(roots(&f3, &quartic).unwrap().is_empty());
        let fs = irreducible_factors(&f3, &quartic.mul(&f3, &quartic));
        assert_eq!(fs, vec![quartic]);
    }
}

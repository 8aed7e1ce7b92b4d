//! Finite fields `F_p` and `F_{p^k}`.
//!
//! An element of `F_{p^k} = F_p[x]/(m(x))` is the residue class of a
//! polynomial of degree `< k`. [`Elem`] stores its coefficient sequence packed
//! base `p` into one word (constant term in the least significant digit), so
//! elements are `Copy`, hash cheaply and compare in the same lexicographic
//! order as their coefficient sequences read from the top.
//!
//! Fields of order at most 256 carry full addition and multiplication tables;
//! larger extension fields up to `2^20` elements multiply through exponent/log
//! tables. Beyond that arithmetic falls back to polynomial reduction.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const TABLE_LIMIT: u32 = 256;
const LOG_LIMIT: u32 = 1 << 20;

/// An element of a finite field, packed base `p`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// The packed base-`p` encoding.
    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Binary and unary operations accepted by [`Field::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow(u64),
    Inv,
    Neg,
}

enum Kind {
    Prime,
    Table {
        add: Vec<u16>,
        mul: Vec<u16>,
        neg: Vec<u16>,
        inv: Vec<u16>,
    },
    Log {
        exp: Vec<u32>,
        log: Vec<u32>,
    },
    Plain,
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    pow_p: Vec<u32>,
    kind: Kind,
}

/// A finite field `F_{p^k}`, cheap to clone.
///
/// Two fields compare equal when `(p, k, modulus)` agree.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.0.p, self.0.k, self.0.modulus)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over F_p as coefficient vectors, constant term first.
// Only used while choosing and validating moduli.
mod fp_poly {
    use alloc::vec;
    use alloc::vec::Vec;

    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn inv(a: u32, p: u32) -> u32 {
        pow(a, p as u64 - 2, p)
    }

    pub fn pow(a: u32, mut e: u64, p: u32) -> u32 {
        let (mut base, mut acc) = (a as u64 % p as u64, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], p) as u64;
        while r.len() > dm {
            let c = (*r.last().unwrap() as u64 * lead_inv % p as u64) as u32;
            let shift = r.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                let sub = (c as u64 * mi as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
        rem(&prod, m, p)
    }

    pub fn powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut base = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &base, m, p);
            }
            base = mulmod(&base, &base, m, p);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// x^(p^j) mod m, computed by iterating the p-th power map.
    fn frob_x(j: u32, m: &[u32], p: u32) -> Vec<u32> {
        let mut cur = rem(&[0, 1], m, p);
        for _ in 0..j {
            cur = powmod(&cur, p as u64, m, p);
        }
        cur
    }

    /// Rabin's test for a monic polynomial of degree k.
    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let k = (m.len() - 1) as u32;
        if k == 1 {
            return true;
        }
        let xpk = frob_x(k, m, p);
        let mut diff = xpk;
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(&mut diff);
        if !diff.is_empty() {
            return false;
        }
        for r in super::prime_divisors(k as u64) {
            let mut h = frob_x(k / r as u32, m, p);
            h.resize(h.len().max(2), 0);
            h[1] = (h[1] + p - 1) % p;
            trim(&mut h);
            let g = gcd(m, &h, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

impl Field {
    /// The field `F_{p^k}` with the lexicographically least monic irreducible
    /// modulus, coefficients compared from the constant term up.
    pub fn make(p: u32, k: u32) -> Result<Field> {
        check_params(p, k)?;
        if k == 1 {
            return Field::build(p, vec![0, 1]);
        }
        let pk = (p as u64).pow(k);
        for idx in 0..pk {
            // c_0 is the most significant digit of idx.
            let mut coeffs = vec![0u32; k as usize + 1];
            let mut rest = idx;
            for i in (0..k as usize).rev() {
                coeffs[i] = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            coeffs[k as usize] = 1;
            if coeffs[0] == 0 {
                continue;
            }
            if fp_poly::is_irreducible(&coeffs, p) {
                return Field::build(p, coeffs);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::make(p, 1)
    }

    /// A field with an explicitly supplied modulus (constant term first).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let k = (modulus.len() - 1) as u32;
        check_params(p, k)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus("coefficient out of range".into()));
        }
        if modulus[k as usize] != 1 {
            return Err(Error::InvalidModulus("not monic".into()));
        }
        if k == 1 {
            if modulus[0] != 0 {
                return Err(Error::InvalidModulus("prime fields use the modulus x".into()));
            }
        } else if !fp_poly::is_irreducible(modulus, p) {
            return Err(Error::InvalidModulus("not irreducible".into()));
        }
        Field::build(p, modulus.to_vec())
    }

    fn build(p: u32, modulus: Vec<u32>) -> Result<Field> {
        let k = (modulus.len() - 1) as u32;
        let q = (p as u64).pow(k) as u32;
        let pow_p: Vec<u32> = (0..=k).map(|i| (p as u64).pow(i) as u32).collect();
        let mut inner = Inner {
            p,
            k,
            q,
            modulus,
            pow_p,
            kind: if k == 1 { Kind::Prime } else { Kind::Plain },
        };
        if k > 1 && q <= TABLE_LIMIT {
            let plain = Field(Arc::new(inner));
            let n = q as usize;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            let mut neg = vec![0u16; n];
            let mut inv = vec![0u16; n];
            for a in 0..q {
                neg[a as usize] = plain.plain_neg(Elem(a)).0 as u16;
                for b in 0..q {
                    add[a as usize * n + b as usize] = plain.plain_add(Elem(a), Elem(b)).0 as u16;
                    let m = plain.plain_mul(Elem(a), Elem(b));
                    mul[a as usize * n + b as usize] = m.0 as u16;
                    if m == Elem::ONE {
                        inv[a as usize] = b as u16;
                    }
                }
            }
            inner = Arc::try_unwrap(plain.0).ok().expect("unique");
            inner.kind = Kind::Table { add, mul, neg, inv };
        } else if k > 1 && q <= LOG_LIMIT {
            let plain = Field(Arc::new(inner));
            let g = plain.find_generator();
            let mut exp = vec![0u32; q as usize - 1];
            let mut log = vec![0u32; q as usize];
            let mut cur = Elem::ONE;
            for (i, slot) in exp.iter_mut().enumerate() {
                *slot = cur.0;
                log[cur.0 as usize] = i as u32;
                cur = plain.plain_mul(cur, g);
            }
            inner = Arc::try_unwrap(plain.0).ok().expect("unique");
            inner.kind = Kind::Log { exp, log };
        }
        Ok(Field(Arc::new(inner)))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// Number of elements `p^k`.
    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// An element from its packed code, checked against the field order.
    pub fn elem(&self, code: u32) -> Result<Elem> {
        if code < self.0.q {
            Ok(Elem(code))
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.k as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(Elem(
            coeffs.iter().enumerate().map(|(i, &c)| c * self.0.pow_p[i]).sum(),
        ))
    }

    /// Coefficient sequence of length `k`, constant term first.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.k as usize);
        let mut v = a.0;
        for _ in 0..self.0.k {
            out.push(v % self.0.p);
            v /= self.0.p;
        }
        out
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    /// All field elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    /// Is `a` in the prime subfield?
    pub fn in_prime_field(&self, a: Elem) -> bool {
        a.0 < self.0.p
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.kind {
            Kind::Prime => {
                let s = a.0 + b.0;
                Elem(if s >= self.0.p { s - self.0.p } else { s })
            }
            Kind::Table { add, .. } => Elem(add[(a.0 * self.0.q + b.0) as usize] as u32),
            _ => self.plain_add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.0.kind {
            Kind::Prime => Elem(if a.0 == 0 { 0 } else { self.0.p - a.0 }),
            Kind::Table { neg, .. } => Elem(neg[a.0 as usize] as u32),
            _ => self.plain_neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.kind {
            Kind::Prime => Elem(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.0.p - b.0 }),
            _ => self.add(a, self.neg(b)),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.kind {
            Kind::Prime => Elem(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32),
            Kind::Table { mul, .. } => Elem(mul[(a.0 * self.0.q + b.0) as usize] as u32),
            Kind::Log { exp, log } => {
                if a.0 == 0 || b.0 == 0 {
                    Elem::ZERO
                } else {
                    let n = self.0.q - 1;
                    let s = log[a.0 as usize] + log[b.0 as usize];
                    Elem(exp[(if s >= n { s - n } else { s }) as usize])
                }
            }
            Kind::Plain => self.plain_mul(a, b),
        }
    }

    /// Multiplicative inverse; `DivisionByZero` for zero.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(a.0 != 0);
        match &self.0.kind {
            Kind::Prime => Elem(fp_poly::inv(a.0, self.0.p)),
            Kind::Table { inv, .. } => Elem(inv[a.0 as usize] as u32),
            Kind::Log { exp, log } => {
                let n = self.0.q - 1;
                let l = log[a.0 as usize];
                Elem(exp[((n - l) % n) as usize])
            }
            Kind::Plain => self.pow(a, self.0.q as u64 - 2),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut acc = Elem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^b)` for `0 <= b < k`.
    pub fn frobenius(&self, a: Elem, b: u32) -> Result<Elem> {
        if !self.contains(a) {
            return Err(Error::FieldMismatch);
        }
        if b >= self.0.k {
            return Err(Error::TwistDegreeOutOfRange { b, k: self.0.k });
        }
        Ok(self.frob(a, b))
    }

    #[inline]
    pub(crate) fn frob(&self, a: Elem, b: u32) -> Elem {
        if b == 0 || self.0.k == 1 {
            a
        } else {
            self.pow(a, self.0.pow_p[b as usize] as u64)
        }
    }

    /// Checked arithmetic; operands must be elements of this field.
    pub fn arith(&self, a: Elem, b: Elem, op: Op) -> Result<Elem> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::FieldMismatch);
        }
        Ok(match op {
            Op::Add => self.add(a, b),
            Op::Sub => self.sub(a, b),
            Op::Mul => self.mul(a, b),
            Op::Div => self.div(a, b)?,
            Op::Pow(n) => self.pow(a, n),
            Op::Inv => self.inv(a)?,
            Op::Neg => self.neg(a),
        })
    }

    /// Least (by code) element generating the multiplicative group.
    pub fn generator(&self) -> Elem {
        match &self.0.kind {
            Kind::Log { exp, .. } => Elem(exp[1 % exp.len()]),
            _ => self.find_generator(),
        }
    }

    fn find_generator(&self) -> Elem {
        let n = self.0.q as u64 - 1;
        if n == 1 {
            return Elem::ONE;
        }
        let primes = prime_divisors(n);
        (1..self.0.q)
            .map(Elem)
            .find(|&g| primes.iter().all(|&r| self.plain_pow(g, n / r) != Elem::ONE))
            .expect("multiplicative group is cyclic")
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Elem) -> u64 {
        assert!(!a.is_zero());
        let mut n = self.0.q as u64 - 1;
        for r in prime_divisors(n) {
            while n.is_multiple_of(r) && self.pow(a, n / r) == Elem::ONE {
                n /= r;
            }
        }
        n
    }

    /// `dst[i] += c * src[i]`.
    #[inline]
    pub fn axpy(&self, dst: &mut [Elem], c: Elem, src: &[Elem]) {
        debug_assert_eq!(dst.len(), src.len());
        if c.is_zero() {
            return;
        }
        match &self.0.kind {
            Kind::Prime => {
                let p = self.0.p as u64;
                let c = c.0 as u64;
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        d.0 = ((d.0 as u64 + c * s.0 as u64) % p) as u32;
                    }
                }
            }
            Kind::Table { add, mul, .. } => {
                let q = self.0.q;
                let row = &mul[(c.0 * q) as usize..((c.0 + 1) * q) as usize];
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        d.0 = add[(d.0 * q + row[s.0 as usize] as u32) as usize] as u32;
                    }
                }
            }
            _ => {
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        *d = self.add(*d, self.mul(c, *s));
                    }
                }
            }
        }
    }

    /// `v[i] *= c`.
    pub fn scale(&self, v: &mut [Elem], c: Elem) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        debug_assert_eq!(a.len(), b.len());
        match &self.0.kind {
            Kind::Prime => {
                let p = self.0.p as u64;
                let mut acc = 0u64;
                for (x, y) in a.iter().zip(b) {
                    acc += x.0 as u64 * y.0 as u64;
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                Elem((acc % p) as u32)
            }
            _ => a
                .iter()
                .zip(b)
                .fold(Elem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y))),
        }
    }

    fn plain_add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.0.k {
            let s = (x % p + y % p) % p;
            out += s * place;
            place = place.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        Elem(out)
    }

    fn plain_neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.0.k {
            let d = x % p;
            out += ((p - d) % p) * place;
            place = place.wrapping_mul(p);
            x /= p;
        }
        Elem(out)
    }

    fn plain_mul(&self, a: Elem, b: Elem) -> Elem {
        if self.0.k == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32);
        }
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let r = fp_poly::mulmod(&ca, &cb, &self.0.modulus, self.0.p);
        Elem(r.iter().enumerate().map(|(i, &c)| c * self.0.pow_p[i]).sum())
    }

    fn plain_pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut acc = Elem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.plain_mul(acc, base);
            }
            base = self.plain_mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn check_params(p: u32, k: u32) -> Result<()> {
    if !is_prime(p) || p >= 1 << 16 {
        return Err(Error::NotPrime(p));
    }
    if !(1..=8).contains(&k) {
        return Err(Error::DegreeOutOfRange(k));
    }
    if (p as u64).pow(k) >= 1 << 31 {
        return Err(Error::FieldTooLarge { p, k });
    }
    Ok(())
}

/// Binomial coefficient reduced mod `p` (exact for small arguments).
pub fn binomial_mod(n: u64, r: u64, p: u32) -> u32 {
    if r > n {
        return 0;
    }
    // Lucas' theorem keeps this exact for any n.
    let p64 = p as u64;
    let (mut n, mut r) = (n, r);
    let mut acc = 1u64;
    while n > 0 || r > 0 {
        let (ni, ri) = (n % p64, r % p64);
        if ri > ni {
            return 0;
        }
        let mut c = 1u64;
        for j in 0..ri {
            c = c * ((ni - j) % p64) % p64;
            c = c * fp_poly::inv(((j + 1) % p64) as u32, p) as u64 % p64;
        }
        acc = acc * c % p64;
        n /= p64;
        r /= p64;
    }
    acc as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_x() {
        let f = Field::make(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn f4_modulus() {
        let f = Field::make(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn f25_modulus_matches_exhaustive_search() {
        // Independent oracle: a monic quadratic is irreducible iff it has no root.
        let p = 5u32;
        let mut best = None;
        'outer: for c0 in 0..p {
            for c1 in 0..p {
                let has_root = (0..p).any(|x| (x * x + c1 * x + c0) % p == 0);
                if !has_root {
                    best = Some([c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        let f = Field::make(5, 2).unwrap();
        assert_eq!(f.modulus(), &best.unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(Field::make(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(Field::make(5, 9).unwrap_err(), Error::DegreeOutOfRange(9));
        assert_eq!(Field::make(5, 0).unwrap_err(), Error::DegreeOutOfRange(0));
        let f = Field::make(5, 1).unwrap();
        assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.arith(Elem(7), Elem(1), Op::Add), Err(Error::FieldMismatch));
        assert!(Field::with_modulus(5, &[1, 0, 1]).is_err()); // x^2 + 1 = (x-2)(x+2)
        assert!(Field::with_modulus(5, &[2, 4, 1]).is_ok());
    }

    #[test]
    fn small_examples() {
        let f5 = Field::make(5, 1).unwrap();
        assert_eq!(f5.inv(Elem(2)).unwrap(), Elem(3));
        let f4 = Field::make(2, 2).unwrap();
        let x = f4.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f4.pow(x, 3), Elem::ONE);
        assert_eq!(f4.add(x, x), Elem::ZERO);
    }

    #[test]
    fn frobenius_examples() {
        let f9 = Field::make(3, 2).unwrap();
        for c in f9.elements() {
            assert_eq!(f9.frobenius(c, 0).unwrap(), c);
            let twice = f9.frobenius(f9.frobenius(c, 1).unwrap(), 1).unwrap();
            assert_eq!(twice, c);
        }
        for c in 0..3 {
            assert_eq!(f9.frobenius(Elem(c), 1).unwrap(), Elem(c));
        }
        assert!(f9.frobenius(Elem(1), 2).is_err());
    }

    #[test]
    fn table_log_and_plain_paths_agree() {
        // 5^4 = 625 uses log tables, 3^5 = 243 full tables; compare against
        // schoolbook multiplication.
        for (p, k) in [(5u32, 4u32), (3, 5), (2, 8), (7, 2)] {
            let f = Field::make(p, k).unwrap();
            let step = (f.order() / 97).max(1);
            for a in (0..f.order()).step_by(step as usize) {
                for b in (0..f.order()).step_by(step as usize + 3) {
                    assert_eq!(f.mul(Elem(a), Elem(b)), f.plain_mul(Elem(a), Elem(b)));
                    assert_eq!(f.add(Elem(a), Elem(b)), f.plain_add(Elem(a), Elem(b)));
                }
            }
        }
    }

    #[test]
    fn inverse_property_all_small_fields() {
        for (p, k) in [(2u32, 1u32), (5, 1), (2, 2), (3, 2), (5, 2), (2, 3), (5, 4), (13, 1)] {
            let f = Field::make(p, k).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE, "{f:?} {a:?}");
            }
        }
    }

    #[test]
    fn generator_has_full_order() {
        for (p, k) in [(5u32, 1u32), (3, 2), (5, 2), (2, 2), (2, 5)] {
            let f = Field::make(p, k).unwrap();
            assert_eq!(f.mult_order(f.generator()), f.order() as u64 - 1);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_mod(4, 2, 7), 6);
        assert_eq!(binomial_mod(6, 3, 7), 20 % 7);
        assert_eq!(binomial_mod(10, 5, 5), 252 % 5);
        assert_eq!(binomial_mod(10, 3, 5), 0);
    }

    #[test]
    fn field_make_is_deterministic() {
        for (p, k) in [(3u32, 4u32), (5, 3), (2, 7)] {
            assert_eq!(Field::make(p, k).unwrap().modulus(), Field::make(p, k).unwrap().modulus());
        }
    }
}

//! The adequacy decision procedure.
//!
//! An element acts semisimply exactly when the order of its image is prime
//! to the characteristic, so semisimplicity is read off image orders. The
//! image order divides the element order recorded in the group table.

use serde::{Deserialize, Serialize};

use crate::cohom::ext1_dim;
use crate::matlin::EchelonBasis;
use crate::modstruct::{end_dim, is_irreducible, Module};
use crate::rep::Rep;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdequacyReport {
    pub dim: usize,
    pub p: u32,
    pub dim_coprime: bool,
    pub span_dim: usize,
    pub weakly_adequate: bool,
    pub ext1_self: usize,
    pub adequate: bool,
    pub regular_elements: usize,
    pub singular_elements: usize,
}

/// Order of `ρ(g)`.
pub fn image_order(r: &Rep, g: usize) -> u64 {
    r.image(g).order_dividing(r.group().order(g))
}

pub fn is_semisimple(r: &Rep, g: usize) -> bool {
    !image_order(r, g).is_multiple_of(r.field().p() as u64)
}

fn span_dim_over(r: &Rep, keep: impl Fn(usize) -> bool) -> usize {
    let d = r.dim();
    let mut span = EchelonBasis::new(r.field(), d * d);
    for g in 0..r.group().len() {
        if span.is_full() {
            break;
        }
        if keep(g) {
            span.insert(r.image(g).data().to_vec());
        }
    }
    span.rank()
}

/// Dimension of the span of the semisimple images inside `End(V)`.
pub fn semisimple_span_dim(r: &Rep) -> usize {
    span_dim_over(r, |g| is_semisimple(r, g))
}

/// Dimension of the span of all images.
pub fn full_span_dim(r: &Rep) -> usize {
    span_dim_over(r, |_| true)
}

/// Decide conditions (1)–(3) for an absolutely irreducible representation.
pub fn check_adequacy(r: &Rep) -> Result<AdequacyReport> {
    let m = Module::from(r);
    if !is_irreducible(&m)? {
        return Err(Error::NotIrreducible);
    }
    let e = end_dim(&m)?;
    if e != 1 {
        return Err(Error::NotAbsolutelyIrreducible(e));
    }
    let p = r.field().p();
    let dim = r.dim();
    let regular_elements = (0..r.group().len()).filter(|&g| is_semisimple(r, g)).count();
    let span_dim = semisimple_span_dim(r);
    let ext1_self = ext1_dim(r, r)?;
    let dim_coprime = !dim.is_multiple_of(p as usize);
    let weakly_adequate = span_dim == dim * dim;
    Ok(AdequacyReport {
        dim,
        p,
        dim_coprime,
        span_dim,
        weakly_adequate,
        ext1_self,
        adequate: dim_coprime && weakly_adequate && ext1_self == 0,
        regular_elements,
        singular_elements: r.group().len() - regular_elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::sl2;
    use crate::rep::sym_power_sl2;
    use alloc::sync::Arc;

    fn l(p: u32, a: u32) -> Rep {
        let g = Arc::new(sl2(p, 1).unwrap());
        sym_power_sl2(&g, a, g.field()).unwrap()
    }

    #[test]
    fn span_examples() {
        assert_eq!(semisimple_span_dim(&l(5, 2)), 9);
        assert!(semisimple_span_dim(&l(3, 2)) < 9);
        assert_eq!(semisimple_span_dim(&l(5, 0)), 1);
    }

    #[test]
    fn report_examples() {
        let r = check_adequacy(&l(7, 1)).unwrap();
        assert!(r.adequate);
        let r = check_adequacy(&l(7, 3)).unwrap();
        assert!(r.weakly_adequate && !r.adequate);
        assert_eq!(r.ext1_self, 1);
        let r = check_adequacy(&l(5, 4)).unwrap();
        assert!(!r.dim_coprime && r.weakly_adequate && !r.adequate);
        assert_eq!(r.ext1_self, 0);
        assert_eq!(r.regular_elements + r.singular_elements, 120);
    }

    #[test]
    fn reducible_input_is_refused() {
        let a = l(5, 1);
        let t = a.tensor(&a).unwrap();
        assert_eq!(check_adequacy(&t).unwrap_err(), Error::NotIrreducible);
    }
}

//! Submodules, homomorphisms and composition factors.
//!
//! Everything here works on a [`Module`]: the action matrices of the group
//! generators on column vectors. A [`Rep`] converts into one for free, and
//! factors found by [`chop`] convert back with [`Rep::from_generators`].
//!
//! Irreducibility is only ever claimed with a certificate: a random algebra
//! element `θ` and an irreducible factor `f` of its characteristic
//! polynomial such that `ker f(θ)` has dimension `deg f`, a nonzero vector
//! of that kernel spins to the whole module, and a vector of `ker f(θ)^T`
//! spins to the whole dual module.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::gf::{Elem, Field};
use crate::matlin::{EchelonBasis, Mat};
use crate::poly::{irreducible_factors, roots};
use crate::rep::Rep;
use crate::{Error, Result};

const CHOP_ATTEMPTS: usize = 64;
const ISO_TRIES: usize = 128;
const CANONICAL_WORDS: usize = 64;

/// Generator action matrices over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    field: Field,
    dim: usize,
    gens: Vec<Mat>,
}

impl Module {
    pub fn new(field: &Field, dim: usize, gens: Vec<Mat>) -> Result<Module> {
        for g in &gens {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimMismatch("action matrix has the wrong size".into()));
            }
        }
        Ok(Module { field: field.clone(), dim, gens })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Mat] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Mat> {
        self.gens
    }

    /// Action with every matrix transposed (the dual up to the inverse).
    pub fn transposed(&self) -> Module {
        Module { field: self.field.clone(), dim: self.dim, gens: self.gens.iter().map(Mat::transpose).collect() }
    }

    /// Action on a submodule, in the basis stored by `sub`.
    pub fn submodule(&self, sub: &Subspace) -> Module {
        let basis = sub.basis.rows();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vec<Elem>> = basis
                    .iter()
                    .map(|b| sub.basis.coords(&g.mul_vec(b)).expect("subspace is a submodule"))
                    .collect();
                Mat::from_cols(&self.field, basis.len(), &cols)
            })
            .collect();
        Module { field: self.field.clone(), dim: basis.len(), gens }
    }

    /// Action on `V / sub`, in the basis given by the standard vectors at
    /// the non-pivot columns of `sub`.
    pub fn quotient(&self, sub: &Subspace) -> Module {
        let free = sub.complement_columns();
        let n = free.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Mat::zeros(&self.field, n, n);
                for (j, &c) in free.iter().enumerate() {
                    let mut v = g.col(c);
                    sub.basis.reduce(&mut v);
                    for (i, &r) in free.iter().enumerate() {
                        m.set(i, j, v[r]);
                    }
                }
                m
            })
            .collect();
        Module { field: self.field.clone(), dim: n, gens }
    }

    /// `Hom(self, other)` as a basis of `dim other x dim self` matrices.
    pub fn hom(&self, other: &Module) -> Result<Vec<Mat>> {
        hom_space(self, other)
    }
}

impl From<&Rep> for Module {
    fn from(r: &Rep) -> Module {
        Module { field: r.field().clone(), dim: r.dim(), gens: r.gen_images().to_vec() }
    }
}

/// A subspace of `F^n` with an echelonised basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: EchelonBasis,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { basis: EchelonBasis::new(field, ambient) }
    }

    pub fn from_vectors(field: &Field, ambient: usize, vs: impl IntoIterator<Item = Vec<Elem>>) -> Subspace {
        let mut basis = EchelonBasis::new(field, ambient);
        for v in vs {
            basis.insert(v);
        }
        Subspace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ambient_dim()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        self.basis.rows()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.basis.contains(v)
    }

    /// Canonical reduced echelon basis, one vector per row.
    pub fn rref(&self) -> Mat {
        self.basis.rref()
    }

    pub fn is_submodule(&self, m: &Module) -> bool {
        self.basis().iter().all(|b| m.gens.iter().all(|g| self.contains(&g.mul_vec(b))))
    }

    fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &c in self.basis.pivots() {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut basis = self.basis.clone();
        for v in other.basis() {
            basis.insert(v.clone());
        }
        Subspace { basis }
    }
}

/// Vectors fixed by every generator.
pub fn fixed_points(m: &Module) -> Subspace {
    let n = m.dim;
    let mut stacked = Mat::zeros(&m.field, n * m.gens.len(), n);
    let id = Mat::identity(&m.field, n);
    for (s, g) in m.gens.iter().enumerate() {
        stacked.set_block(s * n, 0, &g.sub(&id));
    }
    Subspace::from_vectors(&m.field, n, stacked.kernel_basis())
}

/// Smallest submodule containing `seeds`.
pub fn spin(m: &Module, seeds: &[Vec<Elem>]) -> Subspace {
    Subspace::from_vectors(&m.field, m.dim, spin_ordered(m, seeds))
}

/// Spin-up returning the basis in discovery order: each seed, then the
/// images of basis vectors under the generators, processed first in first
/// out, kept whenever linearly independent of everything before.
pub fn spin_ordered(m: &Module, seeds: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut ech = EchelonBasis::new(&m.field, m.dim);
    let mut out: Vec<Vec<Elem>> = Vec::new();
    let mut head = 0;
    for seed in seeds {
        if ech.insert(seed.clone()) {
            out.push(seed.clone());
        }
        while head < out.len() && !ech.is_full() {
            for g in &m.gens {
                let x = g.mul_vec(&out[head]);
                if ech.insert(x.clone()) {
                    out.push(x);
                }
            }
            head += 1;
        }
    }
    out
}

/// Basis of `Hom_G(v, w)`, each element a `dim w x dim v` matrix `φ` with
/// `φ ρ_v(s) = ρ_w(s) φ` for every generator `s`.
///
/// The standard basis vectors of `v` are spun one at a time; the images of
/// the seeds are the unknowns, every spin step transports them, and every
/// dependency found while spinning becomes a linear constraint.
pub fn hom_space(v: &Module, w: &Module) -> Result<Vec<Mat>> {
    if v.field != w.field || v.gens.len() != w.gens.len() {
        return Err(Error::GroupMismatch);
    }
    let f = v.field.clone();
    let (dv, dw) = (v.dim, w.dim);
    if dv == 0 || dw == 0 {
        return Ok(Vec::new());
    }
    // Seeds: standard vectors not yet in the span, in order.
    let mut probe = EchelonBasis::new(&f, dv);
    let mut seeds = Vec::new();
    for i in 0..dv {
        let mut e = vec![Elem::ZERO; dv];
        e[i] = Elem::ONE;
        if probe.contains(&e) {
            continue;
        }
        seeds.push(i);
        for x in spin_ordered(v, &[e]) {
            probe.insert(x);
        }
    }
    let nu = seeds.len() * dw;
    // rows[j] spans V; phis[j] is φ(rows[j]) as a dw x nu matrix of linear
    // forms in the unknowns.
    let mut ech = EchelonBasis::new(&f, dv);
    let mut phis: Vec<Mat> = Vec::new();
    let mut constraints = EchelonBasis::new(&f, nu);
    let absorb = |ech: &mut EchelonBasis, phis: &mut Vec<Mat>, constraints: &mut EchelonBasis, x: Vec<Elem>, phi: Mat| {
        let mut r = x;
        let coeffs = ech.reduce(&mut r);
        let mut phi = phi;
        for (j, &c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                phi = phi.axpy(f.neg(c), &phis[j]);
            }
        }
        match r.iter().position(|e| !e.is_zero()) {
            Some(piv) => {
                let inv = f.inv_nonzero(r[piv]);
                ech.insert(r);
                phis.push(phi.scale(inv));
                true
            }
            None => {
                for i in 0..dw {
                    if constraints.rank() < nu {
                        constraints.insert(phi.row(i).to_vec());
                    }
                }
                false
            }
        }
    };
    for (k, &i) in seeds.iter().enumerate() {
        let mut e = vec![Elem::ZERO; dv];
        e[i] = Elem::ONE;
        let mut unknown = Mat::zeros(&f, dw, nu);
        for r in 0..dw {
            unknown.set(r, k * dw + r, Elem::ONE);
        }
        let start = phis.len();
        absorb(&mut ech, &mut phis, &mut constraints, e, unknown);
        let mut head = start;
        while head < phis.len() {
            let b = ech.rows()[head].clone();
            let phib = phis[head].clone();
            for (gv, gw) in v.gens.iter().zip(&w.gens) {
                absorb(&mut ech, &mut phis, &mut constraints, gv.mul_vec(&b), gw.mul(&phib));
            }
            head += 1;
        }
    }
    debug_assert!(ech.is_full());
    let mut sys = Mat::zeros(&f, constraints.rank(), nu);
    for (i, r) in constraints.rows().iter().enumerate() {
        sys.row_mut(i).copy_from_slice(r);
    }
    let sols = sys.kernel_basis();
    // φ(e_i) from the coordinates of e_i in the spin basis.
    let coords: Vec<Vec<Elem>> = (0..dv)
        .map(|i| {
            let mut e = vec![Elem::ZERO; dv];
            e[i] = Elem::ONE;
            ech.coords(&e).expect("spin basis spans V")
        })
        .collect();
    let mut out = Vec::with_capacity(sols.len());
    for u in sols {
        let images: Vec<Vec<Elem>> = phis.iter().map(|p| p.mul_vec(&u)).collect();
        let mut phi = Mat::zeros(&f, dw, dv);
        for (i, c) in coords.iter().enumerate() {
            let mut col = vec![Elem::ZERO; dw];
            for (j, &cj) in c.iter().enumerate() {
                f.axpy(&mut col, cj, &images[j]);
            }
            for (r, &x) in col.iter().enumerate() {
                phi.set(r, i, x);
            }
        }
        out.push(phi);
    }
    Ok(out)
}

/// Outcome of one attempt to split a module.
#[derive(Clone, Debug)]
pub enum Split {
    /// Certified irreducible.
    Irreducible,
    /// A proper nonzero submodule.
    Reducible(Subspace),
}

fn random_elem(rng: &mut ChaCha8Rng, f: &Field) -> Elem {
    Elem(rng.next_u32() % f.order())
}

fn random_algebra_element(m: &Module, rng: &mut ChaCha8Rng) -> Mat {
    let f = &m.field;
    let mut theta = Mat::zeros(f, m.dim, m.dim);
    let ngens = m.gens.len();
    for _ in 0..8 {
        let len = 1 + (rng.next_u32() % 3) as usize;
        let mut word = m.gens[(rng.next_u32() as usize) % ngens].clone();
        for _ in 1..len {
            word = word.mul(&m.gens[(rng.next_u32() as usize) % ngens]);
        }
        let c = random_elem(rng, f);
        theta = theta.axpy(c, &word);
    }
    theta
}

/// Look for a proper submodule or an irreducibility certificate.
pub fn split(m: &Module, rng: &mut ChaCha8Rng) -> Result<Split> {
    if m.dim <= 1 {
        return Ok(Split::Irreducible);
    }
    if m.gens.is_empty() {
        let mut e = vec![Elem::ZERO; m.dim];
        e[0] = Elem::ONE;
        return Ok(Split::Reducible(Subspace::from_vectors(&m.field, m.dim, [e])));
    }
    let mt = m.transposed();
    for _ in 0..CHOP_ATTEMPTS {
        let theta = random_algebra_element(m, rng);
        let cp = theta.charpoly();
        let mut factors = irreducible_factors(&m.field, &cp);
        factors.sort_by_key(|f| f.degree());
        for fac in factors {
            let nf = theta.eval_poly(&fac);
            let ker = nf.kernel_basis();
            let deg = fac.degree().unwrap_or(0);
            let sub = spin(m, &ker[..1]);
            if sub.dim() < m.dim {
                return Ok(Split::Reducible(sub));
            }
            let kt = nf.transpose().kernel_basis();
            let dual_sub = spin(&mt, &kt[..1]);
            if dual_sub.dim() < m.dim {
                // The annihilator of a proper submodule of the transposed
                // action is a proper submodule.
                let rows = Mat::from_rows(&m.field, dual_sub.basis()).expect("equal lengths");
                return Ok(Split::Reducible(Subspace::from_vectors(&m.field, m.dim, rows.kernel_basis())));
            }
            if ker.len() == deg {
                return Ok(Split::Irreducible);
            }
        }
    }
    Err(Error::Inconclusive(CHOP_ATTEMPTS))
}

pub fn is_irreducible(m: &Module) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    Ok(matches!(split(m, &mut rng)?, Split::Irreducible))
}

/// Dimension of `End_G(V)`.
pub fn end_dim(m: &Module) -> Result<usize> {
    Ok(hom_space(m, m)?.len())
}

/// A composition factor class.
#[derive(Clone, Debug)]
pub struct ChopFactor {
    pub dim: usize,
    pub multiplicity: usize,
    pub fingerprint: u64,
    /// Action on a canonical basis when one was found, else on the basis
    /// the factor was discovered in.
    pub module: Module,
}

/// Composition factors with multiplicities, ordered by dimension and then
/// fingerprint.
pub fn chop(m: &Module, seed: u64) -> Result<Vec<ChopFactor>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pending = vec![m.clone()];
    let mut simples = Vec::new();
    while let Some(x) = pending.pop() {
        if x.dim == 0 {
            continue;
        }
        match split(&x, &mut rng)? {
            Split::Irreducible => simples.push(x),
            Split::Reducible(sub) => {
                pending.push(x.quotient(&sub));
                pending.push(x.submodule(&sub));
            }
        }
    }
    let mut classes: Vec<ChopFactor> = Vec::new();
    for s in simples {
        let canon = canonical_form(&s);
        let (fp, module) = match canon {
            Some(c) => (fingerprint(&c), c),
            None => (invariant_fingerprint(&s), s),
        };
        let mut found = false;
        for c in classes.iter_mut() {
            if c.dim == module.dim && c.fingerprint == fp && same_class(&c.module, &module)? {
                c.multiplicity += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push(ChopFactor { dim: module.dim, multiplicity: 1, fingerprint: fp, module });
        }
    }
    classes.sort_by_key(|a| (a.dim, a.fingerprint));
    Ok(classes)
}

fn same_class(a: &Module, b: &Module) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    Ok(find_isomorphism(a, b, 0)?.is_some())
}

/// Fixed sequence of algebra elements used for canonical bases.
fn canonical_words(m: &Module) -> impl Iterator<Item = Mat> + '_ {
    let ngens = m.gens.len();
    let mut seq: Vec<Mat> = Vec::new();
    let count = if ngens == 0 { 0 } else { CANONICAL_WORDS };
    (0..count).map(move |i| {
        let w = if i < ngens {
            m.gens[i].clone()
        } else {
            let a = &seq[i - 1];
            let b = &seq[(i * 7 + 3) % i];
            a.mul(b).add(&seq[i - ngens])
        };
        seq.push(w.clone());
        w
    })
}

/// Action on a basis determined by the isomorphism class alone: the first
/// word with an eigenvalue of geometric multiplicity one gives a vector, up
/// to scalar, whose ordered spin is the basis. Only succeeds for absolutely
/// irreducible modules.
pub fn canonical_form(m: &Module) -> Option<Module> {
    let f = &m.field;
    for w in canonical_words(m) {
        let cp = w.charpoly();
        for lam in roots(f, &cp)? {
            let n = w.sub(&Mat::scalar(f, m.dim, lam));
            let ker = n.kernel_basis();
            if ker.len() != 1 {
                continue;
            }
            let basis = spin_ordered(m, &ker);
            if basis.len() != m.dim {
                return None;
            }
            let p = Mat::from_cols(f, m.dim, &basis);
            let pinv = p.inverse().ok()?;
            let gens = m.gens.iter().map(|g| pinv.mul(g).mul(&p)).collect();
            return Some(Module { field: f.clone(), dim: m.dim, gens });
        }
    }
    None
}

fn fnv(hash: &mut u64, x: u64) {
    for b in x.to_le_bytes() {
        *hash ^= b as u64;
        *hash = hash.wrapping_mul(0x100_0000_01b3);
    }
}

/// FNV-1a hash of the dimension and the action matrices.
pub fn fingerprint(m: &Module) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    fnv(&mut h, m.dim as u64);
    for g in &m.gens {
        for e in g.data() {
            fnv(&mut h, e.code() as u64);
        }
    }
    h
}

fn invariant_fingerprint(m: &Module) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ 1;
    fnv(&mut h, m.dim as u64);
    for w in canonical_words(m).take(8) {
        for c in w.charpoly().coeffs() {
            fnv(&mut h, c.code() as u64);
        }
    }
    h
}

/// Socle and head multiplicities of each supplied irreducible.
pub fn head_socle_wrt(m: &Module, irreducibles: &[Module]) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut soc = Vec::new();
    let mut head = Vec::new();
    for (i, l) in irreducibles.iter().enumerate() {
        if !is_irreducible(l)? {
            return Err(Error::ListNotIrreducible(i));
        }
        let e = end_dim(l)?;
        soc.push(hom_space(l, m)?.len() / e);
        head.push(hom_space(m, l)?.len() / e);
    }
    Ok((soc, head))
}

/// Sum of the images of all homomorphisms from the supplied irreducibles.
pub fn socle(m: &Module, irreducibles: &[Module]) -> Result<Subspace> {
    let mut s = Subspace::zero(&m.field, m.dim);
    for l in irreducibles {
        for phi in hom_space(l, m)? {
            for j in 0..phi.cols() {
                s = s.sum(&Subspace::from_vectors(&m.field, m.dim, [phi.col(j)]));
            }
        }
    }
    Ok(s)
}

/// Socle layers from the bottom, as multiplicities of each supplied
/// irreducible per layer.
pub fn socle_series(m: &Module, irreducibles: &[Module]) -> Result<Vec<Vec<usize>>> {
    let ends = irreducibles.iter().map(end_dim).collect::<Result<Vec<_>>>()?;
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while cur.dim > 0 {
        let mults = irreducibles
            .iter()
            .zip(&ends)
            .map(|(l, &e)| Ok(hom_space(l, &cur)?.len() / e))
            .collect::<Result<Vec<_>>>()?;
        let s = socle(&cur, irreducibles)?;
        if s.dim() == 0 {
            return Err(Error::IncompleteIrreducibleList);
        }
        layers.push(mults);
        cur = cur.quotient(&s);
    }
    Ok(layers)
}

fn random_combination(basis: &[Mat], rng: &mut ChaCha8Rng) -> Mat {
    let f = basis[0].field().clone();
    let mut acc = Mat::zeros(&f, basis[0].rows(), basis[0].cols());
    for b in basis {
        acc = acc.axpy(random_elem(rng, &f), b);
    }
    acc
}

/// Search `Hom(v, w)` for an invertible element. A result is a proof of
/// isomorphism; `None` is a proof of non-isomorphism when the homomorphism
/// space has dimension at most one, and otherwise means that `128` seeded
/// random combinations were all singular.
pub fn find_isomorphism(v: &Module, w: &Module, seed: u64) -> Result<Option<Mat>> {
    if v.dim != w.dim {
        return Ok(None);
    }
    let basis = hom_space(v, w)?;
    match basis.len() {
        0 => Ok(None),
        1 => Ok(basis[0].is_invertible().then(|| basis[0].clone())),
        _ => {
            if let Some(b) = basis.iter().find(|b| b.is_invertible()) {
                return Ok(Some(b.clone()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..ISO_TRIES {
                let c = random_combination(&basis, &mut rng);
                if c.is_invertible() {
                    return Ok(Some(c));
                }
            }
            Ok(None)
        }
    }
}

/// Isomorphism test for modules of which at least one is irreducible.
pub fn iso_test(v: &Module, w: &Module) -> Result<bool> {
    if v.dim != w.dim {
        return Ok(false);
    }
    let certified = is_irreducible(v)? || is_irreducible(w)?;
    let found = find_isomorphism(v, w, 0)?.is_some();
    if certified {
        Ok(found)
    } else {
        Err(Error::HeuristicOnly(found))
    }
}

/// Split `l` off as a direct summand of `m` using `ι: l -> m` and
/// `π: m -> l` with `π ∘ ι` invertible. Returns `(ι(l), ker π)`.
pub fn split_off_summand(m: &Module, l: &Module, seed: u64) -> Result<Option<(Subspace, Subspace)>> {
    let ins = hom_space(l, m)?;
    let outs = hom_space(m, l)?;
    if ins.is_empty() || outs.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(Mat, Mat)> = Vec::new();
    for i in &ins {
        for p in &outs {
            pairs.push((i.clone(), p.clone()));
        }
    }
    for _ in 0..ISO_TRIES {
        pairs.push((random_combination(&ins, &mut rng), random_combination(&outs, &mut rng)));
    }
    for (iota, pi) in pairs {
        if pi.mul(&iota).is_invertible() {
            let image = Subspace::from_vectors(&m.field, m.dim, (0..iota.cols()).map(|j| iota.col(j)));
            let kernel = Subspace::from_vectors(&m.field, m.dim, pi.kernel_basis());
            return Ok(Some((image, kernel)));
        }
    }
    Ok(None)
}

/// Fitting decomposition `V = ker φ^n ⊕ im φ^n` for random endomorphisms
/// `φ`, returning the first split with both parts nonzero.
pub fn fitting_split(m: &Module, seed: u64) -> Result<Option<(Subspace, Subspace)>> {
    let ends = hom_space(m, m)?;
    if ends.len() <= 1 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates = ends.clone().into_iter().chain((0..ISO_TRIES).map(|_| random_combination(&ends, &mut rng)));
    for phi in candidates {
        let pw = phi.pow(m.dim as u64);
        let ker = pw.kernel_basis();
        if ker.is_empty() || ker.len() == m.dim {
            continue;
        }
        let k = Subspace::from_vectors(&m.field, m.dim, ker);
        let i = Subspace::from_vectors(&m.field, m.dim, (0..m.dim).map(|j| pw.col(j)));
        return Ok(Some((k, i)));
    }
    Ok(None)
}

/// Is `span(basis)` a local algebra with residue field `F`? Each element
/// must have a single eigenvalue `λ`, and the elements `b - λ` must span a
/// nilpotent ideal of codimension one.
pub fn is_local_split(basis: &[Mat]) -> bool {
    let Some(first) = basis.first() else {
        return false;
    };
    let f = first.field().clone();
    let n = first.rows();
    let id = Mat::identity(&f, n);
    let flat = |m: &Mat| m.data().to_vec();
    let mut radical: Vec<Mat> = Vec::new();
    for b in basis {
        let lam = match roots(&f, &b.charpoly()) {
            Some(r) if r.len() == 1 => r[0],
            _ => return false,
        };
        let x = b.sub(&id.scale(lam));
        if !x.pow(n as u64).is_zero() {
            return false;
        }
        radical.push(x);
    }
    let mut span = EchelonBasis::new(&f, n * n);
    let mut gens = Vec::new();
    for x in &radical {
        if span.insert(flat(x)) {
            gens.push(x.clone());
        }
    }
    if span.rank() + 1 != basis.len() || span.contains(&flat(&id)) {
        return false;
    }
    // Powers J, J^2, ... must reach zero.
    let mut power = gens.clone();
    for _ in 0..=n {
        if power.is_empty() {
            return true;
        }
        let mut next = EchelonBasis::new(&f, n * n);
        let mut next_mats = Vec::new();
        for a in &power {
            for b in &gens {
                let c = a.mul(b);
                if !span.contains(&flat(&c)) {
                    return false;
                }
                if next.insert(flat(&c)) {
                    next_mats.push(c);
                }
            }
        }
        power = next_mats;
    }
    power.is_empty()
}

/// Indecomposability: `true` when `End(V)` is certified local, `false`
/// when a Fitting decomposition is found.
pub fn is_indecomposable(m: &Module) -> Result<bool> {
    let ends = hom_space(m, m)?;
    if is_local_split(&ends) {
        return Ok(true);
    }
    if fitting_split(m, 0)?.is_some() {
        return Ok(false);
    }
    Err(Error::Inconclusive(ISO_TRIES))
}

/// Decompose into indecomposable summands, each returned as a subspace of
/// the original module.
pub fn decompose(m: &Module, seed: u64) -> Result<Vec<Subspace>> {
    let whole = Subspace::from_vectors(
        &m.field,
        m.dim,
        (0..m.dim).map(|i| {
            let mut e = vec![Elem::ZERO; m.dim];
            e[i] = Elem::ONE;
            e
        }),
    );
    let mut pending = vec![whole];
    let mut out = Vec::new();
    while let Some(s) = pending.pop() {
        let sub = m.submodule(&s);
        match fitting_split(&sub, seed)? {
            None => {
                if !is_local_split(&hom_space(&sub, &sub)?) {
                    return Err(Error::Inconclusive(ISO_TRIES));
                }
                out.push(s);
            }
            Some((a, b)) => {
                for part in [a, b] {
                    let vs: Vec<Vec<Elem>> = part.basis().iter().map(|c| lift(&s, c)).collect();
                    pending.push(Subspace::from_vectors(&m.field, m.dim, vs));
                }
            }
        }
    }
    out.sort_by_key(|s| s.dim());
    Ok(out)
}

/// Coordinates relative to the stored basis of `s`, mapped back to the
/// ambient space.
pub fn lift(s: &Subspace, coords: &[Elem]) -> Vec<Elem> {
    let f = s.basis.field().clone();
    let mut v = vec![Elem::ZERO; s.ambient_dim()];
    for (b, &c) in s.basis().iter().zip(coords) {
        f.axpy(&mut v, c, b);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::sl2;
    use crate::rep::sym_power_sl2;
    use alloc::sync::Arc;

    fn l(g: &Arc<crate::GroupTable>, a: u32) -> Rep {
        sym_power_sl2(g, a, g.field()).unwrap()
    }

    #[test]
    fn fixed_points_examples() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let triv = Rep::trivial(&g, g.field(), 3);
        assert_eq!(fixed_points(&Module::from(&triv)).dim(), 3);
        assert_eq!(fixed_points(&Module::from(&l(&g, 2))).dim(), 0);
        assert_eq!(fixed_points(&Module::from(&l(&g, 2).end())).dim(), 1);
    }

    #[test]
    fn hom_examples() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let m = |r: &Rep| Module::from(r);
        assert!(hom_space(&m(&l(&g, 1)), &m(&l(&g, 3))).unwrap().is_empty());
        let l22 = l(&g, 2).tensor(&l(&g, 2)).unwrap();
        assert_eq!(hom_space(&m(&l(&g, 0)), &m(&l22)).unwrap().len(), 1);
        let l11 = l(&g, 1).tensor(&l(&g, 1)).unwrap();
        assert_eq!(hom_space(&m(&l(&g, 2)), &m(&l11)).unwrap().len(), 1);
    }

    #[test]
    fn spin_examples() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let l4 = Module::from(&l(&g, 4));
        let mut top = vec![Elem::ZERO; 5];
        top[0] = Elem::ONE;
        assert_eq!(spin(&l4, &[top]).dim(), 5);
        assert_eq!(spin(&l4, &[]).dim(), 0);
        let end = Module::from(&l(&g, 4).end());
        let id = Mat::identity(g.field(), 5).into_data();
        assert_eq!(spin(&end, &[id]).dim(), 1);
    }

    #[test]
    fn chop_examples() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let l11 = Module::from(&l(&g, 1).tensor(&l(&g, 1)).unwrap());
        let dims: Vec<(usize, usize)> = chop(&l11, 1).unwrap().iter().map(|c| (c.dim, c.multiplicity)).collect();
        assert_eq!(dims, vec![(1, 1), (3, 1)]);
        let l2 = Module::from(&l(&g, 2));
        let c = chop(&l2, 1).unwrap();
        assert_eq!((c.len(), c[0].dim), (1, 3));
    }

    #[test]
    fn iso_examples() {
        let g = Arc::new(sl2(5, 1).unwrap());
        let l2 = Module::from(&l(&g, 2));
        let l2d = Module::from(&l(&g, 2).dual());
        assert!(iso_test(&l2, &l2d).unwrap());
        assert!(!iso_test(&Module::from(&l(&g, 1)), &Module::from(&l(&g, 3))).unwrap());
    }
}

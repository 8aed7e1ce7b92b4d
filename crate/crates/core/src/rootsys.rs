//! Irreducible root systems and the coroot-sum inequalities.
//!
//! Roots are generated from the Cartan matrix `A_ij = <α_i^∨, α_j>` by
//! closing the simple roots under the simple reflections
//! `s_i(β) = β - <α_i^∨, β> α_i`. Simple roots follow Bourbaki numbering.
//!
//! With the symmetriser `d_i = (α_i, α_i)/2` (short roots have `d = 1`), a
//! root `α = Σ c_i α_i` has coroot `α^∨ = Σ (c_i d_i / d(α)) α_i^∨`, where
//! `d(α) = (α, α)/2`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    pub kind: char,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)/2` per simple root.
    pub symmetrizer: Vec<i64>,
    /// Simple-root coordinates, sorted by height then coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// Simple-coroot coordinates, aligned with `positive_roots`.
    pub positive_coroots: Vec<Vec<i64>>,
    pub highest_coroot: Vec<i64>,
    pub highest_short_coroot: Vec<i64>,
}

/// Which coroot inequality: `2 α_0^∨ <= Σ α^∨` or `4 β_0^∨ <= Σ α^∨`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bound {
    A,
    B,
}

fn name(kind: char, rank: usize) -> String {
    format!("{kind}{rank}")
}

/// Cartan matrix of an irreducible type, Bourbaki numbering.
pub fn cartan_matrix(kind: char, rank: usize) -> Result<Vec<Vec<i64>>> {
    let valid = rank <= 8
        && match kind {
            'A' => rank >= 1,
            'B' => rank >= 2,
            'C' => rank >= 3,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
    if !valid {
        return Err(Error::InvalidType(name(kind, rank)));
    }
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind {
        'A' | 'B' | 'C' | 'F' | 'G' => {
            for i in 0..rank - 1 {
                link(i, i + 1);
            }
        }
        'D' => {
            for i in 0..rank - 2 {
                link(i, i + 1);
            }
            link(rank - 3, rank - 1);
        }
        'E' => {
            link(0, 2);
            link(1, 3);
            for i in 2..rank - 1 {
                link(i, i + 1);
            }
        }
        _ => unreachable!(),
    }
    match kind {
        // α_n short
        'B' => a[rank - 1][rank - 2] = -2,
        // α_n long
        'C' => a[rank - 2][rank - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        'F' => a[2][1] = -2,
        // α_1 short, α_2 long
        'G' => a[0][1] = -3,
        _ => {}
    }
    Ok(a)
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d = vec![0i64; n];
    d[0] = 6;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j] == 0 {
                // d_i A_ij = d_j A_ji
                d[j] = d[i] * a[i][j] / a[j][i];
                queue.push_back(j);
            }
        }
    }
    let m = *d.iter().min().unwrap();
    d.iter().map(|&x| x / m).collect()
}

fn half_norm(c: &[i64], a: &[Vec<i64>], d: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..c.len() {
        for j in 0..c.len() {
            s += c[i] * c[j] * d[i] * a[i][j];
        }
    }
    s / 2
}

fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

pub fn build_root_system(kind: char, rank: usize) -> Result<RootSystem> {
    let a = cartan_matrix(kind, rank)?;
    let d = symmetrizer(&a);
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..rank {
            let pairing: i64 = (0..rank).map(|j| a[i][j] * beta[j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut r = beta.clone();
            r[i] -= pairing;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
    positive.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)));
    let coroots: Vec<Vec<i64>> = positive
        .iter()
        .map(|c| {
            let n = half_norm(c, &a, &d);
            c.iter().zip(&d).map(|(&ci, &di)| ci * di / n).collect()
        })
        .collect();
    // Short coroots are the coroots of long roots.
    let max_norm = positive.iter().map(|c| half_norm(c, &a, &d)).max().unwrap();
    let highest = |keep: &dyn Fn(usize) -> bool| -> Vec<i64> {
        (0..positive.len())
            .filter(|&i| keep(i))
            .max_by_key(|&i| (height(&coroots[i]), i))
            .map(|i| coroots[i].clone())
            .unwrap()
    };
    let highest_coroot = highest(&|_| true);
    let highest_short_coroot = highest(&|i| half_norm(&positive[i], &a, &d) == max_norm);
    Ok(RootSystem {
        kind,
        rank,
        cartan: a,
        symmetrizer: d,
        positive_roots: positive,
        positive_coroots: coroots,
        highest_coroot,
        highest_short_coroot,
    })
}

/// Expected number of positive roots per type.
pub fn positive_root_count(kind: char, rank: usize) -> usize {
    match kind {
        'A' => rank * (rank + 1) / 2,
        'B' | 'C' => rank * rank,
        'D' => rank * (rank - 1),
        'E' => [36, 63, 120][rank - 6],
        'F' => 24,
        'G' => 6,
        _ => 0,
    }
}

impl RootSystem {
    /// `Σ_{α > 0} α^∨` in simple-coroot coordinates.
    pub fn coroot_sum(&self) -> Vec<i64> {
        let mut s = vec![0i64; self.rank];
        for c in &self.positive_coroots {
            for (x, y) in s.iter_mut().zip(c) {
                *x += y;
            }
        }
        s
    }

    fn is_excluded(&self, which: Bound) -> bool {
        match which {
            Bound::A => self.kind == 'A' && self.rank == 1,
            Bound::B => matches!((self.kind, self.rank), ('A', 1..=3) | ('B', 2)),
        }
    }

    /// Evaluate the inequality coefficientwise without checking whether the
    /// type is covered.
    pub fn coroot_bound_holds(&self, which: Bound) -> bool {
        let (k, v) = match which {
            Bound::A => (2, &self.highest_coroot),
            Bound::B => (4, &self.highest_short_coroot),
        };
        self.coroot_sum().iter().zip(v).all(|(&s, &x)| k * x <= s)
    }
}

/// The inequality for a covered type; `ExcludedType` otherwise.
pub fn verify_coroot_bounds(rs: &RootSystem, which: Bound) -> Result<bool> {
    if rs.is_excluded(which) {
        return Err(Error::ExcludedType(name(rs.kind, rs.rank)));
    }
    Ok(rs.coroot_bound_holds(which))
}

/// Every valid `(type, rank)` pair with rank at most 8.
pub fn all_types() -> Vec<(char, usize)> {
    let mut out = Vec::new();
    for kind in ['A', 'B', 'C', 'D', 'E', 'F', 'G'] {
        for rank in 1..=8 {
            if cartan_matrix(kind, rank).is_ok() {
                out.push((kind, rank));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for (k, r) in all_types() {
            let rs = build_root_system(k, r).unwrap();
            assert_eq!(rs.positive_roots.len(), positive_root_count(k, r), "{k}{r}");
        }
    }

    #[test]
    fn a2_equality() {
        let rs = build_root_system('A', 2).unwrap();
        assert!(verify_coroot_bounds(&rs, Bound::A).unwrap());
        let twice: Vec<i64> = rs.highest_coroot.iter().map(|x| 2 * x).collect();
        assert_eq!(twice, rs.coroot_sum());
    }

    #[test]
    fn b2_fails_when_forced() {
        let rs = build_root_system('B', 2).unwrap();
        assert_eq!(verify_coroot_bounds(&rs, Bound::B), Err(Error::ExcludedType("B2".into())));
        assert!(!rs.coroot_bound_holds(Bound::B));
        // Oracle: B2 has roots α1, α2, α1+α2, α1+2α2 with α2 short; the
        // coroots are α1^∨, α2^∨, 2α1^∨+α2^∨, α1^∨+α2^∨.
        assert_eq!(rs.coroot_sum(), vec![4, 3]);
        assert_eq!(rs.highest_short_coroot, vec![1, 1]);
    }

    #[test]
    fn invalid_types() {
        assert!(build_root_system('C', 2).is_err());
        assert!(build_root_system('E', 5).is_err());
        assert!(build_root_system('H', 3).is_err());
    }

    #[test]
    fn b_and_c_are_dual() {
        for n in 3..=8 {
            let b = build_root_system('B', n).unwrap();
            let c = build_root_system('C', n).unwrap();
            let mut bc = b.positive_coroots.clone();
            let mut cr = c.positive_roots.clone();
            bc.sort();
            cr.sort();
            assert_eq!(bc, cr);
        }
    }
}

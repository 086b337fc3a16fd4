//! Sparse exact linear algebra over the rationals, with a modular rank
//! bound for large pieces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::gring::Rat;

/// Sparse vector: `(index, coefficient)` pairs, strictly increasing indices,
/// no zero coefficients.
pub type SparseVec = Vec<(usize, Rat)>;

/// Build a sparse vector from arbitrary `(index, coefficient)` pairs.
pub fn sparse<I: IntoIterator<Item = (usize, Rat)>>(entries: I) -> SparseVec {
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    for (i, c) in entries {
        *acc.entry(i).or_insert_with(Rat::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `a + s·b`.
fn axpy(a: &SparseVec, s: &Rat, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let c = &a[i].1 + s * &b[j].1;
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form built incrementally. Each stored row has leading
/// coefficient 1 at its pivot column, and no two rows share a pivot.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0;
        loop {
            let hit = v.iter().find(|(j, _)| *j >= cursor && self.rows.contains_key(j)).map(|(j, c)| (*j, c.clone()));
            let Some((p, c)) = hit else {
                return v;
            };
            v = axpy(&v, &-c, &self.rows[&p]);
            cursor = p + 1;
        }
    }

    /// Add `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.first().cloned() else {
            return false;
        };
        let row = if c.is_one() {
            r
        } else {
            let inv = c.recip();
            r.into_iter().map(|(j, x)| (j, x * &inv)).collect()
        };
        self.rows.insert(lead, row);
        true
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<I: IntoIterator<Item = SparseVec>>(vectors: I) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Whether `rhs` is a linear combination of `columns`.
pub fn solvable(columns: &[SparseVec], rhs: &SparseVec) -> bool {
    let mut e = Echelon::new();
    for c in columns {
        e.insert(c.clone());
    }
    e.contains(rhs.clone())
}

/// The Mersenne prime `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MODULUS - 2)
}

/// Image of a rational in `F_p`, or `None` when the denominator vanishes.
pub fn rat_mod(c: &Rat) -> Option<u64> {
    let p = BigInt::from(MODULUS);
    let to_u64 = |n: &BigInt| n.mod_floor(&p).to_u64().expect("reduced below the modulus");
    let den = to_u64(c.denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(to_u64(c.numer()), inv_mod(den)))
}

/// Row echelon form over `F_p`. Rank modulo `p` never exceeds the rational
/// rank, so reaching full rank here certifies full rank over Q.
#[derive(Default, Clone, Debug)]
pub struct ModpEchelon {
    rows: BTreeMap<usize, Vec<(usize, u64)>>,
}

impl ModpEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `None` if some coefficient has a denominator divisible by `p`.
    pub fn insert(&mut self, v: &SparseVec) -> Option<bool> {
        let mut dense: BTreeMap<usize, u64> = BTreeMap::new();
        for (j, c) in v {
            let x = rat_mod(c)?;
            if x != 0 {
                dense.insert(*j, x);
            }
        }
        let mut cursor = 0;
        loop {
            let hit = dense.range(cursor..).find(|(j, _)| self.rows.contains_key(j)).map(|(j, c)| (*j, *c));
            let Some((pivot, c)) = hit else { break };
            let neg = MODULUS - c;
            for &(j, x) in &self.rows[&pivot] {
                let e = dense.entry(j).or_insert(0);
                *e = (*e + mul_mod(neg, x)) % MODULUS;
                if *e == 0 {
                    dense.remove(&j);
                }
            }
            cursor = pivot + 1;
        }
        let Some((&lead, &c)) = dense.iter().next() else {
            return Some(false);
        };
        let inv = inv_mod(c);
        self.rows.insert(lead, dense.into_iter().map(|(j, x)| (j, mul_mod(x, inv))).collect());
        Some(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gring::rat;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        sparse(entries.iter().map(|&(i, c)| (i, rat(c))))
    }

    #[test]
    fn rank_of_dependent_family() {
        let vs = [v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(2, 1)]), v(&[(0, 1), (1, 2), (2, 3)])];
        assert_eq!(rank(vs), 2);
        assert_eq!(rank(Vec::<SparseVec>::new()), 0);
    }

    #[test]
    fn full_rank_permutation_like() {
        let vs = [v(&[(1, 3), (2, 1)]), v(&[(0, 1), (2, 5)]), v(&[(0, 2), (1, 1)])];
        assert_eq!(rank(vs), 3);
    }

    #[test]
    fn solvability() {
        let cols = [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])];
        assert!(solvable(&cols, &v(&[(0, 1), (2, -1)])));
        assert!(!solvable(&cols, &v(&[(0, 1)])));
        assert!(solvable(&cols, &Vec::new()));
    }

    #[test]
    fn sparse_merges_and_drops_zeros() {
        assert_eq!(sparse([(3, rat(1)), (1, rat(2)), (3, rat(-1))]), v(&[(1, 2)]));
    }

    #[test]
    fn modular_rank_matches_on_small_families() {
        let vs = [v(&[(1, 3), (2, 1)]), v(&[(0, 1), (2, 5)]), v(&[(0, 2), (1, 1)]), v(&[(0, 3), (1, 4), (2, 6)])];
        let mut m = ModpEchelon::new();
        let inserted: Vec<bool> = vs.iter().map(|x| m.insert(x).unwrap()).collect();
        assert_eq!(inserted, vec![true, true, true, false]);
        assert_eq!(m.rank(), rank(vs));
    }

    #[test]
    fn rationals_reduce_mod_p() {
        let half = Rat::new(1.into(), 2.into());
        let h = rat_mod(&half).unwrap();
        assert_eq!(mul_mod(h, 2), 1);
        assert_eq!(rat_mod(&rat(-1)).unwrap(), MODULUS - 1);
        let bad = Rat::new(1.into(), BigInt::from(MODULUS));
        assert!(rat_mod(&bad).is_none());
    }
}

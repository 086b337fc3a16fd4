//! Graded pieces of polynomial algebras and free modules: monomial
//! enumeration, coordinates, Hilbert series.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_traits::One;

use crate::error::{Error, Result};
use crate::gring::{BiDegree, BiLaurentPoly, BiSeries, Rat};
use crate::linalg::SparseVec;
use crate::mpoly::{Monomial, Parity, Poly, Table};

/// Which part of the bidegree labels a graded piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    Bigraded,
    /// Only the v-degree; the t-degree is forgotten.
    VOnly,
}

impl Grading {
    pub fn key(self, d: BiDegree) -> BiDegree {
        match self {
            Grading::Bigraded => d,
            Grading::VOnly => BiDegree::new(d.dv, 0),
        }
    }

    pub fn series(self, s: &BiSeries) -> BiSeries {
        match self {
            Grading::Bigraded => s.clone(),
            Grading::VOnly => collapse_t(s),
        }
    }
}

/// Specialise `t = 1`.
pub fn collapse_t(s: &BiSeries) -> BiSeries {
    BiSeries::from_terms(s.vmax(), s.terms().map(|(d, c)| (BiDegree::new(d.dv, 0), c.clone())))
}

fn check_positive(table: &Table) -> Result<()> {
    for g in table.generators() {
        if g.parity == Parity::Even && g.degree.dv <= 0 {
            return Err(Error::DegreeMismatch(format!(
                "even generator `{}` has nonpositive v-degree {}; graded pieces are infinite",
                g.name, g.degree.dv
            )));
        }
    }
    Ok(())
}

/// All monomials of the given degree key (odd exponents at most 1), in a
/// fixed deterministic order.
pub fn monomials_of_degree(table: &Table, key: BiDegree, grading: Grading) -> Result<Vec<Monomial>> {
    check_positive(table)?;
    let n = table.len();
    // Lowest v-degree the generators from position k onwards can still add.
    let mut floor = vec![0i64; n + 1];
    for k in (0..n).rev() {
        let g = table.get(k);
        floor[k] = floor[k + 1] + if g.parity == Parity::Odd { g.degree.dv.min(0) } else { 0 };
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    enumerate(table, grading, key, &floor, 0, BiDegree::ZERO, &mut exps, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    table: &Table,
    grading: Grading,
    key: BiDegree,
    floor: &[i64],
    k: usize,
    acc: BiDegree,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    let remaining = key.dv - acc.dv;
    if remaining < floor[k] {
        return;
    }
    if k == table.len() {
        if grading.key(acc) == key {
            out.push(Monomial(exps.clone()));
        }
        return;
    }
    let g = table.get(k);
    let max_e = match g.parity {
        Parity::Odd => 1,
        Parity::Even => ((remaining - floor[k + 1]) / g.degree.dv).max(0) as u32,
    };
    for e in 0..=max_e {
        exps[k] = e;
        enumerate(table, grading, key, floor, k + 1, acc + g.degree.scale(e as i64), exps, out);
    }
    exps[k] = 0;
}

/// `Σ_g deg(g)^-` over odd generators: how far below zero odd factors reach.
fn odd_floor(table: &Table) -> i64 {
    table.generators().iter().filter(|g| g.parity == Parity::Odd).map(|g| g.degree.dv.min(0)).sum()
}

fn even_part(table: &Table, vmax: i64) -> Result<BiSeries> {
    check_positive(table)?;
    let mut h = BiSeries::from_terms(vmax, [(BiDegree::ZERO, Rat::one())]);
    for g in table.generators().iter().filter(|g| g.parity == Parity::Even) {
        let steps = if vmax < 0 { 0 } else { vmax / g.degree.dv };
        let geo = BiSeries::from_terms(vmax, (0..=steps).map(|k| (g.degree.scale(k), Rat::one())));
        h = h.try_mul(&geo)?;
    }
    Ok(h)
}

/// Odd generators split by how many are used: entry `k` is the generating
/// polynomial of products of exactly `k` distinct odd generators.
fn exterior_parts(table: &Table) -> Vec<BiLaurentPoly> {
    let mut parts = vec![BiLaurentPoly::one()];
    for g in table.generators().iter().filter(|g| g.parity == Parity::Odd) {
        let x = BiLaurentPoly::monomial(Rat::one(), g.degree);
        parts.push(BiLaurentPoly::zero());
        for k in (1..parts.len()).rev() {
            parts[k] = &parts[k] + &(&parts[k - 1] * &x);
        }
    }
    parts
}

/// Hilbert series `Σ dim(piece) v^a t^b`, exact up to `vmax`.
pub fn hilbert(table: &Table, vmax: i64) -> Result<BiSeries> {
    let sup = super_hilbert(table, vmax)?;
    let mut h = BiSeries::zero(vmax);
    for part in &sup.by_odd {
        h = h.try_add(part)?;
    }
    Ok(h)
}

/// Hilbert series refined by the number of odd factors (the marker `s`).
#[derive(Clone, Debug)]
pub struct SuperSeries {
    /// `by_odd[k]` is the coefficient of `s^k`.
    pub by_odd: Vec<BiSeries>,
}

impl SuperSeries {
    pub fn try_eq(&self, o: &SuperSeries) -> Result<bool> {
        let n = self.by_odd.len().max(o.by_odd.len());
        let vmax = self.by_odd.first().map(BiSeries::vmax).unwrap_or(0);
        let zero = BiSeries::zero(vmax);
        for k in 0..n {
            let a = self.by_odd.get(k).unwrap_or(&zero);
            let b = o.by_odd.get(k).unwrap_or(&zero);
            if !a.try_eq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for SuperSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.by_odd.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "s^{k}: {part}")?;
        }
        Ok(())
    }
}

pub fn super_hilbert(table: &Table, vmax: i64) -> Result<SuperSeries> {
    let extra = -odd_floor(table);
    let even = even_part(table, vmax + extra)?;
    let by_odd = exterior_parts(table).iter().map(|p| BiSeries::from_poly(&even.mul_poly(p).to_poly(), vmax)).collect();
    Ok(SuperSeries { by_odd })
}

/// Keys of the nonzero pieces with v-degree at most `vmax`.
pub fn support(table: &Table, vmax: i64, grading: Grading) -> Result<Vec<BiDegree>> {
    let h = grading.series(&hilbert(table, vmax)?);
    Ok(h.terms().map(|(d, _)| *d).collect())
}

/// Dense numbering of a finite set of labels.
#[derive(Clone, Debug)]
pub struct Indexer<K: Hash + Eq + Clone> {
    items: Vec<K>,
    index: HashMap<K, usize>,
}

impl<K: Hash + Eq + Clone> Indexer<K> {
    pub fn new(items: Vec<K>) -> Self {
        let index = items.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Indexer { items, index }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[K] {
        &self.items
    }

    pub fn get(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }
}

/// Monomial basis of one graded piece of a polynomial algebra.
pub type Piece = Indexer<Monomial>;

pub fn piece(table: &Table, key: BiDegree, grading: Grading) -> Result<Piece> {
    Ok(Indexer::new(monomials_of_degree(table, key, grading)?))
}

/// Coordinates of `p` in a piece; a term outside the piece is an error.
pub fn coords(piece: &Piece, p: &Poly) -> Result<SparseVec> {
    let mut out: SparseVec = Vec::with_capacity(p.num_terms());
    for (m, c) in p.terms() {
        let i = piece.get(m).ok_or_else(|| {
            Error::DegreeMismatch(format!("term of {} lies outside the graded piece", p.table().degree_of(m)))
        })?;
        out.push((i, c.clone()));
    }
    out.sort_by_key(|(i, _)| *i);
    Ok(out)
}

/// Basis of one piece of a free module `⊕_k base·e_k`: pairs
/// `(basis index, base monomial)`.
pub type ModulePiece = Indexer<(usize, Monomial)>;

pub fn module_piece(base: &Table, basis_degrees: &[BiDegree], key: BiDegree, grading: Grading) -> Result<ModulePiece> {
    let mut items = Vec::new();
    for (k, &deg) in basis_degrees.iter().enumerate() {
        let shifted = grading.key(key - deg);
        for m in monomials_of_degree(base, shifted, grading)? {
            items.push((k, m));
        }
    }
    Ok(Indexer::new(items))
}

/// Coordinates of an element `Σ_k p_k e_k` of a free module.
pub fn module_coords(piece: &ModulePiece, components: &[Poly]) -> Result<SparseVec> {
    let mut out: SparseVec = Vec::new();
    for (k, p) in components.iter().enumerate() {
        for (m, c) in p.terms() {
            let i = piece
                .get(&(k, m.clone()))
                .ok_or_else(|| Error::DegreeMismatch(format!("component {k} has a term outside the graded piece")))?;
            out.push((i, c.clone()));
        }
    }
    out.sort_by_key(|(i, _)| *i);
    Ok(out)
}

/// `Σ_k v^{a_k} t^{b_k}` over basis degrees.
pub fn degree_polynomial(degrees: &[BiDegree]) -> BiLaurentPoly {
    BiLaurentPoly::from_terms(degrees.iter().map(|&d| (d, Rat::one())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{even_table, Generator, GeneratorTable};

    fn a1() -> Table {
        even_table([("a1", BiDegree::new(2, 0)), ("b1", BiDegree::new(2, -2))]).unwrap()
    }

    #[test]
    fn hilbert_of_a1() {
        let h = hilbert(&a1(), 4).unwrap();
        let want: BiLaurentPoly = "1 + v^2 + t^-2*v^2 + v^4 + t^-2*v^4 + t^-4*v^4".parse().unwrap();
        assert!(h.try_eq(&BiSeries::from_poly(&want, 4)).unwrap());
    }

    #[test]
    fn hilbert_matches_enumeration() {
        let t =
            even_table([("x", BiDegree::new(2, 0)), ("y", BiDegree::new(4, -2)), ("z", BiDegree::new(6, 0))]).unwrap();
        let h = hilbert(&t, 14).unwrap();
        for (d, c) in h.terms() {
            let n = monomials_of_degree(&t, *d, Grading::Bigraded).unwrap().len();
            assert_eq!(Rat::from_integer(n.into()), *c, "{d}");
        }
        let v_only = collapse_t(&h);
        for (d, c) in v_only.terms() {
            let n = monomials_of_degree(&t, *d, Grading::VOnly).unwrap().len();
            assert_eq!(Rat::from_integer(n.into()), *c, "{d}");
        }
    }

    #[test]
    fn super_hilbert_with_negative_odd_degree() {
        let t = GeneratorTable::new(vec![
            Generator::even("x1", BiDegree::new(2, 0)),
            Generator::odd("w1", BiDegree::new(-2, 2)),
        ])
        .unwrap();
        let sup = super_hilbert(&t, 6).unwrap();
        let geo: BiLaurentPoly = "1 + v^2 + v^4 + v^6".parse().unwrap();
        assert!(sup.by_odd[0].try_eq(&BiSeries::from_poly(&geo, 6)).unwrap());
        let odd = &geo * &BiLaurentPoly::vt(-2, 2);
        let want = BiSeries::from_poly(&(&odd + &BiLaurentPoly::vt(6, 2)), 6);
        assert!(sup.by_odd[1].try_eq(&want).unwrap());
        let m = monomials_of_degree(&t, BiDegree::new(0, 2), Grading::Bigraded).unwrap();
        assert_eq!(m, vec![Monomial(vec![1, 1])]);
    }

    #[test]
    fn nonpositive_even_degree_rejected() {
        let t = even_table([("x", BiDegree::new(0, 2))]).unwrap();
        assert!(hilbert(&t, 4).is_err());
    }

    #[test]
    fn module_pieces() {
        let t = a1();
        let degs = [BiDegree::ZERO, BiDegree::new(2, 0)];
        let p = module_piece(&t, &degs, BiDegree::new(2, 0), Grading::Bigraded).unwrap();
        assert_eq!(p.len(), 2);
        let x = Poly::parse(&t, "a1").unwrap();
        let one = Poly::one(&t);
        let v = module_coords(&p, &[x, one]).unwrap();
        assert_eq!(v.len(), 2);
    }
}

//! Sparse exact multivariate polynomials over a bigraded generator table.
//!
//! Generators are even (commuting) or odd (anticommuting, square zero). A
//! monomial is stored as an exponent vector in table order; for odd
//! generators the vector reads as the ordered product `g_i g_j …` with
//! `i < j`, and every reordering sign is folded into the coefficient.

mod morphism;
mod ops;

pub use morphism::{MonomialImages, RingMorphism};
pub use ops::{divided_difference, elementary_symmetric, invariance_check, series_inverse};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gring::{BiDegree, Rat};
use crate::text;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: BiDegree,
    pub parity: Parity,
}

impl Generator {
    pub fn even(name: impl Into<String>, degree: BiDegree) -> Self {
        Generator { name: name.into(), degree, parity: Parity::Even }
    }

    pub fn odd(name: impl Into<String>, degree: BiDegree) -> Self {
        Generator { name: name.into(), degree, parity: Parity::Odd }
    }
}

/// Ordered list of named generators with their bidegrees and parities.
#[derive(Debug)]
pub struct GeneratorTable {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
    has_odd: bool,
}

impl PartialEq for GeneratorTable {
    fn eq(&self, o: &Self) -> bool {
        self.gens == o.gens
    }
}

impl Eq for GeneratorTable {}

/// Shared handle to a generator table.
pub type Table = Arc<GeneratorTable>;

fn valid_ident(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl GeneratorTable {
    pub fn new(gens: Vec<Generator>) -> Result<Table> {
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if !valid_ident(&g.name) {
                return Err(Error::Parse { pos: 0, msg: format!("`{}` is not a valid generator name", g.name) });
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        let has_odd = gens.iter().any(|g| g.parity == Parity::Odd);
        Ok(Arc::new(GeneratorTable { gens, index, has_odd }))
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn has_odd(&self) -> bool {
        self.has_odd
    }

    /// Bidegree of a monomial.
    pub fn degree_of(&self, m: &Monomial) -> BiDegree {
        let mut d = BiDegree::ZERO;
        for (g, &e) in self.gens.iter().zip(&m.0) {
            if e != 0 {
                d += g.degree.scale(e as i64);
            }
        }
        d
    }

    /// Number of odd factors in a monomial.
    pub fn odd_count(&self, m: &Monomial) -> u32 {
        self.gens.iter().zip(&m.0).filter(|(g, _)| g.parity == Parity::Odd).map(|(_, &e)| e).sum()
    }

    /// Product of two monomials with its Koszul sign, or `None` when an odd
    /// generator would be squared.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let exps: Vec<u32> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        if !self.has_odd {
            return Some((Monomial(exps), false));
        }
        let mut negative = false;
        // Odd factors of `a` lying to the right of position j.
        let mut odd_in_a_after = 0u32;
        for j in (0..self.gens.len()).rev() {
            if self.gens[j].parity != Parity::Odd {
                continue;
            }
            if exps[j] > 1 {
                return None;
            }
            if b.0[j] == 1 && odd_in_a_after % 2 == 1 {
                negative = !negative;
            }
            odd_in_a_after += a.0[j];
        }
        Some((Monomial(exps), negative))
    }
}

/// Exponent vector in table order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn generator(len: usize, i: usize) -> Self {
        let mut m = Monomial::one(len);
        m.0[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Homogeneity status of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(BiDegree),
    Inhomogeneous,
}

/// Polynomial over a generator table, in canonical form.
#[derive(Clone, Debug)]
pub struct Poly {
    table: Table,
    terms: BTreeMap<Monomial, Rat>,
}

impl PartialEq for Poly {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.table, &o.table) || self.table == o.table) && self.terms == o.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(table: &Table) -> Self {
        Poly { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn one(table: &Table) -> Self {
        Self::constant(table, Rat::one())
    }

    pub fn constant(table: &Table, c: Rat) -> Self {
        Self::term(table, Monomial::one(table.len()), c)
    }

    pub fn term(table: &Table, m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { table: table.clone(), terms }
    }

    /// The generator at table position `i`.
    pub fn var(table: &Table, i: usize) -> Self {
        Self::term(table, Monomial::generator(table.len(), i), Rat::one())
    }

    /// The generator called `name`.
    pub fn gen(table: &Table, name: &str) -> Result<Self> {
        Ok(Self::var(table, table.index_of(name)?))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(table: &Table, iter: I) -> Self {
        let mut p = Poly::zero(table);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn same_table(&self, o: &Poly) -> bool {
        Arc::ptr_eq(&self.table, &o.table) || self.table == o.table
    }

    fn check_table(&self, o: &Poly) -> Result<()> {
        if self.same_table(o) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rat {
        self.coefficient(&Monomial::one(self.table.len()))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.table);
        }
        Poly { table: self.table.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn try_add(&self, o: &Poly) -> Result<Poly> {
        self.check_table(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &Poly) -> Result<Poly> {
        self.check_table(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, o: &Poly) -> Result<Poly> {
        self.check_table(o)?;
        let mut acc: HashMap<Monomial, Rat> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                if let Some((m, neg)) = self.table.mul_monomials(ma, mb) {
                    let c = ca * cb;
                    let e = acc.entry(m).or_insert_with(Rat::zero);
                    if neg {
                        *e -= c;
                    } else {
                        *e += c;
                    }
                }
            }
        }
        Ok(Poly { table: self.table.clone(), terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.table);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Bidegree status.
    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(|m| self.table.degree_of(m));
        let Some(first) = degs.next() else {
            return Homogeneity::Zero;
        };
        if degs.all(|d| d == first) {
            Homogeneity::Homogeneous(first)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    /// The common bidegree, if homogeneous and nonzero.
    pub fn bidegree(&self) -> Option<BiDegree> {
        match self.homogeneity() {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    /// Whether every term has v-degree `dv` (zero counts).
    pub fn is_v_homogeneous_of(&self, dv: i64) -> bool {
        self.terms.keys().all(|m| self.table.degree_of(m).dv == dv)
    }

    /// Whether every term has bidegree `deg` (zero counts).
    pub fn is_homogeneous_of(&self, deg: BiDegree) -> bool {
        self.terms.keys().all(|m| self.table.degree_of(m) == deg)
    }

    /// Highest exponent of generator `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Split by the exponent of generator `i`: `self = Σ_k out[k] · g_i^k`,
    /// with generator `i` absent from every `out[k]`. Even generators only.
    pub fn collect_in(&self, i: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = std::mem::take(&mut rest.0[i]);
            out.entry(k).or_insert_with(|| Poly::zero(&self.table)).add_term(rest, c.clone());
        }
        out
    }

    /// Exchange two even generators.
    pub fn swap_generators(&self, i: usize, j: usize) -> Result<Poly> {
        for k in [i, j] {
            if self.table.get(k).parity == Parity::Odd {
                return Err(Error::OutOfRange(format!("swap of odd generator `{}`", self.table.get(k).name)));
            }
        }
        Ok(Poly {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.0.swap(i, j);
                    (m, c.clone())
                })
                .collect(),
        })
    }

    /// Terms in which generator `i` occurs to exactly the first power, with
    /// that factor removed. For linear forms in a set of even generators this
    /// is the coefficient of `g_i`.
    pub fn linear_coefficient(&self, i: usize) -> Poly {
        self.collect_in(i).remove(&1).unwrap_or_else(|| Poly::zero(&self.table))
    }

    /// Parse the canonical text format against a table.
    pub fn parse(table: &Table, s: &str) -> Result<Poly> {
        let mut out = Poly::zero(table);
        for term in text::parse_terms(s)? {
            let mut acc = Poly::constant(table, term.coeff);
            for (name, exp) in &term.factors {
                let i = table.index_of(name)?;
                if *exp < 0 {
                    return Err(Error::Parse { pos: 0, msg: format!("negative exponent on `{name}`") });
                }
                let exp =
                    u32::try_from(*exp).map_err(|_| Error::Parse { pos: 0, msg: "exponent out of range".into() })?;
                if exp == 0 {
                    continue;
                }
                let mut mono = Monomial::one(table.len());
                if table.get(i).parity == Parity::Odd && exp > 1 {
                    acc = Poly::zero(table);
                    continue;
                }
                mono.0[i] = exp;
                // Single-term product; exponent sums are checked to avoid overflow.
                let mut next = Poly::zero(table);
                for (m, c) in &acc.terms {
                    if m.0[i].checked_add(exp).is_none() {
                        return Err(Error::Parse { pos: 0, msg: "exponent overflow".into() });
                    }
                    if let Some((prod, neg)) = table.mul_monomials(m, &mono) {
                        next.add_term(prod, if neg { -c.clone() } else { c.clone() });
                    }
                }
                acc = next;
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (g, &e) in self.table.gens.iter().zip(&m.0) {
            if e != 0 {
                text::write_factor(&mut s, &g.name, e as i64);
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    /// Terms in descending lexicographic order of exponent vectors (table
    /// order), so the constant term comes last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::write_terms(self.terms.iter().rev().map(|(m, c)| (c, self.render_monomial(m))));
        f.write_str(&s)
    }
}

// Operator sugar for polynomials known to share a table. Mixing tables here is
// a programming error and panics; the `try_*` forms report it instead.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.try_add(o).expect("polynomials over different tables")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.try_sub(o).expect("polynomials over different tables")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.try_mul(o).expect("polynomials over different tables")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { table: self.table.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Table of even generators from `(name, degree)` pairs.
pub fn even_table<S: Into<String>>(gens: impl IntoIterator<Item = (S, BiDegree)>) -> Result<Table> {
    GeneratorTable::new(gens.into_iter().map(|(n, d)| Generator::even(n, d)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gring::rat;

    fn xy() -> Table {
        even_table([("x", BiDegree::new(2, 0)), ("y", BiDegree::new(2, 0)), ("z", BiDegree::new(4, -2))]).unwrap()
    }

    fn super_table() -> Table {
        GeneratorTable::new(vec![
            Generator::even("x", BiDegree::new(2, 0)),
            Generator::odd("w1", BiDegree::new(-2, 2)),
            Generator::odd("w2", BiDegree::new(-4, 2)),
        ])
        .unwrap()
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = even_table([("a", BiDegree::ZERO), ("a", BiDegree::ZERO)]).unwrap_err();
        assert_eq!(err, Error::DuplicateGenerator("a".into()));
        assert!(even_table([("1a", BiDegree::ZERO)]).is_err());
    }

    #[test]
    fn arithmetic_and_rendering() {
        let t = xy();
        let p = Poly::parse(&t, "x + y").unwrap();
        let sq = &p * &p;
        assert_eq!(sq.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(sq.bidegree(), Some(BiDegree::new(4, 0)));
        let q = Poly::parse(&t, "x + z").unwrap();
        assert_eq!(q.homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(Poly::zero(&t).homogeneity(), Homogeneity::Zero);
        assert_eq!(Poly::parse(&t, "-1/2*x*x - 3").unwrap().to_string(), "-1/2*x^2 - 3");
    }

    #[test]
    fn unknown_generator_is_an_error() {
        assert_eq!(Poly::parse(&xy(), "x*q").unwrap_err(), Error::UnknownGenerator("q".into()));
        assert!(Poly::parse(&xy(), "x^-1").is_err());
    }

    #[test]
    fn odd_generators_anticommute() {
        let t = super_table();
        let w1 = Poly::gen(&t, "w1").unwrap();
        let w2 = Poly::gen(&t, "w2").unwrap();
        assert!((&w1 * &w1).is_zero());
        assert_eq!(&w1 * &w2, -(&w2 * &w1));
        assert_eq!(Poly::parse(&t, "w2*x*w1").unwrap().to_string(), "-x*w1*w2");
        assert!(Poly::parse(&t, "w1^2").unwrap().is_zero());
        let x = Poly::gen(&t, "x").unwrap();
        assert_eq!(&x * &w1, &w1 * &x);
    }

    #[test]
    fn table_mismatch_detected() {
        let a = Poly::one(&xy());
        let b = Poly::one(&super_table());
        assert_eq!(a.try_add(&b).unwrap_err(), Error::TableMismatch);
    }

    #[test]
    fn collect_and_swap() {
        let t = xy();
        let p = Poly::parse(&t, "x^2*y + 3*x*y^2 + z").unwrap();
        let parts = p.collect_in(0);
        assert_eq!(parts[&2].to_string(), "y");
        assert_eq!(parts[&1].to_string(), "3*y^2");
        assert_eq!(parts[&0].to_string(), "z");
        assert_eq!(p.swap_generators(0, 1).unwrap().to_string(), "3*x^2*y + x*y^2 + z");
        assert_eq!(Poly::parse(&t, "5*x*z - y").unwrap().linear_coefficient(2).constant_term(), rat(0));
    }
}

//! Exact arithmetic in the bigraded dimension ring Z((v)) ⊗ Z[t^{±1}] and in
//! Q(v, t).
//!
//! Three carriers live here:
//!
//! * [`BiLaurentPoly`]: finite sums of `c·v^a·t^b`;
//! * [`BiSeries`]: Laurent series in `v` (polynomial in `t^{±1}` per
//!   v-degree) known exactly up to a stated v-degree `vmax`;
//! * [`RationalBifunction`]: unreduced quotients of two `BiLaurentPoly`,
//!   compared by cross multiplication.
//!
//! The second variable slot is named `t` in rendering, but nothing prevents a
//! caller from using it for another formal parameter (the Verma module uses it
//! for `κ`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::text;

/// Exact rational coefficient used everywhere in the crate.
pub type Rat = BigRational;

/// Build an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exponent pair `(a, b)` of the monomial `v^a t^b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiDegree {
    pub dv: i64,
    pub dt: i64,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { dv: 0, dt: 0 };

    pub const fn new(dv: i64, dt: i64) -> Self {
        BiDegree { dv, dt }
    }

    pub fn scale(self, k: i64) -> Self {
        BiDegree::new(self.dv * k, self.dt * k)
    }

    pub fn checked_add(self, other: Self) -> Option<Self> {
        Some(BiDegree::new(self.dv.checked_add(other.dv)?, self.dt.checked_add(other.dt)?))
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.dv + o.dv, self.dt + o.dt)
    }
}

impl AddAssign for BiDegree {
    fn add_assign(&mut self, o: BiDegree) {
        self.dv += o.dv;
        self.dt += o.dt;
    }
}

impl Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.dv - o.dv, self.dt - o.dt)
    }
}

impl Neg for BiDegree {
    type Output = BiDegree;
    fn neg(self) -> BiDegree {
        BiDegree::new(-self.dv, -self.dt)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.dv, self.dt)
    }
}

type Terms = BTreeMap<BiDegree, Rat>;

fn add_term(terms: &mut Terms, deg: BiDegree, c: Rat) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(deg) {
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

fn mul_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (da, ca) in a {
        for (db, cb) in b {
            add_term(&mut out, *da + *db, ca * cb);
        }
    }
    out
}

/// Element of Z[v^{±1}, t^{±1}] with rational coefficients, in canonical form
/// (no stored zeros).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiLaurentPoly {
    terms: Terms,
}

impl BiLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rat::one(), BiDegree::ZERO)
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, BiDegree::ZERO)
    }

    pub fn monomial(c: Rat, deg: BiDegree) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, deg, c);
        BiLaurentPoly { terms }
    }

    /// `v^a t^b` with unit coefficient.
    pub fn vt(a: i64, b: i64) -> Self {
        Self::monomial(Rat::one(), BiDegree::new(a, b))
    }

    pub fn v_pow(a: i64) -> Self {
        Self::vt(a, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (BiDegree, Rat)>>(iter: I) -> Self {
        let mut terms = Terms::new();
        for (d, c) in iter {
            add_term(&mut terms, d, c);
        }
        BiLaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BiDegree, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, deg: BiDegree) -> Rat {
        self.terms.get(&deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_dv(&self) -> Option<i64> {
        self.terms.keys().next().map(|d| d.dv)
    }

    pub fn max_dv(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|d| d.dv)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, x)| (*d, x * c)))
    }

    pub fn shift(&self, by: BiDegree) -> Self {
        BiLaurentPoly { terms: self.terms.iter().map(|(d, c)| (*d + by, c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Apply a monomial substitution `v^a t^b ↦ v^{a'} t^{b'}` termwise.
    pub fn map_exponents<F: Fn(BiDegree) -> BiDegree>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, c)| (f(*d), c.clone())))
    }

    /// Value at `v = t = 1`.
    pub fn coefficient_sum(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    /// Whether `self` is a nonzero rational times a single monomial.
    pub fn as_monomial(&self) -> Option<(BiDegree, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(d, c)| (*d, c))
        } else {
            None
        }
    }

    fn render_monomial(d: &BiDegree) -> String {
        let mut s = String::new();
        if d.dv != 0 {
            text::write_factor(&mut s, "v", d.dv);
        }
        if d.dt != 0 {
            text::write_factor(&mut s, "t", d.dt);
        }
        s
    }
}

impl fmt::Display for BiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = text::write_terms(self.terms.iter().map(|(d, c)| (c, BiLaurentPoly::render_monomial(d))));
        f.write_str(&rendered)
    }
}

impl FromStr for BiLaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Terms::new();
        for term in text::parse_terms(s)? {
            let mut deg = BiDegree::ZERO;
            for (name, exp) in &term.factors {
                let step = match name.as_str() {
                    "v" => BiDegree::new(*exp, 0),
                    "t" => BiDegree::new(0, *exp),
                    other => return Err(Error::UnknownGenerator(other.to_string())),
                };
                deg = deg.checked_add(step).ok_or(Error::Parse { pos: 0, msg: "exponent overflow".into() })?;
            }
            add_term(&mut terms, deg, term.coeff);
        }
        Ok(BiLaurentPoly { terms })
    }
}

impl Add for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn add(self, o: &BiLaurentPoly) -> BiLaurentPoly {
        let mut terms = self.terms.clone();
        for (d, c) in &o.terms {
            add_term(&mut terms, *d, c.clone());
        }
        BiLaurentPoly { terms }
    }
}

impl Sub for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn sub(self, o: &BiLaurentPoly) -> BiLaurentPoly {
        let mut terms = self.terms.clone();
        for (d, c) in &o.terms {
            add_term(&mut terms, *d, -c.clone());
        }
        BiLaurentPoly { terms }
    }
}

impl Mul for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn mul(self, o: &BiLaurentPoly) -> BiLaurentPoly {
        BiLaurentPoly { terms: mul_terms(&self.terms, &o.terms) }
    }
}

impl Neg for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn neg(self) -> BiLaurentPoly {
        BiLaurentPoly { terms: self.terms.iter().map(|(d, c)| (*d, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, o: $ty) -> $ty {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(BiLaurentPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn neg(self) -> BiLaurentPoly {
        -&self
    }
}

/// `Σ_{j=0}^{n-1} v^{2j}`, the graded rank of a free module on `1, c, …, c^{n-1}`.
pub fn gmult(n: u32) -> BiLaurentPoly {
    BiLaurentPoly::from_terms((0..n as i64).map(|j| (BiDegree::new(2 * j, 0), Rat::one())))
}

/// Balanced quantum integer `[n] = (v^n - v^{-n}) / (v - v^{-1})`.
pub fn qint(n: i64) -> BiLaurentPoly {
    let m = n.abs();
    let p = BiLaurentPoly::from_terms((0..m).map(|j| (BiDegree::new(m - 1 - 2 * j, 0), Rat::one())));
    if n < 0 {
        -p
    } else {
        p
    }
}

/// Balanced Gaussian binomial, via the q-Pascal rule
/// `[n, k] = v^{-k} [n-1, k] + v^{n-k} [n-1, k-1]`.
pub fn qbinom(n: i64, k: i64) -> Result<BiLaurentPoly> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::OutOfRange(format!("qbinom({n}, {k}) needs 0 <= k <= n")));
    }
    let n = n as usize;
    let k = k as usize;
    let mut row = vec![BiLaurentPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut entry = BiLaurentPoly::zero();
            if j < m {
                entry = &entry + &row[j].shift(BiDegree::new(-(j as i64), 0));
            }
            if j > 0 {
                entry = &entry + &row[j - 1].shift(BiDegree::new((m - j) as i64, 0));
            }
            next.push(entry);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

// ---------------------------------------------------------------------------
// Truncated series

type Slices = BTreeMap<i64, BTreeMap<i64, Rat>>;

fn to_slices(terms: &Terms) -> Slices {
    let mut out = Slices::new();
    for (d, c) in terms {
        out.entry(d.dv).or_default().insert(d.dt, c.clone());
    }
    out
}

/// Quotient `num / den` in Laurent series, exact for v-degrees `<= vmax`.
/// The lowest v-slice of `den` must be a single monomial.
fn divide_series(num: &Terms, den: &Terms, vmax: i64) -> Result<Terms> {
    let den_slices = to_slices(den);
    let (&low_den, lead) = den_slices.iter().next().ok_or(Error::DivisionByZero)?;
    if lead.len() != 1 {
        return Err(Error::NotExpandable(format!("lowest v-slice at v^{low_den} has {} terms", lead.len())));
    }
    let (&lead_t, lead_c) = lead.iter().next().expect("one term");
    let lead_inv = lead_c.recip();
    let num_slices = to_slices(num);
    let Some(&low_num) = num_slices.keys().next() else {
        return Ok(Terms::new());
    };
    let low = low_num - low_den;
    let mut quotient: Slices = Slices::new();
    let mut k = low;
    while k <= vmax {
        let mut acc: BTreeMap<i64, Rat> = num_slices.get(&(k + low_den)).cloned().unwrap_or_default();
        for (&dv, slice) in den_slices.range(low_den + 1..) {
            let j = dv - low_den;
            if k - j < low {
                break;
            }
            if let Some(prev) = quotient.get(&(k - j)) {
                for (t1, c1) in slice {
                    for (t2, c2) in prev {
                        let e = acc.entry(t1 + t2).or_insert_with(Rat::zero);
                        *e -= c1 * c2;
                    }
                }
            }
        }
        let slice: BTreeMap<i64, Rat> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(t, c)| (t - lead_t, c * &lead_inv)).collect();
        if !slice.is_empty() {
            quotient.insert(k, slice);
        }
        k += 1;
    }
    Ok(quotient.into_iter().flat_map(|(dv, s)| s.into_iter().map(move |(dt, c)| (BiDegree::new(dv, dt), c))).collect())
}

/// Laurent series in `v` with coefficients in Q[t^{±1}], exact for all
/// v-degrees `<= vmax`; nothing is stored above `vmax`.
#[derive(Clone, Debug)]
pub struct BiSeries {
    vmax: i64,
    terms: Terms,
}

impl BiSeries {
    pub fn zero(vmax: i64) -> Self {
        BiSeries { vmax, terms: Terms::new() }
    }

    pub fn from_poly(p: &BiLaurentPoly, vmax: i64) -> Self {
        BiSeries {
            vmax,
            terms: p.terms.range(..BiDegree::new(vmax + 1, i64::MIN)).map(|(d, c)| (*d, c.clone())).collect(),
        }
    }

    /// Build from raw counts; terms above `vmax` are dropped.
    pub fn from_terms<I: IntoIterator<Item = (BiDegree, Rat)>>(vmax: i64, iter: I) -> Self {
        let mut terms = Terms::new();
        for (d, c) in iter {
            if d.dv <= vmax {
                add_term(&mut terms, d, c);
            }
        }
        BiSeries { vmax, terms }
    }

    pub fn vmax(&self) -> i64 {
        self.vmax
    }

    pub fn coeff(&self, deg: BiDegree) -> Rat {
        self.terms.get(&deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BiDegree, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn low_dv(&self) -> Option<i64> {
        self.terms.keys().next().map(|d| d.dv)
    }

    /// The stored terms as a polynomial.
    pub fn to_poly(&self) -> BiLaurentPoly {
        BiLaurentPoly { terms: self.terms.clone() }
    }

    /// Re-truncate at a lower (or equal) order.
    pub fn truncate(&self, vmax: i64) -> Result<Self> {
        if vmax > self.vmax {
            return Err(Error::TruncationTooHigh { have: self.vmax, want: vmax });
        }
        Ok(BiSeries::from_poly(&self.to_poly(), vmax))
    }

    fn same_order(&self, o: &BiSeries) -> Result<()> {
        if self.vmax != o.vmax {
            return Err(Error::TruncationMismatch { left: self.vmax, right: o.vmax });
        }
        Ok(())
    }

    /// Equality of truncated series; comparing different truncations is an
    /// error, not an implicit re-truncation.
    pub fn try_eq(&self, o: &BiSeries) -> Result<bool> {
        self.same_order(o)?;
        Ok(self.terms == o.terms)
    }

    pub fn try_add(&self, o: &BiSeries) -> Result<BiSeries> {
        self.same_order(o)?;
        let mut terms = self.terms.clone();
        for (d, c) in &o.terms {
            add_term(&mut terms, *d, c.clone());
        }
        Ok(BiSeries { vmax: self.vmax, terms })
    }

    pub fn try_sub(&self, o: &BiSeries) -> Result<BiSeries> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> BiSeries {
        BiSeries { vmax: self.vmax, terms: self.terms.iter().map(|(d, c)| (*d, -c.clone())).collect() }
    }

    /// Product; the result is exact up to `vmax + min(0, low(a), low(b))`.
    pub fn try_mul(&self, o: &BiSeries) -> Result<BiSeries> {
        self.same_order(o)?;
        let drop = [self.low_dv(), o.low_dv()].into_iter().flatten().fold(0, i64::min);
        let vmax = self.vmax + drop;
        Ok(BiSeries::from_terms(vmax, mul_terms(&self.terms, &o.terms)))
    }

    /// Product with an exact polynomial.
    pub fn mul_poly(&self, p: &BiLaurentPoly) -> BiSeries {
        let vmax = self.vmax + p.min_dv().unwrap_or(0).min(0);
        BiSeries::from_terms(vmax, mul_terms(&self.terms, &p.terms))
    }

    /// Quotient by a series whose lowest v-slice is a single monomial.
    pub fn try_div(&self, den: &BiSeries) -> Result<BiSeries> {
        self.same_order(den)?;
        let a = den.low_dv().ok_or(Error::DivisionByZero)?;
        let n0 = self.low_dv().unwrap_or(a);
        let vmax = self.vmax - a + (n0 - a).min(0);
        Ok(BiSeries { vmax, terms: divide_series(&self.terms, &den.terms, vmax)? })
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "O(v^{})", self.vmax + 1)
        } else {
            write!(f, "{} + O(v^{})", self.to_poly(), self.vmax + 1)
        }
    }
}

// ---------------------------------------------------------------------------
// Rational functions

/// `num / den` in Q(v, t), kept unreduced. Equality is cross multiplication.
#[derive(Clone, Debug)]
pub struct RationalBifunction {
    num: BiLaurentPoly,
    den: BiLaurentPoly,
}

impl RationalBifunction {
    pub fn new(num: BiLaurentPoly, den: BiLaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalBifunction { num, den })
    }

    pub fn from_poly(p: BiLaurentPoly) -> Self {
        RationalBifunction { num: p, den: BiLaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(BiLaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BiLaurentPoly::one())
    }

    pub fn num(&self) -> &BiLaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &BiLaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalBifunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Apply a monomial substitution to numerator and denominator.
    pub fn map_exponents<F: Fn(BiDegree) -> BiDegree + Copy>(&self, f: F) -> Result<Self> {
        Self::new(self.num.map_exponents(f), self.den.map_exponents(f))
    }

    /// Laurent expansion in `v`, exact up to `vmax`.
    pub fn expand(&self, vmax: i64) -> Result<BiSeries> {
        let terms = divide_series(&self.num.terms, &self.den.terms, vmax).map_err(|e| match e {
            Error::NotExpandable(msg) => Error::NotExpandable(format!("{}: {msg}", self.den)),
            other => other,
        })?;
        Ok(BiSeries { vmax, terms })
    }
}

impl PartialEq for RationalBifunction {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Display for RationalBifunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == BiLaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<BiLaurentPoly> for RationalBifunction {
    fn from(p: BiLaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalBifunction {
    type Output = RationalBifunction;
    fn add(self, o: &RationalBifunction) -> RationalBifunction {
        if self.den == o.den {
            return RationalBifunction { num: &self.num + &o.num, den: self.den.clone() };
        }
        RationalBifunction { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }
}

impl Sub for &RationalBifunction {
    type Output = RationalBifunction;
    fn sub(self, o: &RationalBifunction) -> RationalBifunction {
        self + &(-o)
    }
}

impl Mul for &RationalBifunction {
    type Output = RationalBifunction;
    fn mul(self, o: &RationalBifunction) -> RationalBifunction {
        RationalBifunction { num: &self.num * &o.num, den: &self.den * &o.den }
    }
}

impl Neg for &RationalBifunction {
    type Output = RationalBifunction;
    fn neg(self) -> RationalBifunction {
        RationalBifunction { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned!(RationalBifunction, Add::add, Sub::sub, Mul::mul);

impl Neg for RationalBifunction {
    type Output = RationalBifunction;
    fn neg(self) -> RationalBifunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiLaurentPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalBifunction {
        RationalBifunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn expand_geometric() {
        let s = rf("1", "1 - v^2").expand(4).unwrap();
        assert!(s.try_eq(&BiSeries::from_poly(&p("1 + v^2 + v^4"), 4)).unwrap());
    }

    #[test]
    fn expand_polynomial_passes_through() {
        let s = rf("1 - v^2*t^-2", "1").expand(4).unwrap();
        assert_eq!(s.to_poly(), p("1 - v^2*t^-2"));
    }

    #[test]
    fn expand_product_of_geometric_series() {
        // (1 + v^2 + ...)(1 + t^-2 v^2 + ...) truncated at v^2.
        let den = &p("1 - v^2") * &p("1 - v^2*t^-2");
        let s = RationalBifunction::new(BiLaurentPoly::one(), den).unwrap().expand(2).unwrap();
        assert_eq!(s.to_poly(), p("1 + v^2*t^-2 + v^2"));
    }

    #[test]
    fn expand_rejects_non_unit_lowest_slice() {
        let err = rf("1", "1 + t").expand(3).unwrap_err();
        assert!(matches!(err, Error::NotExpandable(_)));
    }

    #[test]
    fn expand_laurent_denominator() {
        // 1/(v^-1 - v) = v/(1 - v^2) = v + v^3 + ...
        let s = rf("1", "v^-1 - v").expand(5).unwrap();
        assert_eq!(s.to_poly(), p("v + v^3 + v^5"));
    }

    #[test]
    fn gmult_small() {
        assert!(gmult(0).is_zero());
        assert_eq!(gmult(1), BiLaurentPoly::one());
        assert_eq!(gmult(2), p("1 + v^2"));
    }

    #[test]
    fn qint_small() {
        assert_eq!(qint(1), BiLaurentPoly::one());
        assert_eq!(qint(2), p("v^-1 + v"));
        assert!(qint(0).is_zero());
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn qbinom_matches_factorial_ratio() {
        // [n,k]·[k]!·[n-k]! = [n]!
        let fact = |m: i64| (1..=m).fold(BiLaurentPoly::one(), |acc, j| &acc * &qint(j));
        for n in 0..7 {
            for k in 0..=n {
                let lhs = &(&qbinom(n, k).unwrap() * &fact(k)) * &fact(n - k);
                assert_eq!(lhs, fact(n), "n={n} k={k}");
            }
        }
        assert_eq!(qbinom(2, 1).unwrap().coefficient_sum(), rat(2));
        assert!(qbinom(2, 3).is_err());
        assert!(qbinom(-1, 0).is_err());
    }

    #[test]
    fn series_compare_requires_same_order() {
        let a = BiSeries::from_poly(&p("1"), 3);
        let b = BiSeries::from_poly(&p("1"), 4);
        assert!(matches!(a.try_eq(&b), Err(Error::TruncationMismatch { .. })));
        assert!(a.try_eq(&b.truncate(3).unwrap()).unwrap());
        assert!(a.truncate(5).is_err());
    }

    #[test]
    fn series_division_inverts_multiplication() {
        let a = rf("1 + t^-2*v^2", "1 - v^4").expand(12).unwrap();
        let b = rf("1", "1 - v^2").expand(12).unwrap();
        let prod = a.try_mul(&b).unwrap();
        let back = prod.try_div(&b).unwrap();
        assert!(back.try_eq(&a).unwrap());
    }

    #[test]
    fn rational_equality_is_cross_multiplication() {
        assert_eq!(rf("1 - v^4", "1 - v^2"), rf("1 + v^2", "1"));
        assert_ne!(rf("1", "1 - v^2"), rf("1", "1 + v^2"));
    }

    #[test]
    fn canonical_rendering() {
        let q = p("-t^-2*v^2 + 1 + v^2 + 1/2*v^4*t");
        assert_eq!(q.to_string(), "1 - v^2*t^-2 + v^2 + 1/2*v^4*t");
        assert_eq!(BiLaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-v").to_string(), "-v");
    }
}

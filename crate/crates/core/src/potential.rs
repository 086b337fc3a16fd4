//! The superpotential `W_{d,n}`, the eliminated presentations `A_{d,n}`,
//! `B_{d,n}` and their symmetric-polynomial models, and the resulting simple
//! `(n+1)`-dimensional representation.
//!
//! The variables `γ_i` are named `g1..gn`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graded::{self, Grading};
use crate::gring::{qint, BiDegree, BiLaurentPoly, BiSeries, Rat, RationalBifunction};
use crate::linalg;
use crate::mpoly::{elementary_symmetric, even_table, invariance_check, series_inverse, Poly, RingMorphism, Table};
use crate::verma;
use crate::zastava;

fn a_deg(d: usize, i: usize) -> BiDegree {
    BiDegree::new(2 * (d as i64 - i as i64 + 1), 0)
}

fn b_deg(d: usize, i: usize) -> BiDegree {
    BiDegree::new(2 * (d as i64 - i as i64 + 1), -2)
}

/// `deg γ_i = (2(n+1-i), 0)`.
pub fn gamma_deg(n: usize, i: usize) -> BiDegree {
    BiDegree::new(2 * (n as i64 + 1 - i as i64), 0)
}

const C_DEG: BiDegree = BiDegree::new(2, 0);

/// `A_d ⊗ k[γ_1..γ_n]`, optionally with `c` adjoined.
pub fn potential_table(d: usize, n: usize, with_c: bool) -> Table {
    let mut gens: Vec<(String, BiDegree)> = (1..=d).map(|i| (format!("a{i}"), a_deg(d, i))).collect();
    gens.extend((1..=d).map(|i| (format!("b{i}"), b_deg(d, i))));
    if with_c {
        gens.push(("c".into(), C_DEG));
    }
    gens.extend((1..=n).map(|i| (format!("g{i}"), gamma_deg(n, i))));
    even_table(gens).expect("valid names")
}

fn var(t: &Table, name: &str) -> Poly {
    Poly::gen(t, name).expect("generator exists")
}

/// Coefficients `v_{0,d}..v_{order,d}` of `1/(1 + a_d z + … + a_1 z^d)`
/// over any table containing `a_1..a_d`.
pub fn v_coeffs_in(table: &Table, d: usize, order: usize) -> Result<Vec<Poly>> {
    let mut u = vec![Poly::one(table)];
    for j in 1..=d {
        u.push(Poly::gen(table, &format!("a{}", d - j + 1))?);
    }
    series_inverse(&u, order)
}

pub fn v_coeffs(d: usize, order: usize) -> Result<Vec<Poly>> {
    v_coeffs_in(&zastava::make_a(d), d, order)
}

/// `v_{i,d}` with `v_{i,d} = 0` for `i < 0`.
fn v_at(v: &[Poly], table: &Table, i: i64) -> Poly {
    if i < 0 {
        Poly::zero(table)
    } else {
        v[i as usize].clone()
    }
}

/// `γ_i` with `γ_{n+1} = 1`.
fn gamma(table: &Table, n: usize, i: usize) -> Poly {
    if i == n + 1 {
        Poly::one(table)
    } else {
        var(table, &format!("g{i}"))
    }
}

pub fn w_degree(n: usize) -> BiDegree {
    BiDegree::new(2 * (n as i64 + 1), -2)
}

#[derive(Clone, Debug)]
pub struct PotentialW {
    pub d: usize,
    pub n: usize,
    pub w: Poly,
}

impl PotentialW {
    /// `ℓ_r`, the coefficient of `b_r`.
    pub fn ell(&self, r: usize) -> Result<Poly> {
        Ok(self.w.linear_coefficient(self.w.table().index_of(&format!("b{r}"))?))
    }

    /// Every term contains exactly one `b`.
    pub fn is_linear_in_b(&self) -> bool {
        let t = self.w.table();
        let bs: Vec<usize> = (1..=self.d).map(|r| t.index_of(&format!("b{r}")).expect("b_r")).collect();
        self.w.terms().all(|(m, _)| bs.iter().map(|&i| m.0[i]).sum::<u32>() == 1)
    }
}

/// `W = Σ_{i=0}^n γ_{i+1} Σ_{r=1}^d b_r v_{i-d+r,d}` with `γ_{n+1} = 1`.
pub fn build_w(d: usize, n: usize) -> Result<PotentialW> {
    if d == 0 {
        return Err(Error::OutOfRange("W needs d ≥ 1".into()));
    }
    let t = potential_table(d, n, false);
    let v = v_coeffs_in(&t, d, n)?;
    let mut w = Poly::zero(&t);
    for i in 0..=n {
        let mut inner = Poly::zero(&t);
        for r in 1..=d {
            let vi = v_at(&v, &t, i as i64 - d as i64 + r as i64);
            inner = &inner + &(&var(&t, &format!("b{r}")) * &vi);
        }
        w = &w + &(&gamma(&t, n, i + 1) * &inner);
    }
    if !w.is_homogeneous_of(w_degree(n)) {
        return Err(Error::check("W homogeneity", format!("d={d}, n={n}: {w}")));
    }
    let pw = PotentialW { d, n, w };
    if !pw.is_linear_in_b() {
        return Err(Error::check("W linear in b", format!("d={d}, n={n}")));
    }
    Ok(pw)
}

/// For `d > n`: `ℓ_{d-n} = 1`, `ℓ_r = 0` below it, and `ℓ_{d-n+1} = γ_n + v_{1,d}`
/// when `n ≥ 1`. A unit linear coefficient makes the category vanish.
pub fn vanishing_check(d: usize, n: usize) -> Result<()> {
    if d <= n {
        return Err(Error::OutOfRange(format!("vanishing criterion needs d > n, got d={d}, n={n}")));
    }
    let pw = build_w(d, n)?;
    let t = pw.w.table().clone();
    let top = d - n;
    let lead = pw.ell(top)?;
    if lead != Poly::one(&t) {
        return Err(Error::check("unit coefficient", format!("d={d}, n={n}: ℓ_{top} = {lead}")));
    }
    for r in 1..top {
        let l = pw.ell(r)?;
        if !l.is_zero() {
            return Err(Error::check("vanishing below", format!("d={d}, n={n}: ℓ_{r} = {l}")));
        }
    }
    if n >= 1 {
        let v = v_coeffs_in(&t, d, 1)?;
        let want = &gamma(&t, n, n) + &v[1];
        let got = pw.ell(top + 1)?;
        if got != want {
            return Err(Error::check("next coefficient", format!("d={d}, n={n}: ℓ_{} = {got}", top + 1)));
        }
    }
    Ok(())
}

// Eliminated presentations

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    A,
    B,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
        })
    }
}

#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub kind: Kind,
    pub d: usize,
    pub n: usize,
    pub ambient: Table,
    pub relations: Vec<Poly>,
    /// `(generator, expression in surviving generators)` in solve order.
    pub eliminated: Vec<(usize, Poly)>,
    /// Some relation reduces to a nonzero constant.
    pub zero_ring: bool,
}

impl QuotientPresentation {
    fn substitution(&self) -> Result<RingMorphism> {
        let mut images: Vec<Poly> = (0..self.ambient.len()).map(|i| Poly::var(&self.ambient, i)).collect();
        for (i, e) in &self.eliminated {
            images[*i] = e.clone();
        }
        RingMorphism::new(&self.ambient, &self.ambient, images)
    }

    /// Normal form in the surviving generators.
    pub fn reduce(&self, p: &Poly) -> Result<Poly> {
        self.substitution()?.substitute(p)
    }

    pub fn survivors(&self) -> Vec<usize> {
        (0..self.ambient.len()).filter(|i| self.eliminated.iter().all(|(j, _)| j != i)).collect()
    }

    pub fn survivor_names(&self) -> Vec<String> {
        self.survivors().into_iter().map(|i| self.ambient.get(i).name.clone()).collect()
    }

    /// Polynomial ring on the surviving generators.
    pub fn survivor_table(&self) -> Table {
        even_table(self.survivors().into_iter().map(|i| {
            let g = self.ambient.get(i);
            (g.name.clone(), g.degree)
        }))
        .expect("valid names")
    }
}

/// Solve `targets` from `relations`: repeatedly take the first relation that,
/// after substituting the solutions so far, mentions exactly one unsolved
/// target, which must occur linearly with coefficient `±1`.
fn eliminate(ambient: &Table, relations: &[Poly], targets: &[usize]) -> Result<(Vec<(usize, Poly)>, bool)> {
    let mut solved: Vec<(usize, Poly)> = Vec::new();
    let mut used = vec![false; relations.len()];
    let current = |solved: &[(usize, Poly)]| -> Result<RingMorphism> {
        let mut images: Vec<Poly> = (0..ambient.len()).map(|i| Poly::var(ambient, i)).collect();
        for (i, e) in solved {
            images[*i] = e.clone();
        }
        RingMorphism::new(ambient, ambient, images)
    };
    while solved.len() < targets.len() {
        let sub = current(&solved)?;
        let mut progress = false;
        for (k, rel) in relations.iter().enumerate() {
            if used[k] {
                continue;
            }
            let r = sub.substitute(rel)?;
            let open: Vec<usize> = targets
                .iter()
                .copied()
                .filter(|&t| solved.iter().all(|(s, _)| *s != t) && r.degree_in(t) > 0)
                .collect();
            if open.len() != 1 {
                continue;
            }
            let t = open[0];
            let coef = r.linear_coefficient(t);
            let unit = coef == Poly::one(ambient) || coef == -Poly::one(ambient);
            if r.degree_in(t) != 1 || !unit {
                return Err(Error::NonTriangular(format!("`{}` enters relation {k} as {r}", ambient.get(t).name)));
            }
            let rest = &r - &(&coef * &Poly::var(ambient, t));
            // t = -rest / coef, and coef = ±1.
            let expr = if coef == Poly::one(ambient) { -rest } else { rest };
            // Earlier solutions cannot mention t, so no back substitution is needed.
            solved.push((t, expr));
            used[k] = true;
            progress = true;
            break;
        }
        if !progress {
            let missing: Vec<&str> = targets
                .iter()
                .filter(|&&t| solved.iter().all(|(s, _)| *s != t))
                .map(|&t| ambient.get(t).name.as_str())
                .collect();
            return Err(Error::NonTriangular(format!("no unit relation for {}", missing.join(", "))));
        }
    }
    // Round trip: every relation reduces to zero, or to a unit for the zero ring.
    let sub = current(&solved)?;
    let mut zero_ring = false;
    for (k, rel) in relations.iter().enumerate() {
        let r = sub.substitute(rel)?;
        if r.is_zero() {
            continue;
        }
        let c = r.constant_term();
        if r == Poly::constant(ambient, c.clone()) && !c.is_zero() {
            zero_ring = true;
        } else {
            return Err(Error::check("elimination round trip", format!("relation {k} reduces to {r}")));
        }
    }
    Ok((solved, zero_ring))
}

/// `γ_r + Σ_{i=r}^n γ_{i+1} v_{i-r+1,d}`, `1 ≤ r ≤ d`, together with `b_1..b_d`.
fn a_relations(t: &Table, d: usize, n: usize) -> Result<Vec<Poly>> {
    let v = v_coeffs_in(t, d, n + 1)?;
    let mut rels: Vec<Poly> = (1..=d).map(|r| var(t, &format!("b{r}"))).collect();
    for r in 1..=d {
        let mut rel = gamma(t, n, r);
        for i in r..=n {
            rel = &rel + &(&gamma(t, n, i + 1) * &v_at(&v, t, (i - r + 1) as i64));
        }
        rels.push(rel);
    }
    Ok(rels)
}

fn targets(t: &Table, d: usize, gammas: usize) -> Vec<usize> {
    (1..=d)
        .map(|r| t.index_of(&format!("b{r}")).expect("b_r"))
        .chain((1..=gammas).map(|r| t.index_of(&format!("g{r}")).expect("g_r")))
        .collect()
}

/// `A_{d,n}`: `γ_1..γ_d` and all `b_r` eliminated; `k[a_1..a_d, γ_{d+1}..γ_n]` survives.
pub fn make_a_dn(d: usize, n: usize) -> Result<QuotientPresentation> {
    if d > n {
        return Err(Error::OutOfRange(format!("A_{{d,n}} needs d ≤ n, got d={d}, n={n}")));
    }
    let ambient = potential_table(d, n, false);
    let relations = a_relations(&ambient, d, n)?;
    let (eliminated, zero_ring) = eliminate(&ambient, &relations, &targets(&ambient, d, d))?;
    Ok(QuotientPresentation { kind: Kind::A, d, n, ambient, relations, eliminated, zero_ring })
}

/// `B_{d,n} = A_{d,n}[c] / (γ_{d+1} + Σ_{i=d+1}^n γ_{i+1} Σ_{j=0}^{i-d} v_{j,d} c^{i-j-d})`.
/// At `d = n` the extra relation is `1`, so the ring is zero.
pub fn make_b_dn(d: usize, n: usize) -> Result<QuotientPresentation> {
    if d > n {
        return Err(Error::OutOfRange(format!("B_{{d,n}} needs d ≤ n, got d={d}, n={n}")));
    }
    let ambient = potential_table(d, n, true);
    let mut relations = a_relations(&ambient, d, n)?;
    let v = v_coeffs_in(&ambient, d, n + 1)?;
    let c = var(&ambient, "c");
    let mut rel = gamma(&ambient, n, d + 1);
    for i in d + 1..=n {
        let mut inner = Poly::zero(&ambient);
        for (j, vj) in v.iter().enumerate().take(i - d + 1) {
            inner = &inner + &(vj * &c.pow((i - j - d) as u32));
        }
        rel = &rel + &(&gamma(&ambient, n, i + 1) * &inner);
    }
    relations.push(rel);
    let gammas = (d + 1).min(n);
    let (eliminated, zero_ring) = eliminate(&ambient, &relations, &targets(&ambient, d, gammas))?;
    Ok(QuotientPresentation { kind: Kind::B, d, n, ambient, relations, eliminated, zero_ring })
}

pub fn presentation(kind: Kind, d: usize, n: usize) -> Result<QuotientPresentation> {
    match kind {
        Kind::A => make_a_dn(d, n),
        Kind::B => make_b_dn(d, n),
    }
}

// Symmetric models

/// `P_n = k[x_1..x_n]`, `deg x_i = (2, 0)`.
pub fn pn_table(n: usize) -> Table {
    even_table((1..=n).map(|i| (format!("x{i}"), BiDegree::new(2, 0)))).expect("valid names")
}

/// `a_i ↦ e_{d-i+1}(x_1..x_d)`, `b_r ↦ 0`, `c ↦ -x_{d+1}`,
/// `γ_i ↦ e_{n-i+1}(x_1..x_n)`.
pub fn symmetric_map(q: &QuotientPresentation) -> Result<RingMorphism> {
    let (d, n) = (q.d, q.n);
    let p = pn_table(n);
    let head: Vec<usize> = (0..d).collect();
    let all: Vec<usize> = (0..n).collect();
    RingMorphism::by_name(&q.ambient, &p, |name| {
        let idx = |s: &str| -> usize { s.parse().expect("indexed name") };
        if let Some(i) = name.strip_prefix('a') {
            elementary_symmetric(&p, d - idx(i) + 1, &head)
        } else if name.starts_with('b') {
            Ok(Poly::zero(&p))
        } else if name == "c" {
            Ok(-Poly::var(&p, d))
        } else if let Some(i) = name.strip_prefix('g') {
            elementary_symmetric(&p, n - idx(i) + 1, &all)
        } else {
            Err(Error::UnknownGenerator(name.into()))
        }
    })
}

/// Variable blocks of the invariant ring modelling the presentation; for
/// `B` the variable `x_{d+1}` is a block of its own.
pub fn blocks(kind: Kind, d: usize, n: usize) -> Vec<Vec<usize>> {
    match kind {
        Kind::A => vec![(0..d).collect(), (d..n).collect()],
        Kind::B => vec![(0..d).collect(), vec![d], (d + 1..n).collect()],
    }
}

/// `dim P_n^{Π S_{m_k}}` in each degree up to `vmax`, by counting monomials
/// whose exponents are non-increasing inside every block.
pub fn invariant_hilbert_count(block_sizes: &[usize], vmax: i64) -> BiSeries {
    let n: usize = block_sizes.iter().sum();
    let kmax = vmax.max(0) as u32 / 2;
    let mut counts = vec![0u64; kmax as usize + 1];
    let mut exps = vec![0u32; n];
    count_sorted(block_sizes, 0, kmax, &mut exps, &mut counts);
    BiSeries::from_terms(
        vmax,
        counts.iter().enumerate().map(|(k, &c)| (BiDegree::new(2 * k as i64, 0), Rat::from_integer(c.into()))),
    )
}

fn count_sorted(blocks: &[usize], pos: usize, budget: u32, exps: &mut [u32], counts: &mut [u64]) {
    if pos == exps.len() {
        let used: u32 = exps.iter().sum();
        counts[used as usize] += 1;
        return;
    }
    // Upper bound from the previous variable in the same block.
    let mut start = 0;
    let mut cap = budget;
    for &size in blocks {
        if pos < start + size {
            if pos > start {
                cap = cap.min(exps[pos - 1]);
            }
            break;
        }
        start += size;
    }
    for e in 0..=cap {
        exps[pos] = e;
        count_sorted(blocks, pos + 1, budget - e, exps, counts);
    }
    exps[pos] = 0;
}

/// `∏_blocks ∏_{i≤m} 1/(1 - v^{2i})`.
pub fn invariant_hilbert_formula(block_sizes: &[usize]) -> RationalBifunction {
    let one = BiLaurentPoly::one();
    let mut den = one.clone();
    for &m in block_sizes {
        for i in 1..=m as i64 {
            den = &den * &(&one - &BiLaurentPoly::v_pow(2 * i));
        }
    }
    RationalBifunction::new(one, den).expect("nonzero")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymIso {
    Iso,
    ZeroRing,
}

/// Relation images vanish, survivor images are block invariant, and the
/// survivor ring maps injectively with matching Hilbert series up to `vmax`.
pub fn sym_iso_check(kind: Kind, d: usize, n: usize, vmax: i64) -> Result<SymIso> {
    let q = presentation(kind, d, n)?;
    if q.zero_ring {
        return Ok(SymIso::ZeroRing);
    }
    let tag = format!("{kind}, d={d}, n={n}");
    let sigma = symmetric_map(&q)?;
    for (k, rel) in q.relations.iter().enumerate() {
        let img = sigma.substitute(rel)?;
        if !img.is_zero() {
            return Err(Error::check("relation image", format!("{tag}: relation {k} ↦ {img}")));
        }
    }
    let bl = blocks(kind, d, n);
    for i in q.survivors() {
        let img = &sigma.images()[i];
        if !invariance_check(img, &bl) {
            return Err(Error::check("block invariance", format!("{tag}: {} ↦ {img}", q.ambient.get(i).name)));
        }
    }

    let sizes: Vec<usize> = bl.iter().map(Vec::len).collect();
    let counted = invariant_hilbert_count(&sizes, vmax);
    let formula = invariant_hilbert_formula(&sizes).expand(vmax)?;
    let surv = q.survivor_table();
    let h_surv = graded::hilbert(&surv, vmax)?;
    if !counted.try_eq(&formula)? || !h_surv.try_eq(&counted)? {
        return Err(Error::check(
            "Hilbert agreement",
            format!("{tag}: survivors {h_surv}, invariants {counted}, product {formula}"),
        ));
    }

    // Injectivity per degree: with equal dimensions this is the isomorphism.
    let names = q.survivor_names();
    let to_ambient = RingMorphism::by_name(&surv, &q.ambient, |name| Poly::gen(&q.ambient, name))?;
    let composite = to_ambient.then(&sigma)?;
    let p = sigma.target().clone();
    for k in 0..=vmax / 2 {
        let key = BiDegree::new(2 * k, 0);
        let monos = graded::monomials_of_degree(&surv, key, Grading::Bigraded)?;
        let target_piece = graded::piece(&p, key, Grading::Bigraded)?;
        let vecs = monos
            .iter()
            .map(|m| graded::coords(&target_piece, &composite.apply_monomial(m)))
            .collect::<Result<Vec<_>>>()?;
        let r = linalg::rank(vecs);
        if r != monos.len() {
            return Err(Error::check(
                "injectivity",
                format!("{tag}: degree {} has rank {r} for {} monomials in {}", 2 * k, monos.len(), names.join(",")),
            ));
        }
    }
    Ok(SymIso::Iso)
}

/// Survivors of `A_{d,n}` with the second grading `deg γ_i = 2i`, its
/// enumerated Hilbert series, and whether it equals
/// `∏_{i≤d} 1/(1-v^{2i}) ∏_{i=d+1}^n 1/(1-v^{2i})`.
pub fn alternative_grading_check(d: usize, n: usize, vmax: i64) -> Result<(BiSeries, bool)> {
    let q = make_a_dn(d, n)?;
    let surv = q.survivor_table();
    let alt = even_table(surv.generators().iter().map(|g| {
        let deg = match g.name.strip_prefix('g') {
            Some(i) => BiDegree::new(2 * i.parse::<i64>().expect("indexed name"), 0),
            None => g.degree,
        };
        (g.name.clone(), deg)
    }))?;
    let h = graded::hilbert(&alt, vmax)?;
    let one = BiLaurentPoly::one();
    let mut den = one.clone();
    for i in (1..=d as i64).chain(d as i64 + 1..=n as i64) {
        den = &den * &(&one - &BiLaurentPoly::v_pow(2 * i));
    }
    let formula = RationalBifunction::new(one, den)?.expand(vmax)?;
    let ok = h.try_eq(&formula)?;
    Ok((h, ok))
}

/// The square through `f`: for every surviving generator `g` of `A_{d+1,n}`,
/// the symmetric image of `f(g)` in the `B_{d,n}` model equals the symmetric
/// image of `g`; and `f` sends every relation of `A_{d+1,n}` to zero in the
/// `B_{d,n}` model.
pub fn diagram_check(d: usize, n: usize) -> Result<()> {
    if d >= n {
        return Err(Error::OutOfRange(format!("diagram needs d < n, got d={d}, n={n}")));
    }
    let tag = format!("d={d}, n={n}");
    let qa = make_a_dn(d + 1, n)?;
    let qb = make_b_dn(d, n)?;
    let f = zastava::make_f(d)?;
    let fbar = RingMorphism::by_name(&qa.ambient, &qb.ambient, |name| {
        if name.starts_with('g') {
            Poly::gen(&qb.ambient, name)
        } else {
            let img = f.image_of(name)?;
            let rename = RingMorphism::by_name(f.target(), &qb.ambient, |m| Poly::gen(&qb.ambient, m))?;
            rename.substitute(img)
        }
    })?;
    let sa = symmetric_map(&qa)?;
    let sb = symmetric_map(&qb)?;
    for i in qa.survivors() {
        let name = &qa.ambient.get(i).name;
        let via_f = sb.substitute(&qb.reduce(&fbar.images()[i])?)?;
        let direct = &sa.images()[i];
        if &via_f != direct {
            return Err(Error::check("diagram", format!("{tag}: {name} gives {via_f} vs {direct}")));
        }
    }
    for (k, rel) in qa.relations.iter().enumerate() {
        let img = sb.substitute(&fbar.substitute(rel)?)?;
        if !img.is_zero() {
            return Err(Error::check("diagram relations", format!("{tag}: relation {k} ↦ {img}")));
        }
    }
    Ok(())
}

// The simple representation

/// `num/den` as a polynomial, certified by the ratio series vanishing in
/// the top `window` v-degrees below the truncation.
fn polynomial_ratio(num: &BiSeries, den: &BiSeries, window: i64) -> Result<BiLaurentPoly> {
    let q = num.try_div(den)?;
    let cutoff = q.vmax() - window;
    if q.terms().any(|(deg, _)| deg.dv > cutoff) {
        return Err(Error::check("graded rank", format!("{num} / {den} = {q} is not a polynomial below {cutoff}")));
    }
    Ok(q.to_poly())
}

/// Shift a palindromic `Σ v^{2j}` to be bar invariant, e.g. `1+v²` to `[2]`.
fn balance(p: &BiLaurentPoly) -> BiLaurentPoly {
    match (p.min_dv(), p.max_dv()) {
        (Some(lo), Some(hi)) => p.shift(BiDegree::new(-(lo + hi) / 2, 0)),
        _ => p.clone(),
    }
}

/// For `d = 0..n` the class of the rank-one module over
/// `R_d = P_n^{S_d × S_{n-d}}`. Graded ranks of `R'_d = P_n^{S_d × S_{n-d-1}}`
/// over `R_d` and `R_{d+1}` give the induction and restriction factors.
/// Normalising `e` to 1, `f` on weight `d` is their product, which must equal
/// the Verma coefficient at `κ = v^n`, namely `[d+1][n-d]`.
pub fn simple_rep_check(n: usize) -> Result<()> {
    let vmax = 2 * n as i64 + 4;
    let sub = verma::kappa_to_vn(n as i64);
    let ni = n as i64;
    let mut coeffs: Vec<BiLaurentPoly> = Vec::with_capacity(n + 1);
    for d in 0..n {
        let r_d = invariant_hilbert_count(&[d, n - d], vmax);
        let r_next = invariant_hilbert_count(&[d + 1, n - d - 1], vmax);
        let r_mid = invariant_hilbert_count(&[d, 1, n - d - 1], vmax);
        let ind = polynomial_ratio(&r_mid, &r_d, 5)?;
        let res = polynomial_ratio(&r_mid, &r_next, 5)?;
        coeffs.push(&balance(&ind) * &balance(&res));
    }
    // No weight space beyond n.
    coeffs.push(BiLaurentPoly::zero());

    for (d, c) in coeffs.iter().enumerate() {
        let di = d as i64;
        let want = &qint(di + 1) * &qint(ni - di);
        if *c != want {
            return Err(Error::check("f coefficient", format!("n={n}, d={d}: {c} vs [d+1][n-d] = {want}")));
        }
        let verma_c = verma::f_coefficient(d).map_exponents(sub)?;
        if verma_c != RationalBifunction::from_poly(c.clone()) {
            return Err(Error::check("Verma specialisation", format!("n={n}, d={d}: {verma_c} vs {c}")));
        }
        // (ef - fe) m_d = (c_d - c_{d-1}) m_d with e m_d = m_{d-1}.
        let prev = if d == 0 { BiLaurentPoly::zero() } else { coeffs[d - 1].clone() };
        let comm = c - &prev;
        if comm != qint(ni - 2 * di) {
            return Err(Error::check("commutator", format!("n={n}, d={d}: {comm} vs [{}]", ni - 2 * di)));
        }
        let classical = Rat::from_integer(((di + 1) * (ni - di)).into());
        if c.coefficient_sum() != classical {
            return Err(Error::check("v=1", format!("n={n}, d={d}: {} vs {classical}", c.coefficient_sum())));
        }
    }
    if !coeffs[n].is_zero() {
        return Err(Error::check("top annihilation", format!("n={n}: f on weight n is {}", coeffs[n])));
    }
    // m_0 generates: f-coefficients below the top are nonzero at v = 1.
    let dim = 1 + coeffs[..n].iter().filter(|c| !c.coefficient_sum().is_zero()).count();
    if dim != n + 1 {
        return Err(Error::check("dimension", format!("n={n}: {dim} weight spaces reached")));
    }
    Ok(())
}

//! The two-term free resolution `0 → L_1 → L_0 → B_d → 0` over `A_{d+1}`,
//! its comparison maps into `C`, exactness per graded piece, and the
//! non-splitting certificate.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::{self, Grading};
use crate::gring::{rat, BiDegree, BiLaurentPoly, BiSeries, Rat};
use crate::linalg::{Echelon, SparseVec};
use crate::mpoly::{Monomial, MonomialImages, Poly, RingMorphism, Table};
use crate::zastava::{self, Factorization};

/// Free module over `base` with named, graded basis elements.
#[derive(Clone, Debug)]
pub struct FreeModule {
    pub base: Table,
    pub basis: Vec<(String, BiDegree)>,
}

impl FreeModule {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn degrees(&self) -> Vec<BiDegree> {
        self.basis.iter().map(|(_, d)| *d).collect()
    }

    /// `H(base) · Σ v^a t^b` over the basis.
    pub fn hilbert(&self, vmax: i64) -> Result<BiSeries> {
        let extra = -self.degrees().iter().map(|d| d.dv).fold(0, i64::min);
        let h = graded::hilbert(&self.base, vmax + extra)?;
        h.mul_poly(&graded::degree_polynomial(&self.degrees())).truncate(vmax)
    }
}

/// Module map between free modules over the same base, stored by columns:
/// `columns[s][t]` is the coefficient of target basis `t` in the image of
/// source basis `s`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: FreeModule,
    pub target: FreeModule,
    pub columns: Vec<Vec<Poly>>,
}

impl ModuleMap {
    /// Image of `Σ_s p_s · source_s`.
    pub fn apply(&self, element: &[Poly]) -> Vec<Poly> {
        let mut out = vec![Poly::zero(&self.target.base); self.target.rank()];
        for (p, col) in element.iter().zip(&self.columns) {
            if p.is_zero() {
                continue;
            }
            for (o, entry) in out.iter_mut().zip(col) {
                if !entry.is_zero() {
                    *o = &*o + &(p * entry);
                }
            }
        }
        out
    }

    /// Each nonzero entry is homogeneous of degree `deg(source) - deg(target)`.
    pub fn check_degrees(&self) -> Result<()> {
        for (s, col) in self.columns.iter().enumerate() {
            for (t, entry) in col.iter().enumerate() {
                let want = self.source.basis[s].1 - self.target.basis[t].1;
                if !entry.is_homogeneous_of(want) {
                    return Err(Error::DegreeMismatch(format!(
                        "entry ({}, {}) = {entry} should have degree {want}",
                        self.target.basis[t].0, self.source.basis[s].0
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct TwoTermResolution {
    pub d: usize,
    pub l1: FreeModule,
    pub l0: FreeModule,
    pub d1: ModuleMap,
    /// `f: A_{d+1} → B_d`, through which `A_{d+1}` acts on `B_d`.
    pub f: RingMorphism,
    /// `d_0(f_ij) = c^{i+j}` in `B_d`.
    pub d0: Vec<Poly>,
    pub factorization: Factorization,
    /// `f_3 ∘ f_2 ∘ f_1`, through which `A_{d+1}` acts on `C`.
    pub to_c: RingMorphism,
    /// `α_1(e_ij) = c'^i c''^j`.
    pub alpha1: Vec<Poly>,
    /// `α_0(f_ij) = c'^i c''^j`.
    pub alpha0: Vec<Poly>,
}

impl TwoTermResolution {
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * (self.d + 1) + j
    }
}

/// Degree of `e_ij`: `(2(i+j+1), 0)` for `j ≠ d`, `(2(i+d+1), -2)` for `j = d`.
pub fn e_degree(d: usize, i: usize, j: usize) -> BiDegree {
    if j == d {
        BiDegree::new(2 * (i + d + 1) as i64, -2)
    } else {
        BiDegree::new(2 * (i + j + 1) as i64, 0)
    }
}

/// Degree of `f_ij`: `(2(i+j), 0)`.
pub fn f_degree(i: usize, j: usize) -> BiDegree {
    BiDegree::new(2 * (i + j) as i64, 0)
}

pub fn build_resolution(d: usize) -> Result<TwoTermResolution> {
    let base = zastava::make_a(d + 1);
    let n = d + 1;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let l1 = FreeModule {
        base: base.clone(),
        basis: pairs.iter().map(|&(i, j)| (format!("e{i}{j}"), e_degree(d, i, j))).collect(),
    };
    let l0 = FreeModule {
        base: base.clone(),
        basis: pairs.iter().map(|&(i, j)| (format!("f{i}{j}"), f_degree(i, j))).collect(),
    };
    let idx = |i: usize, j: usize| i * n + j;
    let gen = |name: String| Poly::gen(&base, &name);
    let one = Poly::one(&base);

    let mut columns = Vec::with_capacity(n * n);
    for &(i, j) in &pairs {
        let mut col = vec![Poly::zero(&base); n * n];
        if j == d {
            for k in 0..=d {
                col[idx(i, k)] = gen(format!("b{}", k + 1))?;
            }
        } else if i < d {
            col[idx(i + 1, j)] = &col[idx(i + 1, j)] + &one;
            col[idx(i, j + 1)] = &col[idx(i, j + 1)] - &one;
        } else {
            for k in 0..=d {
                col[idx(k, j)] = -gen(format!("a{}", k + 1))?;
            }
            col[idx(d, j + 1)] = &col[idx(d, j + 1)] - &one;
        }
        columns.push(col);
    }
    let d1 = ModuleMap { source: l1, target: l0.clone(), columns };

    let f = zastava::make_f(d)?;
    let c = Poly::gen(f.target(), "c")?;
    let d0 = pairs.iter().map(|&(i, j)| c.pow((i + j) as u32)).collect();

    let factorization = zastava::factorize_f(d)?;
    let to_c = factorization.to_c()?;
    let ct = &factorization.c;
    let cp = Poly::gen(ct, "c'")?;
    let cpp = Poly::gen(ct, "c''")?;
    let alpha: Vec<Poly> = pairs.iter().map(|&(i, j)| &cp.pow(i as u32) * &cpp.pow(j as u32)).collect();

    Ok(TwoTermResolution {
        d,
        l1: d1.source.clone(),
        l0,
        d1,
        f,
        d0,
        factorization,
        to_c,
        alpha1: alpha.clone(),
        alpha0: alpha,
    })
}

/// `d_0 ∘ d_1 = 0` in `B_d`, and every entry of `d_1`, `d_0` has the degree
/// dictated by the basis.
pub fn verify_complex(r: &TwoTermResolution) -> Result<()> {
    r.d1.check_degrees()?;
    for (k, img) in r.d0.iter().enumerate() {
        if !img.is_homogeneous_of(r.l0.basis[k].1) {
            return Err(Error::DegreeMismatch(format!("d0({}) = {img}", r.l0.basis[k].0)));
        }
    }
    for (s, col) in r.d1.columns.iter().enumerate() {
        let mut acc = Poly::zero(r.f.target());
        for (entry, img) in col.iter().zip(&r.d0) {
            if !entry.is_zero() {
                acc = &acc + &(&r.f.substitute(entry)? * img);
            }
        }
        if !acc.is_zero() {
            return Err(Error::check("d0∘d1", format!("d={}: d0(d1({})) = {acc}", r.d, r.l1.basis[s].0)));
        }
    }
    Ok(())
}

/// `α_0 ∘ d_1 = (c' - c'')·α_1` in `C` (with `A_{d+1}` acting through
/// `f_3 ∘ f_2 ∘ f_1`), and `f_4 ∘ α_0 = d_0` with `f_4 ∘ (f_3 f_2 f_1) = f`.
pub fn verify_commutes(r: &TwoTermResolution) -> Result<()> {
    let ct = &r.factorization.c;
    let diff = &Poly::gen(ct, "c'")? - &Poly::gen(ct, "c''")?;
    for (s, col) in r.d1.columns.iter().enumerate() {
        let mut lhs = Poly::zero(ct);
        for (entry, a0) in col.iter().zip(&r.alpha0) {
            if !entry.is_zero() {
                lhs = &lhs + &(&r.to_c.substitute(entry)? * a0);
            }
        }
        let rhs = &diff * &r.alpha1[s];
        if lhs != rhs {
            return Err(Error::check(
                "commutes",
                format!("d={}: at {}: α0(d1) = {lhs}, (c'-c'')α1 = {rhs}", r.d, r.l1.basis[s].0),
            ));
        }
    }
    let f4 = &r.factorization.f4;
    for (k, (a0, d0)) in r.alpha0.iter().zip(&r.d0).enumerate() {
        if f4.substitute(a0)? != *d0 {
            return Err(Error::check("commutes", format!("d={}: f4(α0({})) ≠ d0", r.d, r.l0.basis[k].0)));
        }
    }
    let through = r.to_c.then(f4)?;
    if through.images() != r.f.images() {
        return Err(Error::check("commutes", format!("d={}: f4∘f3∘f2∘f1 ≠ f", r.d)));
    }
    Ok(())
}

/// Ranks of one graded piece of the resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceRanks {
    pub key: BiDegree,
    pub dim_l1: usize,
    pub dim_l0: usize,
    pub dim_b: usize,
    pub rank_d1: usize,
    pub rank_d0: usize,
}

impl PieceRanks {
    pub fn exact(&self) -> bool {
        self.rank_d1 == self.dim_l1 && self.rank_d0 == self.dim_b && self.rank_d1 + self.rank_d0 == self.dim_l0
    }
}

fn piece_ranks(r: &TwoTermResolution, key: BiDegree) -> Result<PieceRanks> {
    let base = &r.l0.base;
    let g = Grading::Bigraded;
    let p1 = graded::module_piece(base, &r.l1.degrees(), key, g)?;
    let p0 = graded::module_piece(base, &r.l0.degrees(), key, g)?;
    let pb = graded::piece(r.f.target(), key, g)?;

    let mut e1 = Echelon::new();
    for (k, m) in p1.items() {
        let mono = Poly::term(base, m.clone(), Rat::one());
        let image: Vec<Poly> = r.d1.columns[*k].iter().map(|entry| &mono * entry).collect();
        e1.insert(graded::module_coords(&p0, &image)?);
    }

    let mut images = MonomialImages::new(&r.f);
    let mut e0 = Echelon::new();
    for (k, m) in p0.items() {
        let img = &images.image(m) * &r.d0[*k];
        e0.insert(graded::coords(&pb, &img)?);
        if e0.rank() == pb.len() {
            break;
        }
    }
    Ok(PieceRanks { key, dim_l1: p1.len(), dim_l0: p0.len(), dim_b: pb.len(), rank_d1: e1.rank(), rank_d0: e0.rank() })
}

/// Exactness in every bigraded piece with v-degree `<= vmax`, plus the
/// Hilbert identity `H(L_0) - H(L_1) = H(B_d)`.
pub fn verify_exactness(r: &TwoTermResolution, vmax: i64) -> Result<Vec<PieceRanks>> {
    let h1 = r.l1.hilbert(vmax)?;
    let h0 = r.l0.hilbert(vmax)?;
    let hb = graded::hilbert(r.f.target(), vmax)?;
    let diff = h0.try_sub(&h1)?;
    if !diff.try_eq(&hb)? {
        return Err(Error::check("hilbert", format!("d={}: H(L0) - H(L1) = {diff}, H(B) = {hb}", r.d)));
    }
    let keys: Vec<BiDegree> = h0.terms().map(|(k, _)| *k).collect();
    let ranks: Vec<PieceRanks> = keys.par_iter().map(|&k| piece_ranks(r, k)).collect::<Result<_>>()?;
    if let Some(bad) = ranks.iter().find(|p| !p.exact()) {
        return Err(Error::check("exactness", format!("d={} at {}: {bad:?}", r.d, bad.key)));
    }
    Ok(ranks)
}

/// Result of the non-splitting certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonSplit {
    /// `Some(true)` when no degree-zero retraction of `d_1` exists, `None`
    /// when `vmax` is too small to cover every unknown.
    pub no_retraction: Option<bool>,
    /// First `L_1` basis element whose retraction equations are inconsistent.
    pub witness: Option<String>,
    /// Coefficient of `t^{-2} v^{2(d+1)}` in `H(B_d)/H(A_{d+1})`.
    pub obstruction: Rat,
}

impl NonSplit {
    pub fn certified(&self) -> bool {
        self.no_retraction == Some(true) && self.obstruction < Rat::zero()
    }
}

/// Largest v-degree among the unknowns of a retraction `L_0 → L_1`.
pub fn retraction_degree_bound(d: usize) -> i64 {
    let max_f = 4 * d as i64;
    max_f - 2
}

/// Search for an `A_{d+1}`-linear `R: L_0 → L_1` of degree zero with
/// `R ∘ d_1 = id`; one independent linear system per target basis element.
fn retraction_exists(r: &TwoTermResolution, vmax: i64) -> Result<(bool, Option<String>)> {
    let base = &r.l0.base;
    let n1 = r.l1.rank();
    for target in 0..n1 {
        let mut rows: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut row_of = |key: (usize, Monomial)| {
            let len = rows.len();
            *rows.entry(key).or_insert(len)
        };
        let mut ech = Echelon::new();
        for (s, (_, fdeg)) in r.l0.basis.iter().enumerate() {
            let delta = *fdeg - r.l1.basis[target].1;
            if delta.dv < 0 || delta.dv > vmax {
                continue;
            }
            for m in graded::monomials_of_degree(base, delta, Grading::Bigraded)? {
                let mono = Poly::term(base, m, Rat::one());
                let mut col: Vec<(usize, Rat)> = Vec::new();
                for (src, column) in r.d1.columns.iter().enumerate() {
                    let entry = &column[s];
                    if entry.is_zero() {
                        continue;
                    }
                    for (pm, c) in (entry * &mono).terms() {
                        col.push((row_of((src, pm.clone())), c.clone()));
                    }
                }
                ech.insert(crate::linalg::sparse(col));
            }
        }
        let rhs: SparseVec = vec![(row_of((target, Monomial::one(base.len()))), rat(1))];
        if !ech.contains(rhs) {
            return Ok((false, Some(r.l1.basis[target].0.clone())));
        }
    }
    Ok((true, None))
}

/// Certify that `0 → L_1 → L_0 → B_d → 0` does not split.
pub fn omega_nonsplit_check(r: &TwoTermResolution, vmax: i64) -> Result<NonSplit> {
    let d = r.d;
    let complete = vmax >= retraction_degree_bound(d);
    let (exists, witness) = retraction_exists(r, vmax)?;
    let no_retraction = match (exists, complete) {
        (true, _) => Some(false),
        (false, true) => Some(true),
        (false, false) => None,
    };
    let obstruction = obstruction_coefficient(d)?;
    Ok(NonSplit { no_retraction, witness, obstruction })
}

/// Coefficient of `t^{-2}v^{2(d+1)}` in `H(B_d)/H(A_{d+1})`, computed from
/// monomial counts.
pub fn obstruction_coefficient(d: usize) -> Result<Rat> {
    let vmax = 2 * (d as i64 + 1);
    let hb = graded::hilbert(&zastava::make_b(d), vmax)?;
    let ha = graded::hilbert(&zastava::make_a(d + 1), vmax)?;
    let ratio = hb.try_div(&ha)?;
    let predicted = BiSeries::from_poly(&zastava::resolution_class(d), vmax);
    if !ratio.try_eq(&predicted)? {
        return Err(Error::check("obstruction", format!("d={d}: H(B)/H(A) = {ratio}, expected {predicted}")));
    }
    Ok(ratio.coeff(BiDegree::new(vmax, -2)))
}

/// The resolution's K₀ class `Σ deg f_ij - Σ deg e_ij`.
pub fn k0_class(r: &TwoTermResolution) -> BiLaurentPoly {
    &graded::degree_polynomial(&r.l0.degrees()) - &graded::degree_polynomial(&r.l1.degrees())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col_string(r: &TwoTermResolution, i: usize, j: usize) -> String {
        let col = &r.d1.columns[r.index(i, j)];
        let mut parts = Vec::new();
        for (k, entry) in col.iter().enumerate() {
            if !entry.is_zero() {
                parts.push(format!("({entry})*{}", r.l0.basis[k].0));
            }
        }
        parts.join(" + ")
    }

    #[test]
    fn d0_resolution() {
        let r = build_resolution(0).unwrap();
        assert_eq!(r.l1.basis, vec![("e00".to_string(), BiDegree::new(2, -2))]);
        assert_eq!(col_string(&r, 0, 0), "(b1)*f00");
        verify_complex(&r).unwrap();
        verify_commutes(&r).unwrap();
        verify_exactness(&r, 10).unwrap();
    }

    #[test]
    fn d1_columns() {
        let r = build_resolution(1).unwrap();
        assert_eq!(col_string(&r, 0, 0), "(-1)*f01 + (1)*f10");
        assert_eq!(col_string(&r, 1, 1), "(b1)*f10 + (b2)*f11");
        assert_eq!(col_string(&r, 1, 0), "(-a1)*f00 + (-a2)*f10 + (-1)*f11");
    }

    #[test]
    fn small_cases_pass() {
        for d in 0..3 {
            let r = build_resolution(d).unwrap();
            verify_complex(&r).unwrap();
            verify_commutes(&r).unwrap();
            verify_exactness(&r, 10).unwrap();
            assert_eq!(k0_class(&r), zastava::resolution_class(d));
        }
    }

    #[test]
    fn broken_differential_detected() {
        let mut r = build_resolution(1).unwrap();
        let (k, t) = (r.index(0, 0), r.index(1, 0));
        r.d1.columns[k][t] = Poly::zero(&r.l0.base);
        assert!(verify_complex(&r).is_err());
        assert!(verify_commutes(&r).is_err());
    }

    #[test]
    fn nonsplit_small() {
        let r = build_resolution(0).unwrap();
        let ns = omega_nonsplit_check(&r, 8).unwrap();
        assert!(ns.certified(), "{ns:?}");
        assert_eq!(ns.obstruction, rat(-1));
        assert_eq!(obstruction_coefficient(1).unwrap(), rat(-1));
    }
}

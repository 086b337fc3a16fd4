//! Coordinate rings `A_d = k[a_1..a_d, b_1..b_d]` and `B_d = A_d[c]`, the
//! correspondence morphism `f: A_{d+1} → B_d`, its four-step factorisation,
//! and the K₀ classes of `E_d`, `F_d`.

use crate::error::{Error, Result};
use crate::graded::{self, Grading};
use crate::gring::{gmult, BiDegree, BiLaurentPoly, BiSeries, RationalBifunction};
use crate::linalg::{Echelon, ModpEchelon};
use crate::mpoly::{even_table, MonomialImages, Poly, RingMorphism, Table};

fn a_deg(d: usize, i: usize) -> BiDegree {
    BiDegree::new(2 * (d as i64 - i as i64 + 1), 0)
}

fn b_deg(d: usize, i: usize) -> BiDegree {
    BiDegree::new(2 * (d as i64 - i as i64 + 1), -2)
}

const C_DEG: BiDegree = BiDegree::new(2, 0);

fn a_gens(d: usize) -> Vec<(String, BiDegree)> {
    (1..=d).map(|i| (format!("a{i}"), a_deg(d, i))).collect()
}

fn b_gens(d: usize) -> Vec<(String, BiDegree)> {
    (1..=d).map(|i| (format!("b{i}"), b_deg(d, i))).collect()
}

/// `A_d`: `a_i` of degree `(2(d-i+1), 0)`, `b_i` of degree `(2(d-i+1), -2)`.
pub fn make_a(d: usize) -> Table {
    even_table(a_gens(d).into_iter().chain(b_gens(d))).expect("valid names")
}

/// `B_d = A_d[c]` with `deg c = (2, 0)`.
pub fn make_b(d: usize) -> Table {
    even_table(a_gens(d).into_iter().chain(b_gens(d)).chain([("c".to_string(), C_DEG)])).expect("valid names")
}

fn var(t: &Table, name: &str) -> Poly {
    Poly::gen(t, name).expect("generator exists")
}

/// Image of `x_i` under `x_i ↦ x_{i-1} - z·x_i` with `x_0 = 0` and
/// `x_{top+1}` replaced by `last` (the boundary value).
fn shift_image(t: &Table, prefix: &str, i: usize, top: usize, z: &Poly, last: &Poly) -> Poly {
    let prev = if i == 1 { Poly::zero(t) } else { var(t, &format!("{prefix}{}", i - 1)) };
    let cur = if i == top + 1 { last.clone() } else { var(t, &format!("{prefix}{i}")) };
    &prev - &(z * &cur)
}

/// `f: A_{d+1} → B_d`, `a_i ↦ a_{i-1} - c a_i`, `b_i ↦ b_{i-1} - c b_i`
/// with `a_0 = b_0 = b_{d+1} = 0` and `a_{d+1} = 1`.
pub fn make_f(d: usize) -> Result<RingMorphism> {
    let src = make_a(d + 1);
    let tgt = make_b(d);
    let c = var(&tgt, "c");
    let one = Poly::one(&tgt);
    let zero = Poly::zero(&tgt);
    let mut images = Vec::with_capacity(2 * d + 2);
    for i in 1..=d + 1 {
        images.push(shift_image(&tgt, "a", i, d, &c, &one));
    }
    for i in 1..=d + 1 {
        images.push(shift_image(&tgt, "b", i, d, &c, &zero));
    }
    let f = RingMorphism::new(&src, &tgt, images)?;
    f.bidegree_certificate()?;
    Ok(f)
}

/// The chain `f_4 ∘ f_3 ∘ f_2 ∘ f_1 = f` with its intermediate rings.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub d: usize,
    /// `k[a_1..a_d, c', b_1..b_{d+1}]`; the `b_i` keep their `A_{d+1}` degrees.
    pub mid: Table,
    /// `C = k[a_1..a_d, c', b_1..b_d, c'']`.
    pub c: Table,
    pub f1: RingMorphism,
    pub f2: RingMorphism,
    pub f3: RingMorphism,
    pub f4: RingMorphism,
}

impl Factorization {
    /// `f_3 ∘ f_2 ∘ f_1: A_{d+1} → C`.
    pub fn to_c(&self) -> Result<RingMorphism> {
        self.f1.then(&self.f2)?.then(&self.f3)
    }
}

pub fn factorize_f(d: usize) -> Result<Factorization> {
    let src = make_a(d + 1);
    let mid = even_table(
        a_gens(d)
            .into_iter()
            .chain([("c'".to_string(), C_DEG)])
            .chain((1..=d + 1).map(|i| (format!("b{i}"), b_deg(d + 1, i)))),
    )?;
    let c_tab = even_table(
        a_gens(d).into_iter().chain([("c'".to_string(), C_DEG)]).chain(b_gens(d)).chain([("c''".to_string(), C_DEG)]),
    )?;

    let cp = var(&mid, "c'");
    let one = Poly::one(&mid);
    let f1 = RingMorphism::by_name(&src, &mid, |name| {
        let i: usize = name[1..].parse().expect("indexed name");
        Ok(if name.starts_with('a') { shift_image(&mid, "a", i, d, &cp, &one) } else { var(&mid, name) })
    })?;

    let f2 = RingMorphism::by_name(&mid, &mid, |name| {
        let p = var(&mid, name);
        Ok(if name == format!("b{}", d + 1) { &p + &cp } else { p })
    })?;

    let cpp = var(&c_tab, "c''");
    let c_one = Poly::one(&c_tab);
    let f3 = RingMorphism::by_name(&mid, &c_tab, |name| {
        if let Some(rest) = name.strip_prefix('b') {
            let i: usize = rest.parse().expect("indexed name");
            Ok(shift_image(&c_tab, "b", i, d, &cpp, &c_one))
        } else {
            Ok(var(&c_tab, name))
        }
    })?;

    let b = make_b(d);
    let f4 = RingMorphism::by_name(&c_tab, &b, |name| {
        Ok(match name {
            "c'" | "c''" => var(&b, "c"),
            other => var(&b, other),
        })
    })?;

    let fac = Factorization { d, mid, c: c_tab, f1, f2, f3, f4 };
    let composite = fac.to_c()?.then(&fac.f4)?;
    let f = make_f(d)?;
    for (g, (lhs, rhs)) in src.generators().iter().zip(composite.images().iter().zip(f.images())) {
        if lhs != rhs {
            return Err(Error::check(
                "factorization",
                format!("d={d}: composite sends {} to {lhs}, f sends it to {rhs}", g.name),
            ));
        }
    }
    Ok(fac)
}

/// `[E_d(A_{d+1})] = 1/(1-v²) [A_d]`.
pub fn k0_e(_d: usize) -> RationalBifunction {
    RationalBifunction::new(BiLaurentPoly::one(), &BiLaurentPoly::one() - &BiLaurentPoly::v_pow(2)).expect("nonzero")
}

/// `[F_d(A_d)] = (1 - t^{-2} v^{2(d+1)})(1 - v^{2(d+1)})/(1-v²) [A_{d+1}]`.
pub fn k0_f(d: usize) -> RationalBifunction {
    let e = 2 * (d as i64 + 1);
    let one = BiLaurentPoly::one();
    let num = &(&one - &BiLaurentPoly::vt(e, -2)) * &(&one - &BiLaurentPoly::v_pow(e));
    RationalBifunction::new(num, &one - &BiLaurentPoly::v_pow(2)).expect("nonzero")
}

/// `∏_{j≤d} 1/((1-v^{2j})(1-t^{-2}v^{2j}))`.
pub fn hilbert_a_formula(d: usize) -> RationalBifunction {
    let one = BiLaurentPoly::one();
    let mut den = one.clone();
    for j in 1..=d as i64 {
        den = &den * &(&(&one - &BiLaurentPoly::v_pow(2 * j)) * &(&one - &BiLaurentPoly::vt(2 * j, -2)));
    }
    RationalBifunction::new(one, den).expect("nonzero")
}

/// Check both K₀ classes against monomial-counting Hilbert series.
pub fn k0_cross_check(d: usize, vmax: i64) -> Result<()> {
    let h_a = graded::hilbert(&make_a(d), vmax)?;
    let h_a1 = graded::hilbert(&make_a(d + 1), vmax)?;
    let h_b = graded::hilbert(&make_b(d), vmax)?;
    let via_f = k0_f(d).expand(vmax)?.try_mul(&h_a1)?;
    if !via_f.try_eq(&h_b)? {
        return Err(Error::check("k0_F", format!("d={d}: [F_d(A_d)]·H(A_{{d+1}}) = {via_f} but H(B_d) = {h_b}")));
    }
    let via_e = k0_e(d).expand(vmax)?.try_mul(&h_a)?;
    if !via_e.try_eq(&h_b)? {
        return Err(Error::check("k0_E", format!("d={d}: [E_d]·H(A_d) = {via_e} but H(B_d) = {h_b}")));
    }
    let formula = hilbert_a_formula(d).expand(vmax)?;
    if !formula.try_eq(&h_a)? {
        return Err(Error::check("hilbert_A", format!("d={d}: product formula {formula} vs count {h_a}")));
    }
    Ok(())
}

/// Outcome of a truncated freeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness {
    Free,
    NotFree { witness: BiDegree, reason: String },
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

/// Whether the target of `m` is free over its source with the given basis,
/// up to v-degree `vmax`: the basis times source monomials spans every
/// target piece, and the Hilbert series agree (so the spanning set is also
/// independent).
pub fn freeness_basis_check(m: &RingMorphism, basis: &[Poly], vmax: i64, grading: Grading) -> Result<Freeness> {
    let (src, tgt) = (m.source(), m.target());
    let mut basis_degs = Vec::with_capacity(basis.len());
    for b in basis {
        let deg = b.bidegree().ok_or_else(|| Error::DegreeMismatch(format!("basis element {b} is not homogeneous")))?;
        basis_degs.push(grading.key(deg));
    }
    if grading == Grading::Bigraded {
        m.bidegree_certificate()?;
    } else if !m.preserves_v_degree() {
        return Err(Error::DegreeMismatch("morphism does not preserve v-degree".into()));
    }

    let extra = -basis_degs.iter().map(|d| d.dv).fold(0, i64::min);
    let h_src = grading.series(&graded::hilbert(src, vmax + extra)?);
    let h_tgt = grading.series(&graded::hilbert(tgt, vmax)?);
    let predicted = BiSeries::from_poly(&h_src.mul_poly(&graded::degree_polynomial(&basis_degs)).to_poly(), vmax);
    if !predicted.try_eq(&h_tgt)? {
        let witness = h_tgt.try_sub(&predicted)?.terms().next().map(|(d, _)| *d).unwrap_or(BiDegree::ZERO);
        return Ok(Freeness::NotFree {
            witness,
            reason: format!("dimension {} predicted, {} actual", predicted.coeff(witness), h_tgt.coeff(witness)),
        });
    }

    let mut images = MonomialImages::new(m);
    for (key, dim) in h_tgt.terms() {
        let piece = graded::piece(tgt, *key, grading)?;
        if spans_mod_p(&piece, basis, &basis_degs, src, *key, grading, &mut images)? {
            continue;
        }
        let mut ech = Echelon::new();
        'fill: for (b, &db) in basis.iter().zip(&basis_degs) {
            for s in graded::monomials_of_degree(src, grading.key(*key - db), grading)? {
                let v = graded::coords(&piece, &(&images.image(&s) * b))?;
                ech.insert(v);
                if ech.rank() == piece.len() {
                    break 'fill;
                }
            }
        }
        if ech.rank() != piece.len() {
            return Ok(Freeness::NotFree {
                witness: *key,
                reason: format!("span has rank {} in a piece of dimension {dim}", ech.rank()),
            });
        }
    }
    Ok(Freeness::Free)
}

/// Full rank of the spanning family modulo a prime, which implies full rank
/// over Q. `false` only means the exact computation has to decide.
fn spans_mod_p(
    piece: &graded::Piece,
    basis: &[Poly],
    basis_degs: &[BiDegree],
    src: &Table,
    key: BiDegree,
    grading: Grading,
    images: &mut MonomialImages,
) -> Result<bool> {
    let mut ech = ModpEchelon::new();
    for (b, &db) in basis.iter().zip(basis_degs) {
        for s in graded::monomials_of_degree(src, grading.key(key - db), grading)? {
            let v = graded::coords(piece, &(&images.image(&s) * b))?;
            if ech.insert(&v).is_none() {
                return Ok(false);
            }
            if ech.rank() == piece.len() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Powers `1, z, …, z^d` of the named generator.
pub fn power_basis(table: &Table, name: &str, d: usize) -> Result<Vec<Poly>> {
    let z = Poly::gen(table, name)?;
    Ok((0..=d as u32).map(|k| z.pow(k)).collect())
}

/// `gmult(d+1)·(1 - t^{-2}v^{2(d+1)})`, the class `[B_d]/[A_{d+1}]`.
pub fn resolution_class(d: usize) -> BiLaurentPoly {
    let g = gmult(d as u32 + 1);
    &g - &(&g * &BiLaurentPoly::vt(2 * (d as i64 + 1), -2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &Table, s: &str) -> Poly {
        Poly::parse(t, s).unwrap()
    }

    #[test]
    fn f_at_d0() {
        let f = make_f(0).unwrap();
        let b = make_b(0);
        assert_eq!(f.image_of("a1").unwrap(), &p(&b, "-c"));
        assert!(f.image_of("b1").unwrap().is_zero());
    }

    #[test]
    fn f_at_d1() {
        let f = make_f(1).unwrap();
        let b = make_b(1);
        assert_eq!(f.image_of("a2").unwrap(), &p(&b, "a1 - c"));
        assert_eq!(f.image_of("a1").unwrap(), &p(&b, "-a1*c"));
        assert_eq!(f.image_of("b2").unwrap(), &p(&b, "b1"));
        assert_eq!(f.image_of("b1").unwrap(), &p(&b, "-b1*c"));
    }

    #[test]
    fn f_images_have_generator_degrees() {
        for d in 0..5 {
            let f = make_f(d).unwrap();
            for (g, img) in f.source().generators().iter().zip(f.images()) {
                assert!(img.is_homogeneous_of(g.degree));
                assert!(!img.is_zero() || g.name.starts_with('b'));
            }
        }
    }

    #[test]
    fn factorization_examples() {
        let fac = factorize_f(0).unwrap();
        assert_eq!(fac.f1.image_of("a1").unwrap(), &p(&fac.mid, "-c'"));
        let fac = factorize_f(1).unwrap();
        let composite = fac.to_c().unwrap().then(&fac.f4).unwrap();
        assert_eq!(composite.image_of("b2").unwrap(), &p(&make_b(1), "b1"));
        assert!(fac.f1.is_degree_preserving());
        assert!(fac.f4.is_degree_preserving());
        assert!(!fac.f2.is_degree_preserving());
        assert!(fac.f2.preserves_v_degree() && fac.f3.preserves_v_degree());
    }

    #[test]
    fn hilbert_examples() {
        let h = graded::hilbert(&make_a(0), 6).unwrap();
        assert!(h.try_eq(&BiSeries::from_poly(&BiLaurentPoly::one(), 6)).unwrap());
        let h = graded::hilbert(&make_b(0), 4).unwrap();
        let want: BiLaurentPoly = "1 + v^2 + v^4".parse().unwrap();
        assert!(h.try_eq(&BiSeries::from_poly(&want, 4)).unwrap());
    }

    #[test]
    fn k0_examples() {
        let geo = RationalBifunction::new(BiLaurentPoly::one(), "1 - v^2".parse().unwrap()).unwrap();
        assert_eq!(k0_e(0), geo);
        assert_eq!(k0_f(0), RationalBifunction::from_poly("1 - t^-2*v^2".parse().unwrap()));
        for d in 0..4 {
            k0_cross_check(d, 12).unwrap();
        }
    }

    #[test]
    fn freeness_examples() {
        let fac = factorize_f(1).unwrap();
        let basis = power_basis(&fac.mid, "c'", 1).unwrap();
        assert!(freeness_basis_check(&fac.f1, &basis, 10, Grading::Bigraded).unwrap().is_free());
        let basis = power_basis(&fac.c, "c''", 1).unwrap();
        assert!(freeness_basis_check(&fac.f3, &basis, 10, Grading::VOnly).unwrap().is_free());
        let f = make_f(0).unwrap();
        let one = vec![Poly::one(f.target())];
        assert!(!freeness_basis_check(&f, &one, 10, Grading::Bigraded).unwrap().is_free());
        // Too small a basis fails on generation, not only on counting.
        let basis = power_basis(&fac.mid, "c'", 0).unwrap();
        assert!(!freeness_basis_check(&fac.f1, &basis, 10, Grading::Bigraded).unwrap().is_free());
    }
}

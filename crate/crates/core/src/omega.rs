//! Super-commutative algebras `Ω_d = k[x_1..x_d] ⊗ Λ(ω_1..ω_d)` and
//! `Ω_{d,d+1} = k[y_1..y_d, ξ] ⊗ Λ(ω_1..ω_{d+1})` with the structure maps
//! `φ: Ω_d → Ω_{d,d+1}` and `ψ: Ω_{d+1} → Ω_{d,d+1}`.

use crate::error::{Error, Result};
use crate::graded::{self, Grading, SuperSeries};
use crate::gring::{rat, BiDegree, BiLaurentPoly, BiSeries};
use crate::mpoly::{Generator, GeneratorTable, Poly, RingMorphism, Table};
use crate::zastava::{self, Freeness};

fn x_deg(i: usize) -> BiDegree {
    BiDegree::new(2 * i as i64, 0)
}

/// `deg ω_i = (-2i, 2)`, odd.
pub fn omega_deg(i: usize) -> BiDegree {
    BiDegree::new(-2 * i as i64, 2)
}

const XI_DEG: BiDegree = BiDegree::new(2, 0);

/// `Ω_d`.
pub fn make_omega(d: usize) -> Table {
    let mut gens: Vec<Generator> = (1..=d).map(|i| Generator::even(format!("x{i}"), x_deg(i))).collect();
    gens.extend((1..=d).map(|i| Generator::odd(format!("w{i}"), omega_deg(i))));
    GeneratorTable::new(gens).expect("valid names")
}

/// `Ω_{d,d+1}`; `ξ` is named `xi`.
pub fn make_omega_pair(d: usize) -> Table {
    let mut gens: Vec<Generator> = (1..=d).map(|i| Generator::even(format!("y{i}"), x_deg(i))).collect();
    gens.push(Generator::even("xi", XI_DEG));
    gens.extend((1..=d + 1).map(|i| Generator::odd(format!("w{i}"), omega_deg(i))));
    GeneratorTable::new(gens).expect("valid names")
}

/// How the generators of `Ω_d` arise: `x_i` from `(-1)^i a_{d+1-i}` and
/// `ω_i` from `(-1)^{d+1-i} b*_{d+1-i}`.
pub fn iota_metadata(d: usize) -> Vec<(String, String)> {
    let sign = |k: usize| if k.is_multiple_of(2) { "" } else { "-" };
    let mut out: Vec<(String, String)> =
        (1..=d).map(|i| (format!("x{i}"), format!("{}a{}", sign(i), d + 1 - i))).collect();
    out.extend((1..=d).map(|i| (format!("w{i}"), format!("{}b{}*", sign(d + 1 - i), d + 1 - i))));
    out
}

fn var(t: &Table, name: &str) -> Poly {
    Poly::gen(t, name).expect("generator exists")
}

/// `y_k` with `y_0 = 1` and `y_{d+1} = 0`.
fn y(t: &Table, d: usize, k: usize) -> Poly {
    match k {
        0 => Poly::one(t),
        k if k > d => Poly::zero(t),
        k => var(t, &format!("y{k}")),
    }
}

/// `φ: x_i ↦ y_i, ω_i ↦ ω_i + ξω_{i+1}`.
pub fn make_phi(d: usize) -> Result<RingMorphism> {
    let src = make_omega(d);
    let tgt = make_omega_pair(d);
    let xi = var(&tgt, "xi");
    let m = RingMorphism::by_name(&src, &tgt, |name| {
        let i: usize = name[1..].parse().expect("indexed name");
        Ok(if name.starts_with('x') {
            y(&tgt, d, i)
        } else {
            &var(&tgt, name) + &(&xi * &var(&tgt, &format!("w{}", i + 1)))
        })
    })?;
    m.bidegree_certificate()?;
    Ok(m)
}

/// `ψ: x_i ↦ y_i + ξy_{i-1}, ω_i ↦ ω_i`.
pub fn make_psi(d: usize) -> Result<RingMorphism> {
    let src = make_omega(d + 1);
    let tgt = make_omega_pair(d);
    let xi = var(&tgt, "xi");
    let m = RingMorphism::by_name(&src, &tgt, |name| {
        let i: usize = name[1..].parse().expect("indexed name");
        Ok(if name.starts_with('x') { &y(&tgt, d, i) + &(&xi * &y(&tgt, d, i - 1)) } else { var(&tgt, name) })
    })?;
    m.bidegree_certificate()?;
    Ok(m)
}

/// Odd images square to zero and pairwise anticommute.
pub fn verify_odd_images(m: &RingMorphism) -> Result<()> {
    let src = m.source();
    let odd: Vec<(String, &Poly)> = src
        .generators()
        .iter()
        .zip(m.images())
        .filter(|(g, _)| g.parity == crate::mpoly::Parity::Odd)
        .map(|(g, p)| (g.name.clone(), p))
        .collect();
    for (i, (ni, pi)) in odd.iter().enumerate() {
        if !(*pi * *pi).is_zero() {
            return Err(Error::check("odd square", format!("image of {ni} squares to {}", *pi * *pi)));
        }
        for (nj, pj) in &odd[i + 1..] {
            let s = &(*pi * *pj) + &(*pj * *pi);
            if !s.is_zero() {
                return Err(Error::check("anticommute", format!("{ni}, {nj}: {s}")));
            }
        }
    }
    Ok(())
}

/// Push `x_i^{(d+1)} = (-1)^i a'_{d+2-i}` through `f` and compare with `ψ(x_i)`
/// read in `B_d` via `y_i ↦ (-1)^i a_{d+1-i}`, `ξ ↦ c`.
pub fn verify_psi_matches_f(d: usize) -> Result<()> {
    let f = zastava::make_f(d)?;
    let b = f.target().clone();
    let a1 = f.source().clone();
    let signed = |t: &Table, i: usize, idx: usize| {
        let p = var(t, &format!("a{idx}"));
        if i.is_multiple_of(2) {
            p
        } else {
            -p
        }
    };
    let psi = make_psi(d)?;
    let pair = psi.target().clone();
    let theta = RingMorphism::by_name(&pair, &b, |name| {
        Ok(match name {
            "xi" => var(&b, "c"),
            n if n.starts_with('y') => {
                let k: usize = n[1..].parse().expect("indexed name");
                signed(&b, k, d + 1 - k)
            }
            _ => Poly::zero(&b),
        })
    })?;
    for i in 1..=d + 1 {
        let lhs = f.substitute(&signed(&a1, i, d + 2 - i))?;
        let rhs = theta.substitute(psi.image_of(&format!("x{i}"))?)?;
        if lhs != rhs {
            return Err(Error::check("psi vs f", format!("d={d}, x{i}: f gives {lhs}, ψ gives {rhs}")));
        }
    }
    Ok(())
}

/// `A_d ⊗ A_{d+1}` with primed names for the second factor.
pub fn make_tensor(d: usize) -> Table {
    let a = zastava::make_a(d);
    let a1 = zastava::make_a(d + 1);
    let mut gens: Vec<Generator> = a.generators().to_vec();
    gens.extend(a1.generators().iter().map(|g| Generator::even(format!("{}'", g.name), g.degree)));
    GeneratorTable::new(gens).expect("valid names")
}

/// `b̃_i = b'_i + c̃ b_i - b_{i-1}` with `c̃ = a_d - a'_{d+1}` (`a_0 = b_0 = 0`,
/// and `b_{d+1} = 0` in `A_d`).
pub fn kernel_generators(d: usize) -> Result<Vec<Poly>> {
    let t = make_tensor(d);
    let ad = if d == 0 { Poly::zero(&t) } else { var(&t, &format!("a{d}")) };
    let ct = &ad - &var(&t, &format!("a{}'", d + 1));
    let b = |i: usize| if i == 0 || i > d { Poly::zero(&t) } else { var(&t, &format!("b{i}")) };
    Ok((1..=d + 1).map(|i| &(&var(&t, &format!("b{i}'")) + &(&ct * &b(i))) - &b(i - 1)).collect())
}

/// `h(r ⊗ s) = r·f(s)` kills every `b̃_i`.
pub fn verify_kernel(d: usize) -> Result<()> {
    let t = make_tensor(d);
    let f = zastava::make_f(d)?;
    let bt = f.target().clone();
    let h = RingMorphism::by_name(&t, &bt, |name| {
        Ok(match name.strip_suffix('\'') {
            Some(orig) => f.image_of(orig)?.clone(),
            None => var(&bt, name),
        })
    })?;
    for (i, g) in kernel_generators(d)?.iter().enumerate() {
        if g.bidegree().is_none() {
            return Err(Error::DegreeMismatch(format!("b̃_{} = {g} is not homogeneous", i + 1)));
        }
        let img = h.substitute(g)?;
        if !img.is_zero() {
            return Err(Error::check("h(b̃)", format!("d={d}: h(b̃_{}) = {img}", i + 1)));
        }
    }
    Ok(())
}

/// Pairing of `u_k = b'*_{k+1} + b*_k - c̃ b'*_k` with `b̃_i`, as polynomials
/// in `R = k[a_1..a_d, c̃]`; `out[k-1][i-1]` for `1 ≤ k, i ≤ d+1`.
pub fn orthogonality_pairings(d: usize) -> Result<(Table, Vec<Vec<Poly>>)> {
    let mut gens: Vec<(String, BiDegree)> =
        (1..=d).map(|i| (format!("a{i}"), BiDegree::new(2 * (d + 1 - i) as i64, 0))).collect();
    gens.push(("ct".into(), BiDegree::new(2, 0)));
    let r = crate::mpoly::even_table(gens)?;
    let ct = var(&r, "ct");
    let one = Poly::one(&r);
    let zero = Poly::zero(&r);
    // Coordinates on L = ⊕ R b'_j (j ≤ d+1) ⊕ ⊕ R b_j (j ≤ d): index j-1 and d+j.
    let n = 2 * d + 1;
    let bp = |j: usize| j - 1;
    let bb = |j: usize| d + j;
    let mut tilde = Vec::new();
    for i in 1..=d + 1 {
        let mut v = vec![zero.clone(); n];
        v[bp(i)] = one.clone();
        if i <= d {
            v[bb(i)] = ct.clone();
        }
        if i >= 2 {
            v[bb(i - 1)] = -one.clone();
        }
        tilde.push(v);
    }
    let mut out = Vec::new();
    for k in 1..=d + 1 {
        let mut u = vec![zero.clone(); n];
        if k < d + 1 {
            u[bp(k + 1)] = one.clone();
        }
        if k <= d {
            u[bb(k)] = one.clone();
        }
        u[bp(k)] = &u[bp(k)] - &ct;
        let row = tilde.iter().map(|v| u.iter().zip(v).fold(zero.clone(), |acc, (x, y)| &acc + &(x * y))).collect();
        out.push(row);
    }
    Ok((r, out))
}

/// `u_k ⊥ b̃_i` for `1 ≤ k ≤ d`.
pub fn verify_orthogonality(d: usize) -> Result<()> {
    let (_, pairings) = orthogonality_pairings(d)?;
    for (k, row) in pairings.iter().take(d).enumerate() {
        for (i, p) in row.iter().enumerate() {
            if !p.is_zero() {
                return Err(Error::check("I-perp", format!("d={d}: <u_{}, b̃_{}> = {p}", k + 1, i + 1)));
            }
        }
    }
    Ok(())
}

/// `Σ_k s^{odd(b)} v^a t^b` over a basis, split by odd count.
fn basis_super_parts(table: &Table, basis: &[Poly]) -> Result<Vec<BiLaurentPoly>> {
    let mut parts: Vec<BiLaurentPoly> = Vec::new();
    for b in basis {
        let (m, _) = b.terms().next().ok_or_else(|| Error::DegreeMismatch("zero basis element".into()))?;
        let k = table.odd_count(m) as usize;
        let deg = b.bidegree().ok_or_else(|| Error::DegreeMismatch(format!("{b} is not homogeneous")))?;
        if parts.len() <= k {
            parts.resize(k + 1, BiLaurentPoly::zero());
        }
        parts[k] = &parts[k] + &BiLaurentPoly::monomial(rat(1), deg);
    }
    Ok(parts)
}

/// `H(target) = H(source) · Σ_basis` with the odd-count marker kept.
fn super_rank_matches(m: &RingMorphism, basis: &[Poly], vmax: i64) -> Result<bool> {
    let tgt = graded::super_hilbert(m.target(), vmax)?;
    let parts = basis_super_parts(m.target(), basis)?;
    let extra = -parts.iter().filter_map(BiLaurentPoly::min_dv).fold(0, i64::min);
    let src = graded::super_hilbert(m.source(), vmax + extra)?;
    let mut by_odd: Vec<BiSeries> = Vec::new();
    for (i, s) in src.by_odd.iter().enumerate() {
        for (j, p) in parts.iter().enumerate() {
            let prod = BiSeries::from_poly(&s.mul_poly(p).to_poly(), vmax);
            if by_odd.len() <= i + j {
                by_odd.resize(i + j + 1, BiSeries::zero(vmax));
            }
            by_odd[i + j] = by_odd[i + j].try_add(&prod)?;
        }
    }
    SuperSeries { by_odd }.try_eq(&tgt)
}

/// Basis `{ξ^j}_{j ≤ d}` of `Ω_{d,d+1}` over `Ω_{d+1}`.
pub fn psi_basis(d: usize) -> Vec<Poly> {
    let t = make_omega_pair(d);
    let xi = var(&t, "xi");
    (0..=d as u32).map(|j| xi.pow(j)).collect()
}

/// `{ξ^j, ξ^j ω_{d+1}}` for every `j` that can reach v-degree `vmax`.
pub fn phi_basis(d: usize, vmax: i64) -> Vec<Poly> {
    let t = make_omega_pair(d);
    let xi = var(&t, "xi");
    let w = var(&t, &format!("w{}", d + 1));
    let lowest_source = -((d * (d + 1)) as i64);
    let top = ((vmax - lowest_source + 2 * (d as i64 + 1)) / 2).max(0) as u32;
    let mut out: Vec<Poly> = (0..=top).map(|j| xi.pow(j)).collect();
    out.extend((0..=top).map(|j| &xi.pow(j) * &w));
    out
}

/// Expected graded rank over `φ`: `(1 + s t² v^{-2(d+1)})/(1 - v²)`, as
/// `[even part, odd part]`.
pub fn phi_rank_series(d: usize, vmax: i64) -> Result<Vec<BiSeries>> {
    let geo = crate::gring::RationalBifunction::new(BiLaurentPoly::one(), "1 - v^2".parse()?)?;
    let even = geo.expand(vmax)?;
    let shift = BiLaurentPoly::vt(-2 * (d as i64 + 1), 2);
    let odd = geo.expand(vmax + 2 * (d as i64 + 1))?.mul_poly(&shift);
    Ok(vec![even, odd.truncate(vmax)?])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub psi: Freeness,
    pub psi_super_ok: bool,
    pub phi: Freeness,
    pub phi_super_ok: bool,
}

impl RankReport {
    pub fn passed(&self) -> bool {
        self.psi.is_free() && self.psi_super_ok && self.phi.is_free() && self.phi_super_ok
    }
}

/// Graded-rank checks of `Ω_{d,d+1}` over both structure maps.
pub fn rank_checks(d: usize, vmax: i64) -> Result<RankReport> {
    let psi = make_psi(d)?;
    let pb = psi_basis(d);
    let psi_free = zastava::freeness_basis_check(&psi, &pb, vmax, Grading::Bigraded)?;
    let psi_super_ok = super_rank_matches(&psi, &pb, vmax)?;
    let phi = make_phi(d)?;
    let fb = phi_basis(d, vmax);
    let phi_free = zastava::freeness_basis_check(&phi, &fb, vmax, Grading::Bigraded)?;
    let phi_super_ok = super_rank_matches(&phi, &fb, vmax)?;
    Ok(RankReport { psi: psi_free, psi_super_ok, phi: phi_free, phi_super_ok })
}

/// The graded rank over `ψ` is `gmult(d+1)` and over `φ` is
/// `(1 + s t² v^{-2(d+1)})/(1 - v²)`, read off the chosen bases.
pub fn basis_ranks_match(d: usize, vmax: i64) -> Result<bool> {
    let psi_parts = basis_super_parts(&make_omega_pair(d), &psi_basis(d))?;
    if psi_parts.len() != 1 || psi_parts[0] != crate::gring::gmult(d as u32 + 1) {
        return Ok(false);
    }
    let phi_parts = basis_super_parts(&make_omega_pair(d), &phi_basis(d, vmax))?;
    let want = phi_rank_series(d, vmax)?;
    for (k, w) in want.iter().enumerate() {
        let got = BiSeries::from_poly(phi_parts.get(k).unwrap_or(&BiLaurentPoly::zero()), vmax);
        if !got.try_eq(w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &Table, s: &str) -> Poly {
        Poly::parse(t, s).unwrap()
    }

    #[test]
    fn tables() {
        assert!(make_omega(0).is_empty());
        let o1 = make_omega(1);
        assert_eq!(o1.get(0).degree, BiDegree::new(2, 0));
        assert_eq!(o1.get(1).degree, BiDegree::new(-2, 2));
        let sup = graded::super_hilbert(&o1, 6).unwrap();
        let geo: BiLaurentPoly = "1 + v^2 + v^4 + v^6".parse().unwrap();
        assert!(sup.by_odd[0].try_eq(&BiSeries::from_poly(&geo, 6)).unwrap());
        assert_eq!(
            iota_metadata(2),
            vec![
                ("x1".to_string(), "-a2".to_string()),
                ("x2".to_string(), "a1".to_string()),
                ("w1".to_string(), "b2*".to_string()),
                ("w2".to_string(), "-b1*".to_string()),
            ]
        );
    }

    #[test]
    fn structure_map_examples() {
        for d in 0..4 {
            let phi = make_phi(d).unwrap();
            let psi = make_psi(d).unwrap();
            let t = phi.target().clone();
            if d > 0 {
                assert_eq!(phi.image_of(&format!("w{d}")).unwrap(), &p(&t, &format!("w{d} + xi*w{}", d + 1)));
                assert_eq!(psi.image_of("x1").unwrap(), &p(&t, "y1 + xi"));
            } else {
                assert_eq!(psi.image_of("x1").unwrap(), &p(&t, "xi"));
            }
            assert_eq!(
                psi.image_of(&format!("x{}", d + 1)).unwrap(),
                &if d == 0 { p(&t, "xi") } else { p(&t, &format!("xi*y{d}")) }
            );
            verify_odd_images(&phi).unwrap();
            verify_odd_images(&psi).unwrap();
            verify_psi_matches_f(d).unwrap();
            verify_kernel(d).unwrap();
            verify_orthogonality(d).unwrap();
        }
    }

    #[test]
    fn last_perp_generator_is_not_orthogonal() {
        let (r, pairings) = orthogonality_pairings(1).unwrap();
        assert_eq!(pairings[1][1], -var(&r, "ct"));
    }

    #[test]
    fn ranks() {
        for d in 0..3 {
            let rep = rank_checks(d, 10).unwrap();
            assert!(rep.passed(), "d={d}: {rep:?}");
            assert!(basis_ranks_match(d, 10).unwrap());
        }
    }
}

//! The dot `X` on `F_d`, the composite bimodule for `F_{d+1} F_d` and the
//! crossing `T` acting on it by divided difference.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graded::{self, Grading};
use crate::gring::{rat, BiDegree};
use crate::mpoly::{divided_difference, even_table, invariance_check, Monomial, Poly, RingMorphism, Table};
use crate::zastava::{make_a, make_b, make_f};

/// Samples for the suite run over monomials of v-degree at most this.
pub const SAMPLE_DEGREE: i64 = 16;

pub const X_DEGREE: BiDegree = BiDegree::new(2, 0);
pub const T_DEGREE: BiDegree = BiDegree::new(-2, 0);

/// `B_d` with the left `A_d` action by inclusion and the right `A_{d+1}`
/// action through `f`.
#[derive(Clone, Debug)]
pub struct FBimodule {
    pub d: usize,
    pub left: RingMorphism,
    pub right: RingMorphism,
}

impl FBimodule {
    pub fn new(d: usize) -> Result<Self> {
        let b = make_b(d);
        let left = inclusion(&make_a(d), &b)?;
        Ok(FBimodule { d, left, right: make_f(d)? })
    }

    pub fn carrier(&self) -> &Table {
        self.left.target()
    }

    /// `X`: multiplication by `c`.
    pub fn x(&self, p: &Poly) -> Poly {
        let c = Poly::gen(self.carrier(), "c").expect("c is adjoined");
        &c * p
    }
}

fn inclusion(src: &Table, tgt: &Table) -> Result<RingMorphism> {
    RingMorphism::by_name(src, tgt, |name| Poly::gen(tgt, name))
}

/// `A_d[c', c'']`: `c'` comes from `F_d`, `c''` from `F_{d+1}`.
#[derive(Clone, Debug)]
pub struct FFBimodule {
    pub d: usize,
    pub left: RingMorphism,
    /// `A_{d+2} → A_d[c', c'']`, `f_{d+1}` followed by `f_d` on coefficients.
    pub right: RingMorphism,
    pub cp: usize,
    pub cpp: usize,
}

fn ff_table(d: usize, extra: &[&str]) -> Table {
    let a = make_a(d);
    let gens = a
        .generators()
        .iter()
        .map(|g| (g.name.clone(), g.degree))
        .chain(extra.iter().map(|n| (n.to_string(), X_DEGREE)));
    even_table(gens).expect("valid names")
}

pub fn compose_ff(d: usize) -> Result<FFBimodule> {
    let ff = ff_table(d, &["c'", "c''"]);
    let left = inclusion(&make_a(d), &ff)?;
    // B_d → FF renaming c to c'.
    let b = make_b(d);
    let lower = RingMorphism::by_name(&b, &ff, |name| match name {
        "c" => Poly::gen(&ff, "c'"),
        other => Poly::gen(&ff, other),
    })?;
    let fd = make_f(d)?.then(&lower)?;
    // B_{d+1} → FF: coefficients through f_d, the adjoined variable to c''.
    let b1 = make_b(d + 1);
    let lift = RingMorphism::by_name(&b1, &ff, |name| match name {
        "c" => Poly::gen(&ff, "c''"),
        other => fd.image_of(other).cloned(),
    })?;
    let right = make_f(d + 1)?.then(&lift)?;
    right.bidegree_certificate()?;
    Ok(FFBimodule { d, left, right, cp: ff.index_of("c'")?, cpp: ff.index_of("c''")? })
}

impl FFBimodule {
    pub fn carrier(&self) -> &Table {
        self.left.target()
    }

    /// `T = ∂` in `(c', c'')`, so `T(c') = -1` and `T(c'') = 1`.
    pub fn t(&self, p: &Poly) -> Result<Poly> {
        divided_difference(p, self.cp, self.cpp)
    }

    /// Generators of `A_{d+2}` whose image is not symmetric in `(c', c'')`.
    pub fn asymmetric_images(&self) -> Vec<String> {
        let block = [vec![self.cp, self.cpp]];
        self.right
            .source()
            .generators()
            .iter()
            .zip(self.right.images())
            .filter(|(_, img)| !invariance_check(img, &block))
            .map(|(g, _)| g.name.clone())
            .collect()
    }
}

/// All monomials of the table with v-degree in `0..=max_dv`.
pub fn sample_basis(table: &Table, max_dv: i64) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for dv in 0..=max_dv {
        for m in graded::monomials_of_degree(table, BiDegree::new(dv, 0), Grading::VOnly)? {
            out.push(Poly::term(table, m, One::one()));
        }
    }
    Ok(out)
}

/// `Some(k)` if `lhs = k·rhs` on every sample with `k ∈ {-1, 0, 1}`.
fn proportionality<F, G>(samples: &[Poly], lhs: F, rhs: G) -> Result<Option<i64>>
where
    F: Fn(&Poly) -> Result<Poly>,
    G: Fn(&Poly) -> Result<Poly>,
{
    let mut candidates = vec![-1i64, 0, 1];
    for p in samples {
        let (l, r) = (lhs(p)?, rhs(p)?);
        candidates.retain(|&k| l == r.scale(&rat(k)));
        if candidates.is_empty() {
            return Ok(None);
        }
    }
    // All three survive only when both sides vanish identically.
    Ok(candidates.first().copied())
}

fn random_element(samples: &[Poly], rng: &mut ChaCha8Rng, terms: usize) -> Poly {
    let table = samples[0].table();
    let mut p = Poly::zero(table);
    for _ in 0..terms {
        let m = &samples[rng.gen_range(0..samples.len())];
        let c: i64 = rng.gen_range(-3..=3);
        p = &p + &m.scale(&rat(c));
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilHeckeReport {
    pub d: usize,
    pub samples: usize,
    /// Generators of `A_{d+2}` with a non-symmetric image.
    pub asymmetric: Vec<String>,
    pub x_degree_ok: bool,
    pub x_central: bool,
    pub t_degree_ok: bool,
    pub t_squared_zero: bool,
    pub t_left_linear: bool,
    pub t_right_linear: bool,
    /// `T∘c'∘T = k·T`.
    pub t_cp_t: Option<i64>,
    /// `T∘c''∘T = k·T`.
    pub t_cpp_t: Option<i64>,
    /// `T∘(c''·) - (c'·)∘T = k·id`.
    pub slide_left: Option<i64>,
    /// `(c''·)∘T - T∘(c'·) = k·id`.
    pub slide_right: Option<i64>,
    pub braid: bool,
}

impl NilHeckeReport {
    /// The relations asserted as hard requirements; dot-slide and `TXT`
    /// values are reported as measured.
    pub fn passed(&self) -> bool {
        self.asymmetric.is_empty()
            && self.x_degree_ok
            && self.x_central
            && self.t_degree_ok
            && self.t_squared_zero
            && self.t_left_linear
            && self.t_right_linear
            && self.braid
    }
}

fn mul_var(table: &Table, i: usize, p: &Poly) -> Poly {
    &Poly::var(table, i) * p
}

fn x_checks(d: usize, max_dv: i64, rng: &mut ChaCha8Rng) -> Result<(bool, bool)> {
    let fb = FBimodule::new(d)?;
    let samples = sample_basis(fb.carrier(), max_dv)?;
    let degree_ok = samples.iter().all(|m| {
        let deg = m.bidegree().expect("monomial");
        fb.x(m).is_homogeneous_of(deg + X_DEGREE)
    });
    let mut central = true;
    for _ in 0..32 {
        let p = random_element(&samples, rng, 4);
        for img in fb.left.images().iter().chain(fb.right.images()) {
            central &= fb.x(&(&p * img)) == &fb.x(&p) * img;
        }
    }
    Ok((degree_ok, central))
}

fn braid_check(d: usize, max_dv: i64) -> Result<bool> {
    let t3 = ff_table(d, &["c'", "c''", "c'''"]);
    let (x1, x2, x3) = (t3.index_of("c'")?, t3.index_of("c''")?, t3.index_of("c'''")?);
    let d1 = |p: &Poly| divided_difference(p, x1, x2);
    let d2 = |p: &Poly| divided_difference(p, x2, x3);
    for p in sample_basis(&t3, max_dv)? {
        if d1(&d2(&d1(&p)?)?)? != d2(&d1(&d2(&p)?)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn nilhecke_suite(d: usize, seed: u64) -> Result<NilHeckeReport> {
    nilhecke_suite_to(d, seed, SAMPLE_DEGREE)
}

pub fn nilhecke_suite_to(d: usize, seed: u64, max_dv: i64) -> Result<NilHeckeReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (d as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let (x_degree_ok, x_central) = x_checks(d, max_dv, &mut rng)?;

    let ff = compose_ff(d)?;
    let table = ff.carrier().clone();
    let samples = sample_basis(&table, max_dv)?;
    let t = |p: &Poly| ff.t(p);

    let mut t_degree_ok = true;
    let mut t_squared_zero = true;
    for m in &samples {
        let tm = t(m)?;
        let deg = m.bidegree().expect("monomial");
        t_degree_ok &= tm.is_zero() || tm.is_homogeneous_of(deg + T_DEGREE);
        t_squared_zero &= t(&tm)?.is_zero();
    }

    let (cp, cpp) = (ff.cp, ff.cpp);
    let t_cp_t = proportionality(&samples, |p| t(&mul_var(&table, cp, &t(p)?)), t)?;
    let t_cpp_t = proportionality(&samples, |p| t(&mul_var(&table, cpp, &t(p)?)), t)?;
    let slide_left = proportionality(
        &samples,
        |p| Ok(&t(&mul_var(&table, cpp, p))? - &mul_var(&table, cp, &t(p)?)),
        |p| Ok(p.clone()),
    )?;
    let slide_right = proportionality(
        &samples,
        |p| Ok(&mul_var(&table, cpp, &t(p)?) - &t(&mul_var(&table, cp, p))?),
        |p| Ok(p.clone()),
    )?;

    let mut t_left_linear = true;
    let mut t_right_linear = true;
    let a_samples = sample_basis(ff.left.source(), max_dv.min(8))?;
    for _ in 0..32 {
        let p = random_element(&samples, &mut rng, 4);
        let a = ff.left.substitute(&random_element(&a_samples, &mut rng, 3))?;
        t_left_linear &= t(&(&a * &p))? == &a * &t(&p)?;
        for img in ff.left.images() {
            t_left_linear &= t(&(img * &p))? == img * &t(&p)?;
        }
        for img in ff.right.images() {
            t_right_linear &= t(&(&p * img))? == &t(&p)? * img;
        }
    }

    Ok(NilHeckeReport {
        d,
        samples: samples.len(),
        asymmetric: ff.asymmetric_images(),
        x_degree_ok,
        x_central,
        t_degree_ok,
        t_squared_zero,
        t_left_linear,
        t_right_linear,
        t_cp_t,
        t_cpp_t,
        slide_left,
        slide_right,
        braid: braid_check(d, max_dv)?,
    })
}

/// Fails with the first generator whose image is not symmetric.
pub fn verify_symmetric_action(d: usize) -> Result<()> {
    let ff = compose_ff(d)?;
    match ff.asymmetric_images().first() {
        None => Ok(()),
        Some(g) => {
            Err(Error::check("symmetric A_{d+2} action", format!("d={d}: image of {g} is {}", ff.right.image_of(g)?)))
        }
    }
}

/// `T` applied to a single monomial given by exponents of `(c', c'')`.
pub fn t_on_dots(d: usize, e1: u32, e2: u32) -> Result<Poly> {
    let ff = compose_ff(d)?;
    let table = ff.carrier();
    let mut m = Monomial::one(table.len());
    m.0[ff.cp] = e1;
    m.0[ff.cpp] = e2;
    ff.t(&Poly::term(table, m, rat(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(t: &Table, s: &str) -> Poly {
        Poly::parse(t, s).unwrap()
    }

    #[test]
    fn composite_images_small() {
        let ff = compose_ff(0).unwrap();
        let t = ff.carrier();
        assert_eq!(ff.right.image_of("a1").unwrap(), &parse(t, "c'*c''"));
        assert_eq!(ff.right.image_of("a2").unwrap(), &parse(t, "-c' - c''"));
        assert_eq!(ff.right.image_of("b1").unwrap(), &Poly::zero(t));
        assert_eq!(ff.right.image_of("b2").unwrap(), &Poly::zero(t));
        for d in 0..=4 {
            verify_symmetric_action(d).unwrap();
        }
    }

    #[test]
    fn composite_is_coefficientwise_product() {
        // a_i is the coefficient of z^{i-1} in (z - c')(z - c'')(z^d + a_d z^{d-1} + … + a_1).
        for d in 0..=4 {
            let ff = compose_ff(d).unwrap();
            let t = ff.carrier();
            let g: Vec<Poly> = (1..=d + 1)
                .map(|i| if i == d + 1 { Poly::one(t) } else { Poly::gen(t, &format!("a{i}")).unwrap() })
                .collect();
            let quad = [parse(t, "c'*c''"), parse(t, "-c' - c''"), Poly::one(t)];
            let mut prod = vec![Poly::zero(t); d + 3];
            for (i, gi) in g.iter().enumerate() {
                for (j, qj) in quad.iter().enumerate() {
                    prod[i + j] = &prod[i + j] + &(gi * qj);
                }
            }
            for i in 1..=d + 2 {
                assert_eq!(ff.right.image_of(&format!("a{i}")).unwrap(), &prod[i - 1], "d={d} a{i}");
            }
        }
    }

    #[test]
    fn t_on_generators() {
        let ff = compose_ff(1).unwrap();
        let t = ff.carrier();
        assert_eq!(ff.t(&parse(t, "c'")).unwrap(), parse(t, "-1"));
        assert_eq!(ff.t(&parse(t, "c''")).unwrap(), parse(t, "1"));
        assert!(ff.t(&parse(t, "c'*c''")).unwrap().is_zero());
        assert_eq!(t_on_dots(1, 2, 0).unwrap(), parse(t, "-c' - c''"));
    }

    #[test]
    fn x_is_multiplication_by_c() {
        let fb = FBimodule::new(2).unwrap();
        let one = Poly::one(fb.carrier());
        assert_eq!(fb.x(&one), Poly::gen(fb.carrier(), "c").unwrap());
    }

    #[test]
    fn suite_small() {
        for d in 0..=2 {
            let r = nilhecke_suite_to(d, 7, 10).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.t_cp_t, Some(-1));
            assert_eq!(r.t_cpp_t, Some(1));
            assert_eq!(r.slide_left, Some(1));
            assert_eq!(r.slide_right, Some(1));
        }
    }
}

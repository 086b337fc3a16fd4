//! The universal Verma module `M_κ` over `U_v(sl_2)` on the basis `(m_d)`.
//!
//! Coefficients are rational functions in `v` and `κ`; `κ` is stored in the
//! second exponent slot of [`RationalBifunction`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gring::{qint, BiDegree, BiLaurentPoly, RationalBifunction};
use crate::zastava;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VermaOp {
    E,
    F,
    K,
    KInv,
}

/// Finitely supported combination of basis vectors `m_d`.
#[derive(Clone, Debug, Default)]
pub struct VermaVector {
    coeffs: BTreeMap<usize, RationalBifunction>,
}

impl VermaVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(d: usize) -> Self {
        Self::term(d, RationalBifunction::one())
    }

    pub fn term(d: usize, c: RationalBifunction) -> Self {
        let mut v = Self::zero();
        v.add_term(d, c);
        v
    }

    fn add_term(&mut self, d: usize, c: RationalBifunction) {
        let sum = match self.coeffs.remove(&d) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(d, sum);
        }
    }

    pub fn coeff(&self, d: usize) -> RationalBifunction {
        self.coeffs.get(&d).cloned().unwrap_or_else(RationalBifunction::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        for (d, c) in &o.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &RationalBifunction) -> VermaVector {
        let mut out = VermaVector::zero();
        for (d, c) in &self.coeffs {
            out.add_term(*d, c * s);
        }
        out
    }

    pub fn sub(&self, o: &VermaVector) -> VermaVector {
        self.add(&o.scale(&-RationalBifunction::one()))
    }

    /// Apply a monomial substitution to every coefficient.
    pub fn map_coeffs<F: Fn(BiDegree) -> BiDegree + Copy>(&self, f: F) -> Result<VermaVector> {
        let mut out = VermaVector::zero();
        for (d, c) in &self.coeffs {
            out.add_term(*d, c.map_exponents(f)?);
        }
        Ok(out)
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]*m{d}")?;
        }
        Ok(())
    }
}

fn monomial(dv: i64, dk: i64) -> RationalBifunction {
    RationalBifunction::from_poly(BiLaurentPoly::vt(dv, dk))
}

/// `v - v^{-1}`.
fn v_diff() -> BiLaurentPoly {
    &BiLaurentPoly::v_pow(1) - &BiLaurentPoly::v_pow(-1)
}

/// `c_d = [d+1]·(κv^{-d} - κ^{-1}v^d)/(v - v^{-1})`, so that `f m_d = c_d m_{d+1}`.
pub fn f_coefficient(d: usize) -> RationalBifunction {
    let d = d as i64;
    let kappa_part = &BiLaurentPoly::vt(-d, 1) - &BiLaurentPoly::vt(d, -1);
    RationalBifunction::new(&qint(d + 1) * &kappa_part, v_diff()).expect("nonzero")
}

/// `(k - k^{-1})/(v - v^{-1})` on `m_d`.
pub fn cartan_scalar(d: usize) -> RationalBifunction {
    let d = d as i64;
    let num = &BiLaurentPoly::vt(-2 * d, 1) - &BiLaurentPoly::vt(2 * d, -1);
    RationalBifunction::new(num, v_diff()).expect("nonzero")
}

/// `k m_d = κv^{-2d} m_d`, `e m_d = m_{d-1}` (`m_{-1} = 0`), `f m_d = c_d m_{d+1}`.
pub fn act(op: VermaOp, vec: &VermaVector) -> VermaVector {
    let mut out = VermaVector::zero();
    for (&d, c) in &vec.coeffs {
        match op {
            VermaOp::K => out.add_term(d, c * &monomial(-2 * d as i64, 1)),
            VermaOp::KInv => out.add_term(d, c * &monomial(2 * d as i64, -1)),
            VermaOp::E => {
                if d > 0 {
                    out.add_term(d - 1, c.clone());
                }
            }
            VermaOp::F => out.add_term(d + 1, c * &f_coefficient(d)),
        }
    }
    out
}

/// Apply a word of operators, rightmost first.
pub fn act_word(word: &[VermaOp], vec: &VermaVector) -> VermaVector {
    word.iter().rev().fold(vec.clone(), |acc, &op| act(op, &acc))
}

/// `ke = v²ek`, `kf = v^{-2}fk`, `ef - fe = (k - k^{-1})/(v - v^{-1})` on
/// `m_0 .. m_dmax`.
pub fn verify_uv_relations(dmax: usize) -> Result<()> {
    use VermaOp::*;
    let v2 = monomial(2, 0);
    let vm2 = monomial(-2, 0);
    for d in 0..=dmax {
        let m = VermaVector::basis(d);
        let kk = act_word(&[K, KInv], &m).sub(&m);
        if !kk.is_zero() {
            return Err(Error::check("k∘k⁻¹", format!("d={d}: residual {kk}")));
        }
        let r = act_word(&[K, E], &m).sub(&act_word(&[E, K], &m).scale(&v2));
        if !r.is_zero() {
            return Err(Error::check("ke=v²ek", format!("d={d}: residual {r}")));
        }
        let r = act_word(&[K, F], &m).sub(&act_word(&[F, K], &m).scale(&vm2));
        if !r.is_zero() {
            return Err(Error::check("kf=v⁻²fk", format!("d={d}: residual {r}")));
        }
        let comm = act_word(&[E, F], &m).sub(&act_word(&[F, E], &m));
        let r = comm.sub(&m.scale(&cartan_scalar(d)));
        if !r.is_zero() {
            return Err(Error::check("ef-fe", format!("d={d}: residual {r}")));
        }
    }
    Ok(())
}

/// `κ ↦ t v^{-1}`.
pub fn kappa_to_tv(deg: BiDegree) -> BiDegree {
    BiDegree::new(deg.dv - deg.dt, deg.dt)
}

/// `κ ↦ v^n`.
pub fn kappa_to_vn(n: i64) -> impl Fn(BiDegree) -> BiDegree + Copy {
    move |deg: BiDegree| BiDegree::new(deg.dv + n * deg.dt, 0)
}

fn one_minus_v2() -> RationalBifunction {
    RationalBifunction::from_poly(&BiLaurentPoly::one() - &BiLaurentPoly::v_pow(2))
}

/// With `κ = tv^{-1}` and `m_d ↦ (1-v²)^d [A_d]`: `e` matches `[E_d]` and
/// `f` matches `-t v^{-2d} [F_d]` (the shift `[1]` contributes the sign).
pub fn geometric_intertwiner_check(dmax: usize) -> Result<()> {
    let u = one_minus_v2();
    for d in 0..=dmax {
        let class_d = u.pow(d as u32);
        let class_next = u.pow(d as u32 + 1);
        // e(m_{d+1}) = m_d.
        let e_side = &class_next * &zastava::k0_e(d);
        if e_side != class_d {
            return Err(Error::check("intertwiner e", format!("d={d}: {e_side} vs {class_d}")));
        }
        // f(m_d) = c_d m_{d+1}.
        let c = f_coefficient(d).map_exponents(kappa_to_tv)?;
        let algebraic = &c * &class_next;
        let twist = monomial(-2 * d as i64, 1);
        let geometric = -(&(&twist * &zastava::k0_f(d)) * &class_d);
        if algebraic != geometric {
            return Err(Error::check("intertwiner f", format!("d={d}: {algebraic} vs {geometric}")));
        }
    }
    Ok(())
}

/// At `κ = v^n`: `c_d = [d+1][n-d]` for `d ≤ n`, `c_n = 0`, `f^{n+1} m_0 = 0`,
/// and `e f^d m_0 = [d][n-d+1] f^{d-1} m_0`.
pub fn specialize_highest_weight(n: usize) -> Result<()> {
    let sub = kappa_to_vn(n as i64);
    let ni = n as i64;
    for d in 0..=n {
        let c = f_coefficient(d).map_exponents(sub)?;
        let want = RationalBifunction::from_poly(&qint(d as i64 + 1) * &qint(ni - d as i64));
        if c != want {
            return Err(Error::check("c_d at κ=v^n", format!("n={n}, d={d}: {c} vs {want}")));
        }
    }
    if !f_coefficient(n).map_exponents(sub)?.is_zero() {
        return Err(Error::check("c_n", format!("n={n}: nonzero")));
    }
    let mut powers = vec![VermaVector::basis(0)];
    for _ in 0..=n {
        let next = act(VermaOp::F, powers.last().expect("nonempty")).map_coeffs(sub)?;
        powers.push(next);
    }
    if !powers[n + 1].is_zero() {
        return Err(Error::check("f^{n+1}m0", format!("n={n}: {}", powers[n + 1])));
    }
    for d in 1..=n {
        let lhs = act(VermaOp::E, &powers[d]);
        let factor = RationalBifunction::from_poly(&qint(d as i64) * &qint(ni - d as i64 + 1));
        let rhs = powers[d - 1].scale(&factor);
        if !lhs.sub(&rhs).is_zero() {
            return Err(Error::check("e f^d m0", format!("n={n}, d={d}: {lhs} vs {rhs}")));
        }
    }
    Ok(())
}

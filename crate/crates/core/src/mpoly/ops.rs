use num_traits::One;

use crate::error::{Error, Result};
use crate::mpoly::{Parity, Poly, Table};

/// Coefficients `w_0..=w_order` of `1 / (u_0 + u_1 z + … + u_k z^k)` with
/// `u_0 = 1`, from `w_i = -Σ_{j≥1} u_j w_{i-j}`.
pub fn series_inverse(u: &[Poly], order: usize) -> Result<Vec<Poly>> {
    let Some(u0) = u.first() else {
        return Err(Error::OutOfRange("empty denominator".into()));
    };
    let table = u0.table().clone();
    if *u0 != Poly::one(&table) {
        return Err(Error::OutOfRange(format!("constant coefficient must be 1, got {u0}")));
    }
    let mut w: Vec<Poly> = Vec::with_capacity(order + 1);
    w.push(Poly::one(&table));
    for i in 1..=order {
        let mut acc = Poly::zero(&table);
        for j in 1..=i.min(u.len() - 1) {
            acc = acc.try_sub(&u[j].try_mul(&w[i - j])?)?;
        }
        w.push(acc);
    }
    Ok(w)
}

/// `(p(…x…y…) - p(…y…x…)) / (y - x)`, computed by synthetic division in `y`
/// with root `y = x`; a nonzero remainder is reported as an error.
pub fn divided_difference(p: &Poly, x: usize, y: usize) -> Result<Poly> {
    let table = p.table().clone();
    check_pair(&table, x, y)?;
    let numerator = p.try_sub(&p.swap_generators(x, y)?)?;
    if numerator.is_zero() {
        return Ok(Poly::zero(&table));
    }
    let xv = Poly::var(&table, x);
    let yv_name = &table.get(y).name;
    let coeffs = numerator.collect_in(y);
    let top = *coeffs.keys().next_back().expect("nonzero numerator");
    // numerator = Σ_k coeffs[k] y^k; quotient q_{k-1} = coeffs[k] + x q_k.
    let mut quotient = Poly::zero(&table);
    let mut carry = Poly::zero(&table);
    for k in (1..=top).rev() {
        let ck = coeffs.get(&k).cloned().unwrap_or_else(|| Poly::zero(&table));
        carry = &ck + &(&xv * &carry);
        let mut mono = crate::mpoly::Monomial::one(table.len());
        mono.0[y] = k - 1;
        quotient = &quotient + &(&carry * &Poly::term(&table, mono, One::one()));
    }
    let c0 = coeffs.get(&0).cloned().unwrap_or_else(|| Poly::zero(&table));
    let remainder = &c0 + &(&xv * &carry);
    if !remainder.is_zero() {
        return Err(Error::NonzeroRemainder(format!("{yv_name} - {}", table.get(x).name)));
    }
    Ok(quotient)
}

fn check_pair(table: &Table, x: usize, y: usize) -> Result<()> {
    if x == y {
        return Err(Error::OutOfRange("divided difference needs two distinct generators".into()));
    }
    let (gx, gy) = (table.get(x), table.get(y));
    if gx.parity == Parity::Odd || gy.parity == Parity::Odd {
        return Err(Error::OutOfRange("divided difference of odd generators".into()));
    }
    if gx.degree != gy.degree {
        return Err(Error::DegreeMismatch(format!(
            "`{}` has degree {} but `{}` has degree {}",
            gx.name, gx.degree, gy.name, gy.degree
        )));
    }
    Ok(())
}

/// `e_k` of the listed generators.
pub fn elementary_symmetric(table: &Table, k: usize, vars: &[usize]) -> Result<Poly> {
    if k > vars.len() {
        return Err(Error::OutOfRange(format!("e_{k} of {} variables", vars.len())));
    }
    // Coefficients of Π (1 + x_i z), truncated at z^k.
    let mut coeffs = vec![Poly::one(table)];
    for &v in vars {
        let x = Poly::var(table, v);
        let upto = coeffs.len().min(k);
        if coeffs.len() <= k {
            coeffs.push(Poly::zero(table));
        }
        for j in (1..=upto).rev() {
            coeffs[j] = &coeffs[j] + &(&x * &coeffs[j - 1]);
        }
    }
    Ok(coeffs.swap_remove(k))
}

/// Whether `p` is fixed by every adjacent transposition inside each block.
pub fn invariance_check(p: &Poly, blocks: &[Vec<usize>]) -> bool {
    blocks.iter().all(|block| {
        block.windows(2).all(|w| match p.swap_generators(w[0], w[1]) {
            Ok(q) => q == *p,
            Err(_) => false,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gring::BiDegree;
    use crate::mpoly::even_table;

    fn x3() -> Table {
        even_table([
            ("x1", BiDegree::new(2, 0)),
            ("x2", BiDegree::new(2, 0)),
            ("x3", BiDegree::new(2, 0)),
            ("u", BiDegree::new(4, 0)),
        ])
        .unwrap()
    }

    fn p(t: &Table, s: &str) -> Poly {
        Poly::parse(t, s).unwrap()
    }

    #[test]
    fn divided_difference_examples() {
        let t = x3();
        assert!(divided_difference(&p(&t, "1"), 0, 1).unwrap().is_zero());
        assert_eq!(divided_difference(&p(&t, "x1"), 0, 1).unwrap(), p(&t, "-1"));
        assert_eq!(divided_difference(&p(&t, "x1^2"), 0, 1).unwrap(), p(&t, "-x1 - x2"));
        assert_eq!(divided_difference(&p(&t, "x2"), 0, 1).unwrap(), p(&t, "1"));
        // Scalars symmetric in the pair pass through.
        assert_eq!(
            divided_difference(&p(&t, "u*x3*x1^3"), 0, 1).unwrap(),
            p(&t, "-u*x3*x1^2 - u*x3*x1*x2 - u*x3*x2^2")
        );
    }

    #[test]
    fn divided_difference_rejects_unequal_degrees() {
        let t = x3();
        assert!(matches!(divided_difference(&p(&t, "x1"), 0, 3), Err(Error::DegreeMismatch(_))));
        assert!(divided_difference(&p(&t, "x1"), 0, 0).is_err());
    }

    #[test]
    fn elementary_symmetric_examples() {
        let t = x3();
        assert_eq!(elementary_symmetric(&t, 0, &[0, 1]).unwrap(), p(&t, "1"));
        assert_eq!(elementary_symmetric(&t, 1, &[0, 1]).unwrap(), p(&t, "x1 + x2"));
        assert_eq!(elementary_symmetric(&t, 2, &[0, 1, 2]).unwrap(), p(&t, "x1*x2 + x1*x3 + x2*x3"));
        assert_eq!(elementary_symmetric(&t, 3, &[0, 1, 2]).unwrap(), p(&t, "x1*x2*x3"));
        assert!(elementary_symmetric(&t, 3, &[0, 1]).is_err());
        assert_eq!(elementary_symmetric(&t, 0, &[]).unwrap(), p(&t, "1"));
    }

    #[test]
    fn invariance_examples() {
        let t = x3();
        assert!(invariance_check(&p(&t, "x1 + x2"), &[vec![0, 1]]));
        assert!(!invariance_check(&p(&t, "x1"), &[vec![0, 1]]));
        let e2 = elementary_symmetric(&t, 2, &[0, 1, 2]).unwrap();
        assert!(invariance_check(&e2, &[vec![0, 1, 2]]));
        assert!(invariance_check(&p(&t, "x1 + x2 + x3^2"), &[vec![0, 1], vec![2]]));
    }

    #[test]
    fn series_inverse_examples() {
        let t = even_table([("a1", BiDegree::new(4, 0)), ("a2", BiDegree::new(2, 0))]).unwrap();
        let one = p(&t, "1");
        assert_eq!(
            series_inverse(std::slice::from_ref(&one), 3).unwrap(),
            vec![one.clone(), Poly::zero(&t), Poly::zero(&t), Poly::zero(&t)]
        );
        let w = series_inverse(&[one.clone(), p(&t, "a2")], 2).unwrap();
        assert_eq!(w, vec![one.clone(), p(&t, "-a2"), p(&t, "a2^2")]);
        // 1 + a2 z + a1 z^2: w_2 = a2^2 - a1.
        let w = series_inverse(&[one.clone(), p(&t, "a2"), p(&t, "a1")], 2).unwrap();
        assert_eq!(w[2], p(&t, "a2^2 - a1"));
        assert!(series_inverse(&[p(&t, "2")], 2).is_err());
    }
}

//! Shared reader/writer for the sum-of-monomials text format.
//!
//! The grammar is deliberately small:
//!
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := factor ('*' factor)*
//! factor := number | ident ['^' int]
//! number := digits ['/' digits]
//! int    := ['-'] digits
//! ident  := [A-Za-z_][A-Za-z0-9_']*
//! ```
//!
//! Whitespace is allowed between tokens. Canonical output is produced by
//! [`write_terms`]; the parsers in `gring` and `mpoly` accept that output back
//! bit-exactly.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gring::Rat;

/// Longest digit run accepted in a coefficient.
const MAX_DIGITS: usize = 512;

/// One parsed product: a rational coefficient and a list of `name^exp` factors
/// in the order they were written.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedTerm {
    pub coeff: Rat,
    pub factors: Vec<(String, i64)>,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        if self.pos - start > MAX_DIGITS {
            return Err(self.err("integer literal too long"));
        }
        // ASCII digits are valid UTF-8.
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn number(&mut self) -> Result<Rat> {
        let num: BigInt = self.digits()?.parse().map_err(|_| self.err("bad integer"))?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let den: BigInt = self.digits()?.parse().map_err(|_| self.err("bad integer"))?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_integer(num))
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self.digits()?;
        let magnitude: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -magnitude } else { magnitude })
    }

    fn ident(&mut self) -> Result<String> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.pos += 1,
            _ => return Err(self.err("expected a number or generator name")),
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn term(&mut self, sign: bool) -> Result<ParsedTerm> {
        let mut coeff = if sign { -Rat::one() } else { Rat::one() };
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                _ => {
                    let name = self.ident()?;
                    self.skip_ws();
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        self.exponent()?
                    } else {
                        1
                    };
                    factors.push((name, exp));
                }
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(ParsedTerm { coeff, factors })
    }
}

/// Parse a sum of products into raw terms. Generator names are not resolved.
pub fn parse_terms(input: &str) -> Result<Vec<ParsedTerm>> {
    let mut cur = Cursor { src: input.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    cur.skip_ws();
    let mut negative = match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            true
        }
        Some(b'+') => {
            cur.pos += 1;
            false
        }
        None => return Err(cur.err("empty input")),
        _ => false,
    };
    loop {
        terms.push(cur.term(negative)?);
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(cur.err("expected `+`, `-` or end of input")),
        }
        cur.pos += 1;
    }
    Ok(terms)
}

/// Render `|c|` as `n` or `n/d`.
pub fn write_abs_rat(out: &mut String, c: &Rat) {
    let c = c.abs();
    if c.is_integer() {
        write!(out, "{}", c.numer()).unwrap();
    } else {
        write!(out, "{}/{}", c.numer(), c.denom()).unwrap();
    }
}

/// Canonical rendering of a sum of terms. Each term is a coefficient and an
/// already rendered monomial (empty for the unit monomial).
pub fn write_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Rat, String)>,
{
    let mut out = String::new();
    for (i, (c, mono)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let unit = c.abs().is_one();
        if mono.is_empty() {
            write_abs_rat(&mut out, c);
        } else if unit {
            out.push_str(&mono);
        } else {
            write_abs_rat(&mut out, c);
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Render one `name^exp` factor (omitting `^1`).
pub fn write_factor(out: &mut String, name: &str, exp: i64) {
    if !out.is_empty() {
        out.push('*');
    }
    out.push_str(name);
    if exp != 1 {
        write!(out, "^{exp}").unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_signs_and_fractions() {
        let terms = parse_terms("-3/4*a1^2*b1 + c - 2").unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].coeff, Rat::new((-3).into(), 4.into()));
        assert_eq!(terms[0].factors, vec![("a1".into(), 2), ("b1".into(), 1)]);
        assert_eq!(terms[2].coeff, Rat::from_integer((-2).into()));
        assert!(terms[2].factors.is_empty());
    }

    #[test]
    fn primes_and_negative_exponents() {
        let terms = parse_terms("c'^3*c''*v^-2").unwrap();
        assert_eq!(terms[0].factors, vec![("c'".into(), 3), ("c''".into(), 1), ("v".into(), -2)]);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "+", "1 +", "1/0", "a^", "3 3", "*a", "a^-", "a^99999999999999999999"] {
            assert!(parse_terms(bad).is_err(), "{bad:?} should not parse");
        }
    }
}

//! Hand-rolled parser for the polynomial text syntax.
//!
//! Grammar (whitespace insensitive):
//!   poly   := [sign] term (sign term)*
//!   term   := coeff ['*' vars] | coeff vars | vars
//!   coeff  := digits ['/' digits]
//!   vars   := var ('*' var)*
//!   var    := 'x' digits ['^' digits]
//!
//! Variables are `x1 … xn` (1-based). The `*` between the coefficient and the
//! first variable is optional.

use num::{BigInt, BigRational, One};

use super::{Coeff, Monomial, Polynomial};
use crate::{Error, Result};

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Structural(format!(
                "expected a number at byte {start}"
            )));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("digits are ascii");
        s.parse::<BigInt>()
            .map_err(|e| Error::Structural(format!("bad integer `{s}`: {e}")))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let v = self.integer()?;
        u32::try_from(&v).map_err(|_| Error::Structural(format!("value {v} too large")))
    }
}

pub fn parse_polynomial(input: &str, n_vars: usize) -> Result<Polynomial> {
    let mut lex = Lexer::new(input);
    let mut terms: Vec<(Coeff, Monomial)> = Vec::new();
    let mut first = true;
    loop {
        let Some(b) = lex.peek() else {
            if first {
                return Err(Error::Structural("empty polynomial text".into()));
            }
            break;
        };
        let mut negative = false;
        match b {
            b'+' => {
                lex.bump();
            }
            b'-' => {
                negative = true;
                lex.bump();
            }
            _ if first => {}
            other => {
                return Err(Error::Structural(format!(
                    "expected `+` or `-` before a term, found `{}`",
                    other as char
                )));
            }
        }
        first = false;
        let (coeff, mono) = parse_term(&mut lex, n_vars)?;
        let coeff = if negative { -coeff } else { coeff };
        terms.push((coeff, mono));
    }
    Ok(Polynomial::from_terms(n_vars, terms))
}

fn parse_term(lex: &mut Lexer, n_vars: usize) -> Result<(Coeff, Monomial)> {
    let mut coeff = Coeff::one();
    let mut exps = vec![0u32; n_vars];
    let mut saw_factor = false;

    // optional leading rational coefficient
    if let Some(b) = lex.peek() {
        if b.is_ascii_digit() {
            let numer = lex.integer()?;
            let denom = if lex.peek() == Some(b'/') {
                lex.bump();
                let d = lex.integer()?;
                if d == BigInt::from(0) {
                    return Err(Error::Structural("zero denominator".into()));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(numer, denom);
            saw_factor = true;
            // `*` between coefficient and variables is optional
            if lex.peek() == Some(b'*') {
                lex.bump();
                parse_var_into(lex, n_vars, &mut exps)?;
            } else if lex.peek() == Some(b'x') {
                parse_var_into(lex, n_vars, &mut exps)?;
            } else {
                return Ok((coeff, Monomial::from_exps(exps)));
            }
        }
    }

    // variable factors
    loop {
        match lex.peek() {
            Some(b'x') if !saw_factor => {
                parse_var_into(lex, n_vars, &mut exps)?;
            }
            Some(b'*') if saw_factor || exps.iter().any(|&e| e > 0) => {
                lex.bump();
                parse_var_into(lex, n_vars, &mut exps)?;
            }
            Some(b'x') => parse_var_into(lex, n_vars, &mut exps)?,
            _ => break,
        }
        saw_factor = true;
    }
    if !saw_factor && exps.iter().all(|&e| e == 0) {
        return Err(Error::Structural("expected a term".into()));
    }
    Ok((coeff, Monomial::from_exps(exps)))
}

fn parse_var_into(lex: &mut Lexer, n_vars: usize, exps: &mut [u32]) -> Result<()> {
    match lex.bump() {
        Some(b'x') => {}
        other => {
            return Err(Error::Structural(format!(
                "expected a variable, found {:?}",
                other.map(|b| b as char)
            )));
        }
    }
    let idx = lex.small_integer()? as usize;
    if idx < 1 || idx > n_vars {
        return Err(Error::Structural(format!(
            "variable x{idx} out of range 1..={n_vars}"
        )));
    }
    let exp = if lex.peek() == Some(b'^') {
        lex.bump();
        lex.small_integer()?
    } else {
        1
    };
    let slot = &mut exps[idx - 1];
    *slot = slot
        .checked_add(exp)
        .ok_or_else(|| Error::Structural("exponent overflow".into()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_syntax() {
        let f = Polynomial::parse("-3/2*x1^2*x3 + x2", 3).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "-3/2*x1^2*x3 + x2");
    }

    #[test]
    fn star_optional_after_coefficient() {
        let a = Polynomial::parse("2x1^2", 2).unwrap();
        let b = Polynomial::parse("2*x1^2", 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn constants_and_signs() {
        let f = Polynomial::parse("  - 5 + x1 - 2/4", 1).unwrap();
        assert_eq!(f.to_string(), "x1 - 11/2");
    }

    #[test]
    fn combines_duplicate_monomials() {
        let f = Polynomial::parse("x1 + x1", 1).unwrap();
        assert_eq!(f.to_string(), "2*x1");
        assert!(Polynomial::parse("x1 - x1", 1).unwrap().is_zero());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x0", "x3", "1 +", "x1^", "*x1", "x1**x2", "1/0", "y1", "x999999999999"] {
            assert!(Polynomial::parse(bad, 2).is_err(), "`{bad}` should not parse");
        }
    }

    #[test]
    fn repeated_variable_accumulates() {
        let f = Polynomial::parse("x1*x1", 2).unwrap();
        assert_eq!(f.to_string(), "x1^2");
    }
}

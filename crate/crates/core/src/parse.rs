//! Text parser for the polynomial grammar.
//!
//! ```text
//! poly   := term (("+" | "-") term)* | "0"
//! term   := coeff | coeff "*" monom | monom
//! monom  := var ("*" var)*
//! var    := "x" index ("^" exponent)?
//! coeff  := optionally signed decimal integer
//! ```
//!
//! Whitespace is allowed around tokens; a leading "-" negates the first term.
//! Errors carry the byte position they were detected at.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::ring::RingSpec;

pub(crate) fn polynomial(ring: &RingSpec, nvars: usize, text: &str) -> Result<Polynomial> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
        nvars,
    }
    .parse()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingSpec,
    nvars: usize,
}

impl Parser<'_> {
    fn parse(mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring, self.nvars);
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
            self.skip_ws();
        }
        loop {
            let term = self.term()?;
            acc = if negate {
                acc.sub_raw(&term)
            } else {
                acc.add_raw(&term)
            };
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    negate = false;
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(b'-') => {
                    negate = true;
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) => {
                    return Err(self.err(format!("expected '+' or '-', found '{}'", c as char)))
                }
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'+' || c == b'-' => {
                let coeff = self.integer()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    let m = self.monomial()?;
                    Ok(Polynomial::single(self.ring, self.nvars, m, coeff))
                } else {
                    Ok(Polynomial::constant(self.ring, self.nvars, coeff))
                }
            }
            Some(b'x') => {
                let m = self.monomial()?;
                Ok(Polynomial::single(self.ring, self.nvars, m, BigInt::one()))
            }
            Some(c) => Err(self.err(format!("expected term, found '{}'", c as char))),
            None => Err(self.err("expected term, found end of input".to_string())),
        }
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.nvars];
        loop {
            self.variable(&mut exps)?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }

    fn variable(&mut self, exps: &mut [u32]) -> Result<()> {
        if self.peek() != Some(b'x') {
            return Err(self.err("expected variable".to_string()));
        }
        self.pos += 1;
        let index: usize = self.digits("variable index")?;
        if index == 0 || index > self.nvars {
            return Err(Error::VariableOutOfRange {
                var: index,
                nvars: self.nvars,
            });
        }
        let mut exp: u32 = 1;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            exp = self.digits("exponent")?;
        }
        exps[index - 1] = exps[index - 1]
            .checked_add(exp)
            .ok_or_else(|| self.err("exponent overflow".to_string()))?;
        Ok(())
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::Parse {
                pos: digits_start,
                msg: "expected digits".to_string(),
            });
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(s).expect("validated decimal integer"))
    }

    fn digits<T: FromStr>(&mut self, what: &str) -> Result<T> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: format!("expected {what}"),
            });
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("{what} '{s}' out of range"),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: String) -> Error {
        Error::Parse { pos: self.pos, msg }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::integers()
    }

    fn parse(nvars: usize, text: &str) -> Result<Polynomial> {
        polynomial(&z(), nvars, text)
    }

    #[test]
    fn accepts_whitespace_between_tokens() {
        let a = parse(2, " 2 * x1 * x2  -  x1 ^ 2 ").unwrap();
        let b = parse(2, "2*x1*x2-x1^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn leading_minus_negates_first_term() {
        let a = parse(1, "-x1 + 3").unwrap();
        assert_eq!(a.to_string(), "-x1 + 3");
    }

    #[test]
    fn repeated_variable_accumulates_exponent() {
        assert_eq!(parse(1, "x1*x1*x1").unwrap(), parse(1, "x1^3").unwrap());
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(matches!(
            parse(2, "x1 x2"),
            Err(Error::Parse { pos: 3, .. })
        ));
    }

    #[test]
    fn rejects_coefficient_after_star() {
        assert!(parse(1, "2*3").is_err());
    }

    #[test]
    fn rejects_empty_input() {
        assert!(parse(1, "").is_err());
        assert!(parse(1, "   ").is_err());
    }

    #[test]
    fn rejects_dangling_operator() {
        assert!(parse(1, "x1 +").is_err());
        assert!(parse(1, "-").is_err());
    }

    #[test]
    fn rejects_x_without_index() {
        assert!(matches!(parse(1, "x^2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn zero_exponent_is_legal() {
        assert_eq!(parse(2, "x1^0 + x2").unwrap(), parse(2, "1 + x2").unwrap());
    }

    #[test]
    fn big_coefficients_survive() {
        let big = "123456789012345678901234567890";
        let q = parse(1, &format!("{big}*x1")).unwrap();
        assert_eq!(q.to_string(), format!("{big}*x1"));
    }
}

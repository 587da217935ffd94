//! Text grammar for exact scalars.
//!
//! ```text
//! expr := term (('+'|'-') term)?
//! term := RAT | RAT? '*'? 'r3'
//! RAT  := INT ('/' POSINT)?
//! ```
//!
//! `r3` stands for √3. The first term may carry a sign.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{QSqrt3, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad scalar {text:?} at byte {pos}: {msg}")]
pub struct ParseError {
    pub text: String,
    pub pos: usize,
    pub msg: &'static str,
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: &'static str) -> ParseError {
        ParseError {
            text: self.src.to_string(),
            pos: self.pos,
            msg,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        self.src[start..self.pos].parse().ok()
    }

    fn rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if self.eat(b'/') {
            let at = self.pos;
            let den = self
                .digits()
                .ok_or_else(|| self.err("expected denominator"))?;
            if den.is_zero() {
                self.pos = at;
                return Err(self.err("zero denominator"));
            }
            Ok(Some(Rational::new(num, den)))
        } else {
            Ok(Some(Rational::from_integer(num)))
        }
    }

    fn root3(&mut self) -> bool {
        if self.src[self.pos..].starts_with("r3") {
            self.pos += 2;
            true
        } else {
            false
        }
    }

    /// One unsigned term, returned as (rational, √3-coefficient).
    fn term(&mut self) -> Result<(Rational, Rational), ParseError> {
        let coeff = self.rational()?;
        let star = self.eat(b'*');
        if star && coeff.is_none() {
            self.pos -= 1;
            return Err(self.err("expected number before '*'"));
        }
        if self.root3() {
            return Ok((Rational::zero(), coeff.unwrap_or_else(Rational::one)));
        }
        if star || coeff.is_none() {
            return Err(self.err("expected number or r3"));
        }
        Ok((coeff.unwrap(), Rational::zero()))
    }
}

/// Parses the exact-scalar grammar; e.g. `"1"`, `"r3"`, `"3/2+1/2*r3"`.
pub fn parse_scalar(text: &str) -> Result<QSqrt3, ParseError> {
    let src = text.trim();
    let mut cur = Cursor {
        src,
        bytes: src.as_bytes(),
        pos: 0,
    };
    if src.is_empty() {
        return Err(cur.err("empty input"));
    }
    let neg_first = cur.eat(b'-');
    let (mut r, mut s) = cur.term()?;
    if neg_first {
        r = -r;
        s = -s;
    }
    if let Some(op) = cur.peek() {
        let sign = match op {
            b'+' => 1,
            b'-' => -1,
            _ => return Err(cur.err("expected '+' or '-'")),
        };
        cur.pos += 1;
        let (r2, s2) = cur.term()?;
        if sign > 0 {
            r += r2;
            s += s2;
        } else {
            r -= r2;
            s -= s2;
        }
    }
    if cur.pos != src.len() {
        return Err(cur.err("trailing characters"));
    }
    Ok(QSqrt3::new(r, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        assert_eq!(parse_scalar("r3").unwrap(), QSqrt3::sqrt3());
        assert_eq!(parse_scalar("1").unwrap(), QSqrt3::one());
        assert_eq!(
            parse_scalar("3/2+1/2r3").unwrap(),
            QSqrt3::from_ratios(3, 2, 1, 2)
        );
        assert_eq!(
            parse_scalar("3/2+1/2*r3").unwrap(),
            QSqrt3::from_ratios(3, 2, 1, 2)
        );
        assert_eq!(parse_scalar("-r3").unwrap(), -QSqrt3::sqrt3());
        assert_eq!(
            parse_scalar("2r3-1").unwrap(),
            QSqrt3::from_ratios(-1, 1, 2, 1)
        );
        assert_eq!(
            parse_scalar("4/6").unwrap(),
            QSqrt3::from_ratios(2, 3, 0, 1)
        );
    }

    #[test]
    fn rejected_forms() {
        let e = parse_scalar("2/0").unwrap_err();
        assert_eq!(e.msg, "zero denominator");
        assert_eq!(e.pos, 2);
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1+").is_err());
        assert!(parse_scalar("r").is_err());
        assert!(parse_scalar("1+2+3").is_err());
        assert!(parse_scalar("*r3").is_err());
        assert!(parse_scalar("1/-2").is_err());
        assert_eq!(parse_scalar("1 x").unwrap_err().pos, 1);
    }
}

//! Reading polynomials and rational functions back from their textual form.
//!
//! Accepts the printed form (`1 + q + 2*q^2 + q*t`, `(1)/(1 - t)`) and any
//! expression built from integers, `q`, `t`, `+ - * /`, `^n` and parentheses.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{IntPoly, QtRational};
use crate::error::Error;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QtRational, Error> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QtRational, Error> {
        let mut acc = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            if c == b'*' {
                acc = &acc * &rhs;
            } else {
                if rhs.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = &acc / &rhs;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QtRational, Error> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.integer()?;
            let n: u32 = n.try_into().map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<QtRational, Error> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(QtRational::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(QtRational::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(QtRational::from_int(self.integer()?)),
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl FromStr for QtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let r: QtRational = s.parse()?;
        r.as_poly()
            .cloned()
            .ok_or_else(|| Error::Parse(format!("{s:?} is not a polynomial")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_printed_forms() {
        for s in ["0", "1 + q + 2*q^2 + q*t", "-3*q^2*t + t^4", "(1)/(1 - t)", "(q - 2*t)/(1 - q*t)"] {
            let v: QtRational = s.parse().unwrap();
            assert_eq!(v.to_string().parse::<QtRational>().unwrap(), v);
        }
        let p: IntPoly = "1 + q + 2*q^2 + q*t".parse().unwrap();
        assert_eq!(p.to_string(), "1 + q + 2*q^2 + q*t");
    }

    #[test]
    fn rejects_garbage() {
        assert!("1 +".parse::<QtRational>().is_err());
        assert!("x".parse::<QtRational>().is_err());
        assert!("1/0".parse::<QtRational>().is_err());
        assert!("1/(1-q)".parse::<IntPoly>().is_err());
    }
}

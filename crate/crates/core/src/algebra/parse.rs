//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := base ("^" nonneg-int)?
//! base   := identifier | rational | "(" expr ")" | "-" factor
//! rational := int ("/" posint)?
//! ```
//!
//! Division is accepted only by nonzero expressions free of main variables, so that
//! printed parameter-field coefficients read back unchanged.

use alloc::string::{String, ToString};
use alloc::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Num, Zero};

use super::field::ParamField;
use super::poly::{Poly, Space};
use super::rat::Rat;
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 4096;

/// Parses `text` as a polynomial in `vars` with coefficients in Q(`params`).
pub fn parse_expr<S: AsRef<str>, T: AsRef<str>>(text: &str, vars: &[S], params: &[T]) -> Result<Poly> {
    parse_expr_in(text, &Space::new(vars, params))
}

/// Parses `text` in an existing space.
pub fn parse_expr_in(text: &str, space: &Arc<Space>) -> Result<Poly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, space };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(r)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    space: &'a Arc<Space>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { offset: self.pos, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(Error::Parse { offset: at, message: "division by zero".to_string() });
                    }
                    if d.degree() > 0 || d.len() > 1 {
                        return Err(Error::NonPolynomial { offset: at });
                    }
                    let inv = d.constant_term().inv().ok_or(Error::ZeroDenominator)?;
                    acc = acc.scale(&inv);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    return Err(self.err("implicit multiplication is not allowed"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let b = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let n = self.digits().ok_or_else(|| self.err("expected a non-negative integer exponent"))?;
            let n: u32 = n
                .parse()
                .ok()
                .filter(|&n| n <= MAX_EXPONENT)
                .ok_or(Error::Parse { offset: start, message: "exponent too large".to_string() })?;
            return Ok(b.pow(n));
        }
        Ok(b)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
        }
    }

    fn base(&mut self) -> Result<Poly> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().expect("at least one digit");
                let mut value = Rat::from_integer(BigInt::from_str_radix(&n, 10).expect("decimal digits"));
                // `int / posint` binds as a single rational literal
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    match self.digits() {
                        Some(d) => {
                            let d = BigInt::from_str_radix(&d, 10).expect("decimal digits");
                            if d.is_zero() {
                                return Err(self.err("zero denominator in rational literal"));
                            }
                            value /= Rat::from_integer(d);
                        }
                        None => self.pos = save,
                    }
                }
                Ok(Poly::constant(self.space, ParamField::from_rat(value)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                if let Some(i) = self.space.var_index(name) {
                    Ok(Poly::var(self.space, i))
                } else if let Some(i) = self.space.param_index(name) {
                    Ok(Poly::param(self.space, i))
                } else {
                    Err(Error::UnknownSymbol(name.to_string()))
                }
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors() {
        let v = ["x", "y"];
        let p = ["s"];
        assert!(matches!(parse_expr("x +", &v, &p), Err(Error::Parse { offset: 3, .. })));
        assert_eq!(parse_expr("x + z", &v, &p), Err(Error::UnknownSymbol("z".into())));
        assert!(matches!(parse_expr("1/x", &v, &p), Err(Error::NonPolynomial { .. })));
        assert!(matches!(parse_expr("2x", &v, &p), Err(Error::Parse { .. })));
        let q = parse_expr("x/(s+1)", &v, &p).unwrap();
        assert_eq!(q.to_string(), "1/(s+1)*x");
    }
}

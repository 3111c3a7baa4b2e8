//! Arithmetic expressions over the variable universe: `+ - * / ^`, integer
//! exponents, parentheses, integer literals.

use std::fmt;

use num_bigint::BigInt;

use super::ratfn::RationalFn;
use super::rational::Rational;
use super::var::Var;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ExprError {}

/// Parse an expression into an exact rational function.
pub fn parse_expr(src: &str) -> Result<RationalFn, ExprError> {
    let mut p = Parser { s: src.as_bytes(), pos: 0 };
    let f = p.sum()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("operator or end of expression"));
    }
    Ok(f)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, expected: &str) -> ExprError {
        let found = match self.s.get(self.pos) {
            Some(&b) => format!("'{}'", b as char),
            None => "end of input".to_string(),
        };
        ExprError { offset: self.pos, message: format!("expected {}, found {}", expected, found) }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<RationalFn, ExprError> {
        let mut acc = self.product()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.product()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<RationalFn, ExprError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                acc = acc
                    .div(&d)
                    .map_err(|_| ExprError { offset: at, message: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFn, ExprError> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFn, ExprError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        self.ws();
        let e = self.integer().ok_or_else(|| self.err("integer exponent"))?;
        if paren && !self.eat(b')') {
            return Err(self.err("')'"));
        }
        let e: i32 = e
            .try_into()
            .map_err(|_| ExprError { offset: at, message: "exponent out of range".into() })?;
        let e = if neg { -e } else { e };
        base.pow(e).map_err(|_| ExprError { offset: at, message: "zero raised to a negative power".into() })
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn atom(&mut self) -> Result<RationalFn, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let f = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("')'"));
                }
                Ok(f)
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.integer().expect("digit present");
                Ok(RationalFn::constant(Rational::from_integer(n)))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
                match Var::parse(name) {
                    Some(v) => Ok(RationalFn::var(v)),
                    None => {
                        self.pos = start;
                        Err(ExprError { offset: start, message: format!("unknown symbol '{}'", name) })
                    }
                }
            }
            _ => Err(self.err("number, symbol or '('")),
        }
    }
}

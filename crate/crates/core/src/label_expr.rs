//! Parser for label expressions such as `"b + b^2"` or `"β(1−β)"`.
//!
//! Grammar: sums and differences of products of integers, the variable
//! (`b`, `β` or `x`), parenthesised groups and nonnegative integer powers.
//! Juxtaposition multiplies (`2b`, `b(1-b)`).

use std::iter::Peekable;
use std::str::Chars;

use num_bigint::BigInt;

use crate::error::{input, GapError, Result};
use crate::obstruction::LabelPoly;

pub fn poly_of_label_expression(expr: &str) -> Result<LabelPoly> {
    let mut parser = Parser { chars: expr.chars().peekable(), src: expr };
    let p = parser.expr()?;
    parser.skip_ws();
    match parser.chars.peek().copied() {
        None => Ok(p),
        Some(c) => parser.fail(&format!("unexpected `{c}`")),
    }
}

struct Parser<'a> {
    chars: Peekable<Chars<'a>>,
    src: &'a str,
}

fn is_var(c: char) -> bool {
    matches!(c, 'b' | 'β' | 'x')
}

fn is_minus(c: char) -> bool {
    matches!(c, '-' | '−')
}

impl Parser<'_> {
    fn fail<T>(&self, msg: &str) -> Result<T> {
        input(format!("label expression `{}`: {msg}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn expr(&mut self) -> Result<LabelPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.chars.next();
                    acc = acc.add(&self.term()?);
                }
                Some(c) if is_minus(c) => {
                    self.chars.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LabelPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*' | '·') => {
                    self.chars.next();
                    acc = acc.mul(&self.unary()?);
                }
                Some(c) if c == '(' || c.is_ascii_digit() || is_var(c) => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<LabelPoly> {
        match self.peek() {
            Some(c) if is_minus(c) => {
                self.chars.next();
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.chars.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<LabelPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.chars.next();
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return self.fail("exponent must be a nonnegative integer");
            }
            let e: usize = digits.parse().map_err(|_| GapError::Input("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        s
    }

    fn atom(&mut self) -> Result<LabelPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                if matches!(self.chars.peek(), Some('.' | '/')) {
                    return self.fail("coefficients must be integers");
                }
                let n: BigInt = digits.parse().expect("digits");
                Ok(LabelPoly::constant(n))
            }
            Some(c) if is_var(c) => {
                self.chars.next();
                Ok(LabelPoly::x())
            }
            Some('(') => {
                self.chars.next();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.fail("missing `)`");
                }
                self.chars.next();
                Ok(inner)
            }
            Some(c) => self.fail(&format!("unexpected `{c}`")),
            None => self.fail("unexpected end of input"),
        }
    }
}

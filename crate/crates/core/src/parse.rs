//! Expression syntax for Weyl algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | 'X' | 'Y' | 'H' | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! `H` stands for `YX`; `[a, b]` is `ab - ba`. Whitespace is ignored.

use num_bigint::BigInt;

use crate::element::WeylElement;
use crate::error::{Error, Result};
use crate::scalar::Rat;

pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rat),
    X,
    Y,
    H,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Bracket(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self) -> WeylElement {
        match self {
            Expr::Num(r) => WeylElement::scalar(r.clone()),
            Expr::X => WeylElement::x(),
            Expr::Y => WeylElement::y(),
            Expr::H => WeylElement::h(),
            Expr::Neg(a) => -a.eval(),
            Expr::Add(a, b) => &a.eval() + &b.eval(),
            Expr::Sub(a, b) => &a.eval() - &b.eval(),
            Expr::Mul(a, b) => &a.eval() * &b.eval(),
            Expr::Pow(a, n) => a.eval().pow(*n),
            Expr::Bracket(a, b) => a.eval().commutator(&b.eval()),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat(b'-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let Some(d) = self.digits() else {
                return self.err("expected exponent");
            };
            match d.parse::<u32>() {
                Ok(n) if n <= MAX_EXPONENT => Ok(Expr::Pow(Box::new(base), n)),
                _ => self.err(format!("exponent exceeds {MAX_EXPONENT}")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'X') => {
                self.pos += 1;
                Ok(Expr::X)
            }
            Some(b'Y') => {
                self.pos += 1;
                Ok(Expr::Y)
            }
            Some(b'H') => {
                self.pos += 1;
                Ok(Expr::H)
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().unwrap().parse().unwrap();
                let save = self.pos;
                if self.eat(b'/') {
                    match self.digits() {
                        Some(d) => {
                            let d: BigInt = d.parse().unwrap();
                            if d == BigInt::from(0) {
                                self.pos = save;
                                return self.err("zero denominator");
                            }
                            Ok(Expr::Num(Rat::new(n, d)))
                        }
                        None => self.err("expected denominator"),
                    }
                } else {
                    Ok(Expr::Num(Rat::from_integer(n)))
                }
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses and normalizes an element.
pub fn parse(s: &str) -> Result<WeylElement> {
    parse_expr(s).map(|e| e.eval())
}

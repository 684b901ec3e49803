//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER | IDENT | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, which is how rational
//! literals such as `3/4` are written.

use std::sync::Arc;

use num::{BigInt, BigRational};

use super::polynomial::Polynomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.multiply(&self.unary()?)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.offset();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    if !rhs.is_constant() {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "division is only allowed by a nonzero constant".into(),
                        });
                    }
                    let inv = self.ring.field().inv(&rhs.constant_term())?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let at = self.offset();
            let e = match self.bump() {
                Some(Tok::Int(n)) => u32::try_from(n).map_err(|_| Error::BadExponent { pos: at })?,
                _ => return Err(Error::BadExponent { pos: at }),
            };
            if self.peek() == Some(&Tok::Caret) {
                return Err(Error::Syntax {
                    pos: self.offset(),
                    msg: "chained exponents need parentheses".into(),
                });
            }
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let c = self.ring.field().normalize(BigRational::from_integer(n))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring, i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Syntax {
                        pos: self.toks.get(self.pos - 1).map_or(self.end, |(o, _)| *o),
                        msg: "expected `)`".into(),
                    }),
                }
            }
            Some(t) => Err(Error::Syntax {
                pos: at,
                msg: format!("unexpected token {t:?}"),
            }),
            None => Err(Error::Syntax {
                pos: at,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let f = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::Syntax {
            pos: p.offset(),
            msg: "trailing input".into(),
        });
    }
    Ok(f)
}

//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! poly    := [sign] term { sign term }      sign := '+' | '-'
//! term    := coeff [ '*' factors ] | factors
//! coeff   := integer [ '/' positive-integer ]
//! factors := factor { '*' factor }          factor := var [ '^' positive-integer ]
//! var     := 'x' index | 'x_' index
//! ```
//!
//! Whitespace between tokens is ignored. Operators use the same grammar with
//! a capital `X`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::form::DiffOperator;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::kernel::Rational;

/// Syntax error with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    letter: u8,
}

impl<'a> Lexer<'a> {
    fn err(&self, position: usize, message: impl Into<String>) -> ParseError {
        ParseError { position, message: message.into() }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            let start = self.pos;
            if c.is_ascii_whitespace() {
                self.pos += 1;
                continue;
            }
            let tok = match c {
                b'+' => Token::Plus,
                b'-' => Token::Minus,
                b'*' => Token::Star,
                b'/' => Token::Slash,
                b'^' => Token::Caret,
                b'0'..=b'9' => {
                    let s = self.digits().unwrap();
                    out.push((start, Token::Int(s.parse().unwrap())));
                    continue;
                }
                c if c == self.letter => {
                    self.pos += 1;
                    if self.src.get(self.pos) == Some(&b'_') {
                        self.pos += 1;
                    }
                    let Some(s) = self.digits() else {
                        return Err(self.err(self.pos, "expected a variable index"));
                    };
                    let index = s.parse().map_err(|_| self.err(start, "variable index too large"))?;
                    out.push((start, Token::Var(index)));
                    continue;
                }
                _ => {
                    let ch = std::str::from_utf8(&self.src[start..]).ok().and_then(|s| s.chars().next()).unwrap_or('?');
                    return Err(self.err(start, format!("unexpected character '{ch}'")));
                }
            };
            self.pos += 1;
            out.push((start, tok));
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    idx: usize,
    end: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.position(), message: message.into() })
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn positive_int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Token::Int(n)) if !n.is_zero() => {
                let n = n.clone();
                self.idx += 1;
                Ok(n)
            }
            Some(Token::Int(_)) => self.err(format!("{what} must be positive")),
            _ => self.err(format!("expected {what}")),
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        let pos = self.position();
        let Some(Token::Var(i)) = self.peek().cloned() else {
            return self.err("expected a variable");
        };
        self.idx += 1;
        if i >= self.nvars {
            return Err(ParseError {
                position: pos,
                message: format!("variable index {i} is out of range for {} variables", self.nvars),
            });
        }
        let mut e = 1u32;
        if self.peek() == Some(&Token::Caret) {
            self.idx += 1;
            let n = self.positive_int("exponent")?;
            e = u32::try_from(n).map_err(|_| ParseError { position: pos, message: "exponent too large".into() })?;
        }
        exps[i] += e;
        Ok(())
    }

    fn factors(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        self.factor(exps)?;
        while self.peek() == Some(&Token::Star) {
            self.idx += 1;
            self.factor(exps)?;
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let mut exps = vec![0u32; self.nvars];
        let coeff = match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.idx += 1;
                let c = if self.peek() == Some(&Token::Slash) {
                    self.idx += 1;
                    let d = self.positive_int("denominator")?;
                    Rational::new(n, d)
                } else {
                    Rational::from_integer(n)
                };
                if self.peek() == Some(&Token::Star) {
                    self.idx += 1;
                    self.factors(&mut exps)?;
                }
                c
            }
            Some(Token::Var(_)) => {
                self.factors(&mut exps)?;
                Rational::one()
            }
            _ => return self.err("expected a term"),
        };
        Ok((Monomial::new(exps), coeff))
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(Token::Minus) => {
                self.idx += 1;
                true
            }
            Some(Token::Plus) => {
                self.idx += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
            negative = match self.bump() {
                None => break,
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                Some(_) => {
                    self.idx -= 1;
                    return self.err("expected '+' or '-' between terms");
                }
            };
        }
        Ok(Polynomial::from_terms(self.nvars, terms))
    }
}

fn parse_with(text: &str, nvars: usize, letter: u8) -> Result<Polynomial, ParseError> {
    let tokens = Lexer { src: text.as_bytes(), pos: 0, letter }.tokens()?;
    if tokens.is_empty() {
        return Err(ParseError { position: 0, message: "empty input".into() });
    }
    Parser { tokens, idx: 0, end: text.len(), nvars }.poly()
}

/// Parses a polynomial in `x0..x{nvars-1}`.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    parse_with(text, nvars, b'x')
}

/// Parses a differential operator in `X0..X{nvars-1}`.
pub fn parse_operator(text: &str, nvars: usize) -> Result<DiffOperator, ParseError> {
    parse_with(text, nvars, b'X').map(DiffOperator::new)
}

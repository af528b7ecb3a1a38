//! Expressions over an alphabet: identifiers, rationals `p/q`, `+ - * ^`,
//! parentheses, juxtaposition, and `/ n` for division by an integer.
//! Binding, tightest first: `^`, product, unary minus, binary `+ -`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::ncpoly::{Alphabet, NCPolynomial};
use crate::scalar::{one, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str, line0: usize, col0: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let mut it = src.chars().peekable();
    while let Some(&c) = it.peek() {
        let (l, k) = (line, col);
        let err = |msg: String| ParseError { line: l, col: k, msg };
        if c == '\n' {
            it.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            it.next();
            col += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = it.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    it.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned { tok: Tok::Ident(s), line: l, col: k });
            continue;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = it.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    it.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned { tok: Tok::Int(s.parse().expect("digits")), line: l, col: k });
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(err(format!("unexpected character `{c}`"))),
            }
        };
        it.next();
        col += 1;
        out.push(Spanned { tok, line: l, col: k });
    }
    out.push(Spanned { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    alphabet: &'a Alphabet,
    params: &'a BTreeMap<String, Scalar>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError { line: t.line, col: t.col, msg: msg.into() }
    }

    fn sum(&mut self) -> Result<NCPolynomial, ParseError> {
        let mut acc = NCPolynomial::zero();
        let mut sign = match self.peek() {
            Tok::Minus => {
                self.bump();
                -1
            }
            Tok::Plus => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            sign = match self.peek() {
                Tok::Plus => 1,
                Tok::Minus => -1,
                _ => return Ok(acc),
            };
            self.bump();
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::Int(_) | Tok::LParen)
    }

    fn product(&mut self) -> Result<NCPolynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if matches!(self.peek(), Tok::Slash) {
                // `x / n` scales by 1/n
                self.bump();
                match self.bump().tok {
                    Tok::Int(d) if !d.is_zero() => acc = acc.scale(&(one() / Scalar::from_integer(d))),
                    Tok::Int(_) => return Err(self.error("zero denominator")),
                    _ => return Err(self.error("expected an integer denominator")),
                }
                continue;
            }
            if matches!(self.peek(), Tok::Star) {
                self.bump();
                if !self.starts_factor() {
                    return Err(self.error("expected a factor after `*`"));
                }
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            acc = acc.nc_mul(&self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<NCPolynomial, ParseError> {
        let start = self.bump();
        let base = match start.tok {
            Tok::Ident(name) if self.alphabet.get(&name).is_none() && self.params.contains_key(&name) => {
                NCPolynomial::constant(self.params[&name].clone())
            }
            Tok::Ident(name) => {
                let l = self.alphabet.get(&name).ok_or_else(|| ParseError {
                    line: start.line,
                    col: start.col,
                    msg: format!("unknown letter `{name}`"),
                })?;
                let p = NCPolynomial::letter(l);
                if matches!(self.peek(), Tok::Caret) {
                    self.bump();
                    let e = match self.bump().tok {
                        Tok::Int(n) => usize::try_from(n).map_err(|_| self.error("exponent too large"))?,
                        _ => return Err(self.error("expected a nonnegative integer exponent")),
                    };
                    return Ok(p.pow(e));
                }
                p
            }
            Tok::Int(n) => {
                let mut c = Scalar::from_integer(n);
                if matches!(self.peek(), Tok::Slash) {
                    self.bump();
                    match self.bump().tok {
                        Tok::Int(d) if !d.is_zero() => c /= Scalar::from_integer(d),
                        Tok::Int(_) => return Err(self.error("zero denominator")),
                        _ => return Err(self.error("expected an integer denominator")),
                    }
                }
                NCPolynomial::constant(c)
            }
            Tok::LParen => {
                let inner = self.sum()?;
                if !matches!(self.bump().tok, Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                inner
            }
            _ => {
                return Err(ParseError { line: start.line, col: start.col, msg: "expected a term".into() });
            }
        };
        if matches!(self.peek(), Tok::Caret) {
            return Err(self.error("`^` applies to single letters only"));
        }
        Ok(base)
    }
}

/// Parses `src`, reporting positions relative to `line`, `col`. Identifiers
/// that are not letters may name parameters, which stand for constants.
pub fn parse_expr_with(
    src: &str,
    alphabet: &Alphabet,
    params: &BTreeMap<String, Scalar>,
    line: usize,
    col: usize,
) -> Result<NCPolynomial, ParseError> {
    let toks = lex(src, line, col)?;
    let mut p = Parser { toks, pos: 0, alphabet, params };
    let out = p.sum()?;
    if !matches!(p.peek(), Tok::End) {
        return Err(p.error("unexpected token"));
    }
    Ok(out)
}

pub fn parse_expr(src: &str, alphabet: &Alphabet) -> Result<NCPolynomial, ParseError> {
    parse_expr_with(src, alphabet, &BTreeMap::new(), 1, 1)
}

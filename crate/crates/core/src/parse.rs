//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := integer ['/' integer] | variable ['^' integer]
//! ```
//!
//! Whitespace is insignificant. Variables are identifiers made of letters,
//! digits and underscores, starting with a letter.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    line: usize,
}

fn lex(s: &str, line: usize) -> Result<Lexer> {
    let chars: Vec<char> = s.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(digits.parse().expect("ascii digits")), col));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(Error::parse(
                line,
                col,
                format!("unexpected character `{c}`"),
            ));
        }
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end_col: chars.len() + 1,
        line,
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), msg)
    }

    fn expect_int(&mut self, what: &str) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(_)) => match self.next() {
                Some(Tok::Int(n)) => Ok(n),
                _ => unreachable!(),
            },
            _ => Err(self.err(format!("expected {what}"))),
        }
    }
}

impl<F: Field> PolyRing<F> {
    /// Parses a polynomial in the text grammar.
    pub fn parse(&self, s: &str) -> Result<Polynomial<F::Elem>> {
        self.parse_line(s, 1, 0)
    }

    /// Parses `s` as found on `line`, starting at column `offset + 1`; error
    /// locations are reported relative to the full line.
    pub fn parse_line(&self, s: &str, line: usize, offset: usize) -> Result<Polynomial<F::Elem>> {
        let mut lx = lex(s, line).map_err(|e| shift(e, offset))?;
        self.parse_poly(&mut lx).map_err(|e| shift(e, offset))
    }

    fn parse_poly(&self, lx: &mut Lexer) -> Result<Polynomial<F::Elem>> {
        if lx.peek().is_none() {
            return Err(lx.err("empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match lx.peek() {
                Some(Tok::Plus) => {
                    lx.next();
                    false
                }
                Some(Tok::Minus) => {
                    lx.next();
                    true
                }
                None => break,
                _ if first => false,
                _ => return Err(lx.err("expected `+` or `-` between terms")),
            };
            first = false;
            let (m, mut c) = self.parse_term(lx)?;
            if negative {
                c = self.field().neg(&c);
            }
            terms.push((m, c));
        }
        Ok(self.from_terms(terms))
    }

    fn parse_term(&self, lx: &mut Lexer) -> Result<(Monomial, F::Elem)> {
        let start = lx.col();
        let mut mono = Monomial::one(self.nvars());
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut factors = 0;
        loop {
            match lx.peek() {
                Some(Tok::Int(_)) => {
                    let n = lx.expect_int("integer")?;
                    num *= n;
                    if lx.peek() == Some(&Tok::Slash) {
                        lx.next();
                        let col = lx.col();
                        let d = lx.expect_int("denominator")?;
                        if d == BigInt::from(0) {
                            return Err(Error::parse(lx.line, col, "zero denominator"));
                        }
                        den *= d;
                    }
                }
                Some(Tok::Ident(_)) => {
                    let col = lx.col();
                    let Some(Tok::Ident(name)) = lx.next() else {
                        unreachable!()
                    };
                    let Some(var) = self.vars().iter().position(|v| *v == name) else {
                        return Err(Error::parse(
                            lx.line,
                            col,
                            format!("unknown variable `{name}`"),
                        ));
                    };
                    let mut pow = 1u32;
                    if lx.peek() == Some(&Tok::Caret) {
                        lx.next();
                        let col = lx.col();
                        let e = lx.expect_int("exponent")?;
                        pow = u32::try_from(&e)
                            .map_err(|_| Error::parse(lx.line, col, "exponent too large"))?;
                    }
                    mono = mono.mul(&Monomial::var(self.nvars(), var, pow));
                }
                _ => {
                    if factors == 0 {
                        return Err(lx.err("expected a coefficient or variable"));
                    }
                    return Err(lx.err("expected a factor after `*`"));
                }
            }
            factors += 1;
            match lx.peek() {
                Some(Tok::Star) => {
                    lx.next();
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) => {}
                _ => break,
            }
        }
        let c = self
            .field()
            .from_ratio(&num, &den)
            .map_err(|e| Error::parse(lx.line, start, e.to_string()))?;
        Ok((mono, c))
    }
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column: column + offset,
            message,
        },
        other => other,
    }
}

//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ('^' integer)?
//! primary := integer ['/' integer] | variable | '(' expr ')'
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, Polynomial, RingCtx, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    ZeroDenominator,
    DegreeTooLarge { degree: u32, max: u32 },
}

/// A parse failure at a character offset (0-based) of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: ", self.position + 1)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable {v:?}"),
            ParseErrorKind::ZeroDenominator => write!(f, "fraction with zero denominator"),
            ParseErrorKind::DegreeTooLarge { degree, max } => {
                write!(f, "degree {degree} exceeds the maximum {max}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
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
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("number {v}"),
        Tok::Ident(s) => format!("name {s:?}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(s.parse().expect("digits"))));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::Syntax(format!("unexpected character {other:?}")),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    ctx: &'a RingCtx,
    order: TermOrder,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn at(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, msg: String) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.at(),
            kind: ParseErrorKind::Syntax(msg),
        })
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.at();
        let e = match self.bump() {
            Tok::Int(v) => v,
            other => {
                self.pos -= 1;
                return self.syntax(format!("expected an exponent, found {}", describe(&other)));
            }
        };
        let max = self.ctx.max_degree();
        let e: u32 = match u32::try_from(&e) {
            Ok(e) if e <= max => e,
            _ => {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::DegreeTooLarge {
                        degree: u32::try_from(&e).unwrap_or(u32::MAX),
                        max,
                    },
                })
            }
        };
        if let Some(d) = base.degree() {
            if d.saturating_mul(e) > max {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::DegreeTooLarge {
                        degree: d.saturating_mul(e),
                        max,
                    },
                });
            }
        }
        Ok(base.pow(self.ctx, e))
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.at();
        match self.bump() {
            Tok::Int(num) => {
                let den = if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        Tok::Int(d) => d,
                        other => {
                            self.pos -= 1;
                            return self.syntax(format!(
                                "expected a denominator, found {}",
                                describe(&other)
                            ));
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                if den.is_zero() {
                    return Err(ParseError {
                        position: at,
                        kind: ParseErrorKind::ZeroDenominator,
                    });
                }
                let c = self
                    .ctx
                    .field()
                    .from_fraction(&num, &den)
                    .ok_or(ParseError {
                        position: at,
                        kind: ParseErrorKind::ZeroDenominator,
                    })?;
                Ok(Polynomial::constant(self.ctx, self.order, c))
            }
            Tok::Ident(name) => match self.ctx.var_index(&name) {
                Some(i) => Ok(Polynomial::monomial(
                    self.ctx,
                    self.order,
                    Monomial::var(self.ctx.n(), i),
                )),
                None => Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::UnknownVariable(name),
                }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax(format!("expected ')', found {}", describe(self.peek())));
                }
                self.bump();
                Ok(inner)
            }
            other => {
                self.pos -= 1;
                self.syntax(format!("unexpected {}", describe(&other)))
            }
        }
    }
}

/// Parses `text` into a canonical polynomial of `ctx` sorted by `order`.
pub fn parse_poly(ctx: &RingCtx, order: TermOrder, text: &str) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        ctx,
        order,
        toks,
        pos: 0,
    };
    if *p.peek() == Tok::End {
        return p.syntax("empty expression".into());
    }
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return p.syntax(format!("unexpected {}", describe(p.peek())));
    }
    if let Some(d) = poly.degree() {
        if d > ctx.max_degree() {
            return Err(ParseError {
                position: 0,
                kind: ParseErrorKind::DegreeTooLarge {
                    degree: d,
                    max: ctx.max_degree(),
                },
            });
        }
    }
    Ok(poly)
}

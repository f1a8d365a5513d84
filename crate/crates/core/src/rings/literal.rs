//! Ring-element literals: integers, `a/b`, declared variables, `zeta`,
//! `+ - * / ^ ( )`, unary minus and juxtaposition (`2t`, `(s+1)(s-1)`).
//!
//! `/` is exact division in the ring; a non-divisible quotient is an error.
//! Printing is expanded, in ascending lexicographic term order, and always
//! re-parses to the same element.

use num_bigint::BigInt;

use super::element::RingElement;
use super::Ring;
use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
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
                out.push((start, Tok::Num(s.parse().unwrap())));
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
                return Err(ParseError::new(
                    start,
                    format!("unexpected character `{other}`"),
                ))
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
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(self.offset(), msg))
    }

    fn expr(&mut self) -> Result<RingElement, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RingElement, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    let at = self.offset();
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = match acc.exact_divide(&rhs) {
                        Ok(Some(q)) => q,
                        Ok(None) => {
                            return Err(ParseError::new(
                                at,
                                format!("`{rhs}` does not divide exactly in {}", self.ring),
                            ))
                        }
                        Err(e) => return Err(ParseError::new(at, e.to_string())),
                    };
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RingElement, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RingElement, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        let exp = self.exponent()?;
        base.pow(exp)
            .map_err(|e| ParseError::new(at, e.to_string()))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let parens = self.peek() == Some(&Tok::LParen);
        if parens {
            self.pos += 1;
        }
        let mut sign = 1i64;
        match self.peek() {
            Some(Tok::Minus) => {
                sign = -1;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let value = match self.peek() {
            Some(Tok::Num(n)) => match i64::try_from(n.clone()) {
                Ok(v) => v,
                Err(_) => return self.err("exponent too large"),
            },
            _ => return self.err("expected integer exponent"),
        };
        self.pos += 1;
        if parens {
            if self.peek() != Some(&Tok::RParen) {
                return self.err("expected `)`");
            }
            self.pos += 1;
        }
        Ok(sign * value)
    }

    fn primary(&mut self) -> Result<RingElement, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RingElement::from_bigint(self.ring, &n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "zeta" {
                    RingElement::zeta_pow(self.ring, 1).map_err(|_| {
                        ParseError::new(at, format!("`zeta` is not defined over {}", self.ring))
                    })
                } else {
                    RingElement::variable(self.ring, &name).map_err(|_| {
                        ParseError::new(at, format!("unknown variable `{name}` in {}", self.ring))
                    })
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a ring-element literal over `ring`.
pub fn parse_element(input: &str, ring: &Ring) -> Result<RingElement, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: input.chars().count(),
        ring,
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let value = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(value)
}

fn format_monomial(vars: &[String], exps: &[i32]) -> String {
    exps.iter()
        .zip(vars)
        .filter(|(e, _)| **e != 0)
        .map(|(e, v)| {
            if *e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn format_element(el: &RingElement) -> String {
    if el.is_zero() {
        return "0".to_string();
    }
    let ring = el.ring();
    let base = ring.base();
    let single = el.num_terms() == 1;
    let mut out = String::new();
    for (k, (exps, c)) in el.terms().enumerate() {
        let text = base.text(c);
        let mono = format_monomial(ring.vars(), exps);
        let body = if mono.is_empty() {
            if text.compound && !single {
                format!("({})", text.body)
            } else {
                text.body
            }
        } else if text.body == "1" && !text.compound {
            mono
        } else if text.compound {
            format!("({})*{}", text.body, mono)
        } else {
            format!("{}*{}", text.body, mono)
        };
        match (k, text.negative) {
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (0, false) => out.push_str(&body),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
    }
    out
}

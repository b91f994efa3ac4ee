//! Recursive-descent reader for curve equations.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" unary)?
//! atom   := INT ("/" INT)? | "x" | "y" | "(" expr ")"
//! ```
//!
//! Exponents must evaluate to non-negative integer constants. Implicit
//! multiplication (`2x`) is rejected.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::poly::{BivariatePolynomial, Rational};
use crate::error::ParseError;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let read_int = |start: usize| -> (BigInt, usize) {
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        (text[start..end].parse::<BigInt>().expect("digits"), end)
    };
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                let (num, end) = read_int(i);
                i = end;
                if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    let mut j = i + 1;
                    while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                        j += 1;
                    }
                    if j >= bytes.len() || !bytes[j].is_ascii_digit() {
                        return Err(ParseError::Syntax {
                            position: slash,
                            message: "`/` is only allowed inside rational literals".into(),
                        });
                    }
                    let (den, end) = read_int(j);
                    if den.is_zero() {
                        return Err(ParseError::Syntax {
                            position: j,
                            message: "zero denominator".into(),
                        });
                    }
                    i = end;
                    out.push((Tok::Num(Rational::new(num, den)), start));
                } else {
                    out.push((Tok::Num(Rational::from_integer(num)), start));
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            b'+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            b'^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            b'(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            b'/' => {
                return Err(ParseError::Syntax {
                    position: i,
                    message: "`/` is only allowed inside rational literals".into(),
                })
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    position: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        let message = match self.peek() {
            Tok::End => "unexpected end of input".to_string(),
            t => format!("unexpected token {t:?}"),
        };
        ParseError::Syntax {
            position: self.offset(),
            message,
        }
    }

    fn expr(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BivariatePolynomial, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BivariatePolynomial, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let position = self.offset();
        let exponent = self.unary()?;
        if !exponent.is_constant() {
            return Err(ParseError::NonConstantExponent { position });
        }
        let value = exponent.coefficient(0, 0);
        if value < Rational::zero() {
            return Err(ParseError::NegativeExponent { position });
        }
        if !value.is_integer() {
            return Err(ParseError::FractionalExponent { position });
        }
        let e = value
            .to_integer()
            .to_u32()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(ParseError::ExponentTooLarge { position })?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<BivariatePolynomial, ParseError> {
        if matches!(self.peek(), Tok::End | Tok::RParen | Tok::Star | Tok::Caret | Tok::Plus | Tok::Minus) {
            return Err(self.unexpected());
        }
        let (tok, position) = self.bump();
        match tok {
            Tok::Num(r) => Ok(BivariatePolynomial::constant(r)),
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(BivariatePolynomial::x()),
                "y" => Ok(BivariatePolynomial::y()),
                _ => Err(ParseError::UnknownIdentifier { name, position }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(inner)
            }
            _ => unreachable!("filtered above"),
        }
    }
}

/// Parses polynomial text in `x`, `y` into its expanded canonical form.
pub fn parse_polynomial(text: &str) -> Result<BivariatePolynomial, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let poly = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected());
    }
    Ok(poly)
}

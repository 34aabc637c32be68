//! Parser for the ASCII polynomial grammar.
//!
//! Variables are `x0`..`x<n>`; coefficients are integers or `a/b` rationals;
//! operators are `+ - * ^` plus parentheses; whitespace is insignificant and
//! juxtaposition is not multiplication. Example:
//! `x0^3 + 2*x1*x2^2 - 1/3*x4^3`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    token: Token,
    pos: usize,
}

fn err(pos: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position: pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Spanned {
                    token: Token::Plus,
                    pos,
                });
                i += 1;
            }
            '-' => {
                out.push(Spanned {
                    token: Token::Minus,
                    pos,
                });
                i += 1;
            }
            '*' => {
                out.push(Spanned {
                    token: Token::Star,
                    pos,
                });
                i += 1;
            }
            '^' => {
                out.push(Spanned {
                    token: Token::Caret,
                    pos,
                });
                i += 1;
            }
            '/' => {
                out.push(Spanned {
                    token: Token::Slash,
                    pos,
                });
                i += 1;
            }
            '(' => {
                out.push(Spanned {
                    token: Token::LParen,
                    pos,
                });
                i += 1;
            }
            ')' => {
                out.push(Spanned {
                    token: Token::RParen,
                    pos,
                });
                i += 1;
            }
            'x' | 'X' => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(err(pos, "expected a variable index after 'x'"));
                }
                let idx: usize = text[start..i]
                    .parse()
                    .map_err(|_| err(pos, "variable index too large"))?;
                out.push(Spanned {
                    token: Token::Var(idx),
                    pos,
                });
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push(Spanned {
                    token: Token::Int(n),
                    pos,
                });
            }
            other => return Err(err(pos, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    cursor: usize,
    field: Field,
    num_vars: usize,
    text_len: usize,
    _text: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|s| &s.token)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map_or(self.text_len, |s| s.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        match self.bump() {
            Some(s) if s.token == want => Ok(()),
            Some(s) => Err(err(s.pos, format!("expected {what}"))),
            None => Err(err(
                self.text_len,
                format!("expected {what} at end of input"),
            )),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if matches!(self.peek(), Some(Token::Plus | Token::Minus)) {
            negate = matches!(self.bump().unwrap().token, Token::Minus);
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(op) = self.peek() {
            let subtract = match op {
                Token::Plus => false,
                Token::Minus => true,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            acc = if subtract {
                acc.sub(&rhs)
            } else {
                acc.add(&rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump().map(|s| s.token) {
                Some(Token::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err(pos, "exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(pos, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump().map(|s| s.token) {
            Some(Token::Int(n)) => {
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump().map(|s| s.token) {
                        Some(Token::Int(d)) => {
                            let c = self
                                .field
                                .fraction(&n, &d)
                                .map_err(|e| err(dpos, e.to_string()))?;
                            Ok(Polynomial::constant(self.field, self.num_vars, c))
                        }
                        _ => Err(err(dpos, "expected an integer denominator")),
                    }
                } else {
                    Ok(Polynomial::constant(
                        self.field,
                        self.num_vars,
                        self.field.big_integer(&n),
                    ))
                }
            }
            Some(Token::Var(idx)) => {
                if idx >= self.num_vars {
                    return Err(err(
                        pos,
                        format!("variable x{idx} exceeds the {} available", self.num_vars),
                    ));
                }
                Ok(Polynomial::variable(self.field, self.num_vars, idx))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(_) => Err(err(pos, "expected a number, variable or '('")),
            None => Err(err(self.text_len, "unexpected end of input")),
        }
    }
}

/// Parses `text` into a canonical polynomial over `field` in `num_vars`
/// variables; like terms merge and zero terms vanish.
pub fn parse_polynomial(text: &str, field: Field, num_vars: usize) -> Result<Polynomial> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        field,
        num_vars,
        text_len: text.len(),
        _text: text,
    };
    let poly = parser.expr()?;
    if let Some(s) = parser.tokens.get(parser.cursor) {
        return Err(err(s.pos, "unexpected trailing input"));
    }
    Ok(poly)
}

/// Smallest variable count covering every `x<i>` mentioned in `text`.
pub fn infer_num_vars(text: &str) -> Result<usize> {
    let tokens = lex(text)?;
    Ok(tokens
        .iter()
        .filter_map(|s| match s.token {
            Token::Var(i) => Some(i + 1),
            _ => None,
        })
        .max()
        .unwrap_or(1))
}

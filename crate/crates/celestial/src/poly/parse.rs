//! Human-readable polynomial syntax with explicit `*` and `^`.

use super::{Context, MultiPoly, PolyError};
use crate::arith::parse_rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>, PolyError> {
    let mut tokens = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            '0'..='9' => {
                let mut buf = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() || d == '.' {
                        buf.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                // A rational literal `a/b`.
                if chars.peek() == Some(&'/') {
                    let mut probe = chars.clone();
                    probe.next();
                    if probe.peek().is_some_and(|d| d.is_ascii_digit()) {
                        chars.next();
                        buf.push('/');
                        while let Some(&d) = chars.peek() {
                            if d.is_ascii_digit() {
                                buf.push(d);
                                chars.next();
                            } else {
                                break;
                            }
                        }
                    }
                }
                tokens.push(Token::Number(buf));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut buf = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        buf.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(buf));
            }
            other => {
                return Err(PolyError::Parse(format!(
                    "unexpected character `{other}` at byte {}",
                    src.len() - chars.clone().count()
                )));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    ctx: &'a Context,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                self.term()?.neg()
            }
            Some(Token::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.base()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            match self.next() {
                Some(Token::Number(n)) => {
                    let e: u32 = n
                        .parse()
                        .map_err(|_| PolyError::Parse(format!("bad exponent `{n}`")))?;
                    Ok(base.pow(e))
                }
                other => Err(PolyError::Parse(format!("expected exponent, got {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<MultiPoly, PolyError> {
        match self.next() {
            Some(Token::Number(n)) => {
                let q = parse_rational(&n).map_err(|e| PolyError::Parse(e.to_string()))?;
                Ok(self.ctx.constant(q))
            }
            Some(Token::Ident(name)) => {
                if self.ctx.var_index(&name).is_none() {
                    return Err(PolyError::NoSuchVariable(name));
                }
                Ok(self.ctx.var(&name))
            }
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    other => Err(PolyError::Parse(format!("expected `)`, got {other:?}"))),
                }
            }
            Some(Token::Minus) => Ok(self.factor()?.neg()),
            other => Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses e.g. `"s^2*t - 3/2*s + 1"` in the given context.
pub fn parse_poly(ctx: &Context, src: &str) -> Result<MultiPoly, PolyError> {
    let tokens = tokenize(src)?;
    let mut parser = Parser { ctx, tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(PolyError::Parse(format!(
            "trailing input after position {}",
            parser.pos
        )));
    }
    Ok(poly)
}

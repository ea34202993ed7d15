//! Recursive-descent parser for the textual regex grammar.
//!
//! ```text
//! union   := inter ('|' inter)*
//! inter   := concat ('&' concat)*
//! concat  := unary+
//! unary   := '!' unary | postfix
//! postfix := atom ('*' | '+')*
//! atom    := SYMBOL | '%e' | '%0' | '(' union ')'
//! ```
//!
//! A symbol is a single ASCII character outside `|&!*+()%'\` or a quoted
//! token `'...'` in which `\'` and `\\` are escapes. Whitespace outside
//! quotes is ignored.

use super::{Alphabet, Regex, Symbol};
use crate::error::{Error, Result};

pub(super) const RESERVED: &[char] = &['|', '&', '!', '*', '+', '(', ')', '%', '\'', '\\'];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Sym(String),
    Bar,
    Amp,
    Bang,
    Star,
    Plus,
    Open,
    Close,
    Eps,
    Empty,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_ascii_whitespace() => continue,
            '|' => Tok::Bar,
            '&' => Tok::Amp,
            '!' => Tok::Bang,
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '%' => match chars.next() {
                Some((_, 'e')) => Tok::Eps,
                Some((_, '0')) => Tok::Empty,
                _ => return Err(Error::syntax(pos, "expected `%e` or `%0`")),
            },
            '\'' => {
                let mut name = String::new();
                loop {
                    match chars.next() {
                        Some((_, '\'')) => break,
                        Some((_, '\\')) => match chars.next() {
                            Some((_, e @ ('\'' | '\\'))) => name.push(e),
                            _ => return Err(Error::syntax(pos, "bad escape in quoted symbol")),
                        },
                        Some((_, ch)) => name.push(ch),
                        None => return Err(Error::syntax(pos, "unterminated quoted symbol")),
                    }
                }
                if name.is_empty() {
                    return Err(Error::syntax(pos, "empty quoted symbol"));
                }
                Tok::Sym(name)
            }
            '\\' => return Err(Error::syntax(pos, "stray backslash")),
            c if c.is_ascii_graphic() => Tok::Sym(c.to_string()),
            _ => return Err(Error::syntax(pos, format!("unexpected character `{c}`"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    resolve: &'a mut F,
}

impl<F: FnMut(&str) -> Result<Symbol>> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn union(&mut self) -> Result<Regex> {
        let mut r = self.inter()?;
        while self.peek() == Some(&Tok::Bar) {
            self.at += 1;
            r = Regex::union(r, self.inter()?);
        }
        Ok(r)
    }

    fn inter(&mut self) -> Result<Regex> {
        let mut r = self.concat()?;
        while self.peek() == Some(&Tok::Amp) {
            self.at += 1;
            r = Regex::intersect(r, self.concat()?);
        }
        Ok(r)
    }

    fn starts_unary(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Sym(_) | Tok::Bang | Tok::Open | Tok::Eps | Tok::Empty)
        )
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut r = self.unary()?;
        while self.starts_unary() {
            r = Regex::concat(r, self.unary()?);
        }
        Ok(r)
    }

    fn unary(&mut self) -> Result<Regex> {
        if self.peek() == Some(&Tok::Bang) {
            self.at += 1;
            return Ok(Regex::negate(self.unary()?));
        }
        let mut r = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => r = Regex::star(r),
                Some(Tok::Plus) => r = Regex::plus(r),
                _ => return Ok(r),
            }
            self.at += 1;
        }
    }

    fn atom(&mut self) -> Result<Regex> {
        let pos = self.pos();
        let tok = self.peek().cloned();
        self.at += 1;
        match tok {
            Some(Tok::Sym(name)) => Ok(Regex::Sym((self.resolve)(&name)?)),
            Some(Tok::Eps) => Ok(Regex::Epsilon),
            Some(Tok::Empty) => Ok(Regex::Empty),
            Some(Tok::Open) => {
                let r = self.union()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(Error::syntax(self.pos(), "expected `)`"));
                }
                self.at += 1;
                Ok(r)
            }
            Some(t) => Err(Error::syntax(pos, format!("unexpected token {t:?}"))),
            None => Err(Error::syntax(pos, "unexpected end of input")),
        }
    }
}

fn parse_with(text: &str, resolve: &mut impl FnMut(&str) -> Result<Symbol>) -> Result<Regex> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        resolve,
    };
    let r = p.union()?;
    if p.at != p.toks.len() {
        return Err(Error::syntax(p.pos(), "trailing input"));
    }
    Ok(r)
}

/// Parses `text`, requiring every symbol to belong to `alphabet`.
pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex> {
    parse_with(text, &mut |name| alphabet.symbol(name))
}

/// Parses `text` and collects its symbols, in order of first appearance,
/// into a fresh alphabet.
pub fn parse_infer(text: &str) -> Result<(Regex, Alphabet)> {
    let mut alphabet = Alphabet::new();
    let r = parse_with(text, &mut |name| {
        let s = Symbol::new(name)?;
        alphabet.intern(s.clone());
        Ok(s)
    })?;
    Ok((r, alphabet))
}

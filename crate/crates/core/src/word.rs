//! Unreduced products of generator powers and their text syntax.
//!
//! A word is written as `name^exp` factors joined by `*`, for example
//! `a^2*b^-1*c`. The literal `1` stands for the empty word. When brackets are
//! enabled, `[u,v]` (optionally raised to a power) expands to `u^-1*v^-1*u*v`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

/// A product of generator powers, `(generator index, exponent)` with
/// zero-based indices. Exponents may be negative.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn new(letters: Vec<(usize, i64)>) -> Self {
        Word { letters }
    }

    pub fn identity() -> Self {
        Word::default()
    }

    pub fn letter(generator: usize, exponent: i64) -> Self {
        Word {
            letters: alloc::vec![(generator, exponent)],
        }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    /// True when the word has no letters with nonzero exponent.
    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&(_, e)| e == 0)
    }

    pub fn push(&mut self, generator: usize, exponent: i64) {
        if exponent != 0 {
            self.letters.push((generator, exponent));
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// The word repeated `k` times, or its inverse repeated `-k` times.
    pub fn pow(&self, k: i64) -> Word {
        if let [(g, e)] = self.letters[..] {
            if let Some(e) = e.checked_mul(k) {
                return Word::letter(g, e);
            }
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    /// `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.inverse().concat(&v.inverse()).concat(u).concat(v)
    }

    /// Smallest generator index used with a nonzero exponent.
    pub fn min_generator(&self) -> Option<usize> {
        self.letters
            .iter()
            .filter(|&&(_, e)| e != 0)
            .map(|&(g, _)| g)
            .min()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters
            .iter()
            .filter(|&&(_, e)| e != 0)
            .map(|&(g, _)| g)
            .max()
    }

    /// Formats the word with the given generator names; the empty word is `1`.
    pub fn display(&self, names: &[String]) -> String {
        let mut out = String::new();
        for &(g, e) in self.letters.iter().filter(|&&(_, e)| e != 0) {
            if !out.is_empty() {
                out.push('*');
            }
            let _ = write!(out, "{}^{}", names[g], e);
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    /// Parses a word over `names`. Brackets are rejected unless `brackets` is
    /// set. Error positions are one-based columns within `text`.
    pub fn parse(text: &str, names: &[String], brackets: bool) -> Result<Word> {
        let mut cursor = Cursor {
            chars: text.chars().collect(),
            pos: 0,
            names,
            brackets,
        };
        let word = cursor.word()?;
        cursor.skip_ws();
        if let Some(c) = cursor.peek() {
            return Err(cursor.error(format!("unexpected `{c}`")));
        }
        Ok(word)
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
    brackets: bool,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax(message).at(0, self.pos + 1)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut word = self.factor()?;
        while self.eat('*') {
            let next = self.factor()?;
            word = word.concat(&next);
        }
        Ok(word)
    }

    fn factor(&mut self) -> Result<Word> {
        self.skip_ws();
        let start = self.pos;
        let base = match self.peek() {
            Some('[') => {
                if !self.brackets {
                    return Err(self.error("commutator brackets are not allowed here".into()));
                }
                self.pos += 1;
                let u = self.word()?;
                if !self.eat(',') {
                    return Err(self.error("expected `,` inside commutator".into()));
                }
                let v = self.word()?;
                if !self.eat(']') {
                    return Err(self.error("expected `]`".into()));
                }
                Word::commutator(&u, &v)
            }
            Some('1') => {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos = start;
                    return Err(self.error("expected a generator name".into()));
                }
                Word::identity()
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.identifier();
                match self.names.iter().position(|n| *n == name) {
                    Some(g) => Word::letter(g, 1),
                    None => {
                        return Err(Error::UnknownGenerator(name).at(0, start + 1));
                    }
                }
            }
            Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            None => return Err(self.error("unexpected end of word".into())),
        };
        if self.eat('^') {
            let k = self.integer()?;
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn identifier(&mut self) -> String {
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                name.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        name
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits_start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.error("expected an integer exponent".into()));
        }
        let digits: String = self.chars[digits_start..self.pos].iter().collect();
        let value: i64 = digits.parse().map_err(|_| {
            Error::Syntax(format!("exponent `{digits}` is out of range")).at(0, start + 1)
        })?;
        Ok(if negative { -value } else { value })
    }
}

/// Parses a generator name at the start of `text`, returning it and the rest.
pub(crate) fn split_identifier(text: &str) -> Option<(&str, &str)> {
    let end = text
        .char_indices()
        .find(|&(_, c)| !(c.is_alphanumeric() || c == '_'))
        .map_or(text.len(), |(i, _)| i);
    let first = text.chars().next()?;
    if end == 0 || !(first.is_alphabetic() || first == '_') {
        return None;
    }
    Some((&text[..end], &text[end..]))
}

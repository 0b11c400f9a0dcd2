//! Finite group presentations: `< gens | relators >`.
//!
//! The accepted grammar, whitespace-insensitive:
//!
//! ```text
//! presentation := '<' gens '|' relators '>'
//! gens         := ident (',' ident)*
//! relators     := relator (',' relator)*
//! relator      := word ('=' word)?        -- w1 = w2 sugars to w1 * w2^-1
//! word         := factor ('*' factor)*
//! factor       := ident ('^' int)?
//! ```
//!
//! Identifiers are `[A-Za-z][A-Za-z0-9_]*`, exponents signed decimal
//! integers. Words are kept in normalized syllable form: adjacent factors
//! on the same generator are merged and zero exponents dropped, so
//! `x^2 * x^-1` and `x` compare equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable};

/// A word in the generators, as a normalized syllable list
/// `(generator index, non-zero exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Word {
        Word { syllables: Vec::new() }
    }

    /// Build from raw factors, merging and dropping as needed.
    pub fn from_factors(factors: &[(usize, i64)]) -> Word {
        let mut syllables: Vec<(usize, i64)> = Vec::with_capacity(factors.len());
        for &(g, e) in factors {
            if e == 0 {
                continue;
            }
            match syllables.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        syllables.pop();
                    }
                }
                _ => syllables.push((g, e)),
            }
        }
        Word { syllables }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Reverse the word and negate exponents.
    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut factors = self.syllables.clone();
        factors.extend_from_slice(&other.syllables);
        Word::from_factors(&factors)
    }

    /// Evaluate in a concrete group, given an image for each generator.
    pub fn eval(&self, t: &GroupTable, images: &[Elem]) -> Elem {
        let mut acc = 0;
        for &(g, e) in &self.syllables {
            acc = t.mul(acc, t.pow(images[g], e));
        }
        acc
    }

    /// Total number of single-generator steps (`x^-3` counts 3).
    pub fn length(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn render(&self, gen_names: &[String]) -> String {
        if self.syllables.is_empty() {
            return "1".to_string();
        }
        self.syllables
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    gen_names[g].clone()
                } else {
                    format!("{}^{}", gen_names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A parsed presentation: generator names plus normalized relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub gens: Vec<String>,
    pub relators: Vec<Word>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|w| w.render(&self.gens)).collect();
        write!(f, "< {} | {} >", self.gens.join(", "), rels.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Lt,
    Gt,
    Pipe,
    Comma,
    Star,
    Caret,
    Eq,
    Ident(String),
    Int(i64),
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, line: usize, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, col, msg: msg.into() }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let c = match self.chars.peek() {
                None => break,
                Some(&c) => c,
            };
            let tok = match c {
                '<' => { self.bump(); Tok::Lt }
                '>' => { self.bump(); Tok::Gt }
                '|' => { self.bump(); Tok::Pipe }
                ',' => { self.bump(); Tok::Comma }
                '*' => { self.bump(); Tok::Star }
                '^' => { self.bump(); Tok::Caret }
                '=' => { self.bump(); Tok::Eq }
                c if c.is_ascii_alphabetic() => {
                    let mut s = String::new();
                    while matches!(self.chars.peek(),
                        Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                    {
                        s.push(self.bump().unwrap());
                    }
                    Tok::Ident(s)
                }
                c if c.is_ascii_digit() || c == '-' => {
                    let mut s = String::new();
                    if c == '-' {
                        s.push(self.bump().unwrap());
                        if !matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                            return Err(self.err(line, col, "'-' must start an integer"));
                        }
                    }
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                        s.push(self.bump().unwrap());
                    }
                    let v = s
                        .parse::<i64>()
                        .map_err(|_| self.err(line, col, format!("integer {s} out of range")))?;
                    Tok::Int(v)
                }
                other => {
                    return Err(self.err(line, col, format!("unexpected character {other:?}")));
                }
            };
            out.push((tok, line, col));
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    gens: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((1, 1))
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse { line, col, msg: msg.into() }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        match self.toks.get(self.pos) {
            Some((t, _, _)) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            Some((t, l, c)) => Err(Error::Parse {
                line: *l,
                col: *c,
                msg: format!("expected {what}, found {t:?}"),
            }),
            None => Err(self.err_here(format!("expected {what}, found end of input"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.toks.get(self.pos) {
            Some((Tok::Ident(s), _, _)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            Some((t, l, c)) => Err(Error::Parse {
                line: *l,
                col: *c,
                msg: format!("expected {what}, found {t:?}"),
            }),
            None => Err(self.err_here(format!("expected {what}, found end of input"))),
        }
    }

    fn factor(&mut self) -> Result<(usize, i64)> {
        let (line, col) = self.here();
        let name = self.ident("a generator")?;
        let g = self
            .gens
            .iter()
            .position(|s| *s == name)
            .ok_or(Error::Presentation(format!(
                "undeclared generator {name:?} at line {line}, column {col}"
            )))?;
        let e = if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((Tok::Int(v), _, _)) => {
                    let v = *v;
                    self.pos += 1;
                    v
                }
                Some((t, l, c)) => {
                    return Err(Error::Parse {
                        line: *l,
                        col: *c,
                        msg: format!("expected an integer exponent, found {t:?}"),
                    })
                }
                None => return Err(self.err_here("expected an integer exponent")),
            }
        } else {
            1
        };
        Ok((g, e))
    }

    fn word(&mut self) -> Result<Word> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(Word::from_factors(&factors))
    }

    fn relator(&mut self) -> Result<Word> {
        let (line, col) = self.here();
        let lhs = self.word()?;
        let word = if self.peek() == Some(&Tok::Eq) {
            self.pos += 1;
            let rhs = self.word()?;
            lhs.concat(&rhs.inverse())
        } else {
            lhs
        };
        if word.is_identity() {
            return Err(Error::Presentation(format!(
                "relator at line {line}, column {col} reduces to the empty word"
            )));
        }
        Ok(word)
    }
}

/// Parse a presentation from its `< ... >` text.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0, gens: Vec::new() };

    p.expect(Tok::Lt, "'<'")?;
    loop {
        let (line, col) = p.here();
        let name = p.ident("a generator name")?;
        if p.gens.contains(&name) {
            return Err(Error::Presentation(format!(
                "generator {name:?} declared twice at line {line}, column {col}"
            )));
        }
        p.gens.push(name);
        match p.peek() {
            Some(Tok::Comma) => p.pos += 1,
            _ => break,
        }
    }
    p.expect(Tok::Pipe, "'|'")?;
    let mut relators = vec![p.relator()?];
    while p.peek() == Some(&Tok::Comma) {
        p.pos += 1;
        relators.push(p.relator()?);
    }
    p.expect(Tok::Gt, "'>'")?;
    if p.pos != p.toks.len() {
        return Err(p.err_here("trailing input after '>'"));
    }

    Ok(Presentation { gens: p.gens, relators })
}

/// Parse a `.pres` file: `#` starts a comment, an optional `name: <string>`
/// header gives the group a name, and the rest is one presentation
/// (possibly spanning several lines).
pub fn parse_presentation_file(text: &str) -> Result<(Option<String>, Presentation)> {
    let mut name = None;
    let mut body = String::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let trimmed = line.trim();
        if body.is_empty() {
            if let Some(rest) = trimmed.strip_prefix("name:") {
                let value = rest.trim();
                if value.is_empty() {
                    return Err(Error::Presentation("empty name: header".into()));
                }
                if value.contains(char::is_whitespace) || value.contains(':') {
                    return Err(Error::Presentation(format!(
                        "group name {value:?} may not contain whitespace or ':'"
                    )));
                }
                if name.replace(value.to_string()).is_some() {
                    return Err(Error::Presentation("duplicate name: header".into()));
                }
                continue;
            }
        }
        if !trimmed.is_empty() {
            body.push_str(line);
            body.push('\n');
        }
    }
    let pres = parse_presentation(&body)?;
    Ok((name, pres))
}

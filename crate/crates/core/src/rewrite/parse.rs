use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::term::{Dialect, Term};

/// Largest decimal literal accepted; numerals are unary, so their size is
/// linear in the value.
pub const LITERAL_LIMIT: u64 = 100_000;

const NESTING_LIMIT: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based, counted in characters.
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Literal(u64),
    Bottom,
    Plus,
    Minus,
    Star,
    Slash,
    InvPostfix,
    Open,
    Close,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Literal(n) => alloc::format!("literal {n}"),
        Tok::Bottom => "\"bot\"".into(),
        Tok::Plus => "\"+\"".into(),
        Tok::Minus => "\"-\"".into(),
        Tok::Star => "\"*\"".into(),
        Tok::Slash => "\"/\"".into(),
        Tok::InvPostfix => "\"^-1\"".into(),
        Tok::Open => "\"(\"".into(),
        Tok::Close => "\")\"".into(),
        Tok::End => "end of input".into(),
    }
}

fn err(column: usize, message: impl Into<String>) -> ParseError {
    ParseError { column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '0'..='9' => {
                let start = i;
                let mut value: u64 = 0;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    value = value.saturating_mul(10).saturating_add(chars[i] as u64 - '0' as u64);
                    i += 1;
                }
                if value > LITERAL_LIMIT {
                    return Err(err(start + 1, alloc::format!("literal exceeds {LITERAL_LIMIT}")));
                }
                out.push((start + 1, Tok::Literal(value)));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '⊥' => Tok::Bottom,
            '^' => {
                if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'1') {
                    i += 3;
                    out.push((col, Tok::InvPostfix));
                    continue;
                }
                return Err(err(col, "expected \"^-1\""));
            }
            '⁻' => {
                if chars.get(i + 1) == Some(&'¹') {
                    i += 2;
                    out.push((col, Tok::InvPostfix));
                    continue;
                }
                return Err(err(col, "expected \"⁻¹\""));
            }
            'b' => {
                if chars.get(i..i + 3).is_some_and(|w| w == ['b', 'o', 't']) {
                    i += 3;
                    out.push((col, Tok::Bottom));
                    continue;
                }
                return Err(err(col, "unexpected character 'b'"));
            }
            other => return Err(err(col, alloc::format!("unexpected character {other:?}"))),
        };
        out.push((col, tok));
        i += 1;
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    dialect: Dialect,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn column(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn meadow_only(&self, what: &str) -> Result<(), ParseError> {
        match self.dialect {
            Dialect::Meadow => Ok(()),
            Dialect::Ring => Err(err(self.column(), alloc::format!("{what} is not allowed in the ring dialect"))),
        }
    }

    fn nest(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > NESTING_LIMIT {
            return Err(err(self.column(), "expression nested too deeply"));
        }
        Ok(())
    }

    fn sum(&mut self) -> Result<Term, ParseError> {
        let mut t = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    t = Term::add(t, self.product()?);
                }
                Tok::Minus => {
                    self.bump();
                    t = Term::add(t, Term::neg(self.product()?));
                }
                _ => return Ok(t),
            }
        }
    }

    fn product(&mut self) -> Result<Term, ParseError> {
        let mut t = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    t = Term::mul(t, self.unary()?);
                }
                Tok::Slash => {
                    self.meadow_only("\"/\"")?;
                    self.bump();
                    t = Term::mul(t, Term::inv(self.unary()?));
                }
                _ => return Ok(t),
            }
        }
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            self.nest()?;
            let t = Term::neg(self.unary()?);
            self.depth -= 1;
            return Ok(t);
        }
        let mut t = self.atom()?;
        while *self.peek() == Tok::InvPostfix {
            self.meadow_only("\"^-1\"")?;
            self.bump();
            t = Term::inv(t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let col = self.column();
        if *self.peek() == Tok::Bottom {
            self.meadow_only("\"bot\"")?;
        }
        match self.bump() {
            Tok::Literal(n) => Ok(Term::numeral(&BigInt::from(n))),
            Tok::Bottom => Ok(Term::Bottom),
            Tok::Open => {
                self.nest()?;
                let t = self.sum()?;
                self.depth -= 1;
                let close = self.column();
                match self.bump() {
                    Tok::Close => Ok(t),
                    other => Err(err(close, alloc::format!("expected \")\", found {}", describe(&other)))),
                }
            }
            other => Err(err(col, alloc::format!("expected a term, found {}", describe(&other)))),
        }
    }
}

/// Parses concrete syntax. Decimal literals become numerals and `x/y`
/// becomes `x·y⁻¹`.
pub fn parse(text: &str, dialect: Dialect) -> Result<Term, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, dialect, depth: 0 };
    let t = p.sum()?;
    match p.peek() {
        Tok::End => Ok(t),
        other => Err(err(p.column(), alloc::format!("unexpected {}", describe(other)))),
    }
}

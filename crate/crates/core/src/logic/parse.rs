//! Recursive-descent reader for terms and formulas.
//!
//! Precedence, tightest first: `-`, `.`, `+` on terms; `~`, `&`, `|`, `=>`
//! (right associative), `<=>` on formulas. A parenthesis at formula level
//! may open either a formula or a term; the reader tries the formula first
//! and falls back to the term.

use std::ops::Not;
use std::str::FromStr;

use super::{Formula, Term, DEFAULT_ZERO_VARIABLE};
use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Zero,
    One,
    Top,
    Bottom,
    Contact,
    LParen,
    RParen,
    Comma,
    Minus,
    Plus,
    Dot,
    EqEq,
    NotEq,
    Le,
    Tilde,
    Amp,
    Bar,
    Implies,
    Iff,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Var(v) => format!("variable `{v}`"),
            Tok::End => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Zero => "0",
            Tok::One => "1",
            Tok::Top => "T",
            Tok::Bottom => "F",
            Tok::Contact => "C",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Minus => "-",
            Tok::Plus => "+",
            Tok::Dot => ".",
            Tok::EqEq => "==",
            Tok::NotEq => "!=",
            Tok::Le => "<=",
            Tok::Tilde => "~",
            Tok::Amp => "&",
            Tok::Bar => "|",
            Tok::Implies => "=>",
            Tok::Iff => "<=>",
            Tok::Var(_) | Tok::End => "",
        }
    }
}

const SYMBOLS: [(&str, Tok); 16] = [
    ("<=>", Tok::Iff),
    ("<=", Tok::Le),
    ("==", Tok::EqEq),
    ("=>", Tok::Implies),
    ("!=", Tok::NotEq),
    ("(", Tok::LParen),
    (")", Tok::RParen),
    (",", Tok::Comma),
    ("-", Tok::Minus),
    ("+", Tok::Plus),
    (".", Tok::Dot),
    ("~", Tok::Tilde),
    ("&", Tok::Amp),
    ("|", Tok::Bar),
    ("0", Tok::Zero),
    ("1", Tok::One),
];

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_lowercase() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit()) {
                i += 1;
            }
            out.push((start, Tok::Var(src[start..i].to_string())));
            continue;
        }
        if c.is_ascii_uppercase() {
            let tok = match c {
                b'C' => Tok::Contact,
                b'T' => Tok::Top,
                b'F' => Tok::Bottom,
                _ => {
                    return Err(ParseError::new(
                        i,
                        format!("unexpected character `{}`", c as char),
                    ))
                }
            };
            if bytes.get(i + 1).is_some_and(|b| b.is_ascii_alphanumeric()) {
                return Err(ParseError::new(
                    i,
                    "variables are lowercase: `[a-z][a-z0-9]*`",
                ));
            }
            out.push((i, tok));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() && bytes.get(i + 1).is_some_and(|b| b.is_ascii_digit()) {
            return Err(ParseError::new(i, "only the constants 0 and 1 are allowed"));
        }
        match SYMBOLS.iter().find(|(s, _)| src[i..].starts_with(s)) {
            Some((s, tok)) => {
                out.push((i, tok.clone()));
                i += s.len();
            }
            None => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(ParseError::new(i, format!("unexpected character `{ch}`")));
            }
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    zero_var: String,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        let toks = lex(src)?;
        let zero_var = toks
            .iter()
            .filter_map(|(_, t)| match t {
                Tok::Var(v) => Some(v.as_str()),
                _ => None,
            })
            .min()
            .unwrap_or(DEFAULT_ZERO_VARIABLE)
            .to_string();
        Ok(Parser {
            toks,
            at: 0,
            zero_var,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn offset(&self) -> usize {
        self.toks[self.at].0
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", tok.symbol())))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(
            self.offset(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            Tok::RParen => Err(ParseError::new(self.offset(), "unbalanced `)`")),
            _ => Err(self.unexpected("end of input")),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.implication()?;
            lhs = lhs.iff(rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.implication()?;
            Ok(lhs.implies(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            let rhs = self.conjunction()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.negation()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.negation()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn negation(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::Tilde) {
            Ok(self.negation()?.not())
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let z = Term::var(self.zero_var.clone());
        match self.peek() {
            Tok::Top => {
                self.at += 1;
                Ok(Formula::eq(z.clone(), z))
            }
            Tok::Bottom => {
                self.at += 1;
                Ok(Formula::neq(z.clone(), z))
            }
            Tok::Contact => {
                self.at += 1;
                self.expect(Tok::LParen)?;
                let a = self.term()?;
                self.expect(Tok::Comma)?;
                let b = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(Formula::contact(a, b))
            }
            Tok::LParen => {
                let mark = self.at;
                self.at += 1;
                let as_formula = self
                    .formula()
                    .and_then(|f| self.expect(Tok::RParen).map(|_| f));
                match as_formula {
                    Ok(f) => Ok(f),
                    Err(e1) => {
                        self.at = mark;
                        self.relation()
                            .map_err(|e2| if e1.offset > e2.offset { e1 } else { e2 })
                    }
                }
            }
            _ => self.relation(),
        }
    }

    fn relation(&mut self) -> Result<Formula, ParseError> {
        let a = self.term()?;
        let op = self.peek().clone();
        match op {
            Tok::EqEq | Tok::NotEq | Tok::Le => self.at += 1,
            _ => return Err(self.unexpected("`==`, `!=` or `<=`")),
        }
        let b = self.term()?;
        Ok(match op {
            Tok::EqEq => Formula::eq(a, b),
            Tok::NotEq => Formula::neq(a, b),
            _ => Formula::le(a, b),
        })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.product()?;
        while self.eat(&Tok::Plus) {
            let rhs = self.product()?;
            lhs = lhs.join(rhs);
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Dot) {
            let rhs = self.unary()?;
            lhs = lhs.meet(rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(self.unary()?.complement());
        }
        match self.peek().clone() {
            Tok::Var(v) => {
                self.at += 1;
                Ok(Term::Var(v))
            }
            Tok::Zero => {
                self.at += 1;
                Ok(Term::zero(&self.zero_var))
            }
            Tok::One => {
                self.at += 1;
                Ok(Term::one(&self.zero_var))
            }
            Tok::LParen => {
                self.at += 1;
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            _ => Err(self.unexpected("a term")),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// One formula per non-blank line; `#` starts a comment. Returns the
/// 1-based line number with each formula. Error offsets refer to the whole
/// text.
pub fn parse_formula_file(text: &str) -> Result<Vec<(usize, Formula)>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for (k, line) in text.split('\n').enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if !body.trim().is_empty() {
            let f =
                parse_formula(body).map_err(|e| ParseError::new(offset + e.offset, e.message))?;
            out.push((k + 1, f));
        }
        offset += line.len() + 1;
    }
    Ok(out)
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

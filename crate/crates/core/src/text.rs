//! Small cursor shared by the hand-written text-format readers.

use crate::error::ParseError;
use crate::numeric::{parse_rational, Rational};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        loop {
            let rest = self.rest();
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                let end = trimmed.find('\n').unwrap_or(trimmed.len());
                self.pos += end;
            } else {
                break;
            }
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    pub fn peek_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.rest().starts_with(s)
    }

    pub fn eat(&mut self, s: &str) -> bool {
        if self.peek_str(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    /// Identifier: `[A-Za-z_][A-Za-z0-9_']*`.
    pub fn ident(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let mut end = 0;
        for (i, ch) in rest.char_indices() {
            let ok = if i == 0 {
                ch.is_ascii_alphabetic() || ch == '_'
            } else {
                ch.is_ascii_alphanumeric() || ch == '_' || ch == '\''
            };
            if !ok {
                break;
            }
            end = i + ch.len_utf8();
        }
        if end == 0 {
            return Err(self.error("expected identifier"));
        }
        self.pos += end;
        Ok(&rest[..end])
    }

    pub fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        if rest.starts_with(kw)
            && !rest[kw.len()..]
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    /// Rational literal `[-]digits[/digits]`.
    pub fn rational(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let mut end = 0;
        let bytes = rest.as_bytes();
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits_from = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits_from {
            return Err(self.error("expected rational number"));
        }
        if end < bytes.len() && bytes[end] == b'/' {
            end += 1;
            let den_from = end;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end == den_from {
                return Err(ParseError::new(start + end, "expected denominator"));
            }
        }
        let lit = &rest[..end];
        let lit = lit.strip_prefix('+').unwrap_or(lit);
        let value = parse_rational(lit).map_err(|e| ParseError::new(start, e.message))?;
        self.pos += end;
        Ok(value)
    }

    pub fn unsigned(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error("expected integer"));
        }
        let v = rest[..end]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += end;
        Ok(v)
    }

    pub fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

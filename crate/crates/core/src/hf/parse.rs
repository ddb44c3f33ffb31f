//! Recursive-descent reader for brace notation:
//!
//! ```text
//! Set := "{" ( Set ( "," Set )* )? "}"
//! ```
//!
//! Whitespace may appear between any two tokens. Duplicate elements merge.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::HFSet;

const MAX_DEPTH: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.reason)
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(format!(
                "expected `{}`, found `{}`",
                byte as char, b as char
            ))),
            None => Err(self.error(format!("expected `{}`, found end of input", byte as char))),
        }
    }

    fn set(&mut self, depth: usize) -> Result<HFSet, ParseError> {
        if depth > MAX_DEPTH {
            return Err(self.error("nesting too deep"));
        }
        self.expect(b'{')?;
        let mut elements = Vec::new();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(HFSet::empty());
        }
        loop {
            elements.push(self.set(depth + 1)?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    return Ok(HFSet::from_elements(elements));
                }
                Some(b) => {
                    return Err(self.error(format!("expected `,` or `}}`, found `{}`", b as char)))
                }
                None => return Err(self.error("unclosed `{`")),
            }
        }
    }
}

/// Parses brace notation into a canonical set.
pub fn parse_braces(text: &str) -> Result<HFSet, ParseError> {
    let mut parser = Parser {
        input: text.as_bytes(),
        pos: 0,
    };
    let set = parser.set(0)?;
    if let Some(b) = parser.peek() {
        return Err(parser.error(format!("trailing input starting with `{}`", b as char)));
    }
    Ok(set)
}

impl FromStr for HFSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braces(s)
    }
}

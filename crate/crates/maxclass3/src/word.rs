//! Parser for element words and `theta(...)` literals.
//!
//! ```text
//! expr  := term ('*' term)*
//! term  := atom ('^' int)*
//! atom  := 's' | 's' k | '1' | '[' expr ',' expr ']' | '(' expr ')' | '(' a0 ',' ... ')'
//! ```
//!
//! Whitespace is ignored everywhere. A parenthesised list of digits with at
//! least one comma is an exponent vector.

use maxclass3_core::{AutMap, Group, GroupElement};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected end of input, expected {0}")]
    Eof(&'static str),
    #[error("unexpected '{found}' at offset {pos}, expected {expected}")]
    Unexpected { pos: usize, found: char, expected: &'static str },
    #[error("generator s{index} out of range for rank {rank}")]
    Generator { index: usize, rank: usize },
    #[error("bad integer at offset {0}")]
    Integer(usize),
    #[error("malformed theta literal: {0}")]
    Theta(String),
    #[error(transparent)]
    Group(#[from] maxclass3_core::Error),
}

/// Parses an element word into its normal form in `g`.
pub fn parse_element(g: &Group, input: &str) -> Result<GroupElement, ParseError> {
    let chars: Vec<(usize, char)> = input.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { g, chars: &chars, at: 0 };
    let x = p.expr()?;
    match p.peek() {
        None => Ok(x),
        Some((pos, found)) => Err(ParseError::Unexpected { pos, found, expected: "end of input" }),
    }
}

/// Parses `theta(e,d,f; v; w)`; `v` and `w` are element words.
pub fn parse_theta(g: &Group, input: &str) -> Result<AutMap, ParseError> {
    let bad = || ParseError::Theta(input.to_string());
    let body = input
        .trim()
        .strip_prefix("theta")
        .map(str::trim_start)
        .and_then(|s| s.strip_prefix('('))
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let parts: Vec<&str> = body.split(';').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums: Vec<u8> = parts[0]
        .split(',')
        .map(|t| t.trim().parse::<u8>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [e, d, f] = nums[..] else { return Err(bad()) };
    let v = parse_element(g, parts[1])?;
    let w = parse_element(g, parts[2])?;
    Ok(AutMap::new(g, e, d, f, v, w)?)
}

struct Parser<'a> {
    g: &'a Group,
    chars: &'a [(usize, char)],
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.at).copied()
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek().is_some_and(|(_, c)| c == want) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char, expected: &'static str) -> Result<(), ParseError> {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.at += 1;
                Ok(())
            }
            Some((pos, found)) => Err(ParseError::Unexpected { pos, found, expected }),
            None => Err(ParseError::Eof(expected)),
        }
    }

    fn expr(&mut self) -> Result<GroupElement, ParseError> {
        let mut x = self.term()?;
        while self.eat('*') {
            let y = self.term()?;
            x = self.g.multiply(&x, &y);
        }
        Ok(x)
    }

    fn term(&mut self) -> Result<GroupElement, ParseError> {
        let mut x = self.atom()?;
        while self.eat('^') {
            let n = self.int()?;
            x = self.g.power(&x, n);
        }
        Ok(x)
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.peek().map_or(usize::MAX, |(pos, _)| pos);
        let neg = self.eat('-');
        let digits = self.digits();
        if digits.is_empty() {
            return Err(ParseError::Integer(start));
        }
        let n: i64 = digits.parse().map_err(|_| ParseError::Integer(start))?;
        Ok(if neg { -n } else { n })
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while let Some((_, c)) = self.peek().filter(|(_, c)| c.is_ascii_digit()) {
            out.push(c);
            self.at += 1;
        }
        out
    }

    fn atom(&mut self) -> Result<GroupElement, ParseError> {
        let Some((pos, c)) = self.peek() else {
            return Err(ParseError::Eof("an element"));
        };
        match c {
            's' => {
                self.at += 1;
                let digits = self.digits();
                let index = if digits.is_empty() {
                    0
                } else {
                    digits.parse::<usize>().map_err(|_| ParseError::Integer(pos + 1))?
                };
                if index >= self.g.rank() {
                    return Err(ParseError::Generator { index, rank: self.g.rank() });
                }
                Ok(self.g.gen(index))
            }
            '1' => {
                self.at += 1;
                Ok(self.g.identity())
            }
            '[' => {
                self.at += 1;
                let x = self.expr()?;
                self.expect(',', "','")?;
                let y = self.expr()?;
                self.expect(']', "']'")?;
                Ok(self.g.commutator(&x, &y))
            }
            '(' if self.is_vector_literal() => self.vector(),
            '(' => {
                self.at += 1;
                let x = self.expr()?;
                self.expect(')', "')'")?;
                Ok(x)
            }
            found => Err(ParseError::Unexpected { pos, found, expected: "an element" }),
        }
    }

    fn is_vector_literal(&self) -> bool {
        let rest = self.chars[self.at + 1..].iter().map(|&(_, c)| c);
        let mut commas = 0;
        for c in rest {
            match c {
                ')' => return commas > 0,
                ',' => commas += 1,
                c if c.is_ascii_digit() => {}
                _ => return false,
            }
        }
        false
    }

    fn vector(&mut self) -> Result<GroupElement, ParseError> {
        self.expect('(', "'('")?;
        let mut exps = Vec::new();
        loop {
            let pos = self.peek().map_or(usize::MAX, |(p, _)| p);
            let n: u8 = self.digits().parse().map_err(|_| ParseError::Integer(pos))?;
            exps.push(n);
            if !self.eat(',') {
                break;
            }
        }
        self.expect(')', "')'")?;
        Ok(self.g.element(&exps)?)
    }
}

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{Atom, Product, Sre};
use crate::error::{Error, Result};
use crate::word::Letter;

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Letter(a) => write!(f, "{a}?"),
            Atom::Star(b) => {
                f.write_str("[")?;
                for l in b {
                    write!(f, "{l}")?;
                }
                f.write_str("]*")
            }
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Sre {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sre::Zero => f.write_str("0"),
            Sre::Sum(ps) if ps.is_empty() => f.write_str("1"),
            Sre::Sum(ps) => {
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::SreSyntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn letter(&mut self) -> Result<Letter> {
        match self.peek() {
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                Ok(Letter((c - b'a') as u16))
            }
            Some(c) => self.err(format!("expected a letter, found '{}'", c as char)),
            None => self.err("expected a letter, found end of input"),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        if self.peek() == Some(b'[') {
            self.pos += 1;
            let mut set = BTreeSet::new();
            set.insert(self.letter()?);
            while self.peek() != Some(b']') {
                set.insert(self.letter()?);
            }
            self.expect(b']')?;
            self.expect(b'*')?;
            Ok(Atom::Star(set))
        } else {
            let a = self.letter()?;
            self.expect(b'?')?;
            Ok(Atom::Letter(a))
        }
    }

    fn product(&mut self) -> Result<Product> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Product(Vec::new()));
        }
        let mut atoms = vec![self.atom()?];
        while matches!(self.peek(), Some(c) if c == b'[' || c.is_ascii_lowercase()) {
            atoms.push(self.atom()?);
        }
        Ok(Product(atoms))
    }

    fn sre(&mut self) -> Result<Sre> {
        if self.peek() == Some(b'0') {
            self.pos += 1;
            return Ok(Sre::Zero);
        }
        let mut products = vec![self.product()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            products.push(self.product()?);
        }
        Ok(Sre::Sum(products))
    }
}

/// Parses the concrete syntax
/// `sre := '0' | product ('+' product)*`, `product := '1' | atom+`,
/// `atom := LETTER '?' | '[' LETTER+ ']' '*'`, whitespace ignored.
///
/// The result is not normalized; products keep their source order.
pub fn parse_sre(text: &str) -> Result<Sre> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.sre()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn render_sre(e: &Sre) -> String {
    e.to_string()
}

impl FromStr for Sre {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sre(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(parse_sre("0").unwrap(), Sre::Zero);
        assert_eq!(parse_sre(" 1 ").unwrap(), Sre::Sum(vec![Product(vec![])]));
        let e = parse_sre("[ab]*c? + [bc]*").unwrap();
        match &e {
            Sre::Sum(ps) => {
                assert_eq!(ps.len(), 2);
                assert_eq!(ps[0].0.len(), 2);
                assert_eq!(ps[1].0.len(), 1);
            }
            Sre::Zero => panic!(),
        }
        assert_eq!(e.to_string(), "[ab]*c? + [bc]*");
        assert_eq!(parse_sre("[ba]*").unwrap().to_string(), "[ab]*");
    }

    #[test]
    fn syntax_errors_report_positions() {
        for (text, at) in [
            ("a", 1),
            ("a?+", 3),
            ("[]*", 1),
            ("[ab]", 4),
            ("a? b", 4),
            ("a?)", 2),
            ("", 0),
        ] {
            match parse_sre(text) {
                Err(Error::SreSyntax { pos, .. }) => assert_eq!(pos, at, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(parse_sre("0 + a?").is_err());
        assert!(parse_sre("A?").is_err());
    }
}

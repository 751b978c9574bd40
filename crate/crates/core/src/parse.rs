//! Text syntax for algebra elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | name | '(' expr ')'
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::{is_identifier, Element, FreeGca, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Int(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            debug_assert!(is_identifier(&s));
            out.push(Tok::Name(s));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a Arc<FreeGca>,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Element> {
        let mut negative = false;
        if self.eat('-') {
            negative = true;
        } else {
            self.eat('+');
        }
        let first = self.term()?;
        let mut acc = if negative { -&first } else { first };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    let k: u32 = k
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(k))
                }
                _ => Err(Error::Parse("expected an integer exponent after `^`".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Element> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(p)) => {
                self.pos += 1;
                let mut c = Rational::from_integer(p);
                if self.eat('/') {
                    match self.toks.get(self.pos).cloned() {
                        Some(Tok::Int(q)) if q != BigInt::from(0) => {
                            self.pos += 1;
                            c /= Rational::from_integer(q);
                        }
                        _ => return Err(Error::Parse("expected a nonzero denominator".into())),
                    }
                }
                Ok(Element::constant(self.alg, c))
            }
            Some(Tok::Name(n)) => {
                self.pos += 1;
                Element::named(self.alg, &n)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

pub fn parse_element(alg: &Arc<FreeGca>, text: &str) -> Result<Element> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { alg, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{text}`")));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        let a = FreeGca::from_pairs(&[("t", 2), ("v1", 3), ("v2", 3)]).unwrap();
        let e = parse_element(&a, "v2*v1 + (t^2)^2 - 1/2*t*t").unwrap();
        assert_eq!(e.to_string(), "t^4 - 1/2*t^2 - v1*v2");
        assert_eq!(parse_element(&a, "0").unwrap(), Element::zero(&a));
        assert!(parse_element(&a, "x").is_err());
        assert!(parse_element(&a, "t +").is_err());
        assert!(parse_element(&a, "t )").is_err());
        assert!(parse_element(&a, "1/0").is_err());
    }
}

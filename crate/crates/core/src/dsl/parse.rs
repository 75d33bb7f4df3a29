use super::FamilyExpr;
use crate::cantor::UpWord;
use crate::error::ParseError;
use crate::ordinal::{Ordinal, OrdinalParser};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn bytes(&self) -> &'a [u8] {
        self.src.as_bytes()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes().get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn keyword(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    fn bits(&mut self) -> Vec<u8> {
        self.skip_ws();
        let mut out = Vec::new();
        while let Some(&c) = self.bytes().get(self.pos) {
            match c {
                b'0' | b'1' => out.push(c - b'0'),
                _ => break,
            }
            self.pos += 1;
        }
        out
    }

    fn ordinal(&mut self) -> Result<Ordinal, ParseError> {
        let mut p = OrdinalParser::new(self.src, self.pos);
        let o = p.sum()?;
        self.pos = p.pos;
        Ok(o)
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(start, "expected a positive integer"))
    }

    fn upword(&mut self) -> Result<UpWord, ParseError> {
        let start = self.pos;
        let prefix = self.bits();
        self.expect(b'(')?;
        let period = self.bits();
        self.expect(b')')?;
        self.expect(b'^')?;
        self.expect(b'w')?;
        UpWord::new(prefix, period).ok_or_else(|| ParseError::new(start, "empty period"))
    }

    fn expr(&mut self) -> Result<FamilyExpr, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let word = self.keyword();
        let expr = match word.as_str() {
            "empty" => FamilyExpr::Empty,
            "full" => FamilyExpr::FullSpace,
            "point" => {
                self.expect(b'(')?;
                let w = self.upword()?;
                self.expect(b')')?;
                FamilyExpr::Singleton(w)
            }
            "omega" => {
                self.expect(b'(')?;
                let sub = self.expr()?;
                self.expect(b')')?;
                FamilyExpr::omega(sub)
            }
            "diag" => {
                self.expect(b'(')?;
                let at = self.pos;
                let l = self.ordinal()?;
                self.expect(b')')?;
                FamilyExpr::diag(l).map_err(|m| ParseError::new(at, m))?
            }
            "canon" => {
                self.expect(b'(')?;
                let a = self.ordinal()?;
                self.expect(b',')?;
                let at = self.pos;
                let n = self.integer()?;
                self.expect(b')')?;
                FamilyExpr::canon(a, n).map_err(|m| ParseError::new(at, m))?
            }
            "union" => {
                self.expect(b'(')?;
                let mut branches = Vec::new();
                loop {
                    let prefix = self.bits();
                    self.expect(b':')?;
                    branches.push((prefix, self.expr()?));
                    if self.peek() == Some(b',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.expect(b')')?;
                FamilyExpr::disjoint_union(branches).map_err(|m| ParseError::new(start, m))?
            }
            "" => return Err(ParseError::new(start, "expected an expression")),
            other => {
                return Err(ParseError::new(
                    start,
                    format!("unknown combinator `{other}`"),
                ))
            }
        };
        Ok(expr)
    }
}

pub(super) fn parse(src: &str) -> Result<FamilyExpr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

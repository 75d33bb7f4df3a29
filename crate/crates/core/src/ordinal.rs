//! Ordinals below ε₀ in Cantor normal form, and the extended rank domain
//! `{-1} ∪ On ∪ {∞}` used for family ranks.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// An ordinal below ε₀, written `ω^e₁·c₁ + … + ω^eₖ·cₖ` with `e₁ > … > eₖ`
/// and every `cᵢ ≥ 1`. The empty sum is `0`.
///
/// Values are always kept canonical, so structural equality is ordinal
/// equality. The derived lexicographic ordering on `(exponent, coefficient)`
/// pairs coincides with ordinal comparison for canonical terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordinal {
    terms: Vec<(Ordinal, u64)>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn finite(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Self {
                terms: vec![(Self::zero(), n)],
            }
        }
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::finite(1))
    }

    /// `ω^e`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Self {
            terms: vec![(exponent, 1)],
        }
    }

    /// Builds an ordinal from CNF terms, rejecting non-canonical input.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Option<Self> {
        let decreasing = terms.windows(2).all(|w| w[0].0 > w[1].0);
        let positive = terms.iter().all(|&(_, c)| c >= 1);
        (decreasing && positive).then_some(Self { terms })
    }

    pub fn terms(&self) -> &[(Ordinal, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(n)` when the ordinal is a natural number.
    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.is_zero() => Some(*c),
            _ => None,
        }
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|(e, _)| !e.is_zero())
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|(e, _)| e.is_zero())
    }

    pub fn succ(&self) -> Self {
        let mut terms = self.terms.clone();
        match terms.last_mut() {
            Some((e, c)) if e.is_zero() => *c += 1,
            _ => terms.push((Self::zero(), 1)),
        }
        Self { terms }
    }

    /// The immediate predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Self> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a unit term");
        last.1 -= 1;
        if last.1 == 0 {
            terms.pop();
        }
        Some(Self { terms })
    }

    /// The `n`-th element of the standard fundamental sequence of a limit
    /// ordinal. Writing `λ = γ + ω^e·c`:
    /// `λ[n] = γ + ω^e·(c−1) + ω^d·(n+1)` when `e = d+1`, and
    /// `λ[n] = γ + ω^e·(c−1) + ω^{e[n]}` when `e` is itself a limit.
    ///
    /// Returns `None` for `0` and successor ordinals.
    pub fn fund_seq(&self, n: u64) -> Option<Self> {
        if !self.is_limit() {
            return None;
        }
        let mut terms = self.terms.clone();
        let (exponent, coefficient) = terms.pop().expect("limit is nonzero");
        if coefficient > 1 {
            terms.push((exponent.clone(), coefficient - 1));
        }
        match exponent.pred() {
            Some(d) => terms.push((d, n + 1)),
            None => {
                let inner = exponent
                    .fund_seq(n)
                    .expect("exponent of a limit term is a limit");
                terms.push((inner, 1));
            }
        }
        Some(Self { terms })
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            write!(f, "w")?;
            if *e != Ordinal::finite(1) {
                if e.as_finite().is_some() || *e == Ordinal::omega() {
                    write!(f, "^{e}")?;
                } else {
                    write!(f, "^({e})")?;
                }
            }
            if *c != 1 {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

/// Recursive-descent parser over the ASCII ordinal syntax
/// (`0`, `5`, `w`, `w*3`, `w^2`, `w^(w+1)*2+w+7`).
pub(crate) struct OrdinalParser<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> OrdinalParser<'a> {
    pub(crate) fn new(src: &'a str, pos: usize) -> Self {
        Self {
            src: src.as_bytes(),
            pos,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::new(start, "number out of range"))
    }

    fn exponent(&mut self) -> Result<Ordinal, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            _ => Ok(Ordinal::finite(self.number()?)),
        }
    }

    fn term(&mut self) -> Result<(Ordinal, u64), ParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                let mut exponent = Ordinal::finite(1);
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exponent = self.exponent()?;
                }
                let mut coefficient = 1;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    coefficient = self.number()?;
                }
                Ok((exponent, coefficient))
            }
            Some(c) if c.is_ascii_digit() => Ok((Ordinal::zero(), self.number()?)),
            _ => Err(self.err("expected an ordinal term")),
        }
    }

    pub(crate) fn sum(&mut self) -> Result<Ordinal, ParseError> {
        let start = self.pos;
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        terms.retain(|&(_, c)| c > 0);
        Ordinal::from_terms(terms).ok_or_else(|| {
            ParseError::new(
                start,
                "ordinal terms must be in strictly decreasing exponent order",
            )
        })
    }
}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = OrdinalParser::new(s, 0);
        let ordinal = parser.sum()?;
        if parser.peek().is_some() {
            return Err(parser.err("trailing input after ordinal"));
        }
        Ok(ordinal)
    }
}

/// Rank of a family: `-1` for the empty family, an ordinal, or `∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RankValue {
    MinusOne,
    Ord(Ordinal),
    Infinity,
}

impl RankValue {
    pub fn finite(n: u64) -> Self {
        Self::Ord(Ordinal::finite(n))
    }

    pub fn ordinal(&self) -> Option<&Ordinal> {
        match self {
            Self::Ord(o) => Some(o),
            _ => None,
        }
    }
}

impl fmt::Display for RankValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MinusOne => write!(f, "-1"),
            Self::Ord(o) => write!(f, "{o}"),
            Self::Infinity => write!(f, "infty"),
        }
    }
}

impl FromStr for RankValue {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "-1" => Ok(Self::MinusOne),
            "infty" | "inf" => Ok(Self::Infinity),
            other => other.parse().map(Self::Ord),
        }
    }
}

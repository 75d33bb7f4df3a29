//! Combinator terms for countable families with transfinite rank
//! structure.
//!
//! Each term denotes a set of ultimately periodic words (its generators):
//!
//! | term | generators |
//! |------|------------|
//! | `empty` | none |
//! | `point(w)` | `{w}` |
//! | `union(p₁:e₁, …)` | `⋃ pᵢ·F(eᵢ)`, prefixes pairwise incomparable |
//! | `omega(e)` | `⋃ₙ 1ⁿ0·F(e)` |
//! | `diag(λ)` | `⋃ₙ 1ⁿ0·F(canon(λ[n], 1))` |
//! | `full` | every ultimately periodic word |
//! | `canon(α, n)` | a family of rank `α` and degree `n` |

mod compile;
mod enumerate;
mod eval;
mod parse;

use std::fmt;
use std::str::FromStr;

pub use eval::{canon_expand, Profile};

use crate::cantor::{bits_to_string, Bits, UpWord};
use crate::error::ParseError;
use crate::ordinal::Ordinal;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyExpr {
    Empty,
    Singleton(UpWord),
    DisjointUnion(Vec<(Bits, FamilyExpr)>),
    OmegaSum(Box<FamilyExpr>),
    DiagSum(Ordinal),
    FullSpace,
    Canon(Ordinal, u64),
}

impl FamilyExpr {
    /// Checks that the branch list is nonempty with pairwise incomparable
    /// prefixes.
    pub fn disjoint_union(branches: Vec<(Bits, FamilyExpr)>) -> Result<Self, String> {
        if branches.is_empty() {
            return Err("union needs at least one branch".into());
        }
        for (i, (p, _)) in branches.iter().enumerate() {
            for (q, _) in &branches[i + 1..] {
                if p.starts_with(q) || q.starts_with(p) {
                    return Err(format!(
                        "comparable prefixes `{}` and `{}`",
                        bits_to_string(p),
                        bits_to_string(q)
                    ));
                }
            }
        }
        Ok(Self::DisjointUnion(branches))
    }

    pub fn omega(sub: FamilyExpr) -> Self {
        Self::OmegaSum(Box::new(sub))
    }

    pub fn diag(limit: Ordinal) -> Result<Self, String> {
        if limit.is_limit() {
            Ok(Self::DiagSum(limit))
        } else {
            Err(format!("diag needs a limit ordinal, got {limit}"))
        }
    }

    pub fn canon(alpha: Ordinal, n: u64) -> Result<Self, String> {
        if n == 0 {
            Err("canon needs a positive degree".into())
        } else {
            Ok(Self::Canon(alpha, n))
        }
    }

    /// Maximum nesting of combinators; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Self::DisjointUnion(branches) => {
                1 + branches.iter().map(|(_, e)| e.depth()).max().unwrap_or(0)
            }
            Self::OmegaSum(sub) => 1 + sub.depth(),
            _ => 0,
        }
    }
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty"),
            Self::Singleton(w) => write!(f, "point({w})"),
            Self::DisjointUnion(branches) => {
                write!(f, "union(")?;
                for (i, (p, e)) in branches.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}:{e}", bits_to_string(p))?;
                }
                write!(f, ")")
            }
            Self::OmegaSum(sub) => write!(f, "omega({sub})"),
            Self::DiagSum(l) => write!(f, "diag({l})"),
            Self::FullSpace => write!(f, "full"),
            Self::Canon(a, n) => write!(f, "canon({a}, {n})"),
        }
    }
}

impl FromStr for FamilyExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

use std::fmt;

use super::FamilyExpr;
use crate::automaton::Cardinality;
use crate::cantor::UpWord;
use crate::ordinal::{Ordinal, RankValue};

/// Rank, degree, top-rank points and e-spectrum of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub rank: RankValue,
    /// Present exactly when the rank is an ordinal.
    pub degree: Option<u64>,
    /// The points of maximal Cantor–Bendixson rank, sorted.
    pub top_points: Option<Vec<UpWord>>,
    /// Number of closure points that are not generators.
    pub espec: Cardinality,
}

impl Profile {
    fn empty() -> Self {
        Self {
            rank: RankValue::MinusOne,
            degree: None,
            top_points: None,
            espec: Cardinality::Finite(0),
        }
    }

    fn perfect() -> Self {
        Self {
            rank: RankValue::Infinity,
            degree: None,
            top_points: None,
            espec: Cardinality::Continuum,
        }
    }

    /// Rank `rank`, degree 1, the single top point `1^ω`.
    fn tail_limit(rank: Ordinal, espec: Cardinality) -> Self {
        Self {
            rank: RankValue::Ord(rank),
            degree: Some(1),
            top_points: Some(vec![UpWord::constant(1)]),
            espec,
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank: {}", self.rank)?;
        match self.degree {
            Some(d) => writeln!(f, "degree: {d}")?,
            None => writeln!(f, "degree: -")?,
        }
        match &self.top_points {
            Some(top) => {
                let words: Vec<String> = top.iter().map(|w| w.to_string()).collect();
                writeln!(f, "top: {}", words.join(", "))?
            }
            None => writeln!(f, "top: -")?,
        }
        writeln!(f, "espec: {}", self.espec)
    }
}

/// A family of rank `α` and degree `n`.
///
/// For `n = 1`: `canon(0) = point(0^ω)`, `canon(β+1) = omega(canon(β))`,
/// and `canon(λ) = diag(λ)` for limits. For `n > 1` the copies of
/// `canon(α, 1)` hang under the comb prefixes `0, 10, …, 1^{n−2}0, 1^{n−1}`.
pub fn canon_expand(alpha: &Ordinal, n: u64) -> FamilyExpr {
    assert!(n >= 1, "degree must be positive");
    if n == 1 {
        return if alpha.is_zero() {
            FamilyExpr::Singleton(UpWord::constant(0))
        } else if let Some(beta) = alpha.pred() {
            FamilyExpr::omega(canon_expand(&beta, 1))
        } else {
            FamilyExpr::DiagSum(alpha.clone())
        };
    }
    let one = canon_expand(alpha, 1);
    let branches = (0..n)
        .map(|i| {
            let mut prefix = vec![1u8; i as usize];
            if i + 1 < n {
                prefix.push(0);
            }
            (prefix, one.clone())
        })
        .collect();
    FamilyExpr::DisjointUnion(branches)
}

impl FamilyExpr {
    /// Computes the profile by structural recursion, without building any
    /// automaton.
    pub fn evaluate(&self) -> Profile {
        match self {
            Self::Empty => Profile::empty(),
            Self::Singleton(w) => Profile {
                rank: RankValue::finite(0),
                degree: Some(1),
                top_points: Some(vec![w.clone()]),
                espec: Cardinality::Finite(0),
            },
            Self::FullSpace => Profile::perfect(),
            Self::DisjointUnion(branches) => {
                let profiles: Vec<Profile> = branches.iter().map(|(_, e)| e.evaluate()).collect();
                let espec = profiles
                    .iter()
                    .fold(Cardinality::Finite(0), |acc, p| acc + p.espec);
                let rank = profiles.iter().map(|p| p.rank.clone()).max().unwrap();
                if !matches!(rank, RankValue::Ord(_)) {
                    return Profile {
                        rank,
                        degree: None,
                        top_points: None,
                        espec,
                    };
                }
                let mut degree = 0;
                let mut top = Vec::new();
                for ((prefix, _), p) in branches.iter().zip(&profiles) {
                    if p.rank == rank {
                        degree += p.degree.unwrap();
                        top.extend(p.top_points.iter().flatten().map(|w| w.prepend(prefix)));
                    }
                }
                top.sort();
                Profile {
                    rank,
                    degree: Some(degree),
                    top_points: Some(top),
                    espec,
                }
            }
            Self::OmegaSum(sub) => {
                let inner = sub.evaluate();
                match inner.rank {
                    RankValue::MinusOne => Profile::empty(),
                    RankValue::Infinity => Profile::perfect(),
                    RankValue::Ord(beta) if beta.is_zero() => {
                        Profile::tail_limit(Ordinal::finite(1), Cardinality::Finite(1))
                    }
                    RankValue::Ord(beta) => Profile::tail_limit(beta.succ(), Cardinality::Aleph0),
                }
            }
            Self::DiagSum(limit) => Profile::tail_limit(limit.clone(), Cardinality::Aleph0),
            Self::Canon(alpha, n) => canon_expand(alpha, *n).evaluate(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> FamilyExpr {
        s.parse().unwrap()
    }

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn canon_expand_examples() {
        assert_eq!(canon_expand(&o("0"), 1), e("point((0)^w)"));
        assert_eq!(canon_expand(&o("2"), 1), e("omega(omega(point((0)^w)))"));
        assert_eq!(
            canon_expand(&o("1"), 2),
            e("union(0:omega(point((0)^w)), 1:omega(point((0)^w)))")
        );
        assert_eq!(
            canon_expand(&o("0"), 4),
            e("union(0:point((0)^w), 10:point((0)^w), 110:point((0)^w), 111:point((0)^w))")
        );
        assert_eq!(canon_expand(&o("w+1"), 1), e("omega(diag(w))"));
    }

    #[test]
    fn evaluate_examples() {
        let p = e("omega(point((0)^w))").evaluate();
        assert_eq!(
            (p.rank, p.degree, p.espec),
            (RankValue::finite(1), Some(1), Cardinality::Finite(1))
        );

        let p = e("canon(2,1)").evaluate();
        assert_eq!(
            (p.rank, p.degree, p.espec),
            (RankValue::finite(2), Some(1), Cardinality::Aleph0)
        );

        let p = e("canon(w, 1)").evaluate();
        assert_eq!(
            (p.rank, p.degree),
            (RankValue::Ord(Ordinal::omega()), Some(1))
        );

        let p = e("union(0:omega(point((0)^w)), 1:omega(point((0)^w)))").evaluate();
        assert_eq!(
            (p.rank, p.degree, p.espec),
            (RankValue::finite(1), Some(2), Cardinality::Finite(2))
        );
        assert_eq!(
            p.top_points.unwrap(),
            vec!["0(1)^w".parse().unwrap(), "(1)^w".parse().unwrap()]
        );
    }

    #[test]
    fn evaluate_leaves() {
        let p = e("empty").evaluate();
        assert_eq!(p, Profile::empty());
        assert_eq!(p.to_string(), "rank: -1\ndegree: -\ntop: -\nespec: 0\n");
        let p = e("full").evaluate();
        assert_eq!(
            p.to_string(),
            "rank: infty\ndegree: -\ntop: -\nespec: continuum\n"
        );
        let p = e("omega(empty)").evaluate();
        assert_eq!(p.rank, RankValue::MinusOne);
        let p = e("omega(union(0:full, 1:point((1)^w)))").evaluate();
        assert_eq!(p.rank, RankValue::Infinity);
    }

    #[test]
    fn union_degree_counts_only_top_rank_branches() {
        let p = e("union(0:canon(2,1), 10:canon(1,3), 11:canon(2,2))").evaluate();
        assert_eq!((p.rank, p.degree), (RankValue::finite(2), Some(3)));
        assert_eq!(p.espec, Cardinality::Aleph0);
        let p = e("union(0:canon(0,2), 1:empty)").evaluate();
        assert_eq!(
            (p.rank, p.degree, p.espec),
            (RankValue::finite(0), Some(2), Cardinality::Finite(0))
        );
    }

    #[test]
    fn omega_over_finite_set_has_one_new_limit() {
        let p = e("omega(union(0:point((0)^w), 1:point((1)^w)))").evaluate();
        assert_eq!(
            (p.rank, p.degree, p.espec),
            (RankValue::finite(1), Some(1), Cardinality::Finite(1))
        );
    }

    #[test]
    fn transfinite_canon() {
        for (a, n) in [
            ("w", 1),
            ("w+1", 2),
            ("w*2", 3),
            ("w^2+w*3+2", 2),
            ("w^w", 1),
        ] {
            let p = FamilyExpr::Canon(o(a), n).evaluate();
            assert_eq!((p.rank, p.degree), (RankValue::Ord(o(a)), Some(n)));
        }
    }

    #[test]
    fn display_profile() {
        let p = e("canon(w,1)").evaluate();
        assert_eq!(
            p.to_string(),
            "rank: w\ndegree: 1\ntop: (1)^w\nespec: aleph0\n"
        );
    }
}

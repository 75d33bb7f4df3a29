use std::collections::HashSet;

use super::{canon_expand, FamilyExpr};
use crate::cantor::UpWord;
use crate::ordinal::RankValue;

impl FamilyExpr {
    /// The first `limit` generators in a fixed fair order.
    ///
    /// Generators are released in stages: at stage `s`, an `omega` copy
    /// with index `n` contributes only if `n < s`, and its body is expanded
    /// with budget `s − n − 1`. Each stage is emitted in structural order,
    /// skipping words already seen.
    pub fn enumerate_generators(&self, limit: usize) -> Vec<UpWord> {
        let finite = match self.evaluate().rank {
            RankValue::MinusOne => true,
            RankValue::Ord(a) => a.is_zero(),
            RankValue::Infinity => false,
        };
        let max_stage = limit + 4 * self.depth() + 64;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for stage in 0..=max_stage {
            for w in stage_generators(self, stage) {
                if out.len() == limit {
                    return out;
                }
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
            if finite {
                break;
            }
        }
        out.truncate(limit);
        out
    }

    /// Every generator released by stage `stage` of the order used by
    /// [`enumerate_generators`](Self::enumerate_generators), deduplicated.
    ///
    /// A point reached through `k` omega blocks `1^{n_i}0` appears by stage
    /// `Σ (n_i + 1)`.
    pub fn generators_through_stage(&self, stage: usize) -> Vec<UpWord> {
        let mut seen = HashSet::new();
        (0..=stage)
            .flat_map(|s| stage_generators(self, s))
            .filter(|w| seen.insert(w.clone()))
            .collect()
    }
}

fn stage_generators(expr: &FamilyExpr, stage: usize) -> Vec<UpWord> {
    match expr {
        FamilyExpr::Empty => Vec::new(),
        FamilyExpr::Singleton(w) => vec![w.clone()],
        FamilyExpr::DisjointUnion(branches) => branches
            .iter()
            .flat_map(|(p, e)| {
                stage_generators(e, stage)
                    .into_iter()
                    .map(move |w| w.prepend(p))
            })
            .collect(),
        FamilyExpr::OmegaSum(sub) => (0..stage)
            .flat_map(|n| {
                let prefix = block_prefix(n);
                stage_generators(sub, stage - n - 1)
                    .into_iter()
                    .map(move |w| w.prepend(&prefix))
            })
            .collect(),
        FamilyExpr::DiagSum(limit) => (0..stage)
            .flat_map(|n| {
                let prefix = block_prefix(n);
                let alpha = limit.fund_seq(n as u64).expect("diag holds a limit");
                stage_generators(&canon_expand(&alpha, 1), stage - n - 1)
                    .into_iter()
                    .map(move |w| w.prepend(&prefix))
            })
            .collect(),
        FamilyExpr::FullSpace => {
            full_space_words(usize::BITS as usize - stage.leading_zeros() as usize)
        }
        FamilyExpr::Canon(alpha, n) => stage_generators(&canon_expand(alpha, *n), stage),
    }
}

/// `1ⁿ0`.
fn block_prefix(n: usize) -> Vec<u8> {
    let mut p = vec![1u8; n];
    p.push(0);
    p
}

/// Every canonical `u(v)^ω` with `|u| + |v| ≤ max_len`, by total length
/// then lexicographically.
fn full_space_words(max_len: usize) -> Vec<UpWord> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for total in 1..=max_len {
        for split in 0..total {
            let (ulen, vlen) = (split, total - split);
            for bits in 0u64..(1 << total) {
                let word: Vec<u8> = (0..total).rev().map(|i| ((bits >> i) & 1) as u8).collect();
                let w =
                    UpWord::new(word[..ulen].to_vec(), word[ulen..ulen + vlen].to_vec()).unwrap();
                if w.prefix().len() + w.period().len() == total && seen.insert(w.clone()) {
                    out.push(w);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> FamilyExpr {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> Vec<UpWord> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn omega_unfolds_in_order() {
        assert_eq!(
            e("omega(point((0)^w))").enumerate_generators(3),
            words(&["0(0)^w", "10(0)^w", "110(0)^w"])
        );
    }

    #[test]
    fn singleton_stops() {
        assert_eq!(e("point((1)^w)").enumerate_generators(5), words(&["(1)^w"]));
        assert!(e("empty").enumerate_generators(5).is_empty());
        assert!(e("omega(empty)").enumerate_generators(5).is_empty());
    }

    #[test]
    fn comb_alternates_branches() {
        assert_eq!(
            e("canon(1,2)").enumerate_generators(4),
            words(&["(0)^w", "1(0)^w", "01(0)^w", "11(0)^w"])
        );
    }

    #[test]
    fn diag_reaches_every_block() {
        let gens = e("diag(w)").enumerate_generators(200);
        assert_eq!(gens.len(), 200);
        for n in 0..5 {
            let prefix = block_prefix(n);
            assert!(gens.iter().any(|w| w.take(n + 1) == prefix), "block {n}");
        }
    }

    #[test]
    fn full_space_is_fair() {
        let gens = e("full").enumerate_generators(30);
        assert_eq!(gens.len(), 30);
        assert!(gens.contains(&"(0)^w".parse().unwrap()));
        assert!(gens.contains(&"(01)^w".parse().unwrap()));
        assert_eq!(full_space_words(1), words(&["(0)^w", "(1)^w"]));
        assert_eq!(full_space_words(2).len(), 6);
    }

    #[test]
    fn generators_are_distinct() {
        let gens = e("union(0:canon(2,1), 1:full)").enumerate_generators(150);
        let unique: HashSet<_> = gens.iter().collect();
        assert_eq!(unique.len(), gens.len());
    }
}

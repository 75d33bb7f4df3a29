use std::collections::HashSet;
use std::fmt;

use crate::automaton::{PathAutomaton, StateId};
use crate::cantor::UpWord;
use crate::dsl::FamilyExpr;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub generators_checked: usize,
    pub isolated_checked: usize,
    /// The first failure found, if any.
    pub counterexample: Option<String>,
}

impl CoherenceReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CoherenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "pass ({} generators, {} isolated points)",
                self.generators_checked, self.isolated_checked
            ),
            Some(c) => write!(f, "fail: {c}"),
        }
    }
}

/// Isolated points are checked up to this entry depth, or `|states|` if
/// smaller.
pub const ISOLATED_DEPTH: usize = 16;

/// Checks the generator enumeration of `e` against its compiled automaton.
pub fn sample_coherence(e: &FamilyExpr, n: usize) -> Result<CoherenceReport> {
    let a = e.compile()?;
    Ok(sample_coherence_against(e, &a, n))
}

/// As [`sample_coherence`], against a caller-supplied automaton.
///
/// Checks that the first `n` generators are members, and that every
/// isolated point whose run enters a single-path state within
/// `min(|states|, ISOLATED_DEPTH)` steps is released by that stage of the
/// enumeration.
pub fn sample_coherence_against(e: &FamilyExpr, a: &PathAutomaton, n: usize) -> CoherenceReport {
    let gens = e.enumerate_generators(n);
    if let Some(bad) = gens.iter().find(|w| !a.contains(w)) {
        return CoherenceReport {
            generators_checked: gens.len(),
            isolated_checked: 0,
            counterexample: Some(format!("generator {bad} is not a member")),
        };
    }
    let depth = a.len().min(ISOLATED_DEPTH);
    let isolated = shallow_isolated_points(a, depth);
    let released: HashSet<UpWord> = e.generators_through_stage(depth).into_iter().collect();
    let missing = isolated.iter().find(|w| !released.contains(w));
    CoherenceReport {
        generators_checked: gens.len(),
        isolated_checked: isolated.len(),
        counterexample: missing.map(|w| format!("isolated point {w} is never enumerated")),
    }
}

/// Isolated points whose run reaches a single-path state within `bound`
/// steps, read off by walking that state's unique continuation.
fn shallow_isolated_points(a: &PathAutomaton, bound: usize) -> Vec<UpWord> {
    let Some(root) = a.root() else {
        return Vec::new();
    };
    let single: Vec<bool> = a.states().map(|q| is_single_path(a, q)).collect();
    let useful: Vec<bool> = a
        .states()
        .map(|q| {
            let mut seen = vec![false; a.len()];
            let mut stack = vec![q];
            while let Some(p) = stack.pop() {
                if single[p] {
                    return true;
                }
                if !std::mem::replace(&mut seen[p], true) {
                    stack.extend((0..2u8).filter_map(|b| a.step(p, b)));
                }
            }
            false
        })
        .collect();
    let mut out = Vec::new();
    let mut frontier: Vec<(StateId, Vec<u8>)> = vec![(root, Vec::new())];
    for _ in 0..=bound {
        let mut next = Vec::new();
        for (q, path) in frontier {
            if single[q] {
                out.push(continuation(a, q, path));
                continue;
            }
            for b in 0..2u8 {
                if let Some(t) = a.step(q, b).filter(|&t| useful[t]) {
                    let mut p = path.clone();
                    p.push(b);
                    next.push((t, p));
                }
            }
        }
        frontier = next;
    }
    out
}

fn is_single_path(a: &PathAutomaton, q: StateId) -> bool {
    let mut seen = vec![false; a.len()];
    let mut stack = vec![q];
    while let Some(p) = stack.pop() {
        if std::mem::replace(&mut seen[p], true) {
            continue;
        }
        if a.out_degree(p) != 1 {
            return false;
        }
        stack.extend((0..2u8).filter_map(|b| a.step(p, b)));
    }
    true
}

fn continuation(a: &PathAutomaton, mut q: StateId, mut bits: Vec<u8>) -> UpWord {
    let mut visited: Vec<StateId> = Vec::new();
    let start = bits.len();
    loop {
        if let Some(i) = visited.iter().position(|&p| p == q) {
            let period = bits.split_off(start + i);
            return UpWord::new(bits, period).unwrap();
        }
        visited.push(q);
        let b = (0..2u8).find(|&b| a.step(q, b).is_some()).unwrap();
        bits.push(b);
        q = a.step(q, b).unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> FamilyExpr {
        s.parse().unwrap()
    }

    #[test]
    fn compiled_families_are_coherent() {
        let r = sample_coherence(&e("omega(point((0)^w))"), 50).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.generators_checked, 50);
        let r = sample_coherence(&e("canon(2,2)"), 100).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.isolated_checked > 0);
        assert!(sample_coherence(&e("union(0:canon(3,1), 1:full)"), 80)
            .unwrap()
            .passed());
        assert!(sample_coherence(&e("diag(w)"), 5).is_err());
    }

    #[test]
    fn mutation_is_caught() {
        let expr = e("omega(point((0)^w))");
        // dropping the 1-loop loses every generator past the first
        let broken = PathAutomaton::from_edges(2, 0, &[(0, 0, 1), (1, 0, 1)]);
        let r = sample_coherence_against(&expr, &broken, 10);
        assert!(!r.passed());
        assert!(r.counterexample.unwrap().contains("generator 1(0)^w"));
        // an extra isolated point that the expression never produces
        let extra = PathAutomaton::from_edges(
            3,
            0,
            &[(0, 1, 0), (0, 0, 1), (1, 0, 1), (1, 1, 2), (2, 1, 2)],
        );
        let r = sample_coherence_against(&expr, &extra, 10);
        assert!(r.counterexample.unwrap().contains("never enumerated"));
    }
}

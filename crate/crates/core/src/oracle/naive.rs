use std::collections::{BTreeSet, VecDeque};

use crate::automaton::{DerivativeReport, PathAutomaton, RawAutomaton, StateId};
use crate::cantor::UpWord;
use crate::error::{Error, Result};
use crate::ordinal::RankValue;

fn reachable_from(a: &PathAutomaton, q: StateId) -> Vec<StateId> {
    let mut seen = vec![false; a.len()];
    let mut out = vec![q];
    seen[q] = true;
    let mut i = 0;
    while i < out.len() {
        let p = out[i];
        i += 1;
        for b in 0..2u8 {
            if let Some(t) = a.step(p, b) {
                if !seen[t] {
                    seen[t] = true;
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Whether the residual path set at `q` is a single path.
fn single_path_from(a: &PathAutomaton, q: StateId) -> bool {
    reachable_from(a, q)
        .into_iter()
        .all(|p| a.out_degree(p) == 1)
}

/// Keeps the flagged states, then trims to the states that are reachable
/// and lie on an infinite path.
fn trim(a: &PathAutomaton, mut keep: Vec<bool>) -> PathAutomaton {
    let Some(root) = a.root() else {
        return PathAutomaton::empty();
    };
    loop {
        let before = keep.clone();
        for q in a.states() {
            if keep[q] && !(0..2u8).any(|b| a.step(q, b).is_some_and(|t| keep[t])) {
                keep[q] = false;
            }
        }
        if keep[root] {
            let mut seen = vec![false; a.len()];
            let mut queue = VecDeque::from([root]);
            seen[root] = true;
            while let Some(p) = queue.pop_front() {
                for b in 0..2u8 {
                    if let Some(t) = a.step(p, b).filter(|&t| keep[t] && !seen[t]) {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
            for q in a.states() {
                keep[q] &= seen[q];
            }
        } else {
            keep.iter_mut().for_each(|k| *k = false);
        }
        if keep == before {
            break;
        }
    }
    if !keep[root] {
        return PathAutomaton::empty();
    }
    let mut raw = RawAutomaton::new();
    let index: Vec<Option<StateId>> = a
        .states()
        .map(|q| keep[q].then(|| raw.add_state(a.name(q))))
        .collect();
    for q in a.states() {
        for b in 0..2u8 {
            if let (Some(from), Some(Some(to))) = (index[q], a.step(q, b).map(|t| index[t])) {
                raw.set_edge(from, b, to);
            }
        }
    }
    raw.set_root(index[root].unwrap());
    raw.prune()
}

/// The derivative computed from the definition: a state is dropped when an
/// exhaustive search finds that its residual path set is a single path.
pub fn derivative_naive(a: &PathAutomaton) -> PathAutomaton {
    let keep = a.states().map(|q| !single_path_from(a, q)).collect();
    trim(a, keep)
}

/// Points of a finite family by depth-first search: a path closes into a
/// lasso the first time it revisits a state. `None` if the family is
/// infinite.
fn lasso_points(a: &PathAutomaton) -> Option<Vec<UpWord>> {
    fn go(
        a: &PathAutomaton,
        q: StateId,
        states: &mut Vec<StateId>,
        bits: &mut Vec<u8>,
        out: &mut BTreeSet<UpWord>,
    ) -> bool {
        if let Some(i) = states.iter().position(|&p| p == q) {
            if (i..states.len()).any(|j| a.out_degree(states[j]) != 1) {
                // a cycle with an exit: infinitely many points
                return false;
            }
            out.insert(UpWord::new(bits[..i].to_vec(), bits[i..].to_vec()).unwrap());
            return true;
        }
        states.push(q);
        for b in 0..2u8 {
            if let Some(t) = a.step(q, b) {
                bits.push(b);
                let ok = go(a, t, states, bits, out);
                bits.pop();
                if !ok {
                    return false;
                }
            }
        }
        states.pop();
        true
    }
    let Some(root) = a.root() else {
        return Some(Vec::new());
    };
    let mut out = BTreeSet::new();
    go(a, root, &mut Vec::new(), &mut Vec::new(), &mut out).then(|| out.into_iter().collect())
}

/// Rank, degree and top points by iterating [`derivative_naive`].
pub fn rank_naive(a: &PathAutomaton) -> DerivativeReport {
    let mut chain = vec![a.clone()];
    loop {
        let current = chain.last().unwrap();
        if current.is_empty() {
            let n = chain.len();
            if n == 1 {
                return DerivativeReport {
                    chain,
                    rank: RankValue::MinusOne,
                    degree: None,
                    top_points: None,
                };
            }
            let top = lasso_points(&chain[n - 2]).expect("next derivative is empty");
            return DerivativeReport {
                chain,
                rank: RankValue::finite(n as u64 - 2),
                degree: Some(top.len()),
                top_points: Some(top),
            };
        }
        let next = derivative_naive(current);
        if next.len() == current.len() {
            return DerivativeReport {
                chain,
                rank: RankValue::Infinity,
                degree: None,
                top_points: None,
            };
        }
        chain.push(next);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Isolation {
    /// A cylinder of this depth around the point meets the family only in
    /// the point.
    Isolated { depth: usize },
    /// No isolating cylinder up to the search bound. Never a proof of
    /// non-isolation.
    Unknown,
}

/// Searches cylinders `[w₀…w_{k−1}]`, `k ≤ k_max`, for one whose trace on
/// the family is `{w}`.
pub fn isolation_bruteforce(a: &PathAutomaton, w: &UpWord, k_max: usize) -> Result<Isolation> {
    if !a.contains(w) {
        return Err(Error::Precondition(format!(
            "{w} is not a member of the family"
        )));
    }
    for k in 0..=k_max {
        let q = a.run(&w.take(k)).expect("member");
        if single_path_from(a, q) {
            return Ok(Isolation::Isolated { depth: k });
        }
    }
    Ok(Isolation::Unknown)
}

/// The perfect kernel is nonempty iff some strongly connected component
/// carries two distinct cycles, i.e. has more internal edges than states.
pub fn kernel_nonempty_by_cycles(a: &PathAutomaton) -> bool {
    let reach: Vec<Vec<bool>> = a
        .states()
        .map(|q| {
            let mut row = vec![false; a.len()];
            for t in reachable_from(a, q) {
                row[t] = true;
            }
            row
        })
        .collect();
    let mut assigned = vec![false; a.len()];
    for q in a.states() {
        if assigned[q] {
            continue;
        }
        let component: Vec<StateId> = a.states().filter(|&t| reach[q][t] && reach[t][q]).collect();
        for &t in &component {
            assigned[t] = true;
        }
        let internal = component
            .iter()
            .flat_map(|&p| (0..2u8).filter_map(move |b| a.step(p, b)))
            .filter(|t| component.contains(t))
            .count();
        if internal > component.len() {
            return true;
        }
    }
    false
}

/// Whether every basic neighbourhood `[access(q)]` contains an isolated
/// point, searching all paths of length `≤ |states|` below each state for
/// one that ends in a single-path residual.
pub fn isolated_points_dense_bruteforce(a: &PathAutomaton) -> bool {
    let bound = a.len();
    a.states().all(|q| {
        let mut frontier = vec![q];
        for _ in 0..=bound {
            if frontier.iter().any(|&p| single_path_from(a, p)) {
                return true;
            }
            frontier = frontier
                .iter()
                .flat_map(|&p| (0..2u8).filter_map(move |b| a.step(p, b)))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
        }
        false
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> UpWord {
        s.parse().unwrap()
    }

    fn canon(k: usize) -> PathAutomaton {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, 1, i));
            edges.push((i, 0, i + 1));
        }
        edges.push((k, 0, k));
        PathAutomaton::from_edges(k + 1, 0, &edges)
    }

    #[test]
    fn derivative_naive_examples() {
        // reachability table for Canon(1): from q0 {q0, q1} with q0 branching;
        // from q1 {q1}, out-degree 1 → q1 dropped, leaving the 1-loop
        let d = derivative_naive(&canon(1));
        assert_eq!(d.len(), 1);
        assert!(d.contains(&w("(1)^w")));
        assert!(!d.contains(&w("(0)^w")));
        assert_eq!(
            derivative_naive(&PathAutomaton::full()),
            PathAutomaton::full()
        );
        assert!(derivative_naive(&PathAutomaton::singleton(&w("0(01)^w"))).is_empty());
    }

    #[test]
    fn rank_naive_examples() {
        let r = rank_naive(&canon(2));
        assert_eq!((r.rank, r.degree), (RankValue::finite(2), Some(1)));
        assert_eq!(r.top_points.unwrap(), vec![w("(1)^w")]);
        assert_eq!(
            rank_naive(&PathAutomaton::empty()).rank,
            RankValue::MinusOne
        );
        assert_eq!(rank_naive(&PathAutomaton::full()).rank, RankValue::Infinity);
    }

    #[test]
    fn lasso_points_detects_infinite_families() {
        assert!(lasso_points(&canon(1)).is_none());
        let two = PathAutomaton::from_edges(3, 0, &[(0, 0, 1), (0, 1, 2), (1, 0, 1), (2, 1, 2)]);
        assert_eq!(lasso_points(&two).unwrap(), vec![w("(0)^w"), w("(1)^w")]);
    }

    #[test]
    fn isolation_examples() {
        assert_eq!(
            isolation_bruteforce(&canon(1), &w("10(0)^w"), 8).unwrap(),
            Isolation::Isolated { depth: 2 }
        );
        assert_eq!(
            isolation_bruteforce(&canon(1), &w("(1)^w"), 12).unwrap(),
            Isolation::Unknown
        );
        assert_eq!(
            isolation_bruteforce(&PathAutomaton::full(), &w("(0)^w"), 10).unwrap(),
            Isolation::Unknown
        );
        assert!(isolation_bruteforce(&canon(1), &w("(01)^w"), 4).is_err());
    }

    #[test]
    fn cycle_characterization_of_kernel() {
        assert!(kernel_nonempty_by_cycles(&PathAutomaton::full()));
        assert!(!kernel_nonempty_by_cycles(&canon(3)));
        let two_cycle =
            PathAutomaton::from_edges(3, 0, &[(0, 0, 1), (1, 1, 0), (0, 1, 2), (2, 0, 0)]);
        assert!(kernel_nonempty_by_cycles(&two_cycle));
        // root reaching two separate loops: finite, no kernel
        let fork = PathAutomaton::from_edges(3, 0, &[(0, 0, 1), (0, 1, 2), (1, 0, 1), (2, 1, 2)]);
        assert!(!kernel_nonempty_by_cycles(&fork));
    }

    #[test]
    fn density_bruteforce() {
        assert!(isolated_points_dense_bruteforce(&canon(2)));
        assert!(!isolated_points_dense_bruteforce(&PathAutomaton::full()));
    }
}

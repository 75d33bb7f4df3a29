use std::collections::VecDeque;
use std::fmt;
use std::ops::Add;

use super::{PathAutomaton, StateId};
use crate::cantor::{Bits, Clopen, UpWord};
use crate::error::{Error, Result};
use crate::ordinal::RankValue;

/// The successive Cantor–Bendixson derivatives of a closed family.
#[derive(Clone, Debug)]
pub struct DerivativeReport {
    /// `chain[0]` is the input; each entry is the derivative of the one
    /// before. The chain ends with the empty automaton, or with the
    /// nonempty perfect kernel when the rank is `∞`.
    pub chain: Vec<PathAutomaton>,
    pub rank: RankValue,
    pub degree: Option<usize>,
    pub top_points: Option<Vec<UpWord>>,
}

impl DerivativeReport {
    /// The last derivative in the chain; empty or the perfect kernel.
    pub fn last(&self) -> &PathAutomaton {
        self.chain.last().expect("chain is never empty")
    }
}

/// Cardinality of a closed subset of Cantor space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinality {
    Finite(usize),
    Aleph0,
    Continuum,
}

impl Add for Cardinality {
    type Output = Cardinality;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Self::Finite(a), Self::Finite(b)) => Self::Finite(a + b),
            (a, b) => a.max(b),
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(n) => write!(f, "{n}"),
            Self::Aleph0 => write!(f, "aleph0"),
            Self::Continuum => write!(f, "continuum"),
        }
    }
}

/// A state all of whose runs are isolated, with its shortest access word
/// and the isolated point reached that way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedState {
    pub state: StateId,
    pub access: Bits,
    pub point: UpWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeastGeneratingSet {
    /// Isolated points are dense; they form the least generating set. Each
    /// entry is a state of the deterministic suffix; every isolated point
    /// runs through one of them.
    Isolated(Vec<IsolatedState>),
    /// A basic neighbourhood meeting the family but containing no isolated
    /// point.
    NotDense { witness: Clopen },
}

impl LeastGeneratingSet {
    pub fn exists(&self) -> bool {
        matches!(self, Self::Isolated(_))
    }
}

/// Seed of a binary tree of clopen sets inside the perfect kernel: two
/// distinct cycles through one kernel state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTreeSeed {
    pub state: StateId,
    pub access: Bits,
    pub word0: Bits,
    pub word1: Bits,
}

impl PathAutomaton {
    /// States from which every reachable state has exactly one outgoing
    /// edge. A point is isolated iff its run visits one of them.
    pub fn deterministic_suffix_states(&self) -> Vec<bool> {
        let branching: Vec<bool> = self.states().map(|q| self.out_degree(q) == 2).collect();
        self.can_reach(&branching).into_iter().map(|b| !b).collect()
    }

    /// Removes the isolated points.
    pub fn derivative(&self) -> PathAutomaton {
        let suffix = self.deterministic_suffix_states();
        let keep: Vec<bool> = suffix.iter().map(|d| !d).collect();
        self.restrict_states(&keep)
    }

    /// Points of a family with empty derivative. Returns `None` when the
    /// family is infinite.
    pub fn finite_points(&self) -> Option<Vec<UpWord>> {
        let Some(root) = self.root() else {
            return Some(Vec::new());
        };
        let suffix = self.deterministic_suffix_states();
        let mut points = Vec::new();
        let mut stack: Vec<(StateId, Bits)> = vec![(root, Vec::new())];
        while let Some((q, path)) = stack.pop() {
            if path.len() > self.len() {
                // a cycle avoiding the suffix states: infinitely many points
                return None;
            }
            if suffix[q] {
                let (lead, cycle) = self.unique_continuation(q).expect("suffix state");
                let mut prefix = path;
                prefix.extend(lead);
                points.push(UpWord::new(prefix, cycle).unwrap());
                continue;
            }
            for (bit, t) in self.successors(q) {
                let mut next = path.clone();
                next.push(bit);
                stack.push((t, next));
            }
        }
        points.sort();
        Some(points)
    }

    /// Iterates the derivative until it is empty or stationary.
    pub fn rank_degree(&self) -> DerivativeReport {
        let mut chain = vec![self.clone()];
        loop {
            let current = chain.last().unwrap();
            if current.is_empty() {
                let steps = chain.len() - 1;
                if steps == 0 {
                    return DerivativeReport {
                        chain,
                        rank: RankValue::MinusOne,
                        degree: None,
                        top_points: None,
                    };
                }
                let top = chain[steps - 1]
                    .finite_points()
                    .expect("derivative is empty, so the family is finite");
                return DerivativeReport {
                    chain,
                    rank: RankValue::finite(steps as u64 - 1),
                    degree: Some(top.len()),
                    top_points: Some(top),
                };
            }
            let next = current.derivative();
            if next.len() == current.len() {
                // no state removed: perfect
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

    /// The perfect kernel: the stationary value of the derivative chain.
    pub fn kernel(&self) -> PathAutomaton {
        let mut current = self.clone();
        loop {
            let next = current.derivative();
            if next.len() == current.len() {
                return current;
            }
            current = next;
        }
    }

    pub fn cardinality_class(&self) -> Cardinality {
        let report = self.rank_degree();
        match report.rank {
            RankValue::MinusOne => Cardinality::Finite(0),
            RankValue::Infinity => Cardinality::Continuum,
            RankValue::Ord(ref a) if a.is_zero() => Cardinality::Finite(report.degree.unwrap()),
            RankValue::Ord(_) => Cardinality::Aleph0,
        }
    }

    pub fn is_accumulation_point(&self, word: &UpWord) -> bool {
        self.derivative().contains(word)
    }

    /// The largest `α` with `word` in the `α`-th derivative, or `∞` when
    /// `word` lies in the perfect kernel.
    pub fn point_rank(&self, word: &UpWord) -> Result<RankValue> {
        if !self.contains(word) {
            return Err(Error::Precondition(format!(
                "{word} is not a member of the family"
            )));
        }
        let report = self.rank_degree();
        let depth = report.chain.iter().take_while(|a| a.contains(word)).count();
        if depth == report.chain.len() && report.rank == RankValue::Infinity {
            return Ok(RankValue::Infinity);
        }
        Ok(RankValue::finite(depth as u64 - 1))
    }

    /// An ultimately periodic accumulation point, found by walking the
    /// derivative from its root (preferring `0`) until a state repeats.
    pub fn find_accumulation_point(&self) -> Result<UpWord> {
        let d = self.derivative();
        let Some(mut q) = d.root() else {
            return Err(Error::Precondition("the family is finite".into()));
        };
        let mut position = vec![usize::MAX; d.len()];
        let mut bits = Vec::new();
        while position[q] == usize::MAX {
            position[q] = bits.len();
            let (bit, next) = d.successors(q).next().expect("pruned");
            bits.push(bit);
            q = next;
        }
        let cycle = bits.split_off(position[q]);
        Ok(UpWord::new(bits, cycle).unwrap())
    }

    /// Decides whether isolated points are dense, i.e. whether a least
    /// generating set exists.
    pub fn least_generating_set_info(&self) -> Result<LeastGeneratingSet> {
        if self.is_empty() {
            return Err(Error::Precondition("the family is empty".into()));
        }
        let suffix = self.deterministic_suffix_states();
        let reaches = self.can_reach(&suffix);
        let access = self.access_words();
        // states are numbered in breadth-first order, so the first failing
        // state has a shortest access word among failures
        if let Some(q) = self.states().find(|&q| !reaches[q]) {
            return Ok(LeastGeneratingSet::NotDense {
                witness: Clopen::cylinder(&access[q]),
            });
        }
        let entries = self
            .states()
            .filter(|&q| suffix[q])
            .map(|q| {
                let (lead, cycle) = self.unique_continuation(q).unwrap();
                let mut prefix = access[q].clone();
                prefix.extend(lead);
                IsolatedState {
                    state: q,
                    access: access[q].clone(),
                    point: UpWord::new(prefix, cycle).unwrap(),
                }
            })
            .collect();
        Ok(LeastGeneratingSet::Isolated(entries))
    }

    /// Two distinct cycles through a branching state of a bottom strongly
    /// connected component of the kernel, when the kernel is nonempty.
    pub fn two_tree_witness(&self) -> Option<TwoTreeSeed> {
        let k = self.kernel();
        k.root()?;
        let reach = k.reachability();
        let bottom = |q: StateId| k.states().all(|t| !reach[q][t] || reach[t][q]);
        let q = k
            .states()
            .find(|&q| bottom(q) && k.out_degree(q) == 2)
            .expect("a bottom component of a perfect set branches");
        let cycle = |bit: u8| -> Bits {
            let start = k.step(q, bit).unwrap();
            let mut back = k.shortest_path(start, q).expect("same component");
            back.insert(0, bit);
            back
        };
        let access = k.access_words()[q].clone();
        let state = self
            .run(&access)
            .expect("kernel paths are paths of the family");
        Some(TwoTreeSeed {
            state,
            access,
            word0: cycle(0),
            word1: cycle(1),
        })
    }

    /// Splits the whole space into `degree` disjoint clopen sets, each of
    /// whose traces has rank `α` and degree 1. Leftover cells go to the
    /// first part.
    pub fn decompose_alpha_minimal(&self) -> Result<Vec<Clopen>> {
        let report = self.rank_degree();
        let alpha = match &report.rank {
            RankValue::Ord(a) if !a.is_zero() => a.clone(),
            other => {
                return Err(Error::Precondition(format!(
                    "decomposition needs an ordinal rank of at least 1, got {other}"
                )))
            }
        };
        let top = report.top_points.unwrap();
        let horizon = top
            .iter()
            .flat_map(|a| top.iter().map(move |b| a.comparison_horizon(b)))
            .max()
            .unwrap_or(0);
        let depth = (0..=horizon)
            .find(|&k| {
                let mut prefixes: Vec<Bits> = top.iter().map(|t| t.take(k)).collect();
                prefixes.sort();
                prefixes.dedup();
                prefixes.len() == top.len()
            })
            .expect("distinct words differ within the horizon");

        let mut parts: Vec<Clopen> = top
            .iter()
            .map(|t| Clopen::cylinder(&t.take(depth)))
            .collect();
        let covered = parts.iter().fold(Clopen::empty(), |acc, p| acc.union(p));
        parts[0] = parts[0].union(&covered.complement());

        for part in &parts {
            let sub = self.restrict(part).rank_degree();
            if sub.rank != RankValue::Ord(alpha.clone()) || sub.degree != Some(1) {
                return Err(Error::Precondition(format!(
                    "part {part} is not {alpha}-minimal (rank {}, degree {:?})",
                    sub.rank, sub.degree
                )));
            }
        }
        Ok(parts)
    }

    fn reachability(&self) -> Vec<Vec<bool>> {
        self.states()
            .map(|q| {
                let mut seen = vec![false; self.len()];
                seen[q] = true;
                let mut queue = VecDeque::from([q]);
                while let Some(p) = queue.pop_front() {
                    for (_, t) in self.successors(p) {
                        if !seen[t] {
                            seen[t] = true;
                            queue.push_back(t);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    fn shortest_path(&self, from: StateId, to: StateId) -> Option<Bits> {
        let mut prev: Vec<Option<(StateId, u8)>> = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(p) = queue.pop_front() {
            if p == to {
                let mut bits = Vec::new();
                let mut cur = to;
                while let Some((q, bit)) = prev[cur] {
                    bits.push(bit);
                    cur = q;
                }
                bits.reverse();
                return Some(bits);
            }
            for (bit, t) in self.successors(p) {
                if !seen[t] {
                    seen[t] = true;
                    prev[t] = Some((p, bit));
                    queue.push_back(t);
                }
            }
        }
        None
    }
}

//! Closed subsets of Cantor space as the infinite-path sets of finite
//! deterministic binary automata, and the Cantor–Bendixson analysis on them.

mod analysis;
mod dot;
mod ops;
mod text;

use std::collections::{HashSet, VecDeque};

pub use analysis::{Cardinality, DerivativeReport, IsolatedState, LeastGeneratingSet, TwoTreeSeed};
pub use dot::to_dot;

use crate::cantor::{Bits, UpWord};

pub type StateId = usize;

/// An automaton under construction: states may be unreachable or dead.
#[derive(Clone, Debug, Default)]
pub struct RawAutomaton {
    names: Vec<String>,
    edges: Vec<[Option<StateId>; 2]>,
    root: Option<StateId>,
}

impl RawAutomaton {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_state(&mut self, name: impl Into<String>) -> StateId {
        self.names.push(name.into());
        self.edges.push([None, None]);
        self.edges.len() - 1
    }

    /// Adds a state named `q<index>`.
    pub fn add_anon(&mut self) -> StateId {
        let id = self.edges.len();
        self.add_state(format!("q{id}"))
    }

    pub fn set_edge(&mut self, from: StateId, bit: u8, to: StateId) {
        self.edges[from][bit as usize] = Some(to);
    }

    pub fn set_root(&mut self, root: StateId) {
        self.root = Some(root);
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, from: StateId, bit: u8) -> Option<StateId> {
        self.edges[from][bit as usize]
    }

    /// Drops unreachable states, then repeatedly drops states without an
    /// outgoing edge. States are renumbered in breadth-first order from the
    /// root; names are kept.
    pub fn prune(&self) -> PathAutomaton {
        let Some(root) = self.root else {
            return PathAutomaton::empty();
        };
        let n = self.edges.len();

        let mut reachable = vec![false; n];
        let mut queue = VecDeque::from([root]);
        reachable[root] = true;
        while let Some(q) = queue.pop_front() {
            for t in self.edges[q].iter().flatten() {
                if !reachable[*t] {
                    reachable[*t] = true;
                    queue.push_back(*t);
                }
            }
        }

        let mut alive = reachable;
        loop {
            let mut changed = false;
            for q in 0..n {
                if alive[q] && !self.edges[q].iter().flatten().any(|&t| alive[t]) {
                    alive[q] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if !alive[root] {
            return PathAutomaton::empty();
        }

        let mut index = vec![usize::MAX; n];
        let mut order = vec![root];
        index[root] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for t in self.edges[q].iter().flatten() {
                if alive[*t] && index[*t] == usize::MAX {
                    index[*t] = order.len();
                    order.push(*t);
                }
            }
        }

        let edges = order
            .iter()
            .map(|&q| self.edges[q].map(|t| t.filter(|&t| alive[t]).map(|t| index[t])))
            .collect();
        let names = order.iter().map(|&q| self.names[q].clone()).collect();
        PathAutomaton {
            names,
            edges,
            root: Some(0),
        }
    }
}

/// A pruned deterministic automaton over `{0, 1}`.
///
/// Every state is reachable from the root and has at least one outgoing
/// edge, so every state lies on an infinite path. The denoted family is the
/// set of infinite words labelling paths from the root, a closed subset of
/// Cantor space. The automaton with no states denotes the empty family.
/// The root, when present, is state `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAutomaton {
    names: Vec<String>,
    edges: Vec<[Option<StateId>; 2]>,
    root: Option<StateId>,
}

impl PathAutomaton {
    pub fn empty() -> Self {
        Self {
            names: Vec::new(),
            edges: Vec::new(),
            root: None,
        }
    }

    /// Convenience constructor: `states` anonymous states, root `root`,
    /// edges given as `(from, bit, to)`. The result is pruned.
    pub fn from_edges(states: usize, root: StateId, edges: &[(StateId, u8, StateId)]) -> Self {
        let mut raw = RawAutomaton::new();
        for _ in 0..states {
            raw.add_anon();
        }
        for &(from, bit, to) in edges {
            raw.set_edge(from, bit, to);
        }
        raw.set_root(root);
        raw.prune()
    }

    /// The full binary tree: one state with both loops.
    pub fn full() -> Self {
        Self::from_edges(1, 0, &[(0, 0, 0), (0, 1, 0)])
    }

    /// The singleton `{w}` as a chain leading into a cycle.
    pub fn singleton(word: &UpWord) -> Self {
        let mut raw = RawAutomaton::new();
        let cells: Vec<StateId> = (0..word.prefix().len() + word.period().len())
            .map(|_| raw.add_anon())
            .collect();
        let bits: Vec<u8> = word.prefix().iter().chain(word.period()).copied().collect();
        for (i, &bit) in bits.iter().enumerate() {
            let next = if i + 1 < cells.len() {
                cells[i + 1]
            } else {
                cells[word.prefix().len()]
            };
            raw.set_edge(cells[i], bit, next);
        }
        raw.set_root(cells[0]);
        raw.prune()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn root(&self) -> Option<StateId> {
        self.root
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.edges.len()
    }

    pub fn step(&self, state: StateId, bit: u8) -> Option<StateId> {
        self.edges[state][bit as usize]
    }

    pub fn successors(&self, state: StateId) -> impl Iterator<Item = (u8, StateId)> + '_ {
        (0..2u8).filter_map(move |b| self.step(state, b).map(|t| (b, t)))
    }

    pub fn out_degree(&self, state: StateId) -> usize {
        self.edges[state].iter().flatten().count()
    }

    pub fn name(&self, state: StateId) -> &str {
        &self.names[state]
    }

    pub fn to_raw(&self) -> RawAutomaton {
        RawAutomaton {
            names: self.names.clone(),
            edges: self.edges.clone(),
            root: self.root,
        }
    }

    /// Runs a finite word from the root.
    pub fn run(&self, word: &[u8]) -> Option<StateId> {
        word.iter()
            .try_fold(self.root?, |q, &bit| self.step(q, bit))
    }

    /// Whether `word` labels an infinite path from the root. The prefix is
    /// run once; the period is then iterated until the state at a period
    /// boundary repeats.
    pub fn contains(&self, word: &UpWord) -> bool {
        let Some(mut q) = self.run(word.prefix()) else {
            return false;
        };
        let mut seen = HashSet::new();
        while seen.insert(q) {
            match word
                .period()
                .iter()
                .try_fold(q, |s, &bit| self.step(s, bit))
            {
                Some(next) => q = next,
                None => return false,
            }
        }
        true
    }

    /// Shortest access word of every state, in breadth-first order.
    pub fn access_words(&self) -> Vec<Bits> {
        let mut words: Vec<Option<Bits>> = vec![None; self.len()];
        let Some(root) = self.root else {
            return Vec::new();
        };
        words[root] = Some(Vec::new());
        let mut queue = VecDeque::from([root]);
        while let Some(q) = queue.pop_front() {
            for (bit, t) in self.successors(q) {
                if words[t].is_none() {
                    let mut w = words[q].clone().unwrap();
                    w.push(bit);
                    words[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        words
            .into_iter()
            .map(|w| w.expect("pruned: all reachable"))
            .collect()
    }

    /// The unique infinite path from `state` when every state reachable
    /// from it has out-degree one, as `(bits before the cycle, cycle)`.
    pub(crate) fn unique_continuation(&self, state: StateId) -> Option<(Bits, Bits)> {
        let mut position = vec![usize::MAX; self.len()];
        let mut bits = Vec::new();
        let mut q = state;
        loop {
            if position[q] != usize::MAX {
                let start = position[q];
                let cycle = bits.split_off(start);
                return Some((bits, cycle));
            }
            position[q] = bits.len();
            if self.out_degree(q) != 1 {
                return None;
            }
            let (bit, next) = self.successors(q).next().unwrap();
            bits.push(bit);
            q = next;
        }
    }

    /// Keeps only the states flagged in `keep` and prunes.
    pub fn restrict_states(&self, keep: &[bool]) -> Self {
        let mut raw = self.to_raw();
        for q in self.states() {
            if !keep[q] {
                raw.edges[q] = [None, None];
            }
            for slot in raw.edges[q].iter_mut() {
                if slot.is_some_and(|t| !keep[t]) {
                    *slot = None;
                }
            }
        }
        if self.root.is_some_and(|r| !keep[r]) {
            return Self::empty();
        }
        raw.prune()
    }

    /// States from which some state in `targets` is reachable (including
    /// the targets themselves).
    pub(crate) fn can_reach(&self, targets: &[bool]) -> Vec<bool> {
        let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); self.len()];
        for q in self.states() {
            for (_, t) in self.successors(q) {
                reverse[t].push(q);
            }
        }
        let mut hit = targets.to_vec();
        let mut queue: VecDeque<StateId> = self.states().filter(|&q| targets[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &reverse[q] {
                if !hit[p] {
                    hit[p] = true;
                    queue.push_back(p);
                }
            }
        }
        hit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> UpWord {
        s.parse().unwrap()
    }

    /// Canon(1): root loops on 1 and leaves on 0 into a 0-loop.
    pub(crate) fn canon1() -> PathAutomaton {
        PathAutomaton::from_edges(2, 0, &[(0, 1, 0), (0, 0, 1), (1, 0, 1)])
    }

    #[test]
    fn prune_drops_dead_chain() {
        // lasso 0 -1-> 0 plus 0 -0-> 1 -0-> 2 with 2 dead
        let a = PathAutomaton::from_edges(3, 0, &[(0, 1, 0), (0, 0, 1), (1, 0, 2)]);
        assert_eq!(a.len(), 1);
        assert_eq!(a, PathAutomaton::from_edges(1, 0, &[(0, 1, 0)]));
    }

    #[test]
    fn prune_is_identity_on_pruned() {
        let a = canon1();
        assert_eq!(a.to_raw().prune(), a);
    }

    #[test]
    fn prune_cascades() {
        // 0 -0-> 1 -0-> 2 -0-> 3 (dead); 0 -1-> 4 (1-loop)
        let raw = PathAutomaton::from_edges(
            5,
            0,
            &[(0, 0, 1), (1, 0, 2), (2, 0, 3), (0, 1, 4), (4, 1, 4)],
        );
        assert_eq!(raw.len(), 2);
        assert!(raw.set_eq(&PathAutomaton::singleton(&w("(1)^w"))));
    }

    #[test]
    fn prune_unreachable_and_empty() {
        let a = PathAutomaton::from_edges(3, 0, &[(0, 0, 1), (2, 1, 2)]);
        assert!(a.is_empty());
        assert!(RawAutomaton::new().prune().is_empty());
    }

    #[test]
    fn membership_examples() {
        let one = PathAutomaton::from_edges(1, 0, &[(0, 1, 0)]);
        assert!(one.contains(&w("(1)^w")));
        assert!(!one.contains(&w("(0)^w")));
        let c = canon1();
        assert!(c.contains(&w("1110(0)^w")));
        assert!(c.contains(&w("(1)^w")));
        assert!(!c.contains(&w("01(0)^w")));
        assert!(!PathAutomaton::empty().contains(&w("(1)^w")));
    }

    #[test]
    fn membership_with_long_period() {
        // states cycle through 0 -0-> 1 -1-> 2 -1-> 0
        let a = PathAutomaton::from_edges(3, 0, &[(0, 0, 1), (1, 1, 2), (2, 1, 0)]);
        assert!(a.contains(&w("(011)^w")));
        assert!(a.contains(&w("01(101)^w")));
        assert!(!a.contains(&w("(01)^w")));
    }

    #[test]
    fn singleton_denotes_word() {
        for s in ["(0)^w", "110(0)^w", "0(10)^w", "(011)^w"] {
            let a = PathAutomaton::singleton(&w(s));
            assert!(a.contains(&w(s)));
            assert_eq!(a.len(), w(s).prefix().len() + w(s).period().len());
        }
    }

    #[test]
    fn access_words_are_shortest() {
        let a = canon1();
        assert_eq!(a.access_words(), vec![vec![], vec![0]]);
    }
}

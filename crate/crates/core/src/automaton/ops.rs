use std::collections::{HashMap, HashSet, VecDeque};

use super::{PathAutomaton, RawAutomaton, StateId};
use crate::cantor::Clopen;

#[derive(Clone, Copy, PartialEq, Eq)]
enum ProductMode {
    Union,
    Intersection,
}

type Pair = (Option<StateId>, Option<StateId>);

fn product(a: &PathAutomaton, b: &PathAutomaton, mode: ProductMode) -> PathAutomaton {
    let start: Pair = (a.root(), b.root());
    let mut raw = RawAutomaton::new();
    let mut index: HashMap<Pair, StateId> = HashMap::new();
    let mut queue = VecDeque::new();

    let mut intern = |raw: &mut RawAutomaton, pair: Pair, queue: &mut VecDeque<Pair>| {
        *index.entry(pair).or_insert_with(|| {
            queue.push_back(pair);
            let name = match pair {
                (Some(p), Some(q)) => format!("{}.{}", a.name(p), b.name(q)),
                (Some(p), None) => format!("{}._", a.name(p)),
                (None, Some(q)) => format!("_.{}", b.name(q)),
                (None, None) => unreachable!(),
            };
            raw.add_state(name)
        })
    };

    let live = |pair: Pair| match mode {
        ProductMode::Union => pair.0.is_some() || pair.1.is_some(),
        ProductMode::Intersection => pair.0.is_some() && pair.1.is_some(),
    };
    if !live(start) {
        return PathAutomaton::empty();
    }
    let root = intern(&mut raw, start, &mut queue);
    raw.set_root(root);
    while let Some(pair) = queue.pop_front() {
        let from = intern(&mut raw, pair, &mut queue);
        for bit in 0..2u8 {
            let next = (
                pair.0.and_then(|p| a.step(p, bit)),
                pair.1.and_then(|q| b.step(q, bit)),
            );
            if live(next) {
                let to = intern(&mut raw, next, &mut queue);
                raw.set_edge(from, bit, to);
            }
        }
    }
    raw.prune()
}

impl PathAutomaton {
    /// `[A] ∪ [B]`, built on pairs of optional states so the result stays
    /// deterministic, then minimized.
    pub fn union(&self, other: &Self) -> Self {
        product(self, other, ProductMode::Union).minimize()
    }

    /// `[A] ∩ [B]`.
    pub fn intersect(&self, other: &Self) -> Self {
        product(self, other, ProductMode::Intersection)
    }

    /// `[A] ∩ c`.
    pub fn restrict(&self, clopen: &Clopen) -> Self {
        self.intersect(&Self::from_clopen(clopen))
    }

    /// An automaton whose path set is exactly `clopen`.
    pub fn from_clopen(clopen: &Clopen) -> Self {
        fn build(
            c: &Clopen,
            raw: &mut RawAutomaton,
            full: &mut Option<StateId>,
        ) -> Option<StateId> {
            if c.is_empty() {
                return None;
            }
            if c.is_full() {
                return Some(*full.get_or_insert_with(|| {
                    let q = raw.add_state("all");
                    raw.set_edge(q, 0, q);
                    raw.set_edge(q, 1, q);
                    q
                }));
            }
            let q = raw.add_anon();
            for bit in 0..2u8 {
                if let Some(t) = build(&c.residual(bit), raw, full) {
                    raw.set_edge(q, bit, t);
                }
            }
            Some(q)
        }
        let mut raw = RawAutomaton::new();
        if let Some(root) = build(clopen, &mut raw, &mut None) {
            raw.set_root(root);
        }
        raw.prune()
    }

    /// Whether both automata denote the same closed set: the reachable pair
    /// states must agree on which edges exist (bisimulation of pruned
    /// deterministic automata).
    pub fn set_eq(&self, other: &Self) -> bool {
        let (Some(ra), Some(rb)) = (self.root(), other.root()) else {
            return self.is_empty() && other.is_empty();
        };
        let mut seen = HashSet::from([(ra, rb)]);
        let mut queue = VecDeque::from([(ra, rb)]);
        while let Some((p, q)) = queue.pop_front() {
            for bit in 0..2u8 {
                match (self.step(p, bit), other.step(q, bit)) {
                    (None, None) => {}
                    (Some(p2), Some(q2)) => {
                        if seen.insert((p2, q2)) {
                            queue.push_back((p2, q2));
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    /// `[A] ⊆ [B]`.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersect(other).set_eq(self)
    }

    /// Merges states with equal residual path sets (Moore partition
    /// refinement). For pruned automata, equal residual prefix languages
    /// and equal residual path sets coincide.
    pub fn minimize(&self) -> Self {
        if self.is_empty() {
            return Self::empty();
        }
        let mut class: Vec<usize> = self
            .states()
            .map(|q| {
                (self.step(q, 0).is_some() as usize) | (self.step(q, 1).is_some() as usize) << 1
            })
            .collect();
        loop {
            let mut signatures: HashMap<(usize, Option<usize>, Option<usize>), usize> =
                HashMap::new();
            let refined: Vec<usize> = self
                .states()
                .map(|q| {
                    let sig = (
                        class[q],
                        self.step(q, 0).map(|t| class[t]),
                        self.step(q, 1).map(|t| class[t]),
                    );
                    let next = signatures.len();
                    *signatures.entry(sig).or_insert(next)
                })
                .collect();
            let before = class.iter().collect::<HashSet<_>>().len();
            let stable = signatures.len() == before;
            class = refined;
            if stable {
                break;
            }
        }

        let classes = class.iter().max().map_or(0, |m| m + 1);
        let mut raw = RawAutomaton::new();
        let mut representative = vec![None; classes];
        for q in self.states() {
            if representative[class[q]].is_none() {
                representative[class[q]] = Some(q);
            }
        }
        for rep in &representative {
            raw.add_state(self.name(rep.unwrap()).to_string());
        }
        for q in self.states() {
            for (bit, t) in self.successors(q) {
                raw.set_edge(class[q], bit, class[t]);
            }
        }
        raw.set_root(class[self.root().unwrap()]);
        raw.prune()
    }

    /// The image under swapping `0` and `1` in every word.
    pub fn flip_bits(&self) -> Self {
        let mut raw = self.to_raw();
        for e in raw.edges.iter_mut() {
            e.swap(0, 1);
        }
        raw.prune()
    }

    /// `prefix·[A]`.
    pub fn with_prefix(&self, prefix: &[u8]) -> Self {
        if self.is_empty() {
            return Self::empty();
        }
        let mut raw = self.to_raw();
        let mut next = self.root().unwrap();
        for &bit in prefix.iter().rev() {
            let q = raw.add_anon();
            raw.set_edge(q, bit, next);
            next = q;
        }
        raw.set_root(next);
        raw.prune()
    }

    /// Splits every state into two copies that alternate, without changing
    /// the path set.
    pub fn split_states(&self) -> Self {
        let n = self.len();
        let mut raw = RawAutomaton::new();
        for copy in 0..2 {
            for q in self.states() {
                raw.add_state(format!("{}'{}", self.name(q), copy));
            }
        }
        for copy in 0..2 {
            for q in self.states() {
                for (bit, t) in self.successors(q) {
                    raw.set_edge(copy * n + q, bit, (1 - copy) * n + t);
                }
            }
        }
        if let Some(r) = self.root() {
            raw.set_root(r);
        }
        raw.prune()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cantor::UpWord;

    fn w(s: &str) -> UpWord {
        s.parse().unwrap()
    }

    fn canon(k: usize) -> PathAutomaton {
        // states 0..k each loop on 1 and step to the next on 0; state k loops on 0
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, 1, i));
            edges.push((i, 0, i + 1));
        }
        edges.push((k, 0, k));
        PathAutomaton::from_edges(k + 1, 0, &edges)
    }

    #[test]
    fn union_of_two_points() {
        let zero = PathAutomaton::singleton(&w("(0)^w"));
        let one = PathAutomaton::singleton(&w("(1)^w"));
        let u = zero.union(&one);
        assert!(u.contains(&w("(0)^w")) && u.contains(&w("(1)^w")));
        assert!(!u.contains(&w("1(0)^w")));
        assert_eq!(u.len(), 3);
    }

    #[test]
    fn intersect_full_with_cylinder() {
        let sub = PathAutomaton::full().restrict(&"[1*]".parse().unwrap());
        let expected = PathAutomaton::full().with_prefix(&[1]);
        assert!(sub.set_eq(&expected));
        assert!(!sub.contains(&w("0(1)^w")));
    }

    #[test]
    fn set_eq_examples() {
        let a = PathAutomaton::singleton(&w("(1)^w"));
        let b = PathAutomaton::from_edges(2, 0, &[(0, 1, 1), (1, 1, 0)]);
        assert!(a.set_eq(&b));
        assert!(!canon(1).set_eq(&canon(2)));
        // 10(0)^w separates them: only Canon(2) has a path after 10
        assert!(canon(2).contains(&w("10(0)^w")));
        let padded = {
            let mut raw = canon(2).to_raw();
            let dead = raw.add_anon();
            let unreachable = raw.add_anon();
            raw.set_edge(2, 1, dead);
            raw.set_edge(unreachable, 0, unreachable);
            raw.prune()
        };
        assert!(canon(2).set_eq(&padded));
        assert!(PathAutomaton::empty().set_eq(&PathAutomaton::empty()));
        assert!(!PathAutomaton::empty().set_eq(&a));
    }

    #[test]
    fn minimize_merges_split_states() {
        let a = canon(3);
        let s = a.split_states();
        assert!(s.len() > a.len());
        assert!(s.set_eq(&a));
        assert_eq!(s.minimize().len(), a.len());
    }

    #[test]
    fn from_clopen_round_trip() {
        for s in ["[]", "[*]", "[0*]", "[01*, 1*]", "[001*, 11*]"] {
            let c: Clopen = s.parse().unwrap();
            let a = PathAutomaton::from_clopen(&c);
            for x in ["(0)^w", "(1)^w", "01(0)^w", "001(1)^w", "11(0)^w", "(10)^w"] {
                assert_eq!(a.contains(&w(x)), c.contains(&w(x)), "{s} {x}");
            }
        }
    }

    #[test]
    fn subset_and_flip() {
        assert!(canon(1).is_subset(&canon(2)));
        assert!(!canon(2).is_subset(&canon(1)));
        let f = canon(1).flip_bits();
        assert!(f.contains(&w("0001(1)^w")));
        assert!(f.contains(&w("(0)^w")));
    }
}

use std::fmt;
use std::str::FromStr;

use super::{bits_to_string, parse_bits, Bits, UpWord};
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Empty,
    Full,
    Split(Box<Node>, Box<Node>),
}

impl Node {
    fn split(zero: Node, one: Node) -> Node {
        match (zero, one) {
            (Node::Empty, Node::Empty) => Node::Empty,
            (Node::Full, Node::Full) => Node::Full,
            (a, b) => Node::Split(Box::new(a), Box::new(b)),
        }
    }

    fn children(&self) -> (Node, Node) {
        match self {
            Node::Split(a, b) => ((**a).clone(), (**b).clone()),
            leaf => (leaf.clone(), leaf.clone()),
        }
    }

    fn complement(&self) -> Node {
        match self {
            Node::Empty => Node::Full,
            Node::Full => Node::Empty,
            Node::Split(a, b) => Node::split(a.complement(), b.complement()),
        }
    }

    fn combine(&self, other: &Node, union: bool) -> Node {
        match (self, other) {
            (Node::Full, _) | (_, Node::Full) if union => Node::Full,
            (Node::Empty, x) | (x, Node::Empty) if union => x.clone(),
            (Node::Empty, _) | (_, Node::Empty) => Node::Empty,
            (Node::Full, x) | (x, Node::Full) => x.clone(),
            (Node::Split(a0, a1), Node::Split(b0, b1)) => {
                Node::split(a0.combine(b0, union), a1.combine(b1, union))
            }
        }
    }

    fn depth(&self) -> usize {
        match self {
            Node::Split(a, b) => 1 + a.depth().max(b.depth()),
            _ => 0,
        }
    }

    fn collect_full(&self, path: &mut Bits, out: &mut Vec<Bits>) {
        match self {
            Node::Empty => {}
            Node::Full => out.push(path.clone()),
            Node::Split(a, b) => {
                for (bit, child) in [(0, a), (1, b)] {
                    path.push(bit);
                    child.collect_full(path, out);
                    path.pop();
                }
            }
        }
    }
}

/// A clopen subset of Cantor space: a finite union of cylinders.
///
/// Stored as a reduced binary decision tree, which is canonical: the tree
/// height is the minimal depth `k` at which the set is a union of
/// length-`k` cylinders, and equal sets have identical trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clopen {
    root: Node,
}

impl Clopen {
    pub fn empty() -> Self {
        Self { root: Node::Empty }
    }

    pub fn full() -> Self {
        Self { root: Node::Full }
    }

    /// The cylinder `[prefix*]` of all words starting with `prefix`.
    pub fn cylinder(prefix: &[u8]) -> Self {
        let root = prefix.iter().rev().fold(Node::Full, |node, &bit| {
            if bit == 0 {
                Node::split(node, Node::Empty)
            } else {
                Node::split(Node::Empty, node)
            }
        });
        Self { root }
    }

    /// The union of cylinders over `cells`, which may have any lengths.
    pub fn from_cells<'a>(cells: impl IntoIterator<Item = &'a [u8]>) -> Self {
        cells
            .into_iter()
            .fold(Self::empty(), |acc, cell| acc.union(&Self::cylinder(cell)))
    }

    /// Minimal depth of a cylinder representation.
    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    /// The allowed words of length [`depth`](Self::depth).
    pub fn allowed(&self) -> Vec<Bits> {
        let k = self.depth();
        let mut out = Vec::new();
        for prefix in self.cells() {
            let free = k - prefix.len();
            for fill in 0u64..(1 << free) {
                let mut word = prefix.clone();
                word.extend((0..free).rev().map(|i| ((fill >> i) & 1) as u8));
                out.push(word);
            }
        }
        out.sort();
        out
    }

    /// Maximal cylinders contained in the set, as a prefix list.
    pub fn cells(&self) -> Vec<Bits> {
        let mut out = Vec::new();
        self.root.collect_full(&mut Vec::new(), &mut out);
        out
    }

    pub fn complement(&self) -> Self {
        Self {
            root: self.root.complement(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            root: self.root.combine(&other.root, true),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            root: self.root.combine(&other.root, false),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.root == Node::Empty
    }

    pub fn is_full(&self) -> bool {
        self.root == Node::Full
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersection(&other.complement()).is_empty()
    }

    pub fn contains(&self, word: &UpWord) -> bool {
        let mut node = &self.root;
        let mut i = 0;
        loop {
            match node {
                Node::Empty => return false,
                Node::Full => return true,
                Node::Split(a, b) => {
                    node = if word.bit(i) == 0 { a } else { b };
                    i += 1;
                }
            }
        }
    }

    /// Whether the finite word `prefix` can be extended into the set.
    pub fn meets_cylinder(&self, prefix: &[u8]) -> bool {
        !self.intersection(&Self::cylinder(prefix)).is_empty()
    }

    /// The residual set `{x : bit·x ∈ self}`.
    pub fn residual(&self, bit: u8) -> Self {
        let (a, b) = self.root.children();
        Self {
            root: if bit == 0 { a } else { b },
        }
    }
}

impl fmt::Display for Clopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .cells()
            .iter()
            .map(|c| format!("{}*", bits_to_string(c)))
            .collect();
        write!(f, "[{}]", cells.join(", "))
    }
}

impl FromStr for Clopen {
    type Err = ParseError;

    /// Accepts a prefix list such as `[0*, 10*]`; `[]` is empty and `[*]` is
    /// the whole space.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| ParseError::new(0, "clopen must be written as `[p*, q*, ...]`"))?;
        let mut set = Self::empty();
        if inner.trim().is_empty() {
            return Ok(set);
        }
        let mut offset = 1;
        for item in inner.split(',') {
            let cell = item
                .trim()
                .strip_suffix('*')
                .and_then(parse_bits)
                .ok_or_else(|| {
                    ParseError::new(offset, format!("bad cylinder `{}`", item.trim()))
                })?;
            set = set.union(&Self::cylinder(&cell));
            offset += item.len() + 1;
        }
        Ok(set)
    }
}

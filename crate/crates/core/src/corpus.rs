//! Fixed families used by the check suite, the examples and the tests.

use crate::automaton::{PathAutomaton, RawAutomaton};
use crate::cantor::UpWord;
use crate::dsl::FamilyExpr;
use crate::oracle;

#[derive(Clone, Debug)]
pub struct NamedAutomaton {
    pub name: String,
    pub automaton: PathAutomaton,
}

fn named(name: impl Into<String>, automaton: PathAutomaton) -> NamedAutomaton {
    NamedAutomaton {
        name: name.into(),
        automaton,
    }
}

fn compiled(src: &str) -> PathAutomaton {
    let e: FamilyExpr = src.parse().expect("corpus expression parses");
    e.compile().expect("corpus expression compiles")
}

/// `Canon(k)`: a `k`-state comb of 1-loops closed by a 0-loop.
pub fn canon_automaton(k: usize) -> PathAutomaton {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, 1, i));
        edges.push((i, 0, i + 1));
    }
    edges.push((k, 0, k));
    PathAutomaton::from_edges(k + 1, 0, &edges)
}

/// A sequence `u·b^n·(1−b)·w` converging to `u·b^ω`.
pub fn converging_sequence(u: &[u8], b: u8, w: &UpWord) -> PathAutomaton {
    let mut raw = RawAutomaton::new();
    let chain: Vec<_> = u.iter().map(|_| raw.add_anon()).collect();
    let hub = raw.add_anon();
    for (i, &bit) in u.iter().enumerate() {
        raw.set_edge(chain[i], bit, chain.get(i + 1).copied().unwrap_or(hub));
    }
    raw.set_edge(hub, b, hub);
    let bits: Vec<u8> = w.prefix().iter().chain(w.period()).copied().collect();
    let tail: Vec<_> = bits.iter().map(|_| raw.add_anon()).collect();
    raw.set_edge(hub, 1 - b, tail[0]);
    for (i, &bit) in bits.iter().enumerate() {
        let next = tail.get(i + 1).copied().unwrap_or(tail[w.prefix().len()]);
        raw.set_edge(tail[i], bit, next);
    }
    raw.set_root(chain.first().copied().unwrap_or(hub));
    raw.prune()
}

/// Twenty converging sequences with varied prefixes, loop bits and tails.
pub fn converging_sequences() -> Vec<NamedAutomaton> {
    let tails = ["(0)^w", "(1)^w", "01(1)^w", "(01)^w", "1(100)^w"];
    (0..20usize)
        .map(|i| {
            let u: Vec<u8> = (0..i % 4).map(|j| ((i >> j) & 1) as u8).collect();
            let b = (i % 2) as u8;
            let w: UpWord = tails[i % tails.len()].parse().unwrap();
            named(format!("converging[{i}]"), converging_sequence(&u, b, &w))
        })
        .collect()
}

/// Rank 2 and degree 1 with `m + 1` rank-1 points in every block `[1ⁿ0]`:
/// each block carries a comb of `m + 1` converging sequences.
pub fn marked_blocks(m: usize) -> PathAutomaton {
    // states: r = 0, comb t_i = 1 + i, x = m + 1, z = m + 2
    let (r, x, z) = (0, m + 1, m + 2);
    let mut edges = vec![(r, 1, r), (r, 0, 1), (x, 1, x), (x, 0, z), (z, 0, z)];
    for i in 0..m {
        edges.push((1 + i, 0, x));
        edges.push((1 + i, 1, 2 + i));
    }
    PathAutomaton::from_edges(m + 3, r, &edges)
}

/// Two cycles through the root: `0·1` and `1·0`.
pub fn two_cycle() -> PathAutomaton {
    PathAutomaton::from_edges(3, 0, &[(0, 0, 1), (1, 1, 0), (0, 1, 2), (2, 0, 0)])
}

/// Hand-built and compiled families covering every rank shape the
/// automata can carry.
pub fn named_automata() -> Vec<NamedAutomaton> {
    let mut out = vec![
        named("empty", PathAutomaton::empty()),
        named(
            "point (0)^w",
            PathAutomaton::singleton(&UpWord::constant(0)),
        ),
        named(
            "point 01(1)^w",
            PathAutomaton::singleton(&"01(1)^w".parse().unwrap()),
        ),
        named(
            "point (011)^w",
            PathAutomaton::singleton(&"(011)^w".parse().unwrap()),
        ),
        named("full", PathAutomaton::full()),
        named("two cycle", two_cycle()),
        named("full or canon1", compiled("union(0:full, 1:canon(1,1))")),
        named(
            "two points",
            compiled("union(0:point((0)^w), 1:point((1)^w))"),
        ),
    ];
    for k in 0..=4 {
        out.push(named(format!("canon{k}"), canon_automaton(k)));
    }
    for (k, n) in [(1, 2), (1, 3), (2, 2), (3, 2), (0, 3)] {
        out.push(named(
            format!("canon({k},{n})"),
            compiled(&format!("canon({k},{n})")),
        ));
    }
    for m in 1..=3 {
        out.push(named(format!("marked blocks {m}"), marked_blocks(m)));
    }
    out.push(named("flipped canon2", canon_automaton(2).flip_bits()));
    out.push(named("split canon3", canon_automaton(3).split_states()));
    out.push(named("split two cycle", two_cycle().split_states()));
    out.push(named(
        "prefixed canon2",
        canon_automaton(2).with_prefix(&[0, 1, 1]),
    ));
    out.push(named(
        "canon1 or two cycle",
        canon_automaton(1)
            .with_prefix(&[0])
            .union(&two_cycle().with_prefix(&[1])),
    ));
    out.extend(converging_sequences().into_iter().step_by(4));
    out
}

/// Hand-written compilable expressions of nesting depth at most 4.
pub const FIXED_EXPRESSIONS: &[&str] = &[
    "empty",
    "full",
    "point((0)^w)",
    "point(1(01)^w)",
    "omega(point((0)^w))",
    "omega(point(1(0)^w))",
    "omega(omega(point((0)^w)))",
    "omega(omega(omega(point((1)^w))))",
    "omega(empty)",
    "omega(full)",
    "canon(0,1)",
    "canon(1,1)",
    "canon(2,1)",
    "canon(3,1)",
    "canon(1,4)",
    "canon(2,3)",
    "canon(3,2)",
    "union(0:point((0)^w), 1:point((1)^w))",
    "union(0:canon(2,1), 10:canon(1,3), 11:canon(2,2))",
    "union(0:canon(2,1), 1:canon(1,1))",
    "union(00:point((1)^w), 01:full, 1:omega(point((0)^w)))",
    "union(0:empty, 1:omega(point((0)^w)))",
    "union(:canon(1,2))",
    "omega(union(0:point((0)^w), 1:point((1)^w)))",
    "omega(union(0:canon(1,1), 1:point((01)^w)))",
    "union(0:omega(canon(1,2)), 1:omega(omega(point((0)^w))))",
    "omega(union(0:omega(point((1)^w)), 10:canon(2,1), 11:point((0)^w)))",
    "union(0:union(0:canon(1,1), 1:point((1)^w)), 1:omega(canon(0,2)))",
    "union(0:full, 1:canon(3,1))",
    "omega(omega(union(0:point((0)^w), 1:empty)))",
];

/// The fixed expressions followed by `random` seeded random ones.
pub fn dsl_corpus(seed: u64, random: usize) -> Vec<FamilyExpr> {
    let mut out: Vec<FamilyExpr> = FIXED_EXPRESSIONS
        .iter()
        .map(|s| s.parse().expect("fixed expression parses"))
        .collect();
    out.extend(oracle::random_exprs(seed, random, 4));
    out
}

/// Named automata followed by the compiled DSL corpus.
pub fn automaton_corpus(seed: u64) -> Vec<NamedAutomaton> {
    let mut out = named_automata();
    for e in dsl_corpus(seed, 30) {
        out.push(named(
            e.to_string(),
            e.compile().expect("corpus is compilable"),
        ));
    }
    out
}

pub type Pair = (NamedAutomaton, NamedAutomaton);

/// Pairs of different automata with equal (rank, degree), then pairs with
/// different invariants. All carriers are superatomic.
pub fn iso_pairs() -> (Vec<Pair>, Vec<Pair>) {
    let c = |s: &str| named(s, compiled(s));
    let a = |name: &str, x: PathAutomaton| named(name, x);
    let equal = vec![
        (c("canon(2,1)"), a("marked blocks 2", marked_blocks(2))),
        (c("canon(2,1)"), c("union(0:canon(2,1), 1:canon(1,1))")),
        (
            a("canon1", canon_automaton(1)),
            a("converging[3]", converging_sequences()[3].automaton.clone()),
        ),
        (
            a("canon3", canon_automaton(3)),
            a(
                "split prefixed canon3",
                canon_automaton(3).with_prefix(&[1, 0]).split_states(),
            ),
        ),
        (
            a("canon2", canon_automaton(2)),
            a("flipped canon2", canon_automaton(2).flip_bits()),
        ),
        (
            c("canon(1,2)"),
            c("union(0:omega(point((1)^w)), 1:union(0:canon(1,1), 1:point((0)^w)))"),
        ),
        (c("point((0)^w)"), c("point(1(01)^w)")),
        (
            c("canon(0,3)"),
            c("union(0:point((0)^w), 10:point((1)^w), 11:point(1(0)^w))"),
        ),
        (
            c("canon(3,2)"),
            c("union(0:canon(3,1), 1:omega(omega(union(0:canon(1,1), 1:omega(canon(0,2))))))"),
        ),
        (
            c("omega(omega(point((0)^w)))"),
            a(
                "prefixed canon2",
                canon_automaton(2).with_prefix(&[0, 1, 1]),
            ),
        ),
    ];
    let different = vec![
        (c("canon(1,1)"), c("canon(1,2)")),
        (c("canon(1,1)"), c("canon(2,1)")),
        (c("canon(2,1)"), c("canon(2,2)")),
        (c("point((0)^w)"), c("canon(0,2)")),
        (c("canon(0,3)"), c("canon(1,3)")),
        (
            a("canon3", canon_automaton(3)),
            a("canon4", canon_automaton(4)),
        ),
        (a("marked blocks 1", marked_blocks(1)), c("canon(1,2)")),
        (c("canon(3,1)"), c("canon(3,2)")),
        (
            a("converging[0]", converging_sequences()[0].automaton.clone()),
            c("canon(2,1)"),
        ),
        (c("union(0:canon(2,1), 1:canon(2,1))"), c("canon(2,1)")),
    ];
    (equal, different)
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{PathAutomaton, RawAutomaton};
use crate::cantor::UpWord;
use crate::dsl::FamilyExpr;
use crate::ordinal::Ordinal;

/// Seed used by the check suite and the property tests.
pub const DEFAULT_SEED: u64 = 0x5eed_ca17;

/// Draws `1..=max_states` states; each state gets both edges with
/// probability ½ and otherwise one edge on a random bit, with uniformly
/// random targets. The result is pruned, and empty draws are retried.
pub fn random_automaton<R: Rng>(rng: &mut R, max_states: usize) -> PathAutomaton {
    loop {
        let s = rng.gen_range(1..=max_states);
        let mut raw = RawAutomaton::new();
        for _ in 0..s {
            raw.add_anon();
        }
        for q in 0..s {
            if rng.gen_bool(0.5) {
                raw.set_edge(q, 0, rng.gen_range(0..s));
                raw.set_edge(q, 1, rng.gen_range(0..s));
            } else {
                raw.set_edge(q, rng.gen_range(0..2), rng.gen_range(0..s));
            }
        }
        raw.set_root(0);
        let a = raw.prune();
        if !a.is_empty() {
            return a;
        }
    }
}

pub fn random_automata(seed: u64, count: usize, max_states: usize) -> Vec<PathAutomaton> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_automaton(&mut rng, max_states))
        .collect()
}

fn random_word<R: Rng>(rng: &mut R) -> UpWord {
    let bits = |rng: &mut R, n: usize| (0..n).map(|_| rng.gen_range(0..2u8)).collect::<Vec<_>>();
    let ulen = rng.gen_range(0..=3);
    let vlen = rng.gen_range(1..=3);
    let (u, v) = (bits(rng, ulen), bits(rng, vlen));
    UpWord::new(u, v).unwrap()
}

/// Pairwise incomparable prefixes: the leaves of a random binary tree.
fn random_prefixes<R: Rng>(rng: &mut R, count: usize) -> Vec<Vec<u8>> {
    let mut leaves = vec![Vec::new()];
    while leaves.len() < count {
        let i = rng.gen_range(0..leaves.len());
        let leaf = leaves.swap_remove(i);
        let mut zero = leaf.clone();
        zero.push(0);
        let mut one = leaf;
        one.push(1);
        leaves.push(zero);
        leaves.push(one);
    }
    leaves.sort();
    leaves
}

/// A random compilable expression of nesting depth at most `depth`.
pub fn random_compilable_expr<R: Rng>(rng: &mut R, depth: usize) -> FamilyExpr {
    let leaf = depth == 0 || rng.gen_bool(0.2);
    if leaf {
        return match rng.gen_range(0..10) {
            0 => FamilyExpr::Empty,
            1 => FamilyExpr::FullSpace,
            2 | 3 => FamilyExpr::Canon(Ordinal::finite(rng.gen_range(0..=3)), rng.gen_range(1..=3)),
            _ => FamilyExpr::Singleton(random_word(rng)),
        };
    }
    if rng.gen_bool(0.45) {
        FamilyExpr::omega(random_compilable_expr(rng, depth - 1))
    } else {
        let count = rng.gen_range(1..=3);
        let branches = random_prefixes(rng, count)
            .into_iter()
            .map(|p| (p, random_compilable_expr(rng, depth - 1)))
            .collect();
        FamilyExpr::disjoint_union(branches).expect("prefixes are incomparable")
    }
}

pub fn random_exprs(seed: u64, count: usize, depth: usize) -> Vec<FamilyExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_compilable_expr(&mut rng, depth))
        .collect()
}

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cantor_rank::automaton::{Cardinality, PathAutomaton};
use cantor_rank::corpus;
use cantor_rank::oracle::{self, Isolation};
use cantor_rank::{Clopen, FamilyExpr, Ordinal, RankValue, TraceAlgebra, UpWord};

fn ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..6).prop_map(Ordinal::finite);
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop::collection::vec((inner, 1u64..4), 1..4).prop_map(|mut terms| {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            terms.dedup_by(|a, b| a.0 == b.0);
            Ordinal::from_terms(terms).unwrap()
        })
    })
}

fn limit_ordinal() -> impl Strategy<Value = Ordinal> {
    ordinal().prop_filter("limit", |a| a.is_limit())
}

fn bits(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 0..=max)
}

fn word() -> impl Strategy<Value = UpWord> {
    (bits(4), prop::collection::vec(0u8..2, 1..=4)).prop_map(|(u, v)| UpWord::new(u, v).unwrap())
}

fn clopen() -> impl Strategy<Value = Clopen> {
    prop::collection::vec(bits(4), 0..5)
        .prop_map(|cells| Clopen::from_cells(cells.iter().map(|c| c.as_slice())))
}

fn automaton() -> impl Strategy<Value = PathAutomaton> {
    any::<u64>().prop_map(|seed| oracle::random_automaton(&mut ChaCha8Rng::seed_from_u64(seed), 12))
}

fn expr() -> impl Strategy<Value = FamilyExpr> {
    any::<u64>()
        .prop_map(|seed| oracle::random_compilable_expr(&mut ChaCha8Rng::seed_from_u64(seed), 4))
}

/// A random walk from the root, closed into a lasso at the first repeated
/// state.
fn member(a: &PathAutomaton, seed: u64) -> UpWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut q = a.root().unwrap();
    let mut visited = Vec::new();
    let mut path = Vec::new();
    loop {
        if let Some(i) = visited.iter().position(|&p| p == q) {
            let period = path.split_off(i);
            return UpWord::new(path, period).unwrap();
        }
        visited.push(q);
        let options: Vec<(u8, usize)> = a.successors(q).collect();
        let (bit, next) = options[rng.gen_range(0..options.len())];
        path.push(bit);
        q = next;
    }
}

fn is_pruned(a: &PathAutomaton) -> bool {
    if a.is_empty() {
        return a.root().is_none();
    }
    let mut seen = vec![false; a.len()];
    let mut stack = vec![a.root().unwrap()];
    while let Some(q) = stack.pop() {
        if !std::mem::replace(&mut seen[q], true) {
            stack.extend(a.successors(q).map(|(_, t)| t));
        }
    }
    a.root() == Some(0) && seen.iter().all(|&s| s) && a.states().all(|q| a.out_degree(q) > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ordinal_order_is_total_and_succ_grows(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        prop_assert!(a.succ() > a);
        prop_assert_eq!(a.succ().pred(), Some(a.clone()));
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn fundamental_sequences_climb(l in limit_ordinal(), n in 0u64..20) {
        let x = l.fund_seq(n).unwrap();
        let y = l.fund_seq(n + 1).unwrap();
        prop_assert!(x < l && x < y);
    }

    #[test]
    fn canonical_words(w in word(), u in bits(4)) {
        let again = UpWord::new(w.prefix().to_vec(), w.period().to_vec()).unwrap();
        prop_assert_eq!(&again, &w);
        let p = w.prepend(&u);
        prop_assert_eq!(p.shift(u.len()), w.clone());
        prop_assert_eq!(p.take(u.len()), u);
    }

    #[test]
    fn clopen_complement_membership(c in clopen(), w in word()) {
        prop_assert_eq!(c.complement().contains(&w), !c.contains(&w));
        prop_assert_eq!(c.complement().complement(), c);
    }

    #[test]
    fn pruned_invariant_is_preserved(a in automaton()) {
        prop_assert!(is_pruned(&a));
        prop_assert!(is_pruned(&a.derivative()));
        prop_assert!(is_pruned(&a.kernel()));
        prop_assert!(is_pruned(&a.minimize()));
        prop_assert_eq!(a.to_raw().prune(), a);
    }

    #[test]
    fn derivative_shrinks(a in automaton()) {
        let d = a.derivative();
        prop_assert!(d.is_subset(&a));
        let r = a.rank_degree();
        if r.rank == RankValue::finite(0) {
            prop_assert!(d.is_empty());
        }
        prop_assert!(r.chain.len() - 1 <= a.len());
    }

    #[test]
    fn derivative_and_rank_respect_union(a in automaton(), b in automaton()) {
        let u = a.union(&b);
        prop_assert!(u.derivative().set_eq(&a.derivative().union(&b.derivative())));
        let (ra, rb, ru) = (a.rank_degree(), b.rank_degree(), u.rank_degree());
        prop_assert_eq!(&ru.rank, std::cmp::max(&ra.rank, &rb.rank));
        // monotonicity along a ⊆ a ∪ b
        prop_assert!(ra.rank <= ru.rank);
        if ra.rank == ru.rank && ra.degree.is_some() {
            prop_assert!(ra.degree <= ru.degree);
        }
        let i = a.intersect(&b);
        prop_assert!(i.is_subset(&a) && i.rank_degree().rank <= ra.rank);
    }

    #[test]
    fn top_derivative_holds_degree_points(a in automaton()) {
        let r = a.rank_degree();
        if let RankValue::Ord(alpha) = &r.rank {
            let n = alpha.as_finite().unwrap() as usize;
            let top = r.chain[n].finite_points().unwrap();
            prop_assert_eq!(Some(top.len()), r.degree);
            for w in &top {
                prop_assert_eq!(a.point_rank(w).unwrap(), r.rank.clone());
            }
        }
    }

    #[test]
    fn kernel_trichotomy(a in automaton()) {
        let k = a.kernel();
        prop_assert_eq!(k.kernel(), k.clone());
        let perfect = !k.is_empty();
        prop_assert_eq!(perfect, a.rank_degree().rank == RankValue::Infinity);
        prop_assert_eq!(perfect, a.cardinality_class() == Cardinality::Continuum);
        prop_assert_eq!(perfect, oracle::kernel_nonempty_by_cycles(&a));
        prop_assert_eq!(perfect, a.two_tree_witness().is_some());
    }

    #[test]
    fn oracle_agrees(a in automaton()) {
        prop_assert!(oracle::derivative_naive(&a).set_eq(&a.derivative()));
        let (fast, slow) = (a.rank_degree(), oracle::rank_naive(&a));
        prop_assert_eq!(fast.rank, slow.rank);
        prop_assert_eq!(fast.degree, slow.degree);
        prop_assert_eq!(fast.top_points, slow.top_points);
    }

    #[test]
    fn isolation_matches_point_rank(a in automaton(), seed in any::<u64>()) {
        let w = member(&a, seed);
        let k = w.prefix().len() + (a.len() + 1) * w.period().len();
        let isolated = oracle::isolation_bruteforce(&a, &w, k).unwrap() != Isolation::Unknown;
        prop_assert_eq!(isolated, a.point_rank(&w).unwrap() == RankValue::finite(0));
    }

    #[test]
    fn text_format_round_trips(a in automaton()) {
        let back: PathAutomaton = a.to_string().parse().unwrap();
        prop_assert!(back.set_eq(&a));
        prop_assert_eq!(back, a);
    }

    #[test]
    fn invariants_survive_representation_changes(a in automaton()) {
        let split = a.split_states();
        prop_assert!(split.set_eq(&a));
        let mut padded = a.to_raw();
        let dead = padded.add_anon();
        padded.set_edge(0, 1, a.step(0, 1).unwrap_or(dead));
        let padded = padded.prune();
        prop_assert!(padded.set_eq(&a));
        let h = TraceAlgebra::new(a.clone());
        if h.is_superatomic() {
            let inv = h.cb_invariants().unwrap();
            prop_assert_eq!(TraceAlgebra::new(split).cb_invariants().unwrap(), inv.clone());
            prop_assert_eq!(TraceAlgebra::new(padded).cb_invariants().unwrap(), inv);
        }
    }

    #[test]
    fn atoms_are_isolated_cylinders(a in automaton(), p in bits(5)) {
        let h = TraceAlgebra::new(a.clone());
        let suffix = a.deterministic_suffix_states();
        let expected = a.run(&p).is_some_and(|q| suffix[q]);
        prop_assert_eq!(h.is_atom(&Clopen::cylinder(&p)), expected);
    }

    #[test]
    fn evaluator_agrees_with_compiler(e in expr()) {
        let p = e.evaluate();
        let r = e.compile().unwrap().rank_degree();
        prop_assert_eq!(&p.rank, &r.rank);
        prop_assert_eq!(p.degree, r.degree.map(|d| d as u64));
        prop_assert_eq!(&p.top_points, &r.top_points);
        let a = e.compile().unwrap();
        for w in e.enumerate_generators(40) {
            prop_assert!(a.contains(&w), "{} not in {}", w, e);
        }
    }

    #[test]
    fn espec_rules(e in expr()) {
        let p = e.evaluate();
        match &p.rank {
            RankValue::Ord(a) if *a == Ordinal::finite(1) => {
                if let Cardinality::Finite(k) = p.espec {
                    prop_assert_eq!(Some(k as u64), p.degree);
                }
            }
            RankValue::Ord(a) if *a >= Ordinal::finite(2) => prop_assert!(p.espec >= Cardinality::Aleph0),
            _ => {}
        }
        prop_assert_eq!(p.rank == RankValue::Infinity, p.espec == Cardinality::Continuum);
    }

    #[test]
    fn adding_a_branch_never_lowers_rank(e in expr(), f in expr()) {
        let joined = FamilyExpr::disjoint_union(vec![(vec![0], e.clone()), (vec![1], f)]).unwrap();
        prop_assert!(joined.evaluate().rank >= e.evaluate().rank);
    }

    #[test]
    fn canon_realizes_its_parameters(a in ordinal(), n in 1u64..=5) {
        let p = FamilyExpr::Canon(a.clone(), n).evaluate();
        prop_assert_eq!(p.rank, RankValue::Ord(a));
        prop_assert_eq!(p.degree, Some(n));
    }
}

#[test]
fn fundamental_sequences_are_cofinal() {
    let small: Vec<Ordinal> = [
        "0",
        "1",
        "5",
        "w",
        "w+3",
        "w*2",
        "w*5+1",
        "w^2",
        "w^2+w",
        "w^2*3+w*2+7",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    for l in small.iter().filter(|l| l.is_limit()) {
        for b in small.iter().filter(|b| *b < l) {
            assert!(
                (0..=64).any(|n| l.fund_seq(n).unwrap() >= *b),
                "{l} over {b}"
            );
        }
    }
}

#[test]
fn clopen_laws_at_depth_four() {
    let cells: Vec<Vec<u8>> = (0..16u8)
        .map(|i| (0..4).map(|j| (i >> (3 - j)) & 1).collect())
        .collect();
    // every clopen of depth ≤ 4 is a union of depth-4 cells
    let sets: Vec<Clopen> = (0..1u32 << 16)
        .step_by(257)
        .map(|mask| {
            Clopen::from_cells(
                cells
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, c)| c.as_slice()),
            )
        })
        .collect();
    for a in &sets {
        for b in &sets {
            assert_eq!(
                a.union(b).complement(),
                a.complement().intersection(&b.complement())
            );
            assert_eq!(a.union(b), b.union(a));
            assert_eq!(a.intersection(&a.union(b)), *a);
        }
    }
}

#[test]
fn iso_is_an_equivalence() {
    let carriers: Vec<TraceAlgebra> = corpus::named_automata()
        .into_iter()
        .map(|c| TraceAlgebra::new(c.automaton))
        .filter(|h| h.is_superatomic() && !h.carrier().is_empty())
        .collect();
    let iso = |a: &TraceAlgebra, b: &TraceAlgebra| a.iso_equivalent(b).unwrap();
    for a in &carriers {
        assert!(iso(a, a));
        for b in &carriers {
            assert_eq!(iso(a, b), iso(b, a));
            for c in &carriers {
                if iso(a, b) && iso(b, c) {
                    assert!(iso(a, c));
                }
            }
        }
    }
}

#[test]
fn superatomic_iff_ordinal_rank_on_corpus() {
    for c in corpus::automaton_corpus(oracle::DEFAULT_SEED) {
        let h = TraceAlgebra::new(c.automaton.clone());
        assert_eq!(
            h.is_superatomic(),
            c.automaton.rank_degree().rank != RankValue::Infinity,
            "{}",
            c.name
        );
    }
}

#[test]
fn coherence_on_dsl_corpus() {
    for e in corpus::dsl_corpus(oracle::DEFAULT_SEED, 30) {
        let r = oracle::sample_coherence(&e, 200).unwrap();
        assert!(r.passed(), "{e}: {r}");
    }
}

//! The acceptance battery, shared by the `check-suite` command and the
//! `acceptance` test target.

use std::fmt;
use std::time::{Duration, Instant};

use crate::automaton::{Cardinality, DerivativeReport, LeastGeneratingSet, PathAutomaton};
use crate::balg::TraceAlgebra;
use crate::cantor::{Clopen, UpWord};
use crate::corpus::{self, NamedAutomaton};
use crate::dsl::FamilyExpr;
use crate::oracle::{self, Isolation};
use crate::ordinal::{Ordinal, RankValue};

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}: {} ({:.3}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub seed: u64,
    pub results: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed: {:#x}", self.seed)?;
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        let failed = self.results.iter().filter(|r| !r.passed).count();
        writeln!(
            f,
            "summary: {} passed, {failed} failed",
            self.results.len() - failed
        )
    }
}

pub const CRITERIA: &[(u8, &str)] = &[
    (1, "converging sequences are e-minimal"),
    (2, "rank-2 comb"),
    (3, "e-spectrum of canon(1,n)"),
    (4, "e-spectrum of canon(2,1)"),
    (5, "evaluator agrees with compiled automata"),
    (6, "kernel / rank / cardinality trichotomy"),
    (7, "canonical families realize (alpha, n)"),
    (8, "derivative commutes with union"),
    (9, "least generating sets"),
    (10, "superatomicity and isomorphism"),
    (11, "oracle equivalence"),
    (12, "whole suite under 60 s"),
];

const RANDOM_AUTOMATA: usize = 200;
const RANDOM_PAIRS: usize = 100;
const MAX_STATES: usize = 12;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expr(s: &str) -> FamilyExpr {
    s.parse().expect("built-in expression parses")
}

fn pair(r: &DerivativeReport) -> String {
    match r.degree {
        Some(d) => format!("({}, {d})", r.rank),
        None => format!("({})", r.rank),
    }
}

fn c1() -> Outcome {
    let start = Instant::now();
    let family = corpus::converging_sequences();
    for c in &family {
        let a = &c.automaton;
        let r = a.rank_degree();
        check(
            r.rank == RankValue::finite(1) && r.degree == Some(1),
            || format!("{}: rank/degree {}", c.name, pair(&r)),
        )?;
        // the accumulation points are exactly the first derivative
        let limits = r.chain[1].finite_points().unwrap_or_default();
        check(limits.len() == 1, || {
            format!("{}: {} accumulation points", c.name, limits.len())
        })?;
        check(a.is_accumulation_point(&limits[0]), || {
            format!("{}: limit not detected", c.name)
        })?;
        let lgs = a.least_generating_set_info().map_err(|e| e.to_string())?;
        if let LeastGeneratingSet::Isolated(isolated) = lgs {
            if let Some(p) = isolated.iter().find(|s| a.is_accumulation_point(&s.point)) {
                return Err(format!(
                    "{}: isolated {} reported as a limit",
                    c.name, p.point
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} automata, each (1, 1) with one limit",
        family.len()
    ))
}

fn c2() -> Outcome {
    let e = expr("canon(2,1)");
    let p = e.evaluate();
    check(
        p.rank == RankValue::finite(2) && p.degree == Some(1),
        || format!("evaluate gave {p:?}"),
    )?;
    let a = e.compile().map_err(|e| e.to_string())?;
    let r = a.rank_degree();
    check(r.rank == p.rank && r.degree == Some(1), || {
        format!("compiled gave {}", pair(&r))
    })?;
    let top = UpWord::constant(1);
    let pr = a.point_rank(&top).map_err(|e| e.to_string())?;
    check(pr == RankValue::finite(2), || format!("point rank {pr}"))?;
    check(a.is_accumulation_point(&top), || {
        "(1)^w is not a limit of the family".into()
    })?;
    for n in 0..16 {
        let mut block = vec![1u8; n];
        block.push(0);
        let part = a.restrict(&Clopen::cylinder(&block));
        check(!part.is_accumulation_point(&top), || {
            format!(
                "(1)^w is a limit inside block {}",
                crate::cantor::bits_to_string(&block)
            )
        })?;
    }
    Ok("(2, 1) symbolically and compiled; (1)^w has rank 2 and is a limit of no block".into())
}

fn c3() -> Outcome {
    for n in 1..=10u64 {
        let p = FamilyExpr::Canon(Ordinal::finite(1), n).evaluate();
        check(
            p.espec == Cardinality::Finite(n as usize) && p.degree == Some(n),
            || format!("canon(1,{n}): espec {} degree {:?}", p.espec, p.degree),
        )?;
        let r = FamilyExpr::Canon(Ordinal::finite(1), n)
            .compile()
            .unwrap()
            .rank_degree();
        check(r.degree == Some(n as usize), || {
            format!("canon(1,{n}) compiled degree {:?}", r.degree)
        })?;
    }
    Ok("espec = degree = n for n = 1..10".into())
}

fn c4() -> Outcome {
    let p = expr("canon(2,1)").evaluate();
    check(p.espec == Cardinality::Aleph0, || {
        format!("espec {}", p.espec)
    })?;
    Ok("espec = aleph0".into())
}

fn c5(seed: u64) -> Outcome {
    let start = Instant::now();
    let exprs = corpus::dsl_corpus(seed, 30);
    for e in &exprs {
        check(e.depth() <= 4, || format!("{e}: depth {}", e.depth()))?;
        let p = e.evaluate();
        let r = e
            .compile()
            .map_err(|err| format!("{e}: {err}"))?
            .rank_degree();
        let degree = r.degree.map(|d| d as u64);
        check(
            p.rank == r.rank && p.degree == degree && p.top_points == r.top_points,
            || {
                format!(
                    "{e}: evaluate {} {:?}, automaton {}",
                    p.rank,
                    p.degree,
                    pair(&r)
                )
            },
        )?;
        let coherence = oracle::sample_coherence(e, 60).map_err(|err| err.to_string())?;
        check(coherence.passed(), || format!("{e}: {coherence}"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} expressions agree and enumerate coherently",
        exprs.len()
    ))
}

fn c6(seed: u64) -> Outcome {
    let mut perfect = 0;
    for (i, a) in oracle::random_automata(seed, RANDOM_AUTOMATA, MAX_STATES)
        .iter()
        .enumerate()
    {
        let kernel = !a.kernel().is_empty();
        let infinite = a.rank_degree().rank == RankValue::Infinity;
        let continuum = a.cardinality_class() == Cardinality::Continuum;
        let cycles = oracle::kernel_nonempty_by_cycles(a);
        check(
            kernel == infinite && infinite == continuum && continuum == cycles,
            || {
                format!("random #{i}: kernel {kernel}, rank infty {infinite}, continuum {continuum}, two cycles {cycles}\n{a}")
            },
        )?;
        perfect += kernel as usize;
    }
    Ok(format!(
        "{RANDOM_AUTOMATA} automata ({perfect} with a kernel)"
    ))
}

fn c7() -> Outcome {
    let alphas = ["0", "1", "2", "3", "w", "w+1", "w*2", "w^2", "w^2+w*3+2"];
    for a in alphas {
        let alpha: Ordinal = a.parse().unwrap();
        for n in 1..=3u64 {
            let e = FamilyExpr::Canon(alpha.clone(), n);
            let p = e.evaluate();
            check(
                p.rank == RankValue::Ord(alpha.clone()) && p.degree == Some(n),
                || format!("{e}: ({}, {:?})", p.rank, p.degree),
            )?;
            if e.is_compilable() {
                let r = e.compile().unwrap().rank_degree();
                check(r.rank == p.rank && r.degree == Some(n as usize), || {
                    format!("{e} compiled: {}", pair(&r))
                })?;
            }
        }
    }
    Ok(format!("{} ordinals x 3 degrees", alphas.len()))
}

fn c8(seed: u64) -> Outcome {
    let xs = oracle::random_automata(seed ^ 0x8, 2 * RANDOM_PAIRS, MAX_STATES);
    for (i, ab) in xs.chunks(2).enumerate() {
        let (a, b) = (&ab[0], &ab[1]);
        let lhs = a.union(b).derivative();
        let rhs = a.derivative().union(&b.derivative());
        check(lhs.set_eq(&rhs), || format!("pair #{i}:\n{a}\n{b}"))?;
    }
    Ok(format!("{RANDOM_PAIRS} random pairs"))
}

/// Enough cylinder depth to see the run of `w` settle into its cycle.
fn isolation_depth(a: &PathAutomaton, w: &UpWord) -> usize {
    w.prefix().len() + (a.len() + 1) * w.period().len()
}

fn c9(seed: u64) -> Outcome {
    let corpus = corpus::automaton_corpus(seed);
    let (mut dense, mut sparse, mut confirmed) = (0, 0, 0);
    for NamedAutomaton { name, automaton: a } in corpus.iter().filter(|c| !c.automaton.is_empty()) {
        let info = a
            .least_generating_set_info()
            .map_err(|e| format!("{name}: {e}"))?;
        let brute = oracle::isolated_points_dense_bruteforce(a);
        check(info.exists() == brute, || {
            format!("{name}: engine {}, brute force {brute}", info.exists())
        })?;
        match info {
            LeastGeneratingSet::Isolated(states) => {
                dense += 1;
                for s in states {
                    let k = isolation_depth(a, &s.point);
                    let iso = oracle::isolation_bruteforce(a, &s.point, k)
                        .map_err(|e| format!("{name}: {e}"))?;
                    check(matches!(iso, Isolation::Isolated { .. }), || {
                        format!("{name}: {} not confirmed isolated", s.point)
                    })?;
                    confirmed += 1;
                }
            }
            LeastGeneratingSet::NotDense { witness } => {
                sparse += 1;
                let part = a.restrict(&witness);
                check(
                    !part.is_empty()
                        && part
                            .least_generating_set_info()
                            .is_ok_and(|i| matches!(i, LeastGeneratingSet::NotDense { .. }))
                        && part.deterministic_suffix_states().iter().all(|d| !d),
                    || format!("{name}: witness {witness} contains an isolated point"),
                )?;
            }
        }
    }
    Ok(format!(
        "{dense} with, {sparse} without; {confirmed} generators confirmed isolated"
    ))
}

fn c10(seed: u64) -> Outcome {
    let corpus = corpus::automaton_corpus(seed);
    for c in &corpus {
        let h = TraceAlgebra::new(c.automaton.clone());
        let finite_rank = c.automaton.rank_degree().rank != RankValue::Infinity;
        check(h.is_superatomic() == finite_rank, || {
            format!("{}: superatomic mismatch", c.name)
        })?;
    }
    let (equal, different) = corpus::iso_pairs();
    for (expected, pairs) in [(true, &equal), (false, &different)] {
        for (a, b) in pairs {
            check(!a.automaton.set_eq(&b.automaton), || {
                format!("{} and {} are the same set", a.name, b.name)
            })?;
            let got = TraceAlgebra::new(a.automaton.clone())
                .iso_equivalent(&TraceAlgebra::new(b.automaton.clone()))
                .map_err(|e| format!("{} vs {}: {e}", a.name, b.name))?;
            check(got == expected, || {
                format!("{} vs {}: expected {expected}", a.name, b.name)
            })?;
        }
    }
    Ok(format!(
        "{} carriers; {} isomorphic and {} non-isomorphic pairs",
        corpus.len(),
        equal.len(),
        different.len()
    ))
}

fn c11(seed: u64) -> Outcome {
    let mut all = corpus::automaton_corpus(seed);
    for (i, a) in oracle::random_automata(seed, RANDOM_AUTOMATA, MAX_STATES)
        .into_iter()
        .enumerate()
    {
        all.push(NamedAutomaton {
            name: format!("random #{i}"),
            automaton: a,
        });
    }
    for c in &all {
        let a = &c.automaton;
        check(oracle::derivative_naive(a).set_eq(&a.derivative()), || {
            format!("{}: derivatives differ", c.name)
        })?;
        let (fast, slow) = (a.rank_degree(), oracle::rank_naive(a));
        check(
            fast.rank == slow.rank
                && fast.degree == slow.degree
                && fast.top_points == slow.top_points,
            || format!("{}: engine {}, oracle {}", c.name, pair(&fast), pair(&slow)),
        )?;
    }
    Ok(format!("{} automata", all.len()))
}

/// Runs a single criterion other than 12.
pub fn run_criterion(id: u8, seed: u64) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(seed),
        6 => c6(seed),
        7 => c7(),
        8 => c8(seed),
        9 => c9(seed),
        10 => c10(seed),
        11 => c11(seed),
        _ => Err(format!("no criterion {id}")),
    };
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map_or("unknown", |(_, n)| n);
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

/// Runs criteria 1 to 11, then times the whole run as criterion 12.
pub fn run_suite(seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut results: Vec<CriterionResult> = (1..=11).map(|id| run_criterion(id, seed)).collect();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(60);
    results.push(CriterionResult {
        id: 12,
        name: CRITERIA[11].1,
        passed: elapsed < limit,
        detail: format!("{:.3}s of {}s", elapsed.as_secs_f64(), limit.as_secs()),
        elapsed,
    });
    SuiteReport { seed, results }
}

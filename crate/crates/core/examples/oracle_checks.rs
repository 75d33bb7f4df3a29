//! Cross-checking the engine against definition-direct recomputation.
use cantor_rank::oracle::{self, Isolation};
use cantor_rank::{corpus, FamilyExpr};

fn main() {
    let automata = oracle::random_automata(oracle::DEFAULT_SEED, 50, 12);
    let agree = automata
        .iter()
        .filter(|a| {
            let (fast, slow) = (a.rank_degree(), oracle::rank_naive(a));
            fast.rank == slow.rank
                && fast.degree == slow.degree
                && fast.top_points == slow.top_points
        })
        .count();
    println!(
        "rank_naive agrees on {agree}/{} random automata",
        automata.len()
    );

    let comb = corpus::canon_automaton(1);
    for w in ["10(0)^w", "(1)^w"] {
        let iso = oracle::isolation_bruteforce(&comb, &w.parse().unwrap(), 8).unwrap();
        let verdict = match iso {
            Isolation::Isolated { depth } => format!("isolated at depth {depth}"),
            Isolation::Unknown => "no isolating cylinder found".into(),
        };
        println!("{w}: {verdict}");
    }

    let e: FamilyExpr = "canon(2,2)".parse().unwrap();
    println!(
        "coherence of {e}: {}",
        oracle::sample_coherence(&e, 100).unwrap()
    );
}

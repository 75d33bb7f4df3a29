//! Derivatives, rank and degree of automata read from the text format.
use cantor_rank::PathAutomaton;

const COMB: &str = "\
# a rank-2 comb: 1^a 0 1^b 0 0^w and its limits
state r
state s
state z
root r
edge r 1 r
edge r 0 s
edge s 1 s
edge s 0 z
edge z 0 z
";

fn main() {
    let a: PathAutomaton = COMB.parse().unwrap();
    let report = a.rank_degree();
    for (i, step) in report.chain.iter().enumerate() {
        println!("derivative {i}: {} states", step.len());
    }
    println!("rank {} degree {}", report.rank, report.degree.unwrap());
    for w in report.top_points.iter().flatten() {
        println!("top point {w} has rank {}", a.point_rank(w).unwrap());
    }
    println!("cardinality: {}", a.cardinality_class());

    let full = PathAutomaton::full();
    println!(
        "full space: rank {}, kernel {} state(s)",
        full.rank_degree().rank,
        full.kernel().len()
    );
}

//! Graphviz output for an automaton and each of its derivatives.
use cantor_rank::automaton::to_dot;
use cantor_rank::corpus;

fn main() {
    let a = corpus::marked_blocks(2);
    for (i, step) in a.rank_degree().chain.iter().enumerate() {
        println!(
            "{}",
            to_dot(step, &format!("marked blocks, derivative {i}"))
        );
    }
}

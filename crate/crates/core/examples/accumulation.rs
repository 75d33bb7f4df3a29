//! Accumulation points, least generating sets and the perfect kernel.
use cantor_rank::automaton::LeastGeneratingSet;
use cantor_rank::{FamilyExpr, UpWord};

fn main() {
    let comb = "canon(1,1)"
        .parse::<FamilyExpr>()
        .unwrap()
        .compile()
        .unwrap();
    let limit = UpWord::constant(1);
    println!("(1)^w is a limit: {}", comb.is_accumulation_point(&limit));
    println!("found limit: {}", comb.find_accumulation_point().unwrap());

    match comb.least_generating_set_info().unwrap() {
        LeastGeneratingSet::Isolated(states) => {
            for s in states {
                println!(
                    "isolated points enter through {} (first: {})",
                    comb.name(s.state),
                    s.point
                );
            }
        }
        LeastGeneratingSet::NotDense { witness } => println!("no isolated points in {witness}"),
    }

    let mixed = "union(0:full, 1:canon(1,1))"
        .parse::<FamilyExpr>()
        .unwrap()
        .compile()
        .unwrap();
    if let LeastGeneratingSet::NotDense { witness } = mixed.least_generating_set_info().unwrap() {
        println!("mixed family: isolated points miss {witness}");
    }
    let seed = mixed.two_tree_witness().unwrap();
    println!(
        "kernel has {} state(s); two cycles {:?} and {:?} after {:?}",
        mixed.kernel().len(),
        seed.word0,
        seed.word1,
        seed.access
    );
}

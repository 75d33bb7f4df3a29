//! Splitting a family into clopen parts of degree one.
use cantor_rank::FamilyExpr;

fn main() {
    for src in [
        "canon(1,2)",
        "canon(2,3)",
        "union(0:canon(2,1), 10:canon(1,3), 11:canon(2,2))",
    ] {
        let a = src.parse::<FamilyExpr>().unwrap().compile().unwrap();
        println!("{src}:");
        for part in a.decompose_alpha_minimal().unwrap() {
            let r = a.restrict(&part).rank_degree();
            println!("  {part}  rank {} degree {}", r.rank, r.degree.unwrap());
        }
    }
}

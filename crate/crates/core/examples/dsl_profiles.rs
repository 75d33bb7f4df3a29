//! Symbolic evaluation of family expressions, and compilation.
use cantor_rank::FamilyExpr;

fn main() {
    for src in [
        "omega(point((0)^w))",
        "canon(2,1)",
        "canon(w^2+w*3+2, 2)",
        "union(0:canon(2,1), 10:canon(1,3), 11:canon(2,2))",
        "omega(union(0:full, 1:point((1)^w)))",
    ] {
        let e: FamilyExpr = src.parse().unwrap();
        println!("{e}\n{}", e.evaluate());
        match e.compile() {
            Ok(a) => {
                let r = a.rank_degree();
                println!("compiled: {} states, rank {}\n", a.len(), r.rank);
            }
            Err(err) => println!("{err}\n"),
        }
    }

    let e: FamilyExpr = "canon(1,2)".parse().unwrap();
    let gens: Vec<String> = e
        .enumerate_generators(6)
        .iter()
        .map(|w| w.to_string())
        .collect();
    println!("first generators of {e}: {}", gens.join(", "));
}

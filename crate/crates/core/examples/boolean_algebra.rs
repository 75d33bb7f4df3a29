//! The algebra of clopen traces on a family: atoms, superatomicity and
//! the isomorphism invariants.
use cantor_rank::{Clopen, FamilyExpr, TraceAlgebra};

fn algebra(src: &str) -> TraceAlgebra {
    TraceAlgebra::new(src.parse::<FamilyExpr>().unwrap().compile().unwrap())
}

fn main() {
    let h = algebra("canon(1,1)");
    let c = |s: &str| s.parse::<Clopen>().unwrap();
    println!("[0*] ~ [00*]: {}", h.trace_eq(&c("[0*]"), &c("[00*]")));
    println!("[10*] is an atom: {}", h.is_atom(&c("[10*]")));

    let a = algebra("canon(2,1)");
    let b = algebra("union(0:canon(2,1), 1:canon(1,1))");
    for (name, h) in [("a", &a), ("b", &b)] {
        let (rank, degree) = h.cb_invariants().unwrap();
        println!("{name}: rank {rank}, degree {degree}");
    }
    println!("isomorphic: {}", a.iso_equivalent(&b).unwrap());

    let full = algebra("full");
    println!("full space superatomic: {}", full.is_superatomic());
    if let Err(e) = full.cb_invariants() {
        println!("{e}");
    }
}

//! Ultimately periodic words and clopen sets of Cantor space.
use cantor_rank::{Clopen, UpWord};

fn main() {
    // equal words have one canonical form
    let w: UpWord = "0101(01)^w".parse().unwrap();
    let v: UpWord = "(01)^w".parse().unwrap();
    println!("{w} == {v}: {}", w == v);
    let x: UpWord = "110(0)^w".parse().unwrap();
    println!("canonical: {x}, first bits {:?}", x.take(6));

    let a: Clopen = "[0*, 11*]".parse().unwrap();
    let b = Clopen::cylinder(&[1]);
    println!("a = {a}, depth {}", a.depth());
    println!("complement(a) = {}", a.complement());
    println!("a | b = {}", a.union(&b));
    println!("a & b = {}", a.intersection(&b));
    println!("{x} in a: {}", a.contains(&x));
}

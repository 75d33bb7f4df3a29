//! Ordinals below epsilon-zero in Cantor normal form.
use cantor_rank::Ordinal;

fn main() {
    let a: Ordinal = "w^2+w*3+2".parse().unwrap();
    println!("{a}: limit={} successor={}", a.is_limit(), a.is_successor());
    println!("succ = {}, pred = {}", a.succ(), a.pred().unwrap());

    // fundamental sequences climb to a limit
    for l in ["w", "w*2", "w^2", "w^w"] {
        let l: Ordinal = l.parse().unwrap();
        let seq: Vec<String> = (0..4).map(|n| l.fund_seq(n).unwrap().to_string()).collect();
        println!("{l}[n] = {} ...", seq.join(", "));
    }

    let mut xs: Vec<Ordinal> = ["w+1", "3", "w^2", "w*2", "0", "w"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    xs.sort();
    println!(
        "sorted: {}",
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" < ")
    );
}

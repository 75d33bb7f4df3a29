//! Runs the acceptance battery with a seed taken from the command line.
use cantor_rank::oracle::DEFAULT_SEED;
use cantor_rank::suite::run_suite;

fn main() {
    let seed = std::env::args().nth(1).map_or(DEFAULT_SEED, |s| {
        s.parse().expect("seed must be an integer")
    });
    let report = run_suite(seed);
    print!("{report}");
    if !report.passed() {
        std::process::exit(3);
    }
}

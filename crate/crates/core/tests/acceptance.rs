//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;

use cantor_rank::oracle::DEFAULT_SEED;
use cantor_rank::suite::run_suite;

fn main() -> ExitCode {
    let report = run_suite(DEFAULT_SEED);
    print!("{report}");
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

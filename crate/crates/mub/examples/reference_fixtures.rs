//! Compares the programmatic constructions against independently transcribed
//! reference matrices in dimensions 2, 3, 4, 6, 12 and 20.

use mub::{fixtures, Tolerance};

fn main() {
    let mut failed = 0;
    for check in fixtures::run_all(Tolerance::default()) {
        println!("{:60} {}", check.name, check.outcome);
        if !check.passed() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("\n{failed} check(s) failed");
        std::process::exit(1);
    }
}

//! The clock/shift/Fourier identities everything else rests on, checked
//! numerically in a few dimensions.

use mub::{schwinger, Tolerance};

fn main() {
    for dim in [2usize, 7, 12, 15, 50] {
        let report = schwinger::check_identities(dim, Tolerance::default()).unwrap();
        println!("d = {dim}");
        for check in &report.checks {
            println!(
                "  {:45} max deviation {:.2e}  {}",
                check.name,
                check.max_deviation,
                if check.passed { "pass" } else { "FAIL" }
            );
        }
    }
}

//! Three mutually unbiased bases exist in every dimension: the identity, the
//! Fourier basis, and a quadratically twisted Fourier basis.

use mub::constructions::build_generic_triple;
use mub::{verify, Tolerance};

fn main() {
    for dim in [2usize, 5, 6, 10, 14, 27] {
        let set = build_generic_triple(dim).unwrap();
        let report = verify::verify_mum(&set, Tolerance::default());
        let worst = report
            .pairs
            .iter()
            .map(|p| p.max_deviation)
            .fold(0.0f64, f64::max);
        println!(
            "d = {dim:3}  method = {:15}  bases = {}  passed = {}  worst pair deviation = {worst:.2e}",
            set.method().to_string(),
            set.claimed_count(),
            report.passed,
        );
    }
}

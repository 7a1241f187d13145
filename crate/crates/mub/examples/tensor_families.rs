//! Composite dimensions by tensoring: pairing the five-basis family in
//! dimension 4 with families in dimensions 3 and 5 gives four bases in
//! dimension 12 and five in dimension 20.

use mub::constructions::{self, build_d4_complete, build_prime_full, tensor_combine};
use mub::{verify, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let d4 = build_d4_complete();
    println!(
        "d =  4: {} bases, verified = {}",
        d4.claimed_count(),
        verify::verify_mum(&d4, tol).passed
    );

    let d12 = tensor_combine(&build_prime_full(3).unwrap(), &d4);
    let d20 = tensor_combine(&d4, &build_prime_full(5).unwrap());
    for set in [&d12, &d20] {
        println!(
            "d = {:2}: {} bases, verified = {}",
            set.dim(),
            set.claimed_count(),
            verify::verify_mum(set, tol).passed
        );
    }

    // squares of odd primes get p + 1 bases from diagonal tensor pairs
    for p in [3usize, 5] {
        let set = constructions::build_prime_square_tensor(p).unwrap();
        println!(
            "d = {:2}: {} bases, verified = {}",
            p * p,
            set.claimed_count(),
            verify::verify_mum(&set, tol).passed
        );
    }
}

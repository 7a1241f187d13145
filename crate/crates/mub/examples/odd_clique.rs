//! Odd composite dimensions: residue sets with pairwise differences coprime
//! to d index mutually unbiased families. The largest such set has the size
//! of the smallest prime factor of d.

use mub::constructions::{self, smallest_prime_factor};
use mub::{verify, Tolerance};

fn main() {
    for dim in [9usize, 15, 21, 25, 33, 35] {
        let clique = constructions::max_coprime_clique(dim).unwrap();
        let set = constructions::build_odd_clique_mub(dim, &clique).unwrap();
        let report = verify::verify_mum(&set, Tolerance::default());
        println!(
            "d = {dim:2}  smallest prime factor = {}  clique = {:?}  bases = {}  {}",
            smallest_prime_factor(dim).unwrap(),
            clique.members(),
            set.claimed_count(),
            if report.passed { "pass" } else { "FAIL" },
        );
    }

    // every maximum set in dimension 15
    let all = constructions::all_max_coprime_cliques(15).unwrap();
    println!("\nd = 15 has {} maximum sets, e.g.:", all.len());
    for clique in all.iter().take(5) {
        println!("  {:?}", clique.members());
    }
}

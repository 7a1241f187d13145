//! Quadratic Gauss sums behind the unbiasedness proofs.

use mub::gauss;
use num_integer::Integer;

fn main() {
    // |Tr D^k| = sqrt(d) exactly when gcd(k, d) = 1
    for dim in [9usize, 15] {
        for k in 1..6 {
            let t = gauss::quadratic_trace(dim, k).unwrap();
            println!(
                "d = {dim:2}  k = {k}  |trace| = {:8.5}  sqrt(d) = {:8.5}  gcd = {}",
                t.norm(),
                (dim as f64).sqrt(),
                (k as usize).gcd(&dim),
            );
        }
        println!();
    }

    // reciprocity flips the roles of a and d
    for (a, b, d) in [(3i64, 1, 5), (2, 0, 7), (-5, 3, 9)] {
        let dev = gauss::reciprocity_deviation(a, b, d).unwrap();
        println!("S({a}, {b}, {d}) reciprocity deviation = {dev:.2e}");
    }
    println!();

    // the even quadratic sum lands on sqrt(d) e^{i pi / 4}
    for dim in [2usize, 8, 50] {
        let s = gauss::even_quadratic_sum(dim).unwrap();
        let r = gauss::even_quadratic_reference(dim);
        println!(
            "d = {dim:2}  sum = {:+.5}{:+.5}i  closed form = {:+.5}{:+.5}i",
            s.re, s.im, r.re, r.im
        );
    }
}

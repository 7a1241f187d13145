//! Phase matrices serialize exactly: entries are root-of-unity exponents, so
//! a JSON round trip reproduces the matrix bit for bit.

use mub::constructions::construct_mubs;
use mub::phase::PhaseMatrix;
use mub::schwinger;

fn main() {
    let p0 = schwinger::fourier(3).unwrap();
    let json = serde_json::to_string_pretty(&p0).unwrap();
    println!("Fourier basis, d = 3:\n{json}\n");

    let back: PhaseMatrix = serde_json::from_str(&json).unwrap();
    println!("round trip exact: {}", back == p0);

    let set = construct_mubs(4).unwrap();
    let text = serde_json::to_string(&set).unwrap();
    println!(
        "full d = 4 family serializes to {} bytes; round trip exact: {}",
        text.len(),
        serde_json::from_str::<mub::constructions::MubSet>(&text).unwrap() == set
    );
}

//! Splits `HF+` of zero surgery into the torus knot of the same signature
//! plus a free group in a single grading.
//!
//! `cargo run --example torus_companion -- 13 5`

use twobridge_hf::floer::{hf_plus_zero_surgery, torus_decomposition_check};
use twobridge_hf::twobridge::{genus, normalize, torus_companion};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let knot = match args[..] {
        [p, q] => normalize(p, q).expect("valid knot"),
        _ => normalize(13, 5).unwrap(),
    };
    let torus = torus_companion(knot);
    println!("{knot} has torus companion {torus}");
    for k in 1..genus(knot).max(2) {
        println!("s_{k}:");
        println!("  knot  {}", hf_plus_zero_surgery(knot, k));
        println!("  torus {}", hf_plus_zero_surgery(torus, k));
        match torus_decomposition_check(knot, k) {
            Ok(t) => println!("  Q = Z^{} in grading {}", t.q_rank, t.q_grading),
            Err(e) => println!("  {e}"),
        }
    }
}

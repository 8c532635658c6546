//! `HF+`, `HF-` and `HF^` of large surgery for every Spin^c structure, with
//! the hat groups recomputed from `HF+` through the Gysin sequence.
//!
//! `cargo run --example large_surgery -- 7 3`

use twobridge_hf::floer::{hat_from_plus, hf_hat_large_n, hf_minus_large_n, hf_plus_large_n};
use twobridge_hf::twobridge::{genus, normalize, spinc_invariants};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let knot = match args[..] {
        [p, q] => normalize(p, q).expect("valid knot"),
        _ => normalize(7, 3).unwrap(),
    };
    for k in 0..=genus(knot) {
        let inv = spinc_invariants(knot, k);
        let plus = hf_plus_large_n(knot, k);
        let hat = hf_hat_large_n(knot, k);
        println!("s_{k}: u = {}, h = {}, b = {}", inv.u, inv.h, inv.b);
        println!("  HF+ = {plus}");
        println!("  HF- = {}", hf_minus_large_n(knot, k));
        println!("  HF^ = {hat}");
        assert_eq!(hat_from_plus(&plus).as_ref(), Some(&hat));
    }
}

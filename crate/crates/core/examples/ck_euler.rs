//! Generators of the truncated complexes `C_k` and the identity
//! `χ(C_k) = (-1)^σ' u_k`.
//!
//! `cargo run --example ck_euler -- 13 5`

use twobridge_hf::complexes::{ck_complex, verify_ck_euler};
use twobridge_hf::homalg::euler_characteristic;
use twobridge_hf::twobridge::{alexander_grading, normalize, spinc_invariants};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let knot = match args[..] {
        [p, q] => normalize(p, q).expect("valid knot"),
        _ => normalize(13, 5).unwrap(),
    };
    let data = alexander_grading(knot);
    println!("{knot}: σ' = {}, g = {}", data.half_signature, data.genus);
    for k in 0..=data.genus {
        let c = ck_complex(knot, k);
        let labels: Vec<String> = c.generators.iter().map(|g| format!("{}@{}", g.label, g.grading)).collect();
        println!(
            "k = {k}: χ = {:>3}, u_k = {:>3}, holds: {}  {}",
            euler_characteristic(c.complex()),
            spinc_invariants(knot, k).u,
            verify_ck_euler(knot, k),
            labels.join(" ")
        );
    }
}

//! The stable model complex and its homology, computed twice: by Smith
//! normal form and by cancelling the unit differentials one at a time.
//!
//! `cargo run --example stable_complex -- 11 5`

use twobridge_hf::complexes::{cancel_active_pairs, stable_complex, stable_homology};
use twobridge_hf::twobridge::normalize;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let knot = match args[..] {
        [p, q] => normalize(p, q).expect("valid knot"),
        _ => normalize(11, 5).unwrap(),
    };
    let c = stable_complex(knot);
    for g in &c.generators {
        println!("{:>4}  gr {:>3}", g.label, g.grading);
    }
    for d in c.active_pairs() {
        println!("{} -> {}", c.generators[d.source].label, c.generators[d.target].label);
    }
    println!("homology:  {}", stable_homology(knot));
    let reduced = cancel_active_pairs(&c).expect("unit pivots");
    println!("after cancellation: {:?} at {:?}", reduced.labels(), reduced.gradings());
}

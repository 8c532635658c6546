//! Correction terms of `±1` surgery, grouped by signature.
//!
//! `cargo run --example d_invariants -- 25`

use std::collections::BTreeMap;

use twobridge_hf::floer::d_invariants;
use twobridge_hf::twobridge::{census_knots, signature};

fn main() {
    let max_p = std::env::args().nth(1).map_or(25, |a| a.parse().expect("integer"));
    let mut by_sigma: BTreeMap<i64, (i64, i64, usize)> = BTreeMap::new();
    for k in census_knots(max_p) {
        let d = d_invariants(k);
        let entry = by_sigma.entry(signature(k)).or_insert((d.d_plus1, d.d_minus1, 0));
        assert_eq!((entry.0, entry.1), (d.d_plus1, d.d_minus1), "depends only on σ");
        entry.2 += 1;
    }
    println!("{:>6} {:>8} {:>8} {:>6}", "σ", "d(K^1)", "d(K^-1)", "knots");
    for (sigma, (plus, minus, count)) in by_sigma {
        println!("{sigma:>6} {plus:>8} {minus:>8} {count:>6}");
    }
}

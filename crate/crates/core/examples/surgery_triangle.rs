//! Zero, positive and negative surgery through the exact triangle, and the
//! mirror duality between negative surgery and positive surgery on the
//! mirror.
//!
//! `cargo run --example surgery_triangle -- 9 1`

use twobridge_hf::floer::{hf_plus_n_surgery, hf_plus_negative_surgery, hf_plus_zero_surgery};
use twobridge_hf::twobridge::{genus, mirror, normalize};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let knot = match args[..] {
        [p, q] => normalize(p, q).expect("valid knot"),
        _ => normalize(9, 1).unwrap(),
    };
    let g = genus(knot);
    println!("{knot}, genus {g}");
    for k in 0..=g {
        println!("0-surgery    s_{k}: {}", hf_plus_zero_surgery(knot, k));
    }
    for n in [1, 2, 2 * g - 1] {
        for k in 0..n {
            let pos = hf_plus_n_surgery(knot, n, k).unwrap();
            let neg = hf_plus_negative_surgery(knot, n, k).unwrap();
            assert_eq!(neg, hf_plus_n_surgery(mirror(knot), n, k).unwrap());
            println!("{n:>2}-surgery  s_{k}: {pos}");
            println!("{:>2}-surgery  s_{k}: {neg}", -n);
        }
    }
}

//! Smith normal form and homology of a small hand-made complex, then the
//! same homology after cancelling a unit differential.
//!
//! `cargo run --example smith_homology`

use twobridge_hf::homalg::{cancel_generator, homology, smith_normal_form, GradedComplex, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m);
    println!("m = {m:?}");
    println!("invariant factors {:?}", s.invariant_factors());
    assert_eq!(&(&s.left * &m) * &s.right, s.diagonal);

    // a -> b + c, d -> 2b - 2c: in degree 0, b + c dies and 4c = 2(b + c) - d(d)
    let gens = vec![
        ("a".to_string(), 1),
        ("d".to_string(), 1),
        ("b".to_string(), 0),
        ("c".to_string(), 0),
    ];
    let c = GradedComplex::from_edges(gens, &[(0, 2, 1), (0, 3, 1), (1, 2, 2), (1, 3, -2)]).unwrap();
    println!("H(c)          = {}", homology(&c));
    let reduced = cancel_generator(&c, "a", "b").unwrap();
    println!("cancelled a,b: {:?}", reduced.labels());
    println!("H(reduced)    = {}", homology(&reduced));
}

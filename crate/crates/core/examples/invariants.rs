//! Classical invariants of a two-bridge knot.
//!
//! `cargo run --example invariants -- 13 5`

use twobridge_hf::cli::invariants_record;
use twobridge_hf::twobridge::{alexander_grading, inverse_form, mirror, normalize};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (13, 5),
    };
    let knot = match normalize(p, q) {
        Ok(k) => k,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("{}", invariants_record(knot));
    println!("grading    {:?}", alexander_grading(knot).epsilon);
    println!("mirror     {}", mirror(knot));
    println!("other form {}", inverse_form(knot));
}

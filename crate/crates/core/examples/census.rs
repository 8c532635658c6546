//! Writes the census CSV and summarizes it.
//!
//! `cargo run --example census -- 21 census.csv`

use std::fs::File;
use std::io::BufWriter;

use twobridge_hf::cli::{census_rows, write_census};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let max_p: i64 = args.next().map_or(Ok(21), |a| a.parse())?;
    let rows = census_rows(max_p)?;
    match args.next() {
        Some(path) => write_census(&rows, BufWriter::new(File::create(&path)?))?,
        None => write_census(&rows, std::io::stdout().lock())?,
    }
    let max_genus = rows.iter().max_by_key(|r| r.genus).expect("nonempty census");
    eprintln!(
        "{} knots; largest genus {} at K({},{})",
        rows.len(),
        max_genus.genus,
        max_genus.p,
        max_genus.q
    );
    Ok(())
}

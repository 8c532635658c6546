//! Reflects the stable complex of K(13,5) at level 0 and writes SVG
//! drawings of both complexes.
//!
//! `cargo run --example reflection_svg -- /tmp`

use std::path::PathBuf;

use twobridge_hf::complexes::{export_svg, reflect, stable_complex};
use twobridge_hf::homalg::{euler_characteristic, homology};
use twobridge_hf::twobridge::normalize;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let knot = normalize(13, 5).unwrap();
    let stable = stable_complex(knot);
    let reflected = reflect(&stable, 0).expect("stable input");

    println!("stable    {:?}", stable.gradings());
    println!("reflected {:?}", reflected.gradings());
    for d in reflected.active_pairs() {
        println!(
            "  x{} -> x{}  {:?}",
            reflected.generators[d.source].index,
            reflected.generators[d.target].index,
            d.kind
        );
    }
    println!("χ = {}, model homology {}", euler_characteristic(reflected.complex()), homology(reflected.complex()));

    export_svg(&stable, dir.join("k13_5_stable.svg"))?;
    export_svg(&reflected, dir.join("k13_5_reflected.svg"))?;
    println!("wrote {}", dir.display());
    Ok(())
}

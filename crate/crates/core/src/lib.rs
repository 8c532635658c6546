//! Heegaard Floer homology of integer surgeries on two-bridge knots.
//!
//! * [`twobridge`]: normal forms of `K(p, q)`, the Alexander grading and the
//!   classical invariants read off from it.
//! * [`homalg`]: exact integer matrices, Smith normal form, homology of
//!   graded chain complexes and the cancellation reduction.
//! * [`complexes`]: stable, reflected and truncated model complexes, with SVG
//!   rendering.
//! * [`floer`]: `HF+`, `HF-` and `HF^` of large, zero and `±n` surgery,
//!   d-invariants and the torus-companion comparison.
//! * [`cli`]: the records printed by the `twobridge-hf` binary.
//!
//! ```
//! use twobridge_hf::floer::hf_plus_large_n;
//! use twobridge_hf::twobridge::normalize;
//!
//! let trefoil = normalize(3, 1).unwrap();
//! assert_eq!(hf_plus_large_n(trefoil, 0).to_string(), "Z[u^-1]/u^-1 [bottom -1] + Z[u^-1] [bottom -1]");
//! ```

pub mod cli;
pub mod complexes;
pub mod floer;
pub mod homalg;
pub mod twobridge;

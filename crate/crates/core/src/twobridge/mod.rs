//! Two-bridge knots `K(p, q)` and their classical invariants.
//!
//! A knot is stored in normal form: `p` odd and positive, `q` odd with
//! `-p < q < p` and `gcd(p, q) = 1`. The unknot is `K(1, 1)`. Everything
//! else in the crate is derived from the Alexander grading of the `p`
//! generators of the genus-two Heegaard diagram, see [`alexander_grading`].

mod alexander;
mod poly;

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

pub use alexander::{
    alexander_grading, alexander_polynomial, determinant, genus, signature, spinc_invariants,
    AlexanderData, SpincInvariants,
};
pub use poly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("p = {0} is even: two-bridge links are not supported, only knots (odd p)")]
    TwoBridgeLink(i64),
    #[error("p must be positive, got {0}")]
    NonPositive(i64),
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
}

/// A normalized two-bridge knot `K(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeKnot {
    p: i64,
    q: i64,
}

impl TwoBridgeKnot {
    pub const UNKNOT: TwoBridgeKnot = TwoBridgeKnot { p: 1, q: 1 };

    /// Same as [`normalize`].
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        normalize(p, q)
    }

    #[inline]
    pub fn p(&self) -> i64 {
        self.p
    }

    #[inline]
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_unknot(&self) -> bool {
        self.p == 1
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.p, self.q)
    }
}

/// Brings `(p, q)` to the odd representative of `q mod p` in `(-p, p)`.
///
/// The two representatives of a residue in `(-p, p)` differ by the odd
/// number `p`, so exactly one of them is odd.
pub fn normalize(p: i64, q: i64) -> Result<TwoBridgeKnot, KnotError> {
    if p <= 0 {
        return Err(KnotError::NonPositive(p));
    }
    if p.is_even() {
        return Err(KnotError::TwoBridgeLink(p));
    }
    if p == 1 {
        return Ok(TwoBridgeKnot::UNKNOT);
    }
    let r = q.rem_euclid(p);
    if r.gcd(&p) != 1 {
        return Err(KnotError::NotCoprime { p, q });
    }
    let q = if r.is_odd() { r } else { r - p };
    Ok(TwoBridgeKnot { p, q })
}

/// `K(p, -q)`.
pub fn mirror(k: TwoBridgeKnot) -> TwoBridgeKnot {
    normalize(k.p, -k.q).expect("mirror of a valid knot is valid")
}

/// `K(p, q^{-1} mod p)`, the same knot presented from the other bridge.
pub fn inverse_form(k: TwoBridgeKnot) -> TwoBridgeKnot {
    if k.p == 1 {
        return k;
    }
    let inv = mod_inverse(k.q, k.p).expect("normalized q is a unit mod p");
    normalize(k.p, inv).expect("inverse of a unit is a unit")
}

/// `K(p, q)` is isotopic to its mirror iff `q^2 ≡ -1 (mod p)`.
pub fn amphichiral(k: TwoBridgeKnot) -> bool {
    (k.q * k.q + 1).rem_euclid(k.p) == 0
}

/// The `(2, |σ|+1)` torus knot `K(|σ|+1, ±1)` whose signature matches `k`.
pub fn torus_companion(k: TwoBridgeKnot) -> TwoBridgeKnot {
    let sigma = signature(k);
    if sigma == 0 {
        return TwoBridgeKnot::UNKNOT;
    }
    let p = sigma.abs() + 1;
    [1, -1]
        .into_iter()
        .map(|q| normalize(p, q).expect("p = |σ|+1 is odd"))
        .find(|t| signature(*t) == sigma)
        .expect("one of K(p, ±1) has the requested signature")
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Every normalized knot with odd `3 <= p <= max_p`, in `(p, q)` order.
pub fn census_knots(max_p: i64) -> Vec<TwoBridgeKnot> {
    let mut out = Vec::new();
    for p in (3..=max_p).step_by(2) {
        let mut qs: Vec<i64> = (1..p)
            .filter_map(|r| normalize(p, r).ok().map(|k| k.q))
            .collect();
        qs.sort_unstable();
        out.extend(qs.into_iter().map(|q| TwoBridgeKnot { p, q }));
    }
    out
}

/// One knot per `{q, q^{-1}}` class with a positive normalized `q`, taking
/// the smaller positive `q` when both forms are positive.
pub fn census_classes(max_p: i64) -> Vec<TwoBridgeKnot> {
    census_knots(max_p)
        .into_iter()
        .filter(|k| {
            if k.q < 0 {
                return false;
            }
            let alt = inverse_form(*k);
            alt.q < 0 || alt.q >= k.q
        })
        .collect()
}

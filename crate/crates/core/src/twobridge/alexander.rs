use std::collections::BTreeMap;

use num_integer::Integer;

use super::{LaurentPoly, TwoBridgeKnot};

/// The Alexander grading of the generators `x_1 .. x_p` and the invariants
/// read off from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderData {
    /// `epsilon[i]` is the grading of `x_{i+1}`.
    pub epsilon: Vec<i64>,
    /// Number of generators at each grading.
    pub counts: BTreeMap<i64, usize>,
    pub signature: i64,
    pub half_signature: i64,
    pub genus: i64,
}

/// Grading step from `x_i` to `x_{i+1}`: `(-1)^floor(i q / p)`.
fn step(i: i64, k: TwoBridgeKnot) -> i64 {
    if Integer::div_floor(&(i * k.q()), &k.p()).is_even() {
        1
    } else {
        -1
    }
}

/// Integrates the grading steps and shifts the result so that
/// `epsilon(x_i) = -epsilon(x_{p+1-i})`.
pub fn alexander_grading(k: TwoBridgeKnot) -> AlexanderData {
    let p = k.p() as usize;
    let mut partial = Vec::with_capacity(p);
    partial.push(0i64);
    for i in 1..p as i64 {
        let last = *partial.last().unwrap();
        partial.push(last + step(i, k));
    }
    let last = partial[p - 1];
    assert!(
        last.is_even(),
        "{k}: grading span {last} is odd, contradicting an even signature"
    );
    let shift = last / 2;
    let epsilon: Vec<i64> = partial.into_iter().map(|s| s - shift).collect();

    let mut counts = BTreeMap::new();
    for &e in &epsilon {
        *counts.entry(e).or_insert(0) += 1;
    }
    let signature = epsilon[0] - epsilon[p - 1];
    let genus = *epsilon.iter().max().unwrap();
    AlexanderData {
        epsilon,
        counts,
        signature,
        half_signature: signature / 2,
        genus,
    }
}

/// `Δ(t) = (-1)^{ε(x_1)} Σ_k n_k (-t)^k`, normalized so `Δ(1) = 1`.
pub fn alexander_polynomial(k: TwoBridgeKnot) -> LaurentPoly {
    let data = alexander_grading(k);
    let e1 = data.epsilon[0];
    LaurentPoly::from_terms(data.counts.iter().map(|(&e, &n)| {
        let sign = if (e1 + e).is_even() { 1 } else { -1 };
        (e, sign * n as i64)
    }))
}

pub fn signature(k: TwoBridgeKnot) -> i64 {
    alexander_grading(k).signature
}

pub fn genus(k: TwoBridgeKnot) -> i64 {
    alexander_grading(k).genus
}

/// `|Δ(-1)|`, which always equals `p`.
pub fn determinant(k: TwoBridgeKnot) -> i64 {
    alexander_polynomial(k).eval_unit(-1).abs()
}

/// The integers `u_k`, `h_k`, `b_k` attached to the Spin^c structure `s_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpincInvariants {
    /// The label as requested; the values are those of `|k|`.
    pub k: i64,
    /// `Σ_{i>k} (i-k) a_i`
    pub u: i64,
    /// `max(ceil((|σ'| - k)/2), 0)`
    pub h: i64,
    /// `u - h`. Its absolute value is the rank of the `u`-trivial free part.
    pub b: i64,
}

impl SpincInvariants {
    pub fn compute(alexander: &LaurentPoly, half_signature: i64, spinc: i64) -> Self {
        let k = spinc.abs();
        let u = alexander
            .terms()
            .filter(|&(i, _)| i > k)
            .map(|(i, a)| (i - k) * a)
            .sum();
        let h = Integer::div_ceil(&(half_signature.abs() - k), &2).max(0);
        SpincInvariants {
            k: spinc,
            u,
            h,
            b: u - h,
        }
    }
}

pub fn spinc_invariants(k: TwoBridgeKnot, spinc: i64) -> SpincInvariants {
    let data = alexander_grading(k);
    SpincInvariants::compute(&alexander_polynomial(k), data.half_signature, spinc)
}

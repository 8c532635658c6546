//! Floer homology of surgeries on two-bridge knots.
//!
//! For `n` large, `HF+(K^n, s_k)` is assembled from three pieces determined
//! by the Alexander polynomial and the signature:
//!
//! * `Q_k = Z^{|b_k|}` with `b_k = u_k - h_k`, all in grading `k - 1`, with
//!   `u` acting trivially;
//! * `V_k = Z[u^-1]/u^{-h_k}`, whose bottom sits at `k - 2h_k` when
//!   `k ≡ σ' (mod 2)` and at `k + 1 - 2h_k` otherwise;
//! * a tower `Z[u^-1]` starting at `σ'` (σ ≤ 0) or `σ' - 2h_k` (σ ≥ 0).
//!
//! When `σ ≥ 0` the torsion `V_k` is absorbed into the tower. Gradings are
//! relative: only their differences carry meaning.
//!
//! Zero surgery and arbitrary `±n` surgery follow from the surgery exact
//! triangle and come out as `Q ⊕ V` sums over a residue class of Spin^c
//! labels. Those modules are reported ungraded.

mod module;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::twobridge::{
    alexander_grading, alexander_polynomial, torus_companion, SpincInvariants, TwoBridgeKnot,
};

pub use module::{hat_from_plus, GradingKind, HatModule, HatSummand, Summand, UModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FloerError {
    #[error("surgery coefficient must be positive, got {0}")]
    NonPositiveSurgery(i64),
    #[error("Spin^c structure s_0 on the 0-surgery needs twisted coefficients; no untwisted decomposition")]
    TwistedCase,
    #[error("{knot}: torus-companion decomposition fails at k = {spinc}: {reason}")]
    DecompositionFailed {
        knot: TwoBridgeKnot,
        spinc: i64,
        reason: String,
    },
}

/// Which case of the large-surgery formula to apply. The two agree when
/// `σ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignatureBranch {
    NonNegative,
    NonPositive,
}

impl SignatureBranch {
    pub fn of(signature: i64) -> Self {
        if signature >= 0 {
            SignatureBranch::NonNegative
        } else {
            SignatureBranch::NonPositive
        }
    }
}

/// Signature data plus the `u, h, b` of one Spin^c label.
#[derive(Clone, Copy, Debug)]
struct Level {
    k: i64,
    half_signature: i64,
    inv: SpincInvariants,
}

impl Level {
    fn of(knot: TwoBridgeKnot, spinc: i64) -> Self {
        let data = alexander_grading(knot);
        let delta = alexander_polynomial(knot);
        Level {
            k: spinc.abs(),
            half_signature: data.half_signature,
            inv: SpincInvariants::compute(&delta, data.half_signature, spinc),
        }
    }

    fn q_summand(&self) -> Summand {
        Summand::Free {
            rank: self.inv.b.unsigned_abs(),
            grading: Some(self.k - 1),
        }
    }

    fn v_bottom(&self) -> i64 {
        let h = self.inv.h;
        if (self.k - self.half_signature).is_even() {
            self.k - 2 * h
        } else {
            self.k + 1 - 2 * h
        }
    }

    fn v_summand(&self) -> Summand {
        Summand::Torsion {
            length: self.inv.h as u64,
            bottom: Some(self.v_bottom()),
        }
    }

    fn tower_bottom(&self, branch: SignatureBranch) -> i64 {
        match branch {
            SignatureBranch::NonPositive => self.half_signature,
            SignatureBranch::NonNegative => self.half_signature - 2 * self.inv.h,
        }
    }
}

/// `HF+(K^n, s_k)` for `n ≫ 0`, using the given case of the formula.
pub fn hf_plus_large_n_branch(knot: TwoBridgeKnot, spinc: i64, branch: SignatureBranch) -> UModule {
    let level = Level::of(knot, spinc);
    let tower = Summand::Tower {
        bottom: Some(level.tower_bottom(branch)),
    };
    match branch {
        SignatureBranch::NonNegative => UModule::relative([level.q_summand(), tower]),
        SignatureBranch::NonPositive => {
            UModule::relative([level.q_summand(), level.v_summand(), tower])
        }
    }
}

/// `HF+(K^n, s_k)` for `n ≫ 0`.
pub fn hf_plus_large_n(knot: TwoBridgeKnot, spinc: i64) -> UModule {
    let branch = SignatureBranch::of(alexander_grading(knot).signature);
    hf_plus_large_n_branch(knot, spinc, branch)
}

/// `HF^(K^n, s_k)` for `n ≫ 0`: a `Z` at the bottom of the tower, `Q_k ⊗
/// H*(S^1)` in gradings `k - 1` and `k`, and for `σ < 0` a copy of
/// `H*(S^{2h_k - 1})` starting at the bottom of `V_k`.
pub fn hf_hat_large_n(knot: TwoBridgeKnot, spinc: i64) -> HatModule {
    let level = Level::of(knot, spinc);
    let branch = SignatureBranch::of(level.half_signature);
    let q = level.inv.b.unsigned_abs();
    let mut ranks = vec![(level.tower_bottom(branch), 1), (level.k - 1, q), (level.k, q)];
    if branch == SignatureBranch::NonPositive && level.inv.h > 0 {
        let bottom = level.v_bottom();
        ranks.push((bottom, 1));
        ranks.push((bottom + 2 * level.inv.h - 1, 1));
    }
    HatModule::from_ranks(ranks)
}

/// `HF-(K^n, s_k)` for `n ≫ 0`: `Q_k` and `V_k` one grading lower than in
/// `HF+`, and a downward tower topping out two below the `HF+` tower bottom.
pub fn hf_minus_large_n(knot: TwoBridgeKnot, spinc: i64) -> UModule {
    let plus = hf_plus_large_n(knot, spinc);
    UModule::relative(plus.summands.iter().map(|s| match *s {
        Summand::Free { rank, grading } => Summand::Free {
            rank,
            grading: grading.map(|g| g - 1),
        },
        Summand::Torsion { length, bottom } => Summand::Torsion {
            length,
            bottom: bottom.map(|b| b - 1),
        },
        Summand::Tower { bottom } => Summand::TowerDown {
            top: bottom.map(|b| b - 2),
        },
        Summand::TowerDown { top } => Summand::TowerDown { top },
    }))
}

/// `HF+(K^0, s_k)`. For `k ≠ 0` this is `Q_k ⊕ V_k` (zero once `|k| ≥ g`);
/// for `k = 0` it is the twisted-coefficient module
/// `(Q_0 ⊕ V_0) ⊗ Z[T, T^-1] ⊕ Z[u^-1]`, whose tower carries no grading.
pub fn hf_plus_zero_surgery(knot: TwoBridgeKnot, spinc: i64) -> UModule {
    let level = Level::of(knot, spinc);
    if level.k == 0 {
        UModule::relative([
            level.q_summand(),
            level.v_summand(),
            Summand::Tower { bottom: None },
        ])
        .with_twist()
    } else {
        UModule::relative([level.q_summand(), level.v_summand()])
    }
}

/// The representative of `spinc mod n` of least absolute value, the positive
/// one on a tie.
pub fn smallest_representative(spinc: i64, n: i64) -> i64 {
    let r = spinc.rem_euclid(n);
    if r <= n - r {
        r
    } else {
        r - n
    }
}

/// Tower plus `Q_i` and `V_i` over every `i ≡ spinc (mod n)` with `|i| < g`,
/// leaving out `V_{i0}` when asked.
fn surgery_sum(knot: TwoBridgeKnot, n: i64, spinc: i64, drop_smallest_v: bool) -> UModule {
    let data = alexander_grading(knot);
    let delta = alexander_polynomial(knot);
    let g = data.genus;
    let r = spinc.rem_euclid(n);
    let i0 = smallest_representative(r, n);

    let mut summands = vec![Summand::Tower { bottom: None }];
    let first = -(g - 1) + (r - (-(g - 1))).rem_euclid(n);
    for i in (first..g).step_by(n as usize) {
        let inv = SpincInvariants::compute(&delta, data.half_signature, i);
        summands.push(Summand::Free {
            rank: inv.b.unsigned_abs(),
            grading: None,
        });
        if !(drop_smallest_v && i == i0) {
            summands.push(Summand::Torsion {
                length: inv.h as u64,
                bottom: None,
            });
        }
    }
    UModule::ungraded(summands)
}

fn check_surgery(n: i64) -> Result<(), FloerError> {
    if n <= 0 {
        Err(FloerError::NonPositiveSurgery(n))
    } else {
        Ok(())
    }
}

/// `HF+(K^n, s_k)` for `n ≥ 1` with the given case of the formula.
pub fn hf_plus_n_surgery_branch(
    knot: TwoBridgeKnot,
    n: i64,
    spinc: i64,
    branch: SignatureBranch,
) -> Result<UModule, FloerError> {
    check_surgery(n)?;
    Ok(surgery_sum(
        knot,
        n,
        spinc,
        branch == SignatureBranch::NonNegative,
    ))
}

/// `HF+(K^n, s_k)` for any `n ≥ 1`, as an ungraded module. `spinc` is read
/// mod `n`.
pub fn hf_plus_n_surgery(knot: TwoBridgeKnot, n: i64, spinc: i64) -> Result<UModule, FloerError> {
    let branch = SignatureBranch::of(alexander_grading(knot).signature);
    hf_plus_n_surgery_branch(knot, n, spinc, branch)
}

/// `HF+(K^{-n}, s_k)` for `n ≥ 1`. The cases are swapped relative to
/// positive surgery: `V_{i0}` is dropped when `σ ≤ 0`.
pub fn hf_plus_negative_surgery_branch(
    knot: TwoBridgeKnot,
    n: i64,
    spinc: i64,
    branch: SignatureBranch,
) -> Result<UModule, FloerError> {
    check_surgery(n)?;
    Ok(surgery_sum(
        knot,
        n,
        spinc,
        branch == SignatureBranch::NonPositive,
    ))
}

pub fn hf_plus_negative_surgery(
    knot: TwoBridgeKnot,
    n: i64,
    spinc: i64,
) -> Result<UModule, FloerError> {
    let sigma = alexander_grading(knot).signature;
    let branch = if sigma > 0 {
        SignatureBranch::NonNegative
    } else {
        SignatureBranch::NonPositive
    };
    hf_plus_negative_surgery_branch(knot, n, spinc, branch)
}

/// Correction terms of `+1` and `-1` surgery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DInvariants {
    pub d_plus1: i64,
    pub d_minus1: i64,
}

pub fn d_invariants(knot: TwoBridgeKnot) -> DInvariants {
    let data = alexander_grading(knot);
    let sigma = data.signature;
    let d_plus1 = (-2 * Integer::div_ceil(&sigma, &4)).min(0);
    let d_minus1 = if sigma >= 0 {
        0
    } else {
        2 * Integer::div_ceil(&data.half_signature.abs(), &2)
    };
    DInvariants { d_plus1, d_minus1 }
}

/// The extra free group `Q` in `HF+(K^0, s_k) ≅ Q ⊕ HF+(T^0, s_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusDecomposition {
    pub companion: (i64, i64),
    pub q_rank: u64,
    pub q_grading: i64,
}

/// Compares the zero-surgery module of `knot` with that of its torus
/// companion at `s_k`, `k ≠ 0`: the torsion parts must agree exactly and the
/// free parts may differ only by extra rank in grading `|k| - 1`.
pub fn torus_decomposition_check(
    knot: TwoBridgeKnot,
    spinc: i64,
) -> Result<TorusDecomposition, FloerError> {
    if spinc == 0 {
        return Err(FloerError::TwistedCase);
    }
    let companion = torus_companion(knot);
    let ours = hf_plus_zero_surgery(knot, spinc);
    let theirs = hf_plus_zero_surgery(companion, spinc);
    let fail = |reason: String| FloerError::DecompositionFailed {
        knot,
        spinc,
        reason,
    };

    let torsion = |m: &UModule| -> Vec<Summand> {
        m.summands
            .iter()
            .filter(|s| !matches!(s, Summand::Free { .. }))
            .copied()
            .collect()
    };
    if torsion(&ours) != torsion(&theirs) {
        return Err(fail(format!(
            "torsion parts differ: {ours} versus {theirs}"
        )));
    }

    let q_grading = spinc.abs() - 1;
    let free_at = |m: &UModule| -> Result<u64, FloerError> {
        let mut rank = 0;
        for s in &m.summands {
            if let Summand::Free { rank: r, grading } = *s {
                if grading != Some(q_grading) {
                    return Err(fail(format!("free summand at {grading:?}")));
                }
                rank += r;
            }
        }
        Ok(rank)
    };
    let (a, b) = (free_at(&ours)?, free_at(&theirs)?);
    if a < b {
        return Err(fail(format!("companion has larger free rank ({b} > {a})")));
    }
    Ok(TorusDecomposition {
        companion: (companion.p(), companion.q()),
        q_rank: a - b,
        q_grading,
    })
}

//! Model chain complexes built from the Alexander grading.
//!
//! The stable complex has one generator per `x_i`, graded by `ε(x_i)`, and a
//! unit differential across every interior pair `(x_{2i}, x_{2i+1})` running
//! from the higher endpoint to the lower one. Reflecting at level `k` flips
//! every generator above `k` to `2k - ε` and, in each pair lying entirely at
//! or above `k`, switches the interior differential off and the exterior one
//! on (now pointing toward the higher `ε`).
//!
//! These models carry only the annular differentials. Outside the stable
//! range the true complexes may have more, so only the stable homology and
//! Euler characteristics are meaningful here.

mod svg;

use thiserror::Error;

use crate::homalg::{
    cancel_generator, euler_characteristic, homology, parity_sign, GradedComplex, HomalgError,
    HomologySummary,
};
use crate::twobridge::{alexander_grading, spinc_invariants, TwoBridgeKnot};

pub use svg::{export_svg, write_svg};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("reflection needs a stable complex, got one already reflected or truncated")]
    NotStable,
    #[error(transparent)]
    Homalg(#[from] HomalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DifferentialKind {
    /// Joins `(x_{2i}, x_{2i+1})`.
    Interior,
    /// Joins `(x_{2i-1}, x_{2i})`.
    Exterior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelGenerator {
    pub label: String,
    /// 1-based index `i` of `x_i`.
    pub index: usize,
    /// Stable grading `ε(x_i)`.
    pub epsilon: i64,
    /// Tower level `j` of `[x_i, j]`; zero outside `C_k`.
    pub level: i64,
    pub grading: i64,
}

/// The annular differential between consecutive generators `x_i`, `x_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairDifferential {
    /// 1-based index of the lower endpoint `x_i`.
    pub first: usize,
    pub kind: DifferentialKind,
    pub active: bool,
    /// Whether the pair lies at or above the reflection level.
    pub reflected: bool,
    /// Position in the generator list of the source of the arrow.
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelComplex {
    pub knot: TwoBridgeKnot,
    pub generators: Vec<ModelGenerator>,
    pub pairs: Vec<PairDifferential>,
    pub reflection_level: Option<i64>,
    pub truncated: bool,
    complex: GradedComplex,
}

impl ModelComplex {
    pub fn complex(&self) -> &GradedComplex {
        &self.complex
    }

    pub fn gradings(&self) -> Vec<i64> {
        self.generators.iter().map(|g| g.grading).collect()
    }

    pub fn active_pairs(&self) -> impl Iterator<Item = &PairDifferential> {
        self.pairs.iter().filter(|d| d.active)
    }

    pub fn is_stable(&self) -> bool {
        self.reflection_level.is_none() && !self.truncated
    }

    fn assemble(
        knot: TwoBridgeKnot,
        generators: Vec<ModelGenerator>,
        pairs: Vec<PairDifferential>,
        reflection_level: Option<i64>,
        truncated: bool,
    ) -> Self {
        let edges: Vec<(usize, usize, i64)> = pairs
            .iter()
            .filter(|d| d.active)
            .map(|d| (d.source, d.target, 1))
            .collect();
        let labelled = generators
            .iter()
            .map(|g| (g.label.clone(), g.grading))
            .collect();
        let complex = GradedComplex::from_edges(labelled, &edges)
            .expect("annular differentials drop grading by one and never compose");
        ModelComplex {
            knot,
            generators,
            pairs,
            reflection_level,
            truncated,
            complex,
        }
    }
}

fn pair_kind(first: usize) -> DifferentialKind {
    if first % 2 == 1 {
        DifferentialKind::Exterior
    } else {
        DifferentialKind::Interior
    }
}

/// Orients the pair `(x_i, x_{i+1})`, given as 0-based positions `a = i-1`,
/// `a + 1`, from the larger `ε` to the smaller, or the reverse.
fn orient(epsilon: &[i64], a: usize, downhill: bool) -> (usize, usize) {
    let (hi, lo) = if epsilon[a] > epsilon[a + 1] {
        (a, a + 1)
    } else {
        (a + 1, a)
    };
    if downhill {
        (hi, lo)
    } else {
        (lo, hi)
    }
}

/// The stable complex: generators `x_1..x_p` at `ε(x_i)`, interior pairs active.
pub fn stable_complex(k: TwoBridgeKnot) -> ModelComplex {
    let epsilon = alexander_grading(k).epsilon;
    let generators = epsilon
        .iter()
        .enumerate()
        .map(|(a, &e)| ModelGenerator {
            label: format!("x{}", a + 1),
            index: a + 1,
            epsilon: e,
            level: 0,
            grading: e,
        })
        .collect();
    let pairs = (0..epsilon.len().saturating_sub(1))
        .map(|a| {
            let kind = pair_kind(a + 1);
            let (source, target) = orient(&epsilon, a, true);
            PairDifferential {
                first: a + 1,
                kind,
                active: kind == DifferentialKind::Interior,
                reflected: false,
                source,
                target,
            }
        })
        .collect();
    ModelComplex::assemble(k, generators, pairs, None, false)
}

/// Reflects a stable complex at `level`.
pub fn reflect(c: &ModelComplex, level: i64) -> Result<ModelComplex, ComplexError> {
    if !c.is_stable() {
        return Err(ComplexError::NotStable);
    }
    let epsilon: Vec<i64> = c.generators.iter().map(|g| g.epsilon).collect();
    let generators = c
        .generators
        .iter()
        .map(|g| ModelGenerator {
            grading: if g.epsilon <= level {
                g.epsilon
            } else {
                2 * level - g.epsilon
            },
            ..g.clone()
        })
        .collect();
    let pairs = c
        .pairs
        .iter()
        .map(|d| {
            let a = d.first - 1;
            let reflected = epsilon[a].min(epsilon[a + 1]) >= level;
            let (active, downhill) = match (reflected, d.kind) {
                (false, kind) => (kind == DifferentialKind::Interior, true),
                (true, DifferentialKind::Interior) => (false, true),
                (true, DifferentialKind::Exterior) => (true, false),
            };
            let (source, target) = orient(&epsilon, a, downhill);
            PairDifferential {
                active,
                reflected,
                source,
                target,
                ..*d
            }
        })
        .collect();
    Ok(ModelComplex::assemble(
        c.knot,
        generators,
        pairs,
        Some(level),
        false,
    ))
}

/// Generators `[x_i, j]` with `0 > j >= k - ε(x_i)` at grading `ε(x_i) + 2j`.
///
/// Only the generators are modelled. A negative label is replaced by its
/// absolute value.
pub fn ck_complex(k: TwoBridgeKnot, spinc: i64) -> ModelComplex {
    let spinc = spinc.abs();
    let epsilon = alexander_grading(k).epsilon;
    let mut generators = Vec::new();
    for (a, &e) in epsilon.iter().enumerate() {
        for j in (spinc - e..0).rev() {
            generators.push(ModelGenerator {
                label: format!("[x{},{}]", a + 1, j),
                index: a + 1,
                epsilon: e,
                level: j,
                grading: e + 2 * j,
            });
        }
    }
    ModelComplex::assemble(k, generators, Vec::new(), Some(spinc), true)
}

/// `χ(C_k) = (-1)^{σ'} u_k`.
pub fn verify_ck_euler(k: TwoBridgeKnot, spinc: i64) -> bool {
    let chi = euler_characteristic(ck_complex(k, spinc).complex());
    let half_signature = alexander_grading(k).half_signature;
    chi == parity_sign(half_signature) * spinc_invariants(k, spinc).u
}

pub fn stable_homology(k: TwoBridgeKnot) -> HomologySummary {
    homology(stable_complex(k).complex())
}

/// The stable complex has homology `Z`, in the grading of `x_1`.
pub fn stable_homology_check(k: TwoBridgeKnot) -> bool {
    let data = alexander_grading(k);
    debug_assert_eq!(data.epsilon[0], data.half_signature);
    stable_homology(k).is_single_z_at(data.half_signature)
}

/// Cancels every active pair of the model in turn. On the stable complex
/// this leaves the single generator `x_1`.
pub fn cancel_active_pairs(c: &ModelComplex) -> Result<GradedComplex, ComplexError> {
    let mut reduced = c.complex().clone();
    for d in c.active_pairs() {
        let source = &c.generators[d.source].label;
        let target = &c.generators[d.target].label;
        reduced = cancel_generator(&reduced, source, target)?;
    }
    Ok(reduced)
}

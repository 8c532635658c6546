use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use super::HomalgError;

/// A finitely generated free chain complex over the integers, graded so the
/// differential lowers grading by one.
///
/// The differential is stored as one matrix over the full generator basis:
/// entry `(y, x)` is the coefficient of generator `y` in `d(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    labels: Vec<String>,
    gradings: Vec<i64>,
    differential: IntMatrix,
}

impl GradedComplex {
    /// Validates labels, the grading drop of every nonzero entry and `d∘d = 0`.
    pub fn new(generators: Vec<(String, i64)>, differential: IntMatrix) -> Result<Self, HomalgError> {
        let n = generators.len();
        if differential.rows() != n || differential.cols() != n {
            return Err(HomalgError::DimensionMismatch {
                generators: n,
                rows: differential.rows(),
                cols: differential.cols(),
            });
        }
        let mut seen = HashMap::with_capacity(n);
        for (i, (label, _)) in generators.iter().enumerate() {
            if seen.insert(label.as_str(), i).is_some() {
                return Err(HomalgError::DuplicateLabel(label.clone()));
            }
        }
        let (labels, gradings): (Vec<_>, Vec<_>) = generators.into_iter().unzip();
        // nonzero entries of each column, i.e. the terms of d(x)
        let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (x, column) in columns.iter_mut().enumerate() {
            for y in 0..n {
                if differential.get(y, x).is_zero() {
                    continue;
                }
                if gradings[y] != gradings[x] - 1 {
                    return Err(HomalgError::GradingMismatch {
                        from: labels[x].clone(),
                        to: labels[y].clone(),
                    });
                }
                column.push(y);
            }
        }
        for x in 0..n {
            let mut dd: BTreeMap<usize, BigInt> = BTreeMap::new();
            for &y in &columns[x] {
                for &z in &columns[y] {
                    *dd.entry(z).or_default() += differential.get(z, y) * differential.get(y, x);
                }
            }
            if dd.values().any(|v| !v.is_zero()) {
                return Err(HomalgError::NotAComplex);
            }
        }
        Ok(GradedComplex {
            labels,
            gradings,
            differential,
        })
    }

    /// Builds a complex from `(source, target, coefficient)` triples over
    /// generator indices.
    pub fn from_edges(
        generators: Vec<(String, i64)>,
        edges: &[(usize, usize, i64)],
    ) -> Result<Self, HomalgError> {
        let n = generators.len();
        let mut d = IntMatrix::zeros(n, n);
        for &(source, target, coeff) in edges {
            if source >= n || target >= n {
                return Err(HomalgError::DimensionMismatch {
                    generators: n,
                    rows: target + 1,
                    cols: source + 1,
                });
            }
            let v = d.get(target, source) + BigInt::from(coeff);
            d.set(target, source, v);
        }
        Self::new(generators, d)
    }

    pub fn empty() -> Self {
        GradedComplex {
            labels: Vec::new(),
            gradings: Vec::new(),
            differential: IntMatrix::zeros(0, 0),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gradings(&self) -> &[i64] {
        &self.gradings
    }

    pub fn differential(&self) -> &IntMatrix {
        &self.differential
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Coefficient of `target` in `d(source)`.
    pub fn coefficient(&self, source: usize, target: usize) -> &BigInt {
        self.differential.get(target, source)
    }

    fn indices_at(&self, grading: i64) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.gradings[i] == grading).collect()
    }

    /// Matrix of `d: C_grading -> C_{grading-1}` in the generator order of
    /// each grading.
    pub fn block(&self, grading: i64) -> IntMatrix {
        let cols = self.indices_at(grading);
        let rows = self.indices_at(grading - 1);
        self.differential.select(&rows, &cols)
    }
}

/// Homology in one grading: `Z^free_rank ⊕ ⊕ Z/t` over `torsion`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Nontrivial homology groups keyed by grading.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologySummary {
    pub groups: BTreeMap<i64, HomologyGroup>,
}

impl HomologySummary {
    pub fn free_rank_at(&self, grading: i64) -> usize {
        self.groups.get(&grading).map_or(0, |g| g.free_rank)
    }

    pub fn total_free_rank(&self) -> usize {
        self.groups.values().map(|g| g.free_rank).sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.values().any(|g| !g.torsion.is_empty())
    }

    /// True when the homology is a single `Z` at `grading` and nothing else.
    pub fn is_single_z_at(&self, grading: i64) -> bool {
        self.groups.len() == 1
            && self
                .groups
                .get(&grading)
                .is_some_and(|g| g.free_rank == 1 && g.torsion.is_empty())
    }

    /// Signed rank count `Σ (-1)^i rank H_i`; torsion does not contribute.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|(&i, g)| parity_sign(i) * g.free_rank as i64)
            .sum()
    }
}

impl fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<_> = self
            .groups
            .iter()
            .rev()
            .map(|(i, g)| format!("H_{i} = {g}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

pub(crate) fn parity_sign(grading: i64) -> i64 {
    if grading.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Homology of every grading, computed from Smith forms of the blocks of the
/// differential.
pub fn homology(c: &GradedComplex) -> HomologySummary {
    let mut gradings: Vec<i64> = c.gradings.clone();
    gradings.sort_unstable();
    gradings.dedup();

    let rank_of = |grading: i64| -> (usize, Vec<BigInt>) {
        let block = c.block(grading);
        if block.rows() == 0 || block.cols() == 0 {
            return (0, Vec::new());
        }
        let factors = smith_normal_form(&block).invariant_factors();
        (factors.len(), factors)
    };

    let mut groups = BTreeMap::new();
    for &i in &gradings {
        let n = c.indices_at(i).len();
        let (rank_out, _) = rank_of(i);
        let (rank_in, factors_in) = rank_of(i + 1);
        let group = HomologyGroup {
            free_rank: n - rank_out - rank_in,
            torsion: factors_in.into_iter().filter(|t| !t.is_one()).collect(),
        };
        if !group.is_trivial() {
            groups.insert(i, group);
        }
    }
    HomologySummary { groups }
}

/// Signed generator count `Σ (-1)^grading`.
pub fn euler_characteristic(c: &GradedComplex) -> i64 {
    c.gradings.iter().map(|&g| parity_sign(g)).sum()
}

/// Cancels the pair `x -> y` joined by a unit coefficient.
///
/// Every other generator `z` whose differential hits `y` has `d(z)` replaced
/// by `d(z) - d(z, y) d(x, y)^{-1} d(x)`, then `x` and `y` are dropped. The
/// result is chain homotopy equivalent to the input.
pub fn cancel_generator(c: &GradedComplex, x: &str, y: &str) -> Result<GradedComplex, HomalgError> {
    let ix = c
        .index_of(x)
        .ok_or_else(|| HomalgError::UnknownLabel(x.to_string()))?;
    let iy = c
        .index_of(y)
        .ok_or_else(|| HomalgError::UnknownLabel(y.to_string()))?;
    let pivot = c.coefficient(ix, iy).clone();
    if pivot.abs() != BigInt::one() {
        return Err(HomalgError::NonUnitPivot {
            from: x.to_string(),
            to: y.to_string(),
            value: pivot,
        });
    }

    let keep: Vec<usize> = (0..c.len()).filter(|&i| i != ix && i != iy).collect();
    let mut d = c.differential.select(&keep, &keep);
    for (a, &z) in keep.iter().enumerate() {
        let to_y = c.coefficient(z, iy);
        if to_y.is_zero() {
            continue;
        }
        // pivot is ±1, so it is its own inverse
        let factor = to_y * &pivot;
        for (b, &w) in keep.iter().enumerate() {
            let from_x = c.coefficient(ix, w);
            if from_x.is_zero() {
                continue;
            }
            let v = d.get(b, a) - &factor * from_x;
            d.set(b, a, v);
        }
    }
    let generators = keep
        .iter()
        .map(|&i| (c.labels[i].clone(), c.gradings[i]))
        .collect();
    GradedComplex::new(generators, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(spec: &[(&str, i64)]) -> Vec<(String, i64)> {
        spec.iter().map(|&(l, g)| (l.to_string(), g)).collect()
    }

    #[test]
    fn rejects_bad_grading() {
        let err = GradedComplex::from_edges(gens(&[("x", 1), ("y", 1)]), &[(0, 1, 1)]).unwrap_err();
        assert!(matches!(err, HomalgError::GradingMismatch { .. }));
    }

    #[test]
    fn rejects_d_squared_nonzero() {
        let err = GradedComplex::from_edges(
            gens(&[("a", 2), ("b", 1), ("c", 0)]),
            &[(0, 1, 1), (1, 2, 1)],
        )
        .unwrap_err();
        assert_eq!(err, HomalgError::NotAComplex);
    }

    #[test]
    fn rejects_duplicate_labels() {
        let err = GradedComplex::from_edges(gens(&[("a", 0), ("a", 1)]), &[]).unwrap_err();
        assert_eq!(err, HomalgError::DuplicateLabel("a".into()));
    }

    #[test]
    fn single_generator_is_z() {
        let c = GradedComplex::from_edges(gens(&[("x", 3)]), &[]).unwrap();
        assert!(homology(&c).is_single_z_at(3));
    }

    #[test]
    fn multiplication_by_two_gives_torsion() {
        let c = GradedComplex::from_edges(gens(&[("x", 1), ("y", 0)]), &[(0, 1, 2)]).unwrap();
        let h = homology(&c);
        assert_eq!(h.groups.len(), 1);
        assert_eq!(
            h.groups[&0],
            HomologyGroup {
                free_rank: 0,
                torsion: vec![BigInt::from(2)]
            }
        );
        assert_eq!(h.to_string(), "H_0 = Z/2");
    }

    #[test]
    fn cancel_minimal_pair() {
        let c = GradedComplex::from_edges(gens(&[("x", 1), ("y", 0)]), &[(0, 1, 1)]).unwrap();
        assert!(cancel_generator(&c, "x", "y").unwrap().is_empty());
        let c = GradedComplex::from_edges(gens(&[("x", 1), ("y", 0)]), &[(0, 1, -1)]).unwrap();
        assert!(cancel_generator(&c, "x", "y").unwrap().is_empty());
    }

    #[test]
    fn cancel_leaves_other_target() {
        let c = GradedComplex::from_edges(
            gens(&[("a", 1), ("b", 0), ("c", 0)]),
            &[(0, 1, 1), (0, 2, 1)],
        )
        .unwrap();
        let reduced = cancel_generator(&c, "a", "b").unwrap();
        assert_eq!(reduced.labels(), ["c".to_string()]);
        assert!(reduced.differential().is_zero());
        assert!(homology(&c).is_single_z_at(0));
        assert_eq!(homology(&reduced), homology(&c));
    }

    #[test]
    fn cancel_rewires_zigzag() {
        // d(z) = y + w', d(x) = y + w: cancelling (x, y) leaves d(z) = w' - w.
        let c = GradedComplex::from_edges(
            gens(&[("x", 1), ("z", 1), ("y", 0), ("w", 0), ("w'", 0)]),
            &[(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 4, 1)],
        )
        .unwrap();
        let r = cancel_generator(&c, "x", "y").unwrap();
        let z = r.index_of("z").unwrap();
        assert_eq!(*r.coefficient(z, r.index_of("w").unwrap()), BigInt::from(-1));
        assert_eq!(*r.coefficient(z, r.index_of("w'").unwrap()), BigInt::from(1));
        assert_eq!(homology(&r), homology(&c));
    }

    #[test]
    fn cancel_errors() {
        let c = GradedComplex::from_edges(gens(&[("x", 1), ("y", 0)]), &[(0, 1, 2)]).unwrap();
        assert!(matches!(
            cancel_generator(&c, "x", "y"),
            Err(HomalgError::NonUnitPivot { .. })
        ));
        assert_eq!(
            cancel_generator(&c, "x", "q"),
            Err(HomalgError::UnknownLabel("q".into()))
        );
    }

    #[test]
    fn euler_characteristic_counts_parity() {
        assert_eq!(euler_characteristic(&GradedComplex::empty()), 0);
        let c = GradedComplex::from_edges(
            gens(&[("a", 0), ("b", -1), ("c", -1), ("d", -1), ("e", -2)]),
            &[],
        )
        .unwrap();
        assert_eq!(euler_characteristic(&c), -1);
    }
}

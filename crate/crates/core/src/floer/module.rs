use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::homalg::{smith_normal_form, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GradingKind {
    /// Gradings are meaningful only up to a common shift.
    Relative,
    Ungraded,
}

/// One cyclic or free summand of a module over `Z[u]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Summand {
    /// `Z^rank` with `u` acting as zero.
    Free {
        rank: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grading: Option<i64>,
    },
    /// `Z[u^-1] / u^-length`, occupying `bottom, bottom + 2, ..`.
    Torsion {
        length: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bottom: Option<i64>,
    },
    /// `Z[u^-1]`, unbounded above.
    Tower {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bottom: Option<i64>,
    },
    /// `Z[u]`, unbounded below.
    TowerDown {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        top: Option<i64>,
    },
}

impl Summand {
    fn sort_key(&self) -> (u8, Option<i64>, u64) {
        match *self {
            Summand::Free { rank, grading } => (0, grading, rank),
            Summand::Torsion { length, bottom } => (1, bottom, length),
            Summand::Tower { bottom } => (2, bottom, 0),
            Summand::TowerDown { top } => (3, top, 0),
        }
    }

    fn is_trivial(&self) -> bool {
        matches!(
            self,
            Summand::Free { rank: 0, .. } | Summand::Torsion { length: 0, .. }
        )
    }

    fn without_grading(self) -> Self {
        match self {
            Summand::Free { rank, .. } => Summand::Free { rank, grading: None },
            Summand::Torsion { length, .. } => Summand::Torsion {
                length,
                bottom: None,
            },
            Summand::Tower { .. } => Summand::Tower { bottom: None },
            Summand::TowerDown { .. } => Summand::TowerDown { top: None },
        }
    }

    fn has_grading(&self) -> bool {
        match *self {
            Summand::Free { grading, .. } => grading.is_some(),
            Summand::Torsion { bottom, .. } | Summand::Tower { bottom } => bottom.is_some(),
            Summand::TowerDown { top } => top.is_some(),
        }
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// A graded module over `Z[u]` presented as a direct sum of towers, torsion
/// chains and `u`-trivial free groups.
///
/// Summands are kept in a canonical order with zero summands dropped and free
/// summands of equal grading merged, so `==` is isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UModule {
    pub summands: Vec<Summand>,
    pub grading_kind: GradingKind,
    /// The free and torsion part is tensored with `Z[T, T^-1]`; towers are not.
    #[serde(default, skip_serializing_if = "is_false")]
    pub twisted: bool,
}

impl UModule {
    pub fn new(grading_kind: GradingKind, summands: impl IntoIterator<Item = Summand>) -> Self {
        let mut merged: Vec<Summand> = Vec::new();
        let mut free: BTreeMap<Option<i64>, u64> = BTreeMap::new();
        for s in summands {
            let s = match grading_kind {
                GradingKind::Relative => s,
                GradingKind::Ungraded => s.without_grading(),
            };
            match s {
                _ if s.is_trivial() => {}
                Summand::Free { rank, grading } => *free.entry(grading).or_insert(0) += rank,
                other => merged.push(other),
            }
        }
        merged.extend(
            free.into_iter()
                .map(|(grading, rank)| Summand::Free { rank, grading }),
        );
        merged.sort_by_key(Summand::sort_key);
        UModule {
            summands: merged,
            grading_kind,
            twisted: false,
        }
    }

    pub fn relative(summands: impl IntoIterator<Item = Summand>) -> Self {
        Self::new(GradingKind::Relative, summands)
    }

    pub fn ungraded(summands: impl IntoIterator<Item = Summand>) -> Self {
        Self::new(GradingKind::Ungraded, summands)
    }

    pub fn zero(grading_kind: GradingKind) -> Self {
        Self::new(grading_kind, [])
    }

    pub fn with_twist(mut self) -> Self {
        self.twisted = true;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn forget_gradings(&self) -> Self {
        let mut m = Self::ungraded(self.summands.iter().copied());
        m.twisted = self.twisted;
        m
    }

    pub fn tower_count(&self) -> usize {
        self.summands
            .iter()
            .filter(|s| matches!(s, Summand::Tower { .. } | Summand::TowerDown { .. }))
            .count()
    }

    pub fn free_rank(&self) -> u64 {
        self.summands
            .iter()
            .map(|s| match s {
                Summand::Free { rank, .. } => *rank,
                _ => 0,
            })
            .sum()
    }

    pub fn torsion_lengths(&self) -> Vec<u64> {
        self.summands
            .iter()
            .filter_map(|s| match s {
                Summand::Torsion { length, .. } => Some(*length),
                _ => None,
            })
            .collect()
    }

    /// `Σ (-1)^grading` over a `Z`-basis of a finitely generated graded
    /// module. `None` when there is a tower or a missing grading.
    pub fn signed_rank(&self) -> Option<i64> {
        let sign = |g: i64| if g.rem_euclid(2) == 0 { 1 } else { -1 };
        let mut total = 0;
        for s in &self.summands {
            total += match *s {
                Summand::Free {
                    rank,
                    grading: Some(g),
                } => sign(g) * rank as i64,
                // every element of a torsion chain has the parity of its bottom
                Summand::Torsion {
                    length,
                    bottom: Some(b),
                } => sign(b) * length as i64,
                _ => return None,
            };
        }
        Some(total)
    }

    /// Whether every summand carries a grading.
    pub fn fully_graded(&self) -> bool {
        self.summands.iter().all(Summand::has_grading)
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = |label: &str, g: Option<i64>| g.map(|g| format!(" [{label} {g}]")).unwrap_or_default();
        match *self {
            Summand::Free { rank, grading } => {
                if rank == 1 {
                    write!(f, "Z{}", at("gr", grading))
                } else {
                    write!(f, "Z^{rank}{}", at("gr", grading))
                }
            }
            Summand::Torsion { length, bottom } => {
                write!(f, "Z[u^-1]/u^-{length}{}", at("bottom", bottom))
            }
            Summand::Tower { bottom } => write!(f, "Z[u^-1]{}", at("bottom", bottom)),
            Summand::TowerDown { top } => write!(f, "Z[u]{}", at("top", top)),
        }
    }
}

impl fmt::Display for UModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let join = |it: &mut dyn Iterator<Item = &Summand>| {
            it.map(ToString::to_string).collect::<Vec<_>>().join(" + ")
        };
        if self.twisted {
            let is_tower = |s: &&Summand| matches!(s, Summand::Tower { .. } | Summand::TowerDown { .. });
            let finite = join(&mut self.summands.iter().filter(|s| !is_tower(s)));
            let towers = join(&mut self.summands.iter().filter(is_tower));
            let finite = if finite.is_empty() { "0".to_string() } else { finite };
            write!(f, "({finite}) (x) Z[T,T^-1]")?;
            if !towers.is_empty() {
                write!(f, " + {towers}")?;
            }
            Ok(())
        } else {
            f.write_str(&join(&mut self.summands.iter()))
        }
    }
}

/// Rank of a graded abelian group at one grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HatSummand {
    pub rank: u64,
    pub grading: i64,
}

/// A finitely generated free graded abelian group, listed by grading.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HatModule {
    pub summands: Vec<HatSummand>,
}

impl HatModule {
    pub fn from_ranks(ranks: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut by_grading: BTreeMap<i64, u64> = BTreeMap::new();
        for (g, r) in ranks {
            *by_grading.entry(g).or_insert(0) += r;
        }
        HatModule {
            summands: by_grading
                .into_iter()
                .rev()
                .filter(|&(_, r)| r > 0)
                .map(|(grading, rank)| HatSummand { rank, grading })
                .collect(),
        }
    }

    pub fn rank_at(&self, grading: i64) -> u64 {
        self.summands
            .iter()
            .find(|s| s.grading == grading)
            .map_or(0, |s| s.rank)
    }

    pub fn total_rank(&self) -> u64 {
        self.summands.iter().map(|s| s.rank).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.summands
            .iter()
            .map(|s| if s.grading.rem_euclid(2) == 0 { s.rank as i64 } else { -(s.rank as i64) })
            .sum()
    }
}

impl fmt::Display for HatModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                if s.rank == 1 {
                    format!("Z [gr {}]", s.grading)
                } else {
                    format!("Z^{} [gr {}]", s.rank, s.grading)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Ranks of the group obtained from a graded `HF+`-type module through the
/// exact sequence `HF^_i -> HF+_i -u-> HF+_{i-2} -> HF^_{i-1}`:
/// `rank HF^_i = rank ker(u on HF+_i) + rank coker(u: HF+_{i+1} -> HF+_{i-1})`.
///
/// Builds a `Z`-basis of every grading (towers cut off well above all other
/// gradings), writes `u` as integer matrices and takes ranks from Smith
/// forms. Returns `None` for twisted, ungraded or downward-tower modules.
pub fn hat_from_plus(m: &UModule) -> Option<HatModule> {
    if m.twisted || !m.fully_graded() {
        return None;
    }
    let mut anchors = Vec::new();
    for s in &m.summands {
        match *s {
            Summand::Free { grading, .. } => anchors.push(grading?),
            Summand::Torsion { length, bottom } => anchors.push(bottom? + 2 * (length as i64 - 1)),
            Summand::Tower { bottom } => anchors.push(bottom?),
            Summand::TowerDown { .. } => return None,
        }
    }
    let Some(&highest) = anchors.iter().max() else {
        return Some(HatModule::default());
    };
    let cutoff = highest + 6;

    // basis elements per grading, as (summand, copy, position in chain)
    let mut basis: BTreeMap<i64, Vec<(usize, usize, usize)>> = BTreeMap::new();
    for (id, s) in m.summands.iter().enumerate() {
        let (copies, chain): (usize, Vec<i64>) = match *s {
            Summand::Free { rank, grading } => (rank as usize, vec![grading?]),
            Summand::Torsion { length, bottom } => {
                let b = bottom?;
                (1, (0..length as i64).map(|e| b + 2 * e).collect())
            }
            Summand::Tower { bottom } => {
                let b = bottom?;
                (1, (0..).map(|e| b + 2 * e).take_while(|&g| g <= cutoff).collect())
            }
            Summand::TowerDown { .. } => return None,
        };
        for copy in 0..copies {
            for (pos, &g) in chain.iter().enumerate() {
                basis.entry(g).or_default().push((id, copy, pos));
            }
        }
    }

    // u moves one step down its chain; bottoms and free summands go to zero
    let u_matrix = |from: i64| -> IntMatrix {
        let empty = Vec::new();
        let src = basis.get(&from).unwrap_or(&empty);
        let dst = basis.get(&(from - 2)).unwrap_or(&empty);
        let mut mat = IntMatrix::zeros(dst.len(), src.len());
        for (c, &(id, copy, pos)) in src.iter().enumerate() {
            if pos == 0 || matches!(m.summands[id], Summand::Free { .. }) {
                continue;
            }
            if let Some(r) = dst.iter().position(|&e| e == (id, copy, pos - 1)) {
                mat.set(r, c, 1);
            }
        }
        mat
    };
    let rank = |mat: &IntMatrix| -> u64 {
        if mat.rows() == 0 || mat.cols() == 0 {
            0
        } else {
            smith_normal_form(mat).rank() as u64
        }
    };
    let dim = |g: i64| basis.get(&g).map_or(0, |v| v.len() as u64);

    let lowest = *basis.keys().next()?;
    let mut ranks = Vec::new();
    // stop two below the cutoff: the cut tower's last element is not a real cokernel
    for i in lowest - 1..=cutoff - 2 {
        let ker = dim(i) - rank(&u_matrix(i));
        let coker = dim(i - 1) - rank(&u_matrix(i + 1));
        ranks.push((i, ker + coker));
    }
    Some(HatModule::from_ranks(ranks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_merges_and_sorts() {
        let a = UModule::relative([
            Summand::Tower { bottom: Some(-1) },
            Summand::Free {
                rank: 1,
                grading: Some(0),
            },
            Summand::Torsion {
                length: 0,
                bottom: Some(3),
            },
            Summand::Free {
                rank: 2,
                grading: Some(0),
            },
        ]);
        assert_eq!(
            a.summands,
            vec![
                Summand::Free {
                    rank: 3,
                    grading: Some(0)
                },
                Summand::Tower { bottom: Some(-1) }
            ]
        );
        let u = a.forget_gradings();
        assert_eq!(u.grading_kind, GradingKind::Ungraded);
        assert!(!u.fully_graded());
    }

    #[test]
    fn json_shape() {
        let m = UModule::relative([
            Summand::Tower { bottom: Some(-1) },
            Summand::Torsion {
                length: 1,
                bottom: Some(-1),
            },
        ]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"summands":[{"type":"torsion","length":1,"bottom":-1},{"type":"tower","bottom":-1}],"grading_kind":"relative"}"#
        );
        let back: UModule = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        let twisted = m.clone().with_twist();
        let json = serde_json::to_string(&twisted).unwrap();
        assert!(json.ends_with(r#""twisted":true}"#));
    }

    #[test]
    fn hat_of_trefoil_module() {
        // Z[u^-1]/u^-1 at -1 plus a tower from -1
        let m = UModule::relative([
            Summand::Torsion {
                length: 1,
                bottom: Some(-1),
            },
            Summand::Tower { bottom: Some(-1) },
        ]);
        let hat = hat_from_plus(&m).unwrap();
        assert_eq!(hat, HatModule::from_ranks([(-1, 2), (0, 1)]));
    }

    #[test]
    fn hat_of_long_torsion_spans_odd_sphere() {
        let m = UModule::relative([Summand::Torsion {
            length: 3,
            bottom: Some(-4),
        }]);
        // H*(S^5) placed at -4 and -4 + 5
        assert_eq!(
            hat_from_plus(&m).unwrap(),
            HatModule::from_ranks([(-4, 1), (1, 1)])
        );
    }

    #[test]
    fn hat_of_free_part_doubles() {
        let m = UModule::relative([Summand::Free {
            rank: 2,
            grading: Some(3),
        }]);
        assert_eq!(
            hat_from_plus(&m).unwrap(),
            HatModule::from_ranks([(3, 2), (4, 2)])
        );
    }

    #[test]
    fn signed_rank_counts_chain_elements() {
        let m = UModule::relative([
            Summand::Free {
                rank: 2,
                grading: Some(-1),
            },
            Summand::Torsion {
                length: 3,
                bottom: Some(0),
            },
        ]);
        assert_eq!(m.signed_rank(), Some(1));
        let with_tower = UModule::relative([Summand::Tower { bottom: Some(0) }]);
        assert_eq!(with_tower.signed_rank(), None);
    }
}

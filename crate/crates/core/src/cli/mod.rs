//! Records and renderers behind the `twobridge-hf` command line.
//!
//! Every subcommand builds a serializable record here; the binary only parses
//! flags and chooses between text and JSON. The JSON shapes are described by
//! `schema/output.schema.json`.

mod census;

use std::fmt::{self, Write as _};
use std::io;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::{reflect, stable_complex, ComplexError, DifferentialKind, ModelComplex};
use crate::floer::{
    d_invariants, hf_hat_large_n, hf_minus_large_n, hf_plus_large_n, hf_plus_n_surgery,
    hf_plus_negative_surgery, hf_plus_zero_surgery, DInvariants, FloerError, HatModule, UModule,
};
use crate::homalg::homology;
use crate::twobridge::{
    alexander_grading, alexander_polynomial, amphichiral, determinant, KnotError, TwoBridgeKnot,
};

pub use census::{census_rows, write_census, CensusRow, CENSUS_HEADER};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Floer(#[from] FloerError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("{0}")]
    Invalid(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// 1 for I/O failures, 2 for everything the input is to blame for.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub p: i64,
    pub q: i64,
}

impl From<TwoBridgeKnot> for KnotRecord {
    fn from(k: TwoBridgeKnot) -> Self {
        KnotRecord { p: k.p(), q: k.q() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsBlock {
    /// `a_{-g} .. a_g`.
    pub alexander: Vec<i64>,
    pub sigma: i64,
    pub genus: i64,
    pub determinant: i64,
    pub amphichiral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsRecord {
    pub knot: KnotRecord,
    pub invariants: InvariantsBlock,
    pub d_invariants: DInvariants,
}

pub fn invariants_record(k: TwoBridgeKnot) -> InvariantsRecord {
    let data = alexander_grading(k);
    InvariantsRecord {
        knot: k.into(),
        invariants: InvariantsBlock {
            alexander: alexander_polynomial(k).symmetric_coefficients(),
            sigma: data.signature,
            genus: data.genus,
            determinant: determinant(k),
            amphichiral: amphichiral(k),
        },
        d_invariants: d_invariants(k),
    }
}

impl fmt::Display for InvariantsRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = TwoBridgeKnot::new(self.knot.p, self.knot.q).map_err(|_| fmt::Error)?;
        let inv = &self.invariants;
        writeln!(f, "knot         {k}")?;
        writeln!(f, "alexander    {}", alexander_polynomial(k))?;
        writeln!(f, "coefficients {:?}", inv.alexander)?;
        writeln!(f, "signature    {}", inv.sigma)?;
        writeln!(f, "genus        {}", inv.genus)?;
        writeln!(f, "determinant  {}", inv.determinant)?;
        writeln!(f, "amphichiral  {}", inv.amphichiral)?;
        writeln!(f, "d(K^1)       {}", self.d_invariants.d_plus1)?;
        write!(f, "d(K^-1)      {}", self.d_invariants.d_minus1)
    }
}

/// Surgery coefficient: `large` (any `n ≫ 0`), `0`, or a nonzero integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Surgery {
    Large,
    Integer(i64),
}

impl FromStr for Surgery {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("large") {
            return Ok(Surgery::Large);
        }
        s.trim_start_matches('+')
            .parse()
            .map(Surgery::Integer)
            .map_err(|_| CliError::Invalid(format!("surgery must be 'large' or an integer, got '{s}'")))
    }
}

impl fmt::Display for Surgery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surgery::Large => f.write_str("large"),
            Surgery::Integer(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpincSelection {
    One(i64),
    All,
}

impl FromStr for SpincSelection {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("all") {
            return Ok(SpincSelection::All);
        }
        s.parse()
            .map(SpincSelection::One)
            .map_err(|_| CliError::Invalid(format!("spinc must be 'all' or an integer, got '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Flavor {
    #[default]
    Plus,
    Minus,
    Hat,
}

impl FromStr for Flavor {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "plus" | "+" => Ok(Flavor::Plus),
            "minus" | "-" => Ok(Flavor::Minus),
            "hat" => Ok(Flavor::Hat),
            other => Err(CliError::Invalid(format!(
                "flavor must be plus, minus or hat, got '{other}'"
            ))),
        }
    }
}

/// One Floer group as emitted by `hf`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FloerGroup {
    Module(UModule),
    Hat(HatModule),
}

impl fmt::Display for FloerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FloerGroup::Module(m) => m.fmt(f),
            FloerGroup::Hat(h) => h.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpincEntry {
    pub spinc: i64,
    pub module: FloerGroup,
}

/// A single group for one Spin^c label, or a list covering all of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HfOutput {
    Single(FloerGroup),
    All(Vec<SpincEntry>),
}

/// The labels covered by `--spinc all`: `0..=g` for large and zero surgery,
/// `0..n` for `±n` surgery.
pub fn spinc_range(k: TwoBridgeKnot, surgery: Surgery) -> Vec<i64> {
    match surgery {
        Surgery::Large | Surgery::Integer(0) => (0..=alexander_grading(k).genus).collect(),
        Surgery::Integer(n) => (0..n.abs()).collect(),
    }
}

pub fn hf_group(
    k: TwoBridgeKnot,
    surgery: Surgery,
    flavor: Flavor,
    spinc: i64,
) -> Result<FloerGroup, CliError> {
    let group = match (surgery, flavor) {
        (Surgery::Large, Flavor::Plus) => FloerGroup::Module(hf_plus_large_n(k, spinc)),
        (Surgery::Large, Flavor::Minus) => FloerGroup::Module(hf_minus_large_n(k, spinc)),
        (Surgery::Large, Flavor::Hat) => FloerGroup::Hat(hf_hat_large_n(k, spinc)),
        (Surgery::Integer(0), Flavor::Plus) => FloerGroup::Module(hf_plus_zero_surgery(k, spinc)),
        (Surgery::Integer(n), Flavor::Plus) if n > 0 => {
            FloerGroup::Module(hf_plus_n_surgery(k, n, spinc)?)
        }
        (Surgery::Integer(n), Flavor::Plus) => {
            FloerGroup::Module(hf_plus_negative_surgery(k, -n, spinc)?)
        }
        (Surgery::Integer(_), _) => {
            return Err(CliError::Invalid(
                "only HF+ is available for finite surgery coefficients".into(),
            ))
        }
    };
    Ok(group)
}

pub fn hf_output(
    k: TwoBridgeKnot,
    surgery: Surgery,
    flavor: Flavor,
    spinc: SpincSelection,
) -> Result<HfOutput, CliError> {
    match spinc {
        SpincSelection::One(s) => Ok(HfOutput::Single(hf_group(k, surgery, flavor, s)?)),
        SpincSelection::All => spinc_range(k, surgery)
            .into_iter()
            .map(|s| {
                Ok(SpincEntry {
                    spinc: s,
                    module: hf_group(k, surgery, flavor, s)?,
                })
            })
            .collect::<Result<_, CliError>>()
            .map(HfOutput::All),
    }
}

impl fmt::Display for HfOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HfOutput::Single(g) => g.fmt(f),
            HfOutput::All(entries) => {
                let lines: Vec<String> = entries
                    .iter()
                    .map(|e| format!("s_{:<3} {}", e.spinc, e.module))
                    .collect();
                f.write_str(&lines.join("\n"))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArrowKind {
    Interior,
    Exterior,
}

/// An active differential `x_from -> x_to` (1-based generator indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub from: usize,
    pub to: usize,
    pub kind: ArrowKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRecord {
    pub grading: i64,
    pub free_rank: usize,
    /// Torsion coefficients as decimal strings.
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableRecord {
    pub knot: KnotRecord,
    pub gradings: Vec<i64>,
    pub arrows: Vec<ArrowRecord>,
    pub homology: Vec<HomologyRecord>,
}

/// The stable complex of `k`, reflected at `level` if given.
pub fn stable_model(k: TwoBridgeKnot, level: Option<i64>) -> Result<ModelComplex, CliError> {
    let c = stable_complex(k);
    Ok(match level {
        Some(level) => reflect(&c, level)?,
        None => c,
    })
}

pub fn stable_record(c: &ModelComplex) -> StableRecord {
    let arrows = c
        .active_pairs()
        .map(|d| ArrowRecord {
            from: c.generators[d.source].index,
            to: c.generators[d.target].index,
            kind: match d.kind {
                DifferentialKind::Interior => ArrowKind::Interior,
                DifferentialKind::Exterior => ArrowKind::Exterior,
            },
        })
        .collect();
    let homology = homology(c.complex())
        .groups
        .into_iter()
        .rev()
        .map(|(grading, g)| HomologyRecord {
            grading,
            free_rank: g.free_rank,
            torsion: g.torsion.iter().map(ToString::to_string).collect(),
        })
        .collect();
    StableRecord {
        knot: c.knot.into(),
        gradings: c.gradings(),
        arrows,
        homology,
    }
}

impl fmt::Display for StableRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let _ = writeln!(s, "knot      K({},{})", self.knot.p, self.knot.q);
        let _ = writeln!(s, "gradings  {:?}", self.gradings);
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| {
                let tag = match a.kind {
                    ArrowKind::Interior => "",
                    ArrowKind::Exterior => " (ext)",
                };
                format!("x{}->x{}{tag}", a.from, a.to)
            })
            .collect();
        let _ = writeln!(s, "arrows    {}", arrows.join(", "));
        let homology: Vec<String> = self
            .homology
            .iter()
            .map(|h| {
                let mut parts = Vec::new();
                match h.free_rank {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    r => parts.push(format!("Z^{r}")),
                }
                parts.extend(h.torsion.iter().map(|t| format!("Z/{t}")));
                format!("H_{} = {}", h.grading, parts.join(" + "))
            })
            .collect();
        let _ = write!(s, "homology  {}", homology.join(", "));
        f.write_str(&s)
    }
}

/// Compact JSON on one line, as printed by the binary.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("records serialize");
    s.push('\n');
    s
}

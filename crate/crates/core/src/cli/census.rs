use std::io::{self, Write};

use rayon::prelude::*;

use super::CliError;
use crate::floer::d_invariants;
use crate::twobridge::{alexander_grading, alexander_polynomial, census_classes, determinant};

pub const CENSUS_HEADER: &str = "p,q,det,sigma,genus,alexander,d_plus1,d_minus1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub p: i64,
    pub q: i64,
    pub det: i64,
    pub sigma: i64,
    pub genus: i64,
    /// `a_{-g} .. a_g`.
    pub alexander: Vec<i64>,
    pub d_plus1: i64,
    pub d_minus1: i64,
}

impl CensusRow {
    /// The CSV line, with the `;`-joined Alexander coefficients quoted.
    pub fn to_csv(&self) -> String {
        let alexander: Vec<String> = self.alexander.iter().map(i64::to_string).collect();
        format!(
            "{},{},{},{},{},\"{}\",{},{}",
            self.p,
            self.q,
            self.det,
            self.sigma,
            self.genus,
            alexander.join(";"),
            self.d_plus1,
            self.d_minus1
        )
    }
}

/// One row per knot class with `p <= max_p`, ordered by `(p, q)`. Rows are
/// computed in parallel.
pub fn census_rows(max_p: i64) -> Result<Vec<CensusRow>, CliError> {
    if max_p < 3 {
        return Err(CliError::Invalid(format!(
            "census needs max-p >= 3, got {max_p}: no nontrivial two-bridge knots below"
        )));
    }
    Ok(census_classes(max_p)
        .par_iter()
        .map(|&k| {
            let data = alexander_grading(k);
            let d = d_invariants(k);
            CensusRow {
                p: k.p(),
                q: k.q(),
                det: determinant(k),
                sigma: data.signature,
                genus: data.genus,
                alexander: alexander_polynomial(k).symmetric_coefficients(),
                d_plus1: d.d_plus1,
                d_minus1: d.d_minus1,
            }
        })
        .collect())
}

pub fn write_census<W: Write>(rows: &[CensusRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CENSUS_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    out.flush()
}

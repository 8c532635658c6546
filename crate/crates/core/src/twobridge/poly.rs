use std::collections::BTreeMap;
use std::fmt;

/// Integer Laurent polynomial in one variable `t`, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coefficients: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut coefficients = BTreeMap::new();
        for (e, c) in terms {
            *coefficients.entry(e).or_insert(0) += c;
        }
        coefficients.retain(|_, c| *c != 0);
        LaurentPoly { coefficients }
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.coefficients.get(&exponent).copied().unwrap_or(0)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coefficients.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coefficients.keys().next().copied()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coefficient(-e) == c)
    }

    /// Evaluation at `t = ±1`, the only integer points where a Laurent
    /// polynomial stays integral.
    pub fn eval_unit(&self, t: i64) -> i64 {
        assert!(t == 1 || t == -1, "eval_unit takes t = ±1");
        self.terms()
            .map(|(e, c)| if t == -1 && e.rem_euclid(2) == 1 { -c } else { c })
            .sum()
    }

    /// Coefficients `a_{-n}, ..., a_n` for `n = max(deg, 0)`.
    pub fn symmetric_coefficients(&self) -> Vec<i64> {
        let n = self
            .max_degree()
            .unwrap_or(0)
            .max(-self.min_degree().unwrap_or(0))
            .max(0);
        (-n..=n).map(|e| self.coefficient(e)).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.coefficients.iter().rev().map(|(&e, &c)| (e, c)).enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            if e == 0 || mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str(&var)?;
        }
        Ok(())
    }
}

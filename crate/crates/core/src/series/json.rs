//! JSON form shared by every series:
//! `{"trunc": N, "terms": [[xdeg, [[qdeg, "coeff"], ...]], ...]}` with both
//! degree lists ascending and coefficients written as decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{QPolynomial, QSeries, XLaurentSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub trunc: usize,
    pub terms: Vec<(i64, Vec<(usize, String)>)>,
}

/// Sparse `[[qdeg, "coeff"], ...]` pairs for a polynomial.
pub fn poly_pairs(p: &QPolynomial) -> Vec<(usize, String)> {
    p.terms().map(|(d, c)| (d, c.to_string())).collect()
}

fn q_pairs(s: &QSeries) -> Vec<(usize, String)> {
    s.terms().map(|(d, c)| (d, c.to_string())).collect()
}

impl From<&XLaurentSeries> for SeriesJson {
    fn from(s: &XLaurentSeries) -> Self {
        SeriesJson {
            trunc: s.trunc(),
            terms: s.terms().map(|(x, c)| (x, q_pairs(c))).collect(),
        }
    }
}

impl From<&QSeries> for SeriesJson {
    fn from(s: &QSeries) -> Self {
        let terms = if s.is_zero() {
            vec![]
        } else {
            vec![(0, q_pairs(s))]
        };
        SeriesJson {
            trunc: s.trunc(),
            terms,
        }
    }
}

impl SeriesJson {
    /// Rebuilds the series; `None` on a malformed coefficient string or a
    /// zero truncation.
    pub fn to_series(&self) -> Option<XLaurentSeries> {
        if self.trunc == 0 {
            return None;
        }
        let mut triples = Vec::new();
        for (x, pairs) in &self.terms {
            for (d, c) in pairs {
                triples.push((*x, *d, BigInt::from_str(c).ok()?));
            }
        }
        Some(XLaurentSeries::from_triples(triples, self.trunc))
    }
}

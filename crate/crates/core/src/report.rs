//! Verification reports. A failed identity is data, not an error.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::series::{QPolynomial, QSeries, XLaurentSeries};

/// The first coefficient where two sides differ, in `(x, q)` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub xdeg: i64,
    pub qdeg: usize,
    pub lhs: String,
    pub rhs: String,
}

/// One equation (or one yes/no property) inside a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    /// Order `q^trunc` the comparison was made at, when it is a series check.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trunc: Option<usize>,
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    /// Compares two bivariate series modulo the smaller of their truncations.
    pub fn series(label: impl Into<String>, lhs: &XLaurentSeries, rhs: &XLaurentSeries) -> Check {
        let n = lhs.trunc().min(rhs.trunc());
        let (l, r) = (lhs.truncated(n), rhs.truncated(n));
        let first_mismatch = l.first_difference(&r).map(|(x, q)| Mismatch {
            xdeg: x,
            qdeg: q,
            lhs: l.coeff_at(x, q).to_string(),
            rhs: r.coeff_at(x, q).to_string(),
        });
        Check {
            label: label.into(),
            pass: first_mismatch.is_none(),
            trunc: Some(n),
            first_mismatch,
            detail: None,
        }
    }

    pub fn q_series(label: impl Into<String>, lhs: &QSeries, rhs: &QSeries) -> Check {
        Check::series(
            label,
            &XLaurentSeries::from_q_series(lhs.clone()),
            &XLaurentSeries::from_q_series(rhs.clone()),
        )
    }

    /// Exact polynomial equality.
    pub fn poly(label: impl Into<String>, lhs: &QPolynomial, rhs: &QPolynomial) -> Check {
        let diff = lhs - rhs;
        let first_mismatch = diff.min_degree().map(|d| Mismatch {
            xdeg: 0,
            qdeg: d,
            lhs: lhs.coeff(d).to_string(),
            rhs: rhs.coeff(d).to_string(),
        });
        Check {
            label: label.into(),
            pass: first_mismatch.is_none(),
            trunc: None,
            first_mismatch,
            detail: None,
        }
    }

    /// A property without a coefficient-level witness.
    pub fn flag(label: impl Into<String>, pass: bool) -> Check {
        Check {
            label: label.into(),
            pass,
            trunc: None,
            first_mismatch: None,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub trunc: usize,
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    /// Passes iff every check passes; `first_mismatch` is taken from the
    /// first failing check that has one.
    pub fn new(
        identity: impl Into<String>,
        trunc: usize,
        checks: Vec<Check>,
        notes: Vec<String>,
    ) -> Report {
        let pass = checks.iter().all(|c| c.pass);
        let first_mismatch = checks
            .iter()
            .filter(|c| !c.pass)
            .find_map(|c| c.first_mismatch.clone());
        Report {
            identity: identity.into(),
            trunc,
            pass,
            first_mismatch,
            checks,
            notes,
        }
    }

    pub fn failing(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let order = match self.trunc {
            0 => "exact".to_string(),
            n => format!("mod q^{n}"),
        };
        writeln!(
            f,
            "{verdict} {} ({order}, {}/{} checks)",
            self.identity,
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        )?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.pass { "ok" } else { "FAIL" }, c.label)?;
            if let Some(m) = &c.first_mismatch {
                write!(
                    f,
                    ": first difference at x^{} q^{}: {} vs {}",
                    m.xdeg, m.qdeg, m.lhs, m.rhs
                )?;
            }
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::qseries::{write_poly, QSeries};
use crate::error::{Error, Result};

/// An exact polynomial in `q` with integer coefficients, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        Self::from_terms([(deg, c)])
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c.into());
        }
        p
    }

    /// `prod_{j=1}^{n} (1 - q^{step*j})`, i.e. `(q^step; q^step)_n`.
    pub fn q_pochhammer(step: usize, n: usize) -> Self {
        (1..=n).fold(Self::one(), |acc, j| {
            &acc * &Self::from_terms([(0, 1), (step * j, -1)])
        })
    }

    fn add_term(&mut self, d: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(d).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    /// p(1).
    pub fn eval_at_1(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Lowest degree with nonzero coefficient; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn mul_monomial(&self, c: &BigInt, shift: usize) -> Self {
        QPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .filter_map(|(d, a)| {
                    let v = a * c;
                    (!v.is_zero()).then_some((d + shift, v))
                })
                .collect(),
        }
    }

    /// Exact division; fails with [`Error::InexactDivision`] if the
    /// remainder is nonzero. Division by zero is also inexact.
    pub fn divide_exact(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        let (dd, lead) = match divisor.coeffs.iter().next_back() {
            Some((d, c)) => (*d, c.clone()),
            None => return Err(Error::InexactDivision),
        };
        let mut rem = self.clone();
        let mut quot = QPolynomial::zero();
        while let Some((rd, rc)) = rem.coeffs.iter().next_back().map(|(d, c)| (*d, c.clone())) {
            if rd < dd {
                break;
            }
            if !(&rc % &lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let c = &rc / &lead;
            let shift = rd - dd;
            quot.add_term(shift, c.clone());
            rem = &rem - &divisor.mul_monomial(&c, shift);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// The polynomial as a series modulo `q^trunc`.
    pub fn to_series(&self, trunc: usize) -> QSeries {
        QSeries::from_terms(self.terms().map(|(d, c)| (d, c.clone())), trunc)
    }

    /// `Some(+1)` or `Some(-1)` when every nonzero coefficient shares that
    /// sign; `Some(0)` for the zero polynomial; `None` when signs are mixed.
    pub fn coherent_sign(&self) -> Option<i8> {
        let mut pos = false;
        let mut neg = false;
        for c in self.coeffs.values() {
            if c.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
        }
        match (pos, neg) {
            (false, false) => Some(0),
            (true, false) => Some(1),
            (false, true) => Some(-1),
            (true, true) => None,
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, -c);
        }
        out
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms(), "q")
    }
}

/// Displays `±q^m (p / ±q^m)` with the lowest monomial and the sign of the
/// lowest coefficient pulled out, as in `-q^13(1 + q + q^3)`.
pub struct Factored<'a>(&'a QPolynomial);

impl QPolynomial {
    pub fn factored(&self) -> Factored<'_> {
        Factored(self)
    }
}

impl fmt::Display for Factored<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.0;
        let Some(m) = p.min_degree() else {
            return write!(f, "0");
        };
        if p.coeffs.len() == 1 {
            return write!(f, "{p}");
        }
        let neg = p.coeffs[&m].is_negative();
        if m == 0 && !neg {
            return write!(f, "{p}");
        }
        let sign = if neg {
            -BigInt::from(1)
        } else {
            BigInt::from(1)
        };
        let rest: Vec<(usize, BigInt)> = p.terms().map(|(d, c)| (d - m, c * &sign)).collect();
        if neg {
            write!(f, "-")?;
        }
        match m {
            0 => {}
            1 => write!(f, "q")?,
            _ => write!(f, "q^{m}")?,
        }
        write!(f, "(")?;
        write_poly(f, rest.iter().map(|(d, c)| (*d, c)), "q")?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &[(usize, i64)]) -> QPolynomial {
        QPolynomial::from_terms(t.iter().copied())
    }

    #[test]
    fn factored_form() {
        assert_eq!(p(&[(9, 1), (11, 1)]).factored().to_string(), "q^9(1 + q^2)");
        assert_eq!(
            p(&[(13, -1), (14, -1), (16, -1)]).factored().to_string(),
            "-q^13(1 + q + q^3)"
        );
        assert_eq!(p(&[(7, -1)]).factored().to_string(), "-q^7");
        assert_eq!(p(&[(0, 1), (1, 1)]).factored().to_string(), "1 + q");
        assert_eq!(QPolynomial::zero().factored().to_string(), "0");
    }

    #[test]
    fn value_at_one_and_min_degree() {
        assert_eq!(p(&[(9, 1), (11, 1)]).eval_at_1(), BigInt::from(2));
        assert_eq!(p(&[(7, -1)]).min_degree(), Some(7));
        assert_eq!(QPolynomial::zero().min_degree(), None);
    }

    #[test]
    fn exact_division() {
        let q = p(&[(2, 1), (3, -1)])
            .divide_exact(&p(&[(0, 1), (1, -1)]))
            .unwrap();
        assert_eq!(q, p(&[(2, 1)]));
    }

    #[test]
    fn inexact_division_is_reported() {
        assert_eq!(
            p(&[(2, 1), (3, 1)]).divide_exact(&p(&[(0, 1), (1, -1)])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            p(&[(0, 3)]).divide_exact(&p(&[(0, 2)])),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn pochhammer_polynomial() {
        assert_eq!(
            QPolynomial::q_pochhammer(1, 2),
            p(&[(0, 1), (1, -1), (2, -1), (3, 1)])
        );
        assert_eq!(QPolynomial::q_pochhammer(3, 0), QPolynomial::one());
    }

    #[test]
    fn sign_coherence() {
        assert_eq!(p(&[(1, 2), (4, 1)]).coherent_sign(), Some(1));
        assert_eq!(p(&[(1, -2), (4, -1)]).coherent_sign(), Some(-1));
        assert_eq!(p(&[(1, 2), (4, -1)]).coherent_sign(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(9, 1), (11, 1)]).to_string(), "q^9 + q^11");
        assert_eq!(p(&[(0, -2), (1, 1)]).to_string(), "-2 + q");
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::qseries::{write_poly, QSeries};
use crate::error::{Error, Result};

/// A finite Laurent polynomial in `x` whose coefficients are [`QSeries`]
/// sharing one truncation order.
///
/// Zero coefficients are never stored, so two equal series have equal maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XLaurentSeries {
    trunc: usize,
    terms: BTreeMap<i64, QSeries>,
}

impl XLaurentSeries {
    pub fn zero(trunc: usize) -> Self {
        assert!(trunc > 0, "truncation order must be positive");
        XLaurentSeries {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::from_q_series(QSeries::one(trunc))
    }

    /// `c * x^xdeg * q^qdeg`.
    pub fn monomial(c: impl Into<BigInt>, xdeg: i64, qdeg: usize, trunc: usize) -> Self {
        let mut out = Self::zero(trunc);
        out.insert(xdeg, QSeries::monomial(c, qdeg, trunc));
        out
    }

    /// Builds from `(xdeg, qdeg, coeff)` triples; entries at or beyond the
    /// truncation are dropped and repeats accumulate.
    pub fn from_triples<I, C>(triples: I, trunc: usize) -> Self
    where
        I: IntoIterator<Item = (i64, usize, C)>,
        C: Into<BigInt>,
    {
        let mut dense: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
        for (x, d, c) in triples {
            if d < trunc {
                dense
                    .entry(x)
                    .or_insert_with(|| vec![BigInt::zero(); trunc])[d] += c.into();
            }
        }
        let mut out = Self::zero(trunc);
        for (x, v) in dense {
            out.insert(x, QSeries::from_coeffs(v, trunc));
        }
        out
    }

    /// Embeds a series in `q` as the `x^0` coefficient.
    pub fn from_q_series(s: QSeries) -> Self {
        let mut out = Self::zero(s.trunc());
        out.insert(0, s);
        out
    }

    /// Replaces the coefficient of `x^xdeg`, truncating it to the shared
    /// order. Zero series are pruned.
    pub fn insert(&mut self, xdeg: i64, s: QSeries) {
        let s = s.truncated(self.trunc);
        assert_eq!(
            s.trunc(),
            self.trunc,
            "coefficient known to lower precision"
        );
        if s.is_zero() {
            self.terms.remove(&xdeg);
        } else {
            self.terms.insert(xdeg, s);
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `x^xdeg` (the zero series if absent).
    pub fn coeff(&self, xdeg: i64) -> QSeries {
        self.terms
            .get(&xdeg)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.trunc))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &QSeries)> {
        self.terms.iter().map(|(x, s)| (*x, s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest and largest x-degree present.
    pub fn x_support(&self) -> Option<(i64, i64)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn truncated(&self, trunc: usize) -> Self {
        let t = trunc.min(self.trunc);
        let mut out = Self::zero(t);
        for (x, s) in self.terms() {
            out.insert(x, s.truncated(t));
        }
        out
    }

    /// The series at `x = 1`.
    pub fn at_x_one(&self) -> QSeries {
        self.terms
            .values()
            .fold(QSeries::zero(self.trunc), |acc, s| &acc + s)
    }

    /// Multiplies every coefficient by a series in `q`.
    pub fn scale(&self, s: &QSeries) -> Self {
        let t = self.trunc.min(s.trunc());
        let mut out = Self::zero(t);
        for (x, c) in self.terms() {
            out.insert(x, c * s);
        }
        out
    }

    /// Multiplies by `x^e`.
    pub fn shift_x(&self, e: i64) -> Self {
        XLaurentSeries {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(x, s)| (x + e, s.clone())).collect(),
        }
    }

    /// `f(x q^m, q)`: the coefficient at `x^e` is multiplied by `q^(m e)`.
    ///
    /// When `m e` is negative the coefficient is only known modulo
    /// `q^(trunc + m e)`, so the shared order drops to the smallest such
    /// value. Pushing a nonzero coefficient below `q^0` is an error.
    pub fn substitute(&self, m: i64) -> Result<Self> {
        let mut new_trunc = self.trunc as i64;
        for (&x, s) in &self.terms {
            let shift = m * x;
            if shift < 0 {
                let low = (-shift) as usize;
                if s.coeffs().iter().take(low).any(|c| !c.is_zero()) {
                    return Err(Error::NegativeQDegree { xdeg: x });
                }
                new_trunc = new_trunc.min(self.trunc as i64 + shift);
            }
        }
        if new_trunc <= 0 {
            return Err(Error::ZeroTruncation);
        }
        let t = new_trunc as usize;
        let mut out = Self::zero(t);
        for (&x, s) in &self.terms {
            let shift = m * x;
            let moved = if shift >= 0 {
                s.shift_up(shift as usize)
            } else {
                s.shift_down((-shift) as usize)
                    .expect("low coefficients checked above")
            };
            out.insert(x, moved.truncated(t));
        }
        Ok(out)
    }

    /// Multiplicative inverse.
    ///
    /// Requires a unit `x^0` coefficient and positive q-valuation at every
    /// other x-degree, so the geometric expansion terminates modulo `q^trunc`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        let inv0 = c0.inverse()?;
        for (x, s) in self.terms() {
            if x != 0 && s.coeffs()[0] != BigInt::zero() {
                return Err(Error::NonTopologicalInverse { xdeg: x });
            }
        }
        // self = c0 (1 + r), r = (self - c0) / c0 has q-valuation >= 1
        let mut rest = self.clone();
        rest.terms.remove(&0);
        let r = rest.scale(&inv0);
        let neg_r = -&r;
        let mut acc = Self::one(self.trunc);
        let mut power = Self::one(self.trunc);
        for _ in 1..self.trunc {
            power = &power * &neg_r;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(acc.scale(&inv0))
    }

    /// First `(xdeg, qdeg)` in lexicographic order where the two series
    /// differ, below the common truncation.
    pub fn first_difference(&self, other: &XLaurentSeries) -> Option<(i64, usize)> {
        let t = self.trunc.min(other.trunc);
        let mut keys: Vec<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for x in keys {
            let a = self.coeff(x).truncated(t);
            let b = other.coeff(x).truncated(t);
            if let Some(d) = a.first_difference(&b) {
                return Some((x, d));
            }
        }
        None
    }

    /// `[x^xdeg q^qdeg]`, zero if beyond the truncation or absent.
    pub fn coeff_at(&self, xdeg: i64, qdeg: usize) -> BigInt {
        match self.terms.get(&xdeg) {
            Some(s) if qdeg < s.trunc() => s.coeff(qdeg).clone(),
            _ => BigInt::zero(),
        }
    }
}

fn combine(a: &XLaurentSeries, b: &XLaurentSeries, plus: bool) -> XLaurentSeries {
    let t = a.trunc.min(b.trunc);
    let mut out = a.truncated(t);
    for (x, s) in b.terms() {
        let cur = out.coeff(x);
        let s = s.truncated(t);
        out.insert(x, if plus { &cur + &s } else { &cur - &s });
    }
    out
}

impl Add for &XLaurentSeries {
    type Output = XLaurentSeries;
    fn add(self, rhs: &XLaurentSeries) -> XLaurentSeries {
        combine(self, rhs, true)
    }
}

impl Sub for &XLaurentSeries {
    type Output = XLaurentSeries;
    fn sub(self, rhs: &XLaurentSeries) -> XLaurentSeries {
        combine(self, rhs, false)
    }
}

impl Neg for &XLaurentSeries {
    type Output = XLaurentSeries;
    fn neg(self) -> XLaurentSeries {
        XLaurentSeries {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(x, s)| (*x, -s)).collect(),
        }
    }
}

impl Mul for &XLaurentSeries {
    type Output = XLaurentSeries;
    fn mul(self, rhs: &XLaurentSeries) -> XLaurentSeries {
        let t = self.trunc.min(rhs.trunc);
        let mut acc: BTreeMap<i64, QSeries> = BTreeMap::new();
        for (xa, sa) in self.terms() {
            for (xb, sb) in rhs.terms() {
                let p = &sa.truncated(t) * &sb.truncated(t);
                acc.entry(xa + xb)
                    .and_modify(|e| *e = &*e + &p)
                    .or_insert(p);
            }
        }
        let mut out = XLaurentSeries::zero(t);
        for (x, s) in acc {
            out.insert(x, s);
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for XLaurentSeries {
            type Output = XLaurentSeries;
            fn $m(self, rhs: XLaurentSeries) -> XLaurentSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for XLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O(q^{})", self.trunc);
        }
        let width = self
            .terms
            .keys()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, (x, s)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "x^{x:<width$} : ")?;
            write_poly(f, s.terms(), "q")?;
        }
        write!(f, "\n(mod q^{})", self.trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitute_positive_degree() {
        let f = XLaurentSeries::monomial(1, 1, 0, 10);
        assert_eq!(
            f.substitute(2).unwrap(),
            XLaurentSeries::monomial(1, 1, 2, 10)
        );
    }

    #[test]
    fn substitute_negative_degree_shifts_down() {
        let f = XLaurentSeries::monomial(1, -1, 3, 10);
        let g = f.substitute(2).unwrap();
        assert_eq!(g.trunc(), 8);
        assert_eq!(g, XLaurentSeries::monomial(1, -1, 1, 8));
    }

    #[test]
    fn substitute_rejects_negative_q_powers() {
        let f = XLaurentSeries::monomial(1, -1, 1, 10);
        assert_eq!(f.substitute(2), Err(Error::NegativeQDegree { xdeg: -1 }));
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let a = XLaurentSeries::monomial(3, 2, 1, 6);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.x_support(), None);
    }

    #[test]
    fn inverse_of_one_plus_xq() {
        let n = 8;
        let f = &XLaurentSeries::one(n) + &XLaurentSeries::monomial(1, 1, 1, n);
        let g = f.inverse().unwrap();
        assert_eq!(&f * &g, XLaurentSeries::one(n));
        // 1/(1+xq) = sum (-x q)^m
        for m in 0..n as i64 {
            let expect = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(g.coeff_at(m, m as usize), BigInt::from(expect));
        }
    }

    #[test]
    fn inverse_requires_positive_valuation_off_axis() {
        let f = &XLaurentSeries::one(5) + &XLaurentSeries::monomial(1, 1, 0, 5);
        assert_eq!(f.inverse(), Err(Error::NonTopologicalInverse { xdeg: 1 }));
    }

    #[test]
    fn first_difference_reports_exponents() {
        let a = XLaurentSeries::from_triples([(0, 0, 1), (2, 3, 5)], 6);
        let b = XLaurentSeries::from_triples([(0, 0, 1), (2, 3, 4)], 6);
        assert_eq!(a.first_difference(&b), Some((2, 3)));
        assert_eq!(a.first_difference(&a), None);
    }
}

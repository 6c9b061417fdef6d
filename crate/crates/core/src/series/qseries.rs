use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A power series in `q` with integer coefficients, known modulo `q^trunc`.
///
/// The truncation order travels with the value. Binary operations return a
/// result known modulo the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Builds a series from its first `trunc` coefficients; missing entries
    /// are zero and extra entries are dropped.
    ///
    /// Panics if `trunc == 0`.
    pub fn from_coeffs<I, C>(coeffs: I, trunc: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        assert!(trunc > 0, "truncation order must be positive");
        let mut v: Vec<BigInt> = coeffs.into_iter().take(trunc).map(Into::into).collect();
        v.resize(trunc, BigInt::zero());
        QSeries { coeffs: v }
    }

    pub fn zero(trunc: usize) -> Self {
        Self::from_coeffs(std::iter::empty::<i64>(), trunc)
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(1, 0, trunc)
    }

    /// `c * q^deg mod q^trunc`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if deg < trunc {
            s.coeffs[deg] = c.into();
        }
        s
    }

    /// Series from sparse `(degree, coefficient)` pairs; pairs at or beyond
    /// the truncation are ignored and repeated degrees accumulate.
    pub fn from_terms<I, C>(terms: I, trunc: usize) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(trunc);
        for (d, c) in terms {
            if d < trunc {
                s.coeffs[d] += c.into();
            }
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^deg`. Panics if `deg` is at or beyond the truncation.
    pub fn coeff(&self, deg: usize) -> &BigInt {
        &self.coeffs[deg]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Nonzero `(degree, coefficient)` pairs in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Reduces the known precision to `trunc` (no-op if already lower).
    pub fn truncated(&self, trunc: usize) -> Self {
        let t = trunc.min(self.trunc());
        QSeries::from_coeffs(self.coeffs[..t].iter().cloned(), t)
    }

    /// Multiplies by `q^m`.
    pub fn shift_up(&self, m: usize) -> Self {
        let n = self.trunc();
        let mut out = Self::zero(n);
        for (d, c) in self.terms() {
            if d + m < n {
                out.coeffs[d + m] = c.clone();
            }
        }
        out
    }

    /// Divides by `q^m`. The result is known modulo `q^(trunc - m)`.
    /// Fails if any of the lowest `m` coefficients is nonzero.
    pub fn shift_down(&self, m: usize) -> Option<Self> {
        if self.coeffs.iter().take(m).any(|c| !c.is_zero()) || m >= self.trunc() {
            return None;
        }
        Some(QSeries {
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `(1 - q^k)` in linear time. `k` must be positive.
    pub fn mul_one_minus_qk(&self, k: usize) -> Self {
        debug_assert!(k > 0);
        let mut out = self.clone();
        for d in (k..self.trunc()).rev() {
            out.coeffs[d] -= &self.coeffs[d - k];
        }
        out
    }

    /// Divides by `(1 - q^k)` in linear time. `k` must be positive.
    pub fn div_one_minus_qk(&self, k: usize) -> Self {
        debug_assert!(k > 0);
        let mut out = self.clone();
        for d in k..self.trunc() {
            let prev = out.coeffs[d - k].clone();
            out.coeffs[d] += prev;
        }
        out
    }

    /// Multiplicative inverse modulo `q^trunc`.
    ///
    /// Only series with constant term `+1` or `-1` are invertible over the
    /// integers.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstantTerm(a0.to_string()));
        }
        let n = self.trunc();
        let mut inv = Vec::with_capacity(n);
        inv.push(a0.clone());
        let nz: Vec<(usize, &BigInt)> = self.terms().filter(|(d, _)| *d > 0).collect();
        for k in 1..n {
            let mut acc = BigInt::zero();
            for &(d, c) in &nz {
                if d > k {
                    break;
                }
                acc += c * &inv[k - d];
            }
            // a0 is its own inverse
            inv.push(-(acc * a0));
        }
        Ok(QSeries { coeffs: inv })
    }

    /// Value of the coefficients summed, i.e. the truncated series at q = 1.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// First degree where `self` and `other` differ, below the common order.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        let n = self.trunc().min(other.trunc());
        (0..n).find(|&d| self.coeffs[d] != other.coeffs[d])
    }
}

fn add_impl(a: &QSeries, b: &QSeries, sign: bool) -> QSeries {
    let n = a.trunc().min(b.trunc());
    let coeffs = a.coeffs[..n]
        .iter()
        .zip(&b.coeffs[..n])
        .map(|(x, y)| if sign { x + y } else { x - y })
        .collect();
    QSeries { coeffs }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        add_impl(self, rhs, true)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        add_impl(self, rhs, false)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.trunc().min(rhs.trunc());
        let mut out = vec![BigInt::zero(); n];
        let rt: Vec<(usize, &BigInt)> = rhs.terms().take_while(|(d, _)| *d < n).collect();
        for (i, a) in self.terms() {
            if i >= n {
                break;
            }
            for &(j, b) in &rt {
                if i + j >= n {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms(), "q")?;
        write!(f, " + O(q^{})", self.trunc())
    }
}

/// Writes a sparse polynomial like `1 - q^2 + 3q^5`; writes `0` when empty.
pub(crate) fn write_poly<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, var: &str) -> fmt::Result
where
    I: IntoIterator<Item = (usize, &'a BigInt)>,
{
    let mut first = true;
    for (d, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag.is_one();
        match (d, unit) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{mag}{var}")?,
            (_, true) => write!(f, "{var}^{d}")?,
            (_, false) => write!(f, "{mag}{var}^{d}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

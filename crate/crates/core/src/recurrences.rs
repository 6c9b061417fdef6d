//! The numerator sequences `b_n^{(i)}` (Rogers-Ramanujan type) and
//! `c_n^{(i)}` (Capparelli type), the theorem sums built from them, and
//! their specializations at `q = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::series::{capparelli_product, poly_pairs, rr_product, QPolynomial, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    B,
    C,
}

impl Family {
    /// Step `s` of the denominators `(q^s; q^s)_n`.
    pub fn step(self) -> usize {
        match self {
            Family::B => 1,
            Family::C => 3,
        }
    }

    /// Number of previous terms the recurrence reads.
    fn order(self) -> usize {
        match self {
            Family::B => 2,
            Family::C => 4,
        }
    }
}

/// A family together with the index `i`, written `b1`, `b2`, `c1`, `c2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TableId {
    pub family: Family,
    pub i: u8,
}

impl FromStr for TableId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let family = match s.as_bytes().first() {
            Some(b'b') => Family::B,
            Some(b'c') => Family::C,
            _ => return Err(Error::UnknownFamily(s.into())),
        };
        match &s[1..] {
            "1" => Ok(TableId { family, i: 1 }),
            "2" => Ok(TableId { family, i: 2 }),
            _ => Err(Error::UnknownFamily(s.into())),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::B => 'b',
            Family::C => 'c',
        };
        write!(f, "{c}{}", self.i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceTable {
    pub family: Family,
    pub i: u8,
    pub polys: Vec<QPolynomial>,
}

fn check_index(i: u8) {
    assert!(i == 1 || i == 2, "index i must be 1 or 2, got {i}");
}

fn mono(deg: usize) -> QPolynomial {
    QPolynomial::monomial(1, deg)
}

/// `1 - q^k`.
fn one_minus(k: usize) -> QPolynomial {
    QPolynomial::from_terms([(0, 1), (k, -1)])
}

/// Lazily extends `b_n^{(i)}`: `b_0 = 1`, `b_1 = q` or `0`,
/// `b_{n+2} = q^{n+2} b_n - q^{n+1} b_{n+1}`.
fn b_next(i: u8, polys: &[QPolynomial]) -> QPolynomial {
    match polys.len() {
        0 => QPolynomial::one(),
        1 if i == 1 => mono(1),
        1 => QPolynomial::zero(),
        k => {
            let n = k - 2;
            &(&mono(n + 2) * &polys[n]) - &(&mono(n + 1) * &polys[n + 1])
        }
    }
}

/// Lazily extends `c_n^{(i)}`. With `c_{-2} = c_{-1} = 0`, `c_0 = 1`,
/// `c_1 = q^i + q^3` and, for `m >= 0`,
///
/// `c_{m+2} = -q^{3m+3}(1-q^3) c_{m+1} + q^{3m+4}(1+q+2q^{3m+2}) c_m
///            - q^{6m+3}(1-q^3)(1-q^{3m}) c_{m-1}
///            - q^{6m+3}(1-q^{3m})(1-q^{3m-3}) c_{m-2}`.
///
/// The factor `1 - q^{3m}` is evaluated as is. It is zero at `m = 0`, which
/// is what kills the two out-of-range terms (and spares us `q^{-3}`).
fn c_next(i: u8, polys: &[QPolynomial]) -> QPolynomial {
    match polys.len() {
        0 => QPolynomial::one(),
        1 => &mono(i as usize) + &mono(3),
        k => {
            let m = k - 2;
            let at = |j: isize| -> QPolynomial {
                if j < 0 {
                    QPolynomial::zero()
                } else {
                    polys[j as usize].clone()
                }
            };
            let mi = m as isize;
            let mut out = -&(&(&mono(3 * m + 3) * &one_minus(3)) * &at(mi + 1));
            let coef =
                &(&mono(3 * m + 4) + &mono(3 * m + 5)) + &QPolynomial::monomial(2, 6 * m + 6);
            out = &out + &(&coef * &at(mi));
            let vanish = one_minus(3 * m);
            if !vanish.is_zero() {
                let t1 = &(&(&mono(6 * m + 3) * &one_minus(3)) * &vanish) * &at(mi - 1);
                let t2 = &(&(&mono(6 * m + 3) * &vanish) * &one_minus(3 * m - 3)) * &at(mi - 2);
                out = &(&out - &t1) - &t2;
            }
            out
        }
    }
}

fn next_term(family: Family, i: u8, polys: &[QPolynomial]) -> QPolynomial {
    match family {
        Family::B => b_next(i, polys),
        Family::C => c_next(i, polys),
    }
}

fn table(family: Family, i: u8, n_max: usize) -> RecurrenceTable {
    check_index(i);
    let mut polys = Vec::with_capacity(n_max + 1);
    while polys.len() <= n_max {
        let p = next_term(family, i, &polys);
        polys.push(p);
    }
    RecurrenceTable { family, i, polys }
}

/// `b_0^{(i)}, ..., b_{n_max}^{(i)}`.
pub fn b_table(i: u8, n_max: usize) -> RecurrenceTable {
    table(Family::B, i, n_max)
}

/// `c_0^{(i)}, ..., c_{n_max}^{(i)}`.
pub fn c_table(i: u8, n_max: usize) -> RecurrenceTable {
    table(Family::C, i, n_max)
}

impl RecurrenceTable {
    pub fn id(&self) -> TableId {
        TableId {
            family: self.family,
            i: self.i,
        }
    }

    pub fn rows(&self) -> Vec<TableRow> {
        self.polys
            .iter()
            .enumerate()
            .map(|(n, p)| TableRow {
                n,
                polynomial: poly_pairs(p),
                value_at_1: p.eval_at_1().to_string(),
                min_degree: p.min_degree(),
            })
            .collect()
    }
}

/// One row of the `table` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub polynomial: Vec<(usize, String)>,
    pub value_at_1: String,
    pub min_degree: Option<usize>,
}

/// True once the last `order` terms all have min-degree at least `trunc`.
/// The recurrence coefficients are polynomials in `q`, so every later term
/// then stays there too and the sum can stop.
fn quiet_run(polys: &[QPolynomial], order: usize, trunc: usize) -> bool {
    polys.len() >= order
        && polys[polys.len() - order..]
            .iter()
            .all(|p| p.min_degree().is_none_or(|d| d >= trunc))
}

/// `Σ_n poly_n / (q^s; q^s)_n` modulo `q^trunc`.
pub fn theorem_sum(family: Family, i: u8, trunc: usize) -> Result<QSeries> {
    check_index(i);
    let s = family.step();
    let bound = 4 * trunc + 16;
    let mut polys: Vec<QPolynomial> = Vec::new();
    let mut inv = QSeries::one(trunc);
    let mut sum = QSeries::zero(trunc);
    loop {
        let n = polys.len();
        if n > bound {
            return Err(Error::NonTerminating(n));
        }
        let p = next_term(family, i, &polys);
        if n > 0 {
            inv = inv.div_one_minus_qk(s * n);
        }
        if p.min_degree().is_some_and(|d| d < trunc) {
            sum = &sum + &(&p.to_series(trunc) * &inv);
        }
        polys.push(p);
        if quiet_run(&polys, family.order(), trunc) {
            return Ok(sum);
        }
    }
}

/// The product side the theorem sum is compared against.
pub fn theorem_product(family: Family, i: u8, trunc: usize) -> QSeries {
    check_index(i);
    match family {
        Family::B => rr_product(i as usize, trunc),
        Family::C => capparelli_product(i as usize, trunc),
    }
}

/// Theorem sum against product.
pub fn verify_theorem(family: Family, i: u8, trunc: usize) -> Result<Report> {
    let lhs = theorem_sum(family, i, trunc)?;
    let rhs = theorem_product(family, i, trunc);
    let id = match family {
        Family::B => format!("thm1_i{i}"),
        Family::C => format!("thm2_i{i}"),
    };
    let label = match family {
        Family::B => "sum b_n/(q;q)_n = product".to_string(),
        Family::C => "sum c_n/(q^3;q^3)_n = product".to_string(),
    };
    Ok(Report::new(
        id,
        trunc,
        vec![Check::q_series(label, &lhs, &rhs)],
        vec![],
    ))
}

/// Values at `q = 1`, sign coherence, Fibonacci / power-of-two patterns.
///
/// For `b`: every nonzero `b_n` with `n > 2` has one sign, `(-1)^{n+i}`,
/// and `|b_n(1)|` satisfies `F_{m+2} = F_{m+1} + F_m` starting `1, 1` at
/// the first `n > 0` with `b_n != 0` (`n = 3` for `i = 1`, `n = 2` for
/// `i = 2`). For `c`: `c_n(1) = 2^n`, with nonnegativity of the
/// coefficients reported in the notes but not checked.
pub fn specializations(family: Family, i: u8, n_max: usize) -> Report {
    let t = table(family, i, n_max);
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    match family {
        Family::B => {
            let vals: Vec<BigInt> = t.polys.iter().map(|p| p.eval_at_1().abs()).collect();
            let first_bad = (3..=n_max).find(|&n| vals[n] != &vals[n - 1] + &vals[n - 2]);
            let seeds: Vec<&BigInt> = vals[1..].iter().filter(|v| !v.is_zero()).take(2).collect();
            let fib_ok = first_bad.is_none() && seeds.iter().all(|v| v.is_one());
            let mut sign_ok = true;
            for n in 3..=n_max {
                let expect = if (n + i as usize).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                match t.polys[n].coherent_sign() {
                    Some(0) => {}
                    Some(s) if s == expect => {}
                    _ => sign_ok = false,
                }
            }
            checks.push(
                Check::flag(
                    "|b_n(1)| = |b_(n-1)(1)| + |b_(n-2)(1)| for n >= 3, seeded by 1, 1",
                    fib_ok,
                )
                .with_detail(match first_bad {
                    Some(n) => format!("first deviation at n = {n}"),
                    None => format!("checked up to n = {n_max}"),
                }),
            );
            checks.push(Check::flag(
                "b_n sign coherent with sign (-1)^(n+i) for n > 2",
                sign_ok,
            ));
        }
        Family::C => {
            let bad =
                (0..=n_max).find(|&n| t.polys[n].eval_at_1() != BigInt::from(2).pow(n as u32));
            checks.push(
                Check::flag("c_n(1) = 2^n", bad.is_none()).with_detail(match bad {
                    Some(n) => format!("first deviation at n = {n}"),
                    None => format!("checked up to n = {n_max}"),
                }),
            );
            let negative: Vec<usize> = (0..=n_max)
                .filter(|&n| !t.polys[n].has_nonnegative_coefficients())
                .collect();
            notes.push(if negative.is_empty() {
                format!("c_n has nonnegative coefficients for all n <= {n_max}")
            } else {
                format!("c_n has a negative coefficient for n in {negative:?}")
            });
        }
    }
    let id = match family {
        Family::B => "fib_special",
        Family::C => "pow2_special",
    };
    Report::new(format!("{id}:{}", t.id()), n_max, checks, notes)
}

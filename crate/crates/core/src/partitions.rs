//! Strict partitions with residue-weighted sizes.
//!
//! A box in row `j`, column `k` has residue `k - j (mod 2)`, and
//! `|λ|_i = |λ| + #{boxes with residue ≡ i (mod 2)}`. The generating
//! functions are `F_i(x, q) = Σ x^{ℓ(λ)} q^{|λ|_i}` and its refinements
//! `G^{(u)}_{t,s}` by `m_2(λ) = t`, `m_1(λ) = s`, `ℓ(λ) ≡ u (mod 2)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::recurrences::c_table;
use crate::report::{Check, Report};
use crate::series::{capparelli_product, poch, PochCount, QPolynomial, QSeries, XLaurentSeries};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    /// `None` unless the parts are positive and strictly decreasing.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let ok = parts.windows(2).all(|w| w[0] > w[1]) && parts.last().is_none_or(|&p| p > 0);
        ok.then_some(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn residue_weight(&self, i: u8) -> usize {
        residue_weight(&self.parts, i)
    }

    /// `m_k(λ)`, which is 0 or 1.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.contains(&k) as usize
    }

    /// `ℓ(λ) mod 2`.
    pub fn parity(&self) -> usize {
        self.len() % 2
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Boxes `k = 1..=p` of row `j` with `k - j ≡ i (mod 2)`.
fn row_extra(p: usize, j: usize, i: u8) -> usize {
    // k ≡ j + i (mod 2)
    if (j + i as usize) % 2 == 1 {
        p.div_ceil(2)
    } else {
        p / 2
    }
}

/// `|λ|_i` for parts listed largest first (row 1 first).
pub fn residue_weight(parts: &[usize], i: u8) -> usize {
    parts
        .iter()
        .enumerate()
        .map(|(r, &p)| p + row_extra(p, r + 1, i))
        .sum()
}

/// Visits `parts` and every extension by strictly smaller parts `<= max`
/// adding at most `room` to the size.
fn walk<F: FnMut(&[usize])>(parts: &mut Vec<usize>, room: usize, max: usize, visit: &mut F) {
    visit(parts);
    for p in (1..=max.min(room)).rev() {
        parts.push(p);
        walk(parts, room - p, p - 1, visit);
        parts.pop();
    }
}

/// Visits every strict partition of size `< bound`, parts largest first.
pub fn for_each_strict<F: FnMut(&[usize])>(bound: usize, mut visit: F) {
    if bound == 0 {
        return;
    }
    walk(&mut Vec::new(), bound - 1, bound - 1, &mut visit);
}

/// Counts strict partitions of size `< bound` by `key`, splitting the work
/// by largest part.
fn tally<K>(bound: usize, key: K) -> BTreeMap<(i64, usize), u64>
where
    K: Fn(&[usize]) -> Option<(i64, usize)> + Sync,
{
    let mut total: BTreeMap<(i64, usize), u64> = BTreeMap::new();
    if bound == 0 {
        return total;
    }
    if let Some(k) = key(&[]) {
        *total.entry(k).or_insert(0) += 1;
    }
    let per_top: Vec<BTreeMap<(i64, usize), u64>> = (1..bound)
        .into_par_iter()
        .map(|top| {
            let mut counts = BTreeMap::new();
            let mut parts = vec![top];
            walk(&mut parts, bound - 1 - top, top - 1, &mut |p| {
                if let Some(k) = key(p) {
                    *counts.entry(k).or_insert(0) += 1;
                }
            });
            counts
        })
        .collect();
    for m in per_top {
        for (k, v) in m {
            *total.entry(k).or_insert(0) += v;
        }
    }
    total
}

fn to_series(counts: BTreeMap<(i64, usize), u64>, trunc: usize) -> XLaurentSeries {
    XLaurentSeries::from_triples(
        counts
            .into_iter()
            .filter(|((_, q), _)| *q < trunc)
            .map(|((x, q), c)| (x, q, BigInt::from(c))),
        trunc,
    )
}

/// `F_i(x, q)` modulo `q^trunc`. Enumerating by `|λ| < trunc` suffices
/// since `|λ|_i >= |λ|`.
pub fn gf_f(i: u8, trunc: usize) -> XLaurentSeries {
    to_series(
        tally(trunc, |p| Some((p.len() as i64, residue_weight(p, i)))),
        trunc,
    )
}

fn in_class(p: &[usize], u: usize, t: usize, s: usize) -> bool {
    p.len() % 2 == u && p.contains(&2) as usize == t && p.contains(&1) as usize == s
}

/// `G^{(u)}_{t,s}(x, q)` under the weight `|·|_i`.
pub fn gf_g(u: usize, t: usize, s: usize, i: u8, trunc: usize) -> XLaurentSeries {
    to_series(
        tally(trunc, |p| {
            in_class(p, u, t, s).then(|| (p.len() as i64, residue_weight(p, i)))
        }),
        trunc,
    )
}

/// `Σ_λ q^{|λ|} = 1/(q; q^2)_∞`.
pub fn euler_verify(trunc: usize) -> Report {
    let lhs = to_series(tally(trunc, |p| Some((0, p.iter().sum()))), trunc).coeff(0);
    let rhs = poch(1, 2, PochCount::Infinite, trunc)
        .inverse()
        .expect("unit constant term");
    Report::new(
        "euler",
        trunc,
        vec![Check::q_series(
            "sum over strict partitions = 1/(q;q^2)_inf",
            &lhs,
            &rhs,
        )],
        vec![],
    )
}

/// `Σ_λ q^{|λ|_i}` against the modulus-12 product.
pub fn wakimoto_verify(i: u8, trunc: usize) -> Report {
    let lhs = to_series(tally(trunc, |p| Some((0, residue_weight(p, i)))), trunc).coeff(0);
    let rhs = capparelli_product(i as usize, trunc);
    Report::new(
        format!("wakimoto_i{i}"),
        trunc,
        vec![Check::q_series(
            format!("sum q^|λ|_{i} = product"),
            &lhs,
            &rhs,
        )],
        vec![],
    )
}

/// One line of a G-system:
/// `G^{(u)}_{t,s}(x,q) = x^a q^b Σ_{t',s'} G^{(source)}_{t',s'}(xq^3, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GEquation {
    pub u: usize,
    pub t: usize,
    pub s: usize,
    pub x_exp: i64,
    pub q_exp: usize,
    pub source: usize,
}

impl fmt::Display for GEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G^({})_{{{},{}}} = x^{} q^{} * G^({})(xq^3)",
            self.u, self.t, self.s, self.x_exp, self.q_exp, self.source
        )
    }
}

/// The reference system for `i = 2`, with each `k`-indexed line expanded
/// to `k = 0, 1`.
pub fn reference_g_system() -> Vec<GEquation> {
    let e = |u, t, s, x_exp, q_exp, source| GEquation {
        u,
        t,
        s,
        x_exp,
        q_exp,
        source,
    };
    vec![
        e(0, 1, 1, 2, 4, 0),
        e(1, 1, 1, 2, 5, 1),
        e(0, 1, 0, 1, 3, 1),
        e(1, 1, 0, 1, 3, 0),
        e(0, 0, 1, 1, 2, 1),
        e(1, 0, 1, 1, 1, 0),
        e(0, 0, 0, 0, 0, 1),
        e(1, 0, 0, 0, 0, 0),
    ]
}

/// The system obtained from the bijection "delete the parts 1 and 2, then
/// subtract 2 from every remaining part". Each remaining row loses one box
/// of each residue, hence weight 3 per part and the substitution `x -> xq^3`.
/// The deleted parts sit in the last rows, so their weight depends on `u`.
pub fn derived_g_system(i: u8) -> Vec<GEquation> {
    let mut out = Vec::new();
    for u in 0..2 {
        for t in (0..2).rev() {
            for s in (0..2).rev() {
                let removed: Vec<usize> = [(2, t), (1, s)]
                    .iter()
                    .filter(|(_, f)| *f == 1)
                    .map(|(p, _)| *p)
                    .collect();
                let r = removed.len();
                // any length with parity u that holds the removed rows
                let len = u + 2 * r;
                let q_exp = removed
                    .iter()
                    .enumerate()
                    .map(|(k, &p)| p + row_extra(p, len - r + 1 + k, i))
                    .sum();
                out.push(GEquation {
                    u,
                    t,
                    s,
                    x_exp: r as i64,
                    q_exp,
                    source: (u + r) % 2,
                });
            }
        }
    }
    out
}

/// Which G-system to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GSystem {
    Reference,
    Derived,
}

/// `(u, t, s)` parity and small-part class of a strict partition.
type Class = (usize, usize, usize);

fn g_table(i: u8, trunc: usize) -> BTreeMap<Class, XLaurentSeries> {
    let counts = tally(trunc, |p| {
        let class = (p.len() % 2) * 4 + (p.contains(&2) as usize) * 2 + p.contains(&1) as usize;
        // pack the class into the x-exponent's high bits
        Some(((class as i64) << 32 | p.len() as i64, residue_weight(p, i)))
    });
    let mut by_class: BTreeMap<Class, BTreeMap<(i64, usize), u64>> = BTreeMap::new();
    for u in 0..2 {
        for t in 0..2 {
            for s in 0..2 {
                by_class.insert((u, t, s), BTreeMap::new());
            }
        }
    }
    for ((xc, q), c) in counts {
        let class = (xc >> 32) as usize;
        let len = xc & 0xffff_ffff;
        by_class
            .get_mut(&(class / 4, (class / 2) % 2, class % 2))
            .unwrap()
            .insert((len, q), c);
    }
    by_class
        .into_iter()
        .map(|(k, v)| (k, to_series(v, trunc)))
        .collect()
}

fn g_system_checks(system: &[GEquation], i: u8, trunc: usize) -> Vec<Check> {
    let g = g_table(i, trunc);
    let parity_sum = |u: usize| -> XLaurentSeries {
        g.iter()
            .filter(|((v, _, _), _)| *v == u)
            .fold(XLaurentSeries::zero(trunc), |acc, (_, s)| &acc + s)
            .substitute(3)
            .expect("x-degrees are nonnegative")
    };
    let sums = [parity_sum(0), parity_sum(1)];
    system
        .iter()
        .map(|e| {
            let rhs = &XLaurentSeries::monomial(1, e.x_exp, e.q_exp, trunc) * &sums[e.source];
            Check::series(e.to_string(), &g[&(e.u, e.t, e.s)], &rhs)
        })
        .collect()
}

/// Checks a G-system under the weight `|·|_i`.
pub fn verify_g_system(i: u8, trunc: usize, system: GSystem) -> Report {
    let (eqs, label) = match system {
        GSystem::Reference => (reference_g_system(), "reference"),
        GSystem::Derived => (derived_g_system(i), "derived"),
    };
    let checks = g_system_checks(&eqs, i, trunc);
    Report::new(format!("gsystem_i{i}:{label}"), trunc, checks, vec![])
}

/// `q^3 F_i(x,q) = (1+q^3-xq^3+xq^6+x^2q^7+x^2q^8) F_i(xq^3,q)
///  - (1-xq^3)(1+xq^6)(1-x^2q^9) F_i(xq^6,q)`.
pub fn verify_qd2(i: u8, trunc: usize) -> Report {
    let f = gf_f(i, trunc);
    let p = |t: &[(i64, usize, i64)]| XLaurentSeries::from_triples(t.iter().copied(), trunc);
    let lhs = &p(&[(0, 3, 1)]) * &f;
    let a = p(&[
        (0, 0, 1),
        (0, 3, 1),
        (1, 3, -1),
        (1, 6, 1),
        (2, 7, 1),
        (2, 8, 1),
    ]);
    let b = &(&p(&[(0, 0, 1), (1, 3, -1)]) * &p(&[(0, 0, 1), (1, 6, 1)]))
        * &p(&[(0, 0, 1), (2, 9, -1)]);
    let rhs = &(&a * &f.substitute(3).expect("x-degrees are nonnegative"))
        - &(&b * &f.substitute(6).expect("x-degrees are nonnegative"));
    Report::new(
        format!("qd2_i{i}"),
        trunc,
        vec![Check::series(
            "q^3 F(x,q) = ... F(xq^3,q) - ... F(xq^6,q)",
            &lhs,
            &rhs,
        )],
        vec![],
    )
}

/// `(q^3;q^3)_n [x^n] F_i = c_n^{(i)}` for every `n` with
/// `min-degree(c_n) < trunc`, plus `F_i(1, q)` against the product.
pub fn c_coefficient_bridge(i: u8, trunc: usize) -> Report {
    let f = gf_f(i, trunc);
    let mut checks = Vec::new();
    let mut n_max = 4;
    let table = loop {
        let t = c_table(i, n_max);
        let quiet = t.polys[n_max - 3..]
            .iter()
            .all(|p| p.min_degree().is_none_or(|d| d >= trunc));
        if quiet {
            break t;
        }
        n_max *= 2;
    };
    for (n, c) in table.polys.iter().enumerate() {
        if c.min_degree().is_none_or(|d| d >= trunc) {
            continue;
        }
        let poch = QPolynomial::q_pochhammer(3, n).to_series(trunc);
        let lhs = &poch * &f.coeff(n as i64);
        checks.push(Check::q_series(
            format!("(q^3;q^3)_{n} [x^{n}]F = c_{n}"),
            &lhs,
            &c.to_series(trunc),
        ));
    }
    checks.push(Check::q_series(
        "F(1,q) = product",
        &f.at_x_one(),
        &capparelli_product(i as usize, trunc),
    ));
    Report::new(format!("bridge_c_i{i}"), trunc, checks, vec![])
}

/// Exhaustive check, for partitions of size `<= max_size`, that deleting
/// the parts 1, 2 and subtracting 2 from the rest maps each class
/// `H^{(u)}_{t,s}` bijectively onto strict partitions of the source parity,
/// with the weight shift recorded in [`derived_g_system`].
pub fn bijection_check(i: u8, max_size: usize) -> Report {
    let mut all: Vec<Vec<usize>> = Vec::new();
    for_each_strict(max_size + 1, |p| all.push(p.to_vec()));
    let mut checks = Vec::new();
    for e in derived_g_system(i) {
        let removed_size = 2 * e.t + e.s;
        let mut images = HashSet::new();
        let mut ok = true;
        let mut count = 0usize;
        for p in all.iter().filter(|p| in_class(p, e.u, e.t, e.s)) {
            count += 1;
            let mu: Vec<usize> = p.iter().filter(|&&x| x > 2).map(|x| x - 2).collect();
            ok &= StrictPartition::new(mu.clone()).is_some();
            ok &= mu.len() % 2 == e.source;
            ok &= p.len() as i64 == mu.len() as i64 + e.x_exp;
            ok &= residue_weight(p, i) == residue_weight(&mu, i) + 3 * mu.len() + e.q_exp;
            ok &= images.insert(mu);
        }
        // surjectivity: every μ of the source parity that fits is hit
        let expected = all
            .iter()
            .filter(|mu| mu.len() % 2 == e.source)
            .filter(|mu| mu.iter().sum::<usize>() + 2 * mu.len() + removed_size <= max_size)
            .count();
        checks.push(
            Check::flag(
                format!("H^({})_{{{},{}}} bijection", e.u, e.t, e.s),
                ok && count == expected,
            )
            .with_detail(format!("{count} partitions")),
        );
    }
    Report::new(format!("bijection_i{i}"), max_size, checks, vec![])
}

/// `F_i(1, q)` series alone, for comparisons.
pub fn f_at_one(i: u8, trunc: usize) -> QSeries {
    gf_f(i, trunc).at_x_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(p: &[usize]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn residue_weights() {
        assert_eq!(sp(&[1]).residue_weight(1), 1);
        assert_eq!(sp(&[1]).residue_weight(2), 2);
        assert_eq!(sp(&[2, 1]).residue_weight(2), 4);
        assert_eq!(StrictPartition::empty().residue_weight(1), 0);
        assert_eq!(StrictPartition::empty().residue_weight(2), 0);
    }

    #[test]
    fn weights_sum_to_three_times_size() {
        for_each_strict(25, |p| {
            assert_eq!(
                residue_weight(p, 1) + residue_weight(p, 2),
                3 * p.iter().sum::<usize>()
            );
        });
    }

    #[test]
    fn rejects_non_strict() {
        assert!(StrictPartition::new(vec![2, 2]).is_none());
        assert!(StrictPartition::new(vec![1, 2]).is_none());
        assert!(StrictPartition::new(vec![3, 0]).is_none());
    }

    #[test]
    fn strict_partition_counts() {
        let mut by_size = vec![0; 8];
        for_each_strict(8, |p| by_size[p.iter().sum::<usize>()] += 1);
        assert_eq!(by_size, vec![1, 1, 1, 2, 2, 3, 4, 5]);
    }

    #[test]
    fn wakimoto_low_order() {
        let w2 = to_series(tally(6, |p| Some((0, residue_weight(p, 2)))), 6).coeff(0);
        assert_eq!(w2, QSeries::from_coeffs([1, 0, 1, 1, 1, 1], 6));
        let w1 = to_series(tally(3, |p| Some((0, residue_weight(p, 1)))), 3).coeff(0);
        assert_eq!(*w1.coeff(1), BigInt::from(1));
    }

    #[test]
    fn g_classes_partition_f() {
        let n = 15;
        let mut sum = XLaurentSeries::zero(n);
        for u in 0..2 {
            for t in 0..2 {
                for s in 0..2 {
                    sum = &sum + &gf_g(u, t, s, 2, n);
                }
            }
        }
        assert_eq!(sum, gf_f(2, n));
        assert_eq!(gf_g(0, 0, 0, 2, n).coeff_at(0, 0), BigInt::from(1));
    }

    #[test]
    fn derived_system_i2() {
        let d = derived_g_system(2);
        let find = |u, t, s| *d.iter().find(|e| (e.u, e.t, e.s) == (u, t, s)).unwrap();
        assert_eq!(
            (
                find(0, 1, 1).x_exp,
                find(0, 1, 1).q_exp,
                find(0, 1, 1).source
            ),
            (2, 4, 0)
        );
        assert_eq!(find(1, 1, 1).q_exp, 5);
        assert_eq!((find(0, 0, 1).q_exp, find(1, 0, 1).q_exp), (1, 2));
        assert_eq!((find(0, 0, 0).source, find(1, 0, 0).source), (0, 1));
    }
}

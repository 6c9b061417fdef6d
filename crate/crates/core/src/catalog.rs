//! Named identities and series, shared by the command-line front end and
//! the acceptance suite.

use std::str::FromStr;

use rayon::prelude::*;

use crate::crystal::DominantWeight;
use crate::error::{Error, Result};
use crate::partitions::{
    bijection_check, c_coefficient_bridge, euler_verify, gf_f, verify_g_system, verify_qd2,
    wakimoto_verify, GSystem,
};
use crate::path::{gf_fd, PathSpace};
use crate::recurrences::{specializations, verify_theorem, Family};
use crate::report::{Check, Report};
use crate::series::{capparelli_product, rr_product, QSeries, XLaurentSeries};
use crate::transfer::{
    coefficient_bridge, k_for, verify_fg_law, verify_matrix_m, verify_qdif, verify_qdif2,
    verify_transfer,
};

/// One verifiable identity.
#[derive(Clone, Copy)]
pub struct Entry {
    pub id: &'static str,
    pub description: &'static str,
    /// Truncation order (or table length, or degree bound) used by default.
    pub default_trunc: usize,
    run: fn(usize) -> Result<Report>,
}

impl Entry {
    pub fn run(&self, trunc: Option<usize>) -> Result<Report> {
        let n = trunc.unwrap_or(self.default_trunc);
        if n == 0 && self.default_trunc != 0 {
            return Err(Error::ZeroTruncation);
        }
        let mut r = (self.run)(n)?;
        r.identity = self.id.to_string();
        Ok(r)
    }
}

impl std::fmt::Debug for Entry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Entry")
            .field("id", &self.id)
            .field("default_trunc", &self.default_trunc)
            .finish()
    }
}

fn merge(id: &str, trunc: usize, reports: Vec<Report>) -> Report {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    for r in reports {
        for mut c in r.checks {
            c.label = format!("{}: {}", r.identity, c.label);
            checks.push(c);
        }
        notes.extend(r.notes.into_iter().map(|n| format!("{}: {n}", r.identity)));
    }
    Report::new(id, trunc, checks, notes)
}

fn gsystem(i: u8, n: usize) -> Result<Report> {
    let mut r = verify_g_system(i, n, GSystem::Derived);
    if i == 2 {
        let shown = verify_g_system(2, n, GSystem::Reference);
        let bad: Vec<String> = shown.failing().map(|c| c.label.clone()).collect();
        r.notes.push(format!(
            "checked the system derived from the bijection; the reference system fails {} of {} lines: {}",
            bad.len(),
            shown.checks.len(),
            bad.join("; ")
        ));
    } else {
        r.notes
            .push("system reconstructed for |.|_1 from the bijection".into());
    }
    let b = bijection_check(i, n.min(30));
    r.checks.extend(b.checks);
    Ok(r)
}

/// `[x^1] J(3Λ0) = q/(1-q)`: the paths with `ℓ = 1` are `...(2,1)(2,1)`
/// followed by ground, one for each degree `>= 1`.
pub fn ell_one_check(trunc: usize) -> Result<Check> {
    let census = PathSpace::b13(DominantWeight::THREE_L0)?.stable_census(trunc as u64 - 1)?;
    let j1 = census.j_series(trunc)?.coeff(1);
    let expect = QSeries::from_coeffs((0..trunc).map(|k| (k > 0) as i64), trunc);
    Ok(Check::q_series("[x^1]J = q/(1-q)", &j1, &expect))
}

/// Degree-graded path counts from the enumerator against those reached by
/// the crystal operators from the ground path, for `3Λ0` and `2Λ0 + Λ1`.
pub fn character_oracle(depth: usize) -> Result<Report> {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    for lam in [DominantWeight::THREE_L0, DominantWeight::TWO_L0_L1] {
        let space = PathSpace::b13(lam)?;
        let counts = space.stable_census(depth as u64)?.degree_counts();
        let levels = space.bfs_levels(depth as u64);
        let bfs: Vec<u64> = levels.iter().map(|l| l.len() as u64).collect();
        let paths = space.enumerate_paths(depth as u64)?;
        let same_sets = levels.iter().enumerate().all(|(d, level)| {
            let mut e: Vec<_> = paths
                .iter()
                .filter(|(_, s)| s.degree == d as u64)
                .map(|(p, _)| p.clone())
                .collect();
            e.sort();
            e == *level
        });
        checks.push(
            Check::flag(format!("{lam}: counts agree"), counts == bfs)
                .with_detail(format!("{counts:?}")),
        );
        checks.push(Check::flag(
            format!("{lam}: same paths at every degree"),
            same_sets,
        ));
        if lam == DominantWeight::THREE_L0 {
            notes.push(format!("{lam} counts by degree: {bfs:?}"));
        }
    }
    Ok(Report::new("character_oracle", depth, checks, notes))
}

fn qdif_with_ell_one(n: usize) -> Result<Report> {
    let mut r = verify_qdif(n)?;
    r.checks.push(ell_one_check(n)?);
    Ok(Report::new(r.identity, r.trunc, r.checks, r.notes))
}

fn fg_law(n: usize) -> Result<Report> {
    let max_degree = n.saturating_sub(1) as u64;
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    for lam in [DominantWeight::THREE_L0, DominantWeight::TWO_L0_L1] {
        let r = verify_fg_law(lam, max_degree, 20, 7)?;
        checks.extend(r.checks.into_iter().map(|mut c| {
            c.label = format!("{lam}: {}", c.label);
            c
        }));
        notes.extend(r.notes);
    }
    Ok(Report::new("fg_law", n, checks, notes))
}

/// Every catalog entry, in display order.
pub fn entries() -> Vec<Entry> {
    vec![
        Entry {
            id: "thm1_i1",
            description: "sum b^(1)_n/(q;q)_n = 1/(q,q^4;q^5)_inf",
            default_trunc: 200,
            run: |n| verify_theorem(Family::B, 1, n),
        },
        Entry {
            id: "thm1_i2",
            description: "sum b^(2)_n/(q;q)_n = 1/(q^2,q^3;q^5)_inf",
            default_trunc: 200,
            run: |n| verify_theorem(Family::B, 2, n),
        },
        Entry {
            id: "thm2_i1",
            description: "sum c^(1)_n/(q^3;q^3)_n = (q^2,q^10;q^12)_inf/(q,q^3,...,q^11;q^12)_inf",
            default_trunc: 150,
            run: |n| verify_theorem(Family::C, 1, n),
        },
        Entry {
            id: "thm2_i2",
            description: "sum c^(2)_n/(q^3;q^3)_n = 1/(q^2,q^3,q^9,q^10;q^12)_inf",
            default_trunc: 150,
            run: |n| verify_theorem(Family::C, 2, n),
        },
        Entry {
            id: "qdif",
            description: "q-difference equation for J(x,q) of 3L0 paths, and [x^1]J = q/(1-q)",
            default_trunc: 30,
            run: qdif_with_ell_one,
        },
        Entry {
            id: "qdif2",
            description:
                "q-difference equation for K = J/(-xq;q)_inf and the k_n recurrence (n <= 8)",
            default_trunc: 30,
            run: verify_qdif2,
        },
        Entry {
            id: "qd2_i1",
            description: "q-difference equation for F_1(x,q) over strict partitions",
            default_trunc: 40,
            run: |n| Ok(verify_qd2(1, n)),
        },
        Entry {
            id: "qd2_i2",
            description: "q-difference equation for F_2(x,q) over strict partitions",
            default_trunc: 40,
            run: |n| Ok(verify_qd2(2, n)),
        },
        Entry {
            id: "euler",
            description: "strict partitions: sum q^|λ| = 1/(q;q^2)_inf",
            default_trunc: 80,
            run: |n| Ok(euler_verify(n)),
        },
        Entry {
            id: "wakimoto_i1",
            description: "sum q^|λ|_1 over strict partitions = modulus-12 product",
            default_trunc: 60,
            run: |n| Ok(wakimoto_verify(1, n)),
        },
        Entry {
            id: "wakimoto_i2",
            description: "sum q^|λ|_2 over strict partitions = 1/(q^2,q^3,q^9,q^10;q^12)_inf",
            default_trunc: 60,
            run: |n| Ok(wakimoto_verify(2, n)),
        },
        Entry {
            id: "transfer16",
            description: "J_p(x,q) = sum_q M[p][q] J_q(xq^2,q) for all 16 leading blocks",
            default_trunc: 30,
            run: verify_transfer,
        },
        Entry {
            id: "gsystem_i1",
            description:
                "G-system for |.|_1 (reconstructed from the bijection) and the bijection itself",
            default_trunc: 30,
            run: |n| gsystem(1, n),
        },
        Entry {
            id: "gsystem_i2",
            description:
                "G-system for |.|_2 derived from the bijection, with the reference lines compared",
            default_trunc: 30,
            run: |n| gsystem(2, n),
        },
        Entry {
            id: "gsystem_i2_reference",
            description: "the G-system for |.|_2 as given in the reference table",
            default_trunc: 30,
            run: |n| Ok(verify_g_system(2, n, GSystem::Reference)),
        },
        Entry {
            id: "matrix_M",
            description: "f'/g' from paths reproduce the reference 16x16 transfer matrix",
            default_trunc: 0,
            run: |_| verify_matrix_m(),
        },
        Entry {
            id: "bridge_b_i1",
            description: "(q;q)_n [x^n]K = b^(1)_n for 2L0+L1 paths",
            default_trunc: 30,
            run: |n| coefficient_bridge(1, n),
        },
        Entry {
            id: "bridge_b_i2",
            description: "(q;q)_n [x^n]K = b^(2)_n for 3L0 paths",
            default_trunc: 30,
            run: |n| coefficient_bridge(2, n),
        },
        Entry {
            id: "bridge_c_i1",
            description: "(q^3;q^3)_n [x^n]F_1 = c^(1)_n",
            default_trunc: 40,
            run: |n| Ok(c_coefficient_bridge(1, n)),
        },
        Entry {
            id: "bridge_c_i2",
            description: "(q^3;q^3)_n [x^n]F_2 = c^(2)_n",
            default_trunc: 40,
            run: |n| Ok(c_coefficient_bridge(2, n)),
        },
        Entry {
            id: "fib_special",
            description: "b_n(1) is Fibonacci up to sign and b_n is sign coherent (n <= N)",
            default_trunc: 25,
            run: |n| {
                Ok(merge(
                    "fib_special",
                    n,
                    vec![
                        specializations(Family::B, 1, n),
                        specializations(Family::B, 2, n),
                    ],
                ))
            },
        },
        Entry {
            id: "pow2_special",
            description: "c_n(1) = 2^n (n <= N); coefficient signs reported",
            default_trunc: 25,
            run: |n| {
                Ok(merge(
                    "pow2_special",
                    n,
                    vec![
                        specializations(Family::C, 1, n),
                        specializations(Family::C, 2, n),
                    ],
                ))
            },
        },
        Entry {
            id: "fg_law",
            description:
                "prefix concatenation shifts l_H and |b| by amounts depending only on the blocks",
            default_trunc: 15,
            run: fg_law,
        },
        Entry {
            id: "character_oracle",
            description:
                "path enumeration agrees with the crystal-operator orbit of the ground path",
            default_trunc: 12,
            run: character_oracle,
        },
    ]
}

pub fn find(id: &str) -> Result<Entry> {
    entries()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Runs every entry at its default truncation, in parallel, returning the
/// reports in catalog order.
pub fn run_all() -> Vec<(Entry, Result<Report>)> {
    entries()
        .into_par_iter()
        .map(|e| {
            let r = e.run(None);
            (e, r)
        })
        .collect()
}

/// Series the `expand` command can print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesId {
    J(DominantWeight),
    K3L0,
    F(u8),
    Fd(u32),
    RrProduct(u8),
    CapProduct(u8),
}

impl FromStr for SeriesId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownSeries(s.to_string());
        let index = |v: &str| match v {
            "1" => Ok(1u8),
            "2" => Ok(2u8),
            _ => Err(bad()),
        };
        match s.split_once(':') {
            None => match s {
                "J_3L0" => Ok(SeriesId::J(DominantWeight::THREE_L0)),
                "J_2L0L1" => Ok(SeriesId::J(DominantWeight::TWO_L0_L1)),
                "K_3L0" => Ok(SeriesId::K3L0),
                "F1" => Ok(SeriesId::F(1)),
                "F2" => Ok(SeriesId::F(2)),
                _ => Err(bad()),
            },
            Some(("FD", d)) => match d {
                "1" | "2" | "4" => Ok(SeriesId::Fd(d.parse().unwrap())),
                _ => Err(bad()),
            },
            Some(("rr_product", i)) => Ok(SeriesId::RrProduct(index(i)?)),
            Some(("cap_product", i)) => Ok(SeriesId::CapProduct(index(i)?)),
            _ => Err(bad()),
        }
    }
}

/// Valid names for [`SeriesId`].
pub const SERIES_NAMES: [&str; 12] = [
    "J_3L0",
    "K_3L0",
    "J_2L0L1",
    "F1",
    "F2",
    "FD:1",
    "FD:2",
    "FD:4",
    "rr_product:1",
    "rr_product:2",
    "cap_product:1",
    "cap_product:2",
];

/// A computed series: bivariate, or a plain power series in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    X(XLaurentSeries),
    Q(QSeries),
}

/// Expands a named series modulo `q^trunc`. `FD:D` is `F^(D)` for `3Λ0`.
pub fn expand(id: SeriesId, trunc: usize) -> Result<Expansion> {
    if trunc == 0 {
        return Err(Error::ZeroTruncation);
    }
    Ok(match id {
        SeriesId::J(lam) => {
            let census = PathSpace::b13(lam)?.stable_census(trunc as u64 - 1)?;
            Expansion::X(census.j_series(trunc)?)
        }
        SeriesId::K3L0 => Expansion::X(k_for(2, trunc)?.0),
        SeriesId::F(i) => Expansion::X(gf_f(i, trunc)),
        SeriesId::Fd(d) => Expansion::X(gf_fd(DominantWeight::THREE_L0, d, trunc)?),
        SeriesId::RrProduct(i) => Expansion::Q(rr_product(i as usize, trunc)),
        SeriesId::CapProduct(i) => Expansion::Q(capparelli_product(i as usize, trunc)),
    })
}

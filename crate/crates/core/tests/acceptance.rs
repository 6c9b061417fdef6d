//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the verdicts print in order; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use kpath_core::catalog::ell_one_check;
use kpath_core::crystal::DominantWeight;
use kpath_core::partitions::{
    c_coefficient_bridge, euler_verify, verify_g_system, verify_qd2, wakimoto_verify, GSystem,
};
use kpath_core::path::{gf_fd, PathSpace};
use kpath_core::recurrences::{b_table, c_table, specializations, verify_theorem, Family};
use kpath_core::report::{Check, Report};
use kpath_core::series::{QSeries, XLaurentSeries};
use kpath_core::transfer::{
    bridge_checks, k_for, verify_fg_law, verify_matrix_m, verify_qdif, verify_qdif2,
    verify_transfer, BridgeOrientation,
};

/// Sub-results of one criterion.
#[derive(Default)]
struct Outcome {
    lines: Vec<(bool, String)>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, pass: bool, what: impl Into<String>) {
        self.lines.push((pass, what.into()));
    }

    fn report(&mut self, r: &Report) {
        let mut what = format!(
            "{} ({}/{} checks)",
            r.identity,
            r.checks.iter().filter(|c| c.pass).count(),
            r.checks.len()
        );
        if let Some(c) = r.failing().next() {
            what.push_str(&format!("; first failing: {}", c.label));
            if let Some(m) = &c.first_mismatch {
                what.push_str(&format!(
                    " at x^{} q^{}: {} vs {}",
                    m.xdeg, m.qdeg, m.lhs, m.rhs
                ));
            }
        }
        self.check(r.pass, what);
    }

    fn checks(&mut self, label: &str, cs: &[Check]) {
        let bad: Vec<&str> = cs
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.label.as_str())
            .collect();
        let what = if bad.is_empty() {
            format!("{label}: {} equations", cs.len())
        } else {
            format!(
                "{label}: {} of {} fail, first {}",
                bad.len(),
                cs.len(),
                bad[0]
            )
        };
        self.check(bad.is_empty(), what);
    }

    fn within(&mut self, label: &str, t: Duration, budget: Duration) {
        self.check(
            t <= budget,
            format!("{label} took {:.2?} (budget {budget:?})", t),
        );
    }

    fn pass(&self) -> bool {
        self.lines.iter().all(|(p, _)| *p)
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn theorem_sums(family: Family, trunc: usize, budget: Duration) -> Outcome {
    let mut o = Outcome::default();
    for i in [1, 2] {
        let (r, t) = timed(|| verify_theorem(family, i, trunc).expect("theorem sum terminates"));
        o.report(&r);
        o.within(&r.identity, t, budget);
    }
    o
}

fn reference_tables() -> Outcome {
    let mut o = Outcome::default();
    let b = [b_table(1, 7), b_table(2, 7)];
    for (i, n, shown) in common::reference_b() {
        let computed = &b[i as usize - 1].polys[n];
        if (i, n) == common::WRONG_SIGN_B {
            o.check(
                computed == &-&shown,
                format!(
                    "b^({i})_{n}: recurrence gives {}, reference value {} (sign erratum)",
                    computed.factored(),
                    shown.factored()
                ),
            );
        } else {
            o.check(
                computed == &shown,
                format!("b^({i})_{n} = {}", shown.factored()),
            );
        }
    }
    let c = [c_table(1, 4), c_table(2, 4)];
    for (i, n, shown) in common::reference_c() {
        o.check(
            c[i as usize - 1].polys[n] == shown,
            format!("c^({i})_{n} = {}", shown.factored()),
        );
    }
    o
}

fn special_values() -> Outcome {
    let mut o = Outcome::default();
    for (family, i) in [
        (Family::B, 1),
        (Family::B, 2),
        (Family::C, 1),
        (Family::C, 2),
    ] {
        o.report(&specializations(family, i, 25));
    }
    for i in [1, 2] {
        let t = c_table(i, 12);
        let negative: Vec<usize> = (0..=12)
            .filter(|&n| !t.polys[n].has_nonnegative_coefficients())
            .collect();
        o.notes.push(if negative.is_empty() {
            format!("c^({i})_n has nonnegative coefficients for n <= 12")
        } else {
            format!("c^({i})_n has a negative coefficient for n in {negative:?}")
        });
    }
    o
}

fn matrix() -> Outcome {
    let mut o = Outcome::default();
    let (r, t) = timed(|| verify_matrix_m().expect("matrix builds"));
    o.report(&r);
    o.within("matrix_M", t, Duration::from_secs(60));
    o.notes.extend(r.notes);
    o
}

fn transfer() -> Outcome {
    let mut o = Outcome::default();
    for r in [verify_transfer(30), verify_qdif(30), verify_qdif2(30)] {
        let r = r.expect("enumeration stabilizes");
        o.report(&r);
        let stable = r.notes.iter().any(|n| n.contains("stable at window"));
        o.check(stable, format!("{}: prefix stability reached", r.identity));
    }
    o
}

fn bridges() -> Outcome {
    let mut o = Outcome::default();
    for i in [2u8, 1] {
        let (k, _) = k_for(i, 30).expect("enumeration stabilizes");
        o.checks(
            &format!("as stated, (q;q)_n b^({i})_n = k_n"),
            &bridge_checks(i, &k, BridgeOrientation::BTimesPoch),
        );
        let holds = bridge_checks(i, &k, BridgeOrientation::KTimesPoch);
        o.notes.push(format!(
            "(q;q)_n k_n = b^({i})_n {} for all {} indices with min-degree < 30",
            if holds.iter().all(|c| c.pass) {
                "holds"
            } else {
                "FAILS"
            },
            holds.len()
        ));
    }
    for i in [1, 2] {
        o.report(&c_coefficient_bridge(i, 40));
    }
    o
}

fn partition_suite() -> Outcome {
    let mut o = Outcome::default();
    let (_, t) = timed(|| {
        o.report(&euler_verify(80));
        for i in [1, 2] {
            o.report(&wakimoto_verify(i, 60));
        }
        o.report(&verify_g_system(2, 30, GSystem::Reference));
        o.report(&verify_g_system(1, 30, GSystem::Derived));
        for i in [1, 2] {
            o.report(&verify_qd2(i, 40));
        }
    });
    o.within("partition suite", t, Duration::from_secs(60));
    let derived = verify_g_system(2, 30, GSystem::Derived);
    o.notes.push(format!(
        "the i=2 system derived from the bijection {}",
        if derived.pass { "holds" } else { "FAILS" }
    ));
    o
}

fn oracle() -> Outcome {
    let mut o = Outcome::default();
    let space = PathSpace::b13(DominantWeight::THREE_L0).expect("ground state exists");
    let mut enumerated = vec![0u64; 13];
    for (_, s) in space.enumerate_paths(12).expect("enumeration stabilizes") {
        enumerated[s.degree as usize] += 1;
    }
    let bfs: Vec<u64> = space
        .bfs_levels(12)
        .iter()
        .map(|l| l.len() as u64)
        .collect();
    o.check(
        enumerated == bfs,
        format!("3L0 counts to degree 12: {bfs:?}"),
    );
    let c = ell_one_check(30).expect("enumeration stabilizes");
    o.check(c.pass, format!("{} mod q^30", c.label));
    o
}

fn random_series(rng: &mut StdRng, trunc: usize) -> XLaurentSeries {
    let triples: Vec<(i64, usize, i64)> = (0..rng.gen_range(0..6))
        .map(|_| {
            (
                rng.gen_range(-2..=3),
                rng.gen_range(0..trunc),
                rng.gen_range(-9..=9),
            )
        })
        .collect();
    XLaurentSeries::from_triples(triples, trunc)
}

fn properties() -> Outcome {
    let mut o = Outcome::default();
    let mut rng = StdRng::seed_from_u64(20261015);
    let mut ring_ok = true;
    for _ in 0..1000 {
        let n = rng.gen_range(1..12);
        let (a, b, c) = (
            random_series(&mut rng, n),
            random_series(&mut rng, n),
            random_series(&mut rng, n),
        );
        ring_ok &= &(&a + &b) + &c == &a + &(&b + &c)
            && &a + &b == &b + &a
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a - &b) + &b == a
            && &a + &(-&a) == XLaurentSeries::zero(n)
            && &a * &XLaurentSeries::one(n) == a;
    }
    o.check(ring_ok, "ring axioms on 1000 random triples");
    let mut inverse_ok = true;
    for _ in 0..200 {
        let n = rng.gen_range(1..25);
        let mut coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
        coeffs[0] = if rng.gen() { 1 } else { -1 };
        let s = QSeries::from_coeffs(coeffs, n);
        let inv = s.inverse().expect("unit constant term");
        inverse_ok &=
            &s * &inv == QSeries::one(n) && inv.inverse().expect("unit constant term") == s;
    }
    o.check(inverse_ok, "inverse round-trips on 200 random units");
    for lam in [DominantWeight::THREE_L0, DominantWeight::TWO_L0_L1] {
        let r = verify_fg_law(lam, 14, 25, rng.gen()).expect("enumeration stabilizes");
        o.check(
            r.pass,
            format!(
                "prefix law on randomized {lam} paths ({} blocks)",
                r.checks.len()
            ),
        );
    }
    for lam in [DominantWeight::THREE_L0, DominantWeight::TWO_L0_L1] {
        let at_one: Vec<QSeries> = [1, 2, 4]
            .iter()
            .map(|&d| gf_fd(lam, d, 20).expect("D divides 4").at_x_one())
            .collect();
        o.check(
            at_one.windows(2).all(|w| w[0] == w[1]),
            format!("F^(D)(1,q) for D = 1, 2, 4 agree mod q^20 ({lam})"),
        );
    }
    o
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "sum b^(i)_n/(q;q)_n = 1/(q^i,q^(5-i);q^5)_inf mod q^200",
            || theorem_sums(Family::B, 200, Duration::from_secs(5)),
        ),
        (
            "sum c^(i)_n/(q^3;q^3)_n = modulus-12 products mod q^150",
            || theorem_sums(Family::C, 150, Duration::from_secs(10)),
        ),
        (
            "b and c tables against the reference values",
            reference_tables,
        ),
        (
            "Fibonacci, sign coherence and 2^n specializations",
            special_values,
        ),
        ("16x16 transfer matrix from f', g'", matrix),
        (
            "transfer relation, J and K q-difference equations mod q^30",
            transfer,
        ),
        ("coefficient bridges", bridges),
        ("strict partition suite", partition_suite),
        ("enumeration against the crystal-operator orbit", oracle),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.into_iter().enumerate() {
        let (o, t) = timed(run);
        let verdict = if o.pass() { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {:>2}: {title} [{t:.2?}]", k + 1);
        for (pass, what) in &o.lines {
            println!("       {} {what}", if *pass { "ok  " } else { "FAIL" });
        }
        for n in &o.notes {
            println!("       note {n}");
        }
        failed += usize::from(!o.pass());
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

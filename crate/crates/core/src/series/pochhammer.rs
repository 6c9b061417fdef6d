use super::qseries::QSeries;

/// Number of factors in a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochCount {
    Finite(usize),
    Infinite,
}

/// `prod_j (1 - q^(base + j*modulus))` modulo `q^trunc`, over
/// `j = 0..n` or, for [`PochCount::Infinite`], until the exponent reaches
/// the truncation.
///
/// Panics unless `base >= 1` and `modulus >= 1`.
pub fn poch(base: usize, modulus: usize, count: PochCount, trunc: usize) -> QSeries {
    assert!(
        base >= 1 && modulus >= 1,
        "poch needs base >= 1 and modulus >= 1"
    );
    let mut out = QSeries::one(trunc);
    let mut e = base;
    let mut j = 0usize;
    loop {
        match count {
            PochCount::Finite(n) if j >= n => break,
            PochCount::Infinite if e >= trunc => break,
            _ => {}
        }
        if e < trunc {
            out = out.mul_one_minus_qk(e);
        }
        e += modulus;
        j += 1;
    }
    out
}

/// `1 / prod_{r in residues} (q^r; q^modulus)_inf` modulo `q^trunc`.
pub fn inverse_product(residues: &[usize], modulus: usize, trunc: usize) -> QSeries {
    let mut out = QSeries::one(trunc);
    for &r in residues {
        let mut e = r;
        while e < trunc {
            out = out.div_one_minus_qk(e);
            e += modulus;
        }
    }
    out
}

/// `(q^r1, q^r2, ...; q^modulus)_inf` modulo `q^trunc`.
pub fn product(residues: &[usize], modulus: usize, trunc: usize) -> QSeries {
    residues.iter().fold(QSeries::one(trunc), |acc, &r| {
        &acc * &poch(r, modulus, PochCount::Infinite, trunc)
    })
}

/// `1/(q^i, q^(5-i); q^5)_inf`, the product side of the Rogers-Ramanujan
/// type identities.
pub fn rr_product(i: usize, trunc: usize) -> QSeries {
    let fwd = product(&[i, 5 - i], 5, trunc);
    fwd.inverse().expect("constant term is 1")
}

/// The product sides of the Capparelli-type identities (modulus 12).
pub fn capparelli_product(i: usize, trunc: usize) -> QSeries {
    match i {
        1 => {
            let num = product(&[2, 10], 12, trunc);
            let den = product(&[1, 3, 5, 7, 9, 11], 12, trunc);
            &num * &den.inverse().expect("constant term is 1")
        }
        2 => product(&[2, 3, 9, 10], 12, trunc)
            .inverse()
            .expect("constant term is 1"),
        _ => panic!("capparelli_product: i must be 1 or 2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], n: usize) -> QSeries {
        QSeries::from_coeffs(c.iter().copied(), n)
    }

    /// Number of partitions of `n` into parts drawn from `allowed`.
    fn count_partitions(n: usize, allowed: &dyn Fn(usize) -> bool) -> i64 {
        fn go(rem: usize, max: usize, allowed: &dyn Fn(usize) -> bool) -> i64 {
            if rem == 0 {
                return 1;
            }
            (1..=max.min(rem))
                .filter(|&p| allowed(p))
                .map(|p| go(rem - p, p, allowed))
                .sum()
        }
        go(n, n, allowed)
    }

    fn count_strict(n: usize) -> i64 {
        fn go(rem: usize, max: usize) -> i64 {
            if rem == 0 {
                return 1;
            }
            (1..=max.min(rem)).map(|p| go(rem - p, p - 1)).sum()
        }
        go(n, n)
    }

    #[test]
    fn finite_products() {
        let n = 10;
        assert_eq!(poch(1, 1, PochCount::Finite(2), n), s(&[1, -1, -1, 1], n));
        assert_eq!(poch(1, 1, PochCount::Finite(0), n), QSeries::one(n));
    }

    #[test]
    fn euler_strict_partitions() {
        let n = 30;
        let inv = poch(1, 2, PochCount::Infinite, n).inverse().unwrap();
        assert_eq!(&inv.coeffs()[..6], s(&[1, 1, 1, 2, 2, 3], 6).coeffs());
        for k in 0..n {
            assert_eq!(*inv.coeff(k), count_strict(k).into(), "q^{k}");
        }
    }

    #[test]
    fn parts_congruent_to_plus_minus_one_mod_five() {
        let n = 40;
        let lhs = (&poch(1, 5, PochCount::Infinite, n) * &poch(4, 5, PochCount::Infinite, n))
            .inverse()
            .unwrap();
        assert_eq!(&lhs.coeffs()[..8], s(&[1, 1, 1, 1, 2, 2, 3, 3], 8).coeffs());
        for k in 0..n {
            let brute = count_partitions(k, &|p| p % 5 == 1 || p % 5 == 4);
            assert_eq!(*lhs.coeff(k), brute.into(), "q^{k}");
        }
        assert_eq!(rr_product(1, n), lhs);
        assert_eq!(inverse_product(&[1, 4], 5, n), lhs);
    }

    #[test]
    fn infinite_agrees_with_long_finite() {
        let n = 25;
        // 3 + 5*5 = 28 >= 25
        assert_eq!(
            poch(3, 5, PochCount::Infinite, n),
            poch(3, 5, PochCount::Finite(5), n)
        );
    }

    #[test]
    fn capparelli_products_low_order() {
        // i=2: 1/(q^2,q^3,q^9,q^10;q^12) starts 1 + q^2 + q^3 + q^4 + q^5
        let c2 = capparelli_product(2, 6);
        assert_eq!(c2, s(&[1, 0, 1, 1, 1, 1], 6));
        let c1 = capparelli_product(1, 3);
        assert_eq!(c1, s(&[1, 1, 0], 3));
    }
}

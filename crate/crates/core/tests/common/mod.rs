//! Reference values of the numerator polynomials.

#![allow(dead_code)]

use kpath_core::series::QPolynomial;

/// `sign * q^shift * sum q^e` over `exps`; repeated exponents add up.
pub fn shifted(sign: i64, shift: usize, exps: &[usize]) -> QPolynomial {
    QPolynomial::from_terms(exps.iter().map(|&e| (shift + e, sign)))
}

/// `(i, n, reference b^(i)_n)` for `2 <= n <= 7`.
pub fn reference_b() -> Vec<(u8, usize, QPolynomial)> {
    vec![
        (1, 2, QPolynomial::zero()),
        (1, 3, shifted(1, 4, &[0])),
        (1, 4, shifted(-1, 7, &[0])),
        (1, 5, shifted(1, 9, &[0, 2])),
        (1, 6, shifted(-1, 13, &[0, 1, 3])),
        (1, 7, shifted(1, 16, &[0, 2, 3, 4, 6])),
        (2, 2, shifted(1, 2, &[0])),
        (2, 3, shifted(-1, 4, &[0])),
        (2, 4, shifted(1, 6, &[0, 1])),
        (2, 5, shifted(-1, 9, &[0, 1, 2])),
        (2, 6, shifted(-1, 12, &[0, 1, 2, 3, 4])),
        (2, 7, shifted(-1, 16, &[0, 1, 2, 2, 3, 4, 5, 6])),
    ]
}

/// The one reference value the recurrence contradicts: the sign of `b^(2)_6`.
pub const WRONG_SIGN_B: (u8, usize) = (2, 6);

/// `(i, n, reference c^(i)_n)` for `1 <= n <= 4`; `n = 1` is the initial value.
pub fn reference_c() -> Vec<(u8, usize, QPolynomial)> {
    vec![
        (1, 1, shifted(1, 0, &[1, 3])),
        (1, 2, shifted(1, 5, &[0, 1, 2, 4])),
        (1, 3, shifted(1, 8, &[0, 2, 4, 5, 6, 7, 8, 10])),
        (
            1,
            4,
            shifted(1, 16, &[0, 1, 2, 3, 4, 4, 5, 6, 7, 8, 8, 9, 10, 11, 12, 14]),
        ),
        (2, 1, shifted(1, 0, &[2, 3])),
        (2, 2, shifted(1, 4, &[0, 2, 4, 5])),
        (2, 3, shifted(1, 10, &[0, 1, 2, 3, 4, 5, 7, 8])),
        (
            2,
            4,
            shifted(
                1,
                14,
                &[0, 2, 4, 5, 6, 7, 8, 8, 9, 10, 10, 11, 12, 13, 15, 16],
            ),
        ),
    ]
}

mod common;

use common::{reference_b, reference_c, shifted, WRONG_SIGN_B};
use kpath_core::recurrences::{b_table, c_table};

#[test]
fn b_table_matches_reference_values() {
    let tables = [b_table(1, 7), b_table(2, 7)];
    for (i, n, shown) in reference_b() {
        if (i, n) == WRONG_SIGN_B {
            continue;
        }
        assert_eq!(tables[i as usize - 1].polys[n], shown, "b^({i})_{n}");
    }
}

/// Listed as `-q^12(1+q+q^2+q^3+q^4)`. The recurrence
/// `b_6 = q^6 b_4 - q^5 b_5 = q^12(1+q) + q^14(1+q+q^2)` is positive,
/// as sign coherence with `(-1)^(n+i)` requires.
#[test]
fn reference_b2_6_has_the_wrong_sign() {
    let (i, n) = WRONG_SIGN_B;
    let shown = reference_b()
        .into_iter()
        .find(|&(a, b, _)| (a, b) == (i, n))
        .unwrap()
        .2;
    let computed = &b_table(i, n).polys[n];
    assert_ne!(computed, &shown);
    assert_eq!(computed, &-&shown);
    assert_eq!(computed, &shifted(1, 12, &[0, 1, 2, 3, 4]));
}

#[test]
fn reference_b2_7_is_consistent() {
    let b7 = &b_table(2, 7).polys[7];
    assert_eq!(b7, &shifted(-1, 16, &[0, 1, 2, 2, 3, 4, 5, 6]));
    assert_eq!(b7.coherent_sign(), Some(-1));
}

#[test]
fn c_table_matches_reference_values() {
    let tables = [c_table(1, 4), c_table(2, 4)];
    for (i, n, shown) in reference_c() {
        assert_eq!(tables[i as usize - 1].polys[n], shown, "c^({i})_{n}");
    }
}

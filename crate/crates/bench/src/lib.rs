//! Shared inputs for the benchmarks.

use kpath_core::series::{QSeries, XLaurentSeries};

/// A dense power series with small deterministic coefficients and constant
/// term 1, so it is invertible.
pub fn dense_series(trunc: usize, seed: i64) -> QSeries {
    QSeries::from_coeffs(
        (0..trunc as i64).map(|k| if k == 0 { 1 } else { 1 + (k * 7 + seed) % 5 }),
        trunc,
    )
}

/// A bivariate series with `xdegs` x-degrees, each carrying a dense
/// q-series; the shape `J(x, q)` has at moderate truncation.
pub fn dense_bivariate(xdegs: i64, trunc: usize) -> XLaurentSeries {
    let triples =
        (0..xdegs).flat_map(|x| (x as usize..trunc).map(move |q| (x, q, 1 + (x + q as i64) % 3)));
    XLaurentSeries::from_triples(triples, trunc)
}

//! Exact truncated series arithmetic.
//!
//! - [`QSeries`]: power series in `q`, known modulo `q^N`
//! - [`XLaurentSeries`]: finite Laurent polynomials in `x` over [`QSeries`]
//! - [`QPolynomial`]: exact sparse polynomials in `q`
//! - [`poch`] and friends: q-Pochhammer products

mod json;
mod laurent;
mod pochhammer;
mod poly;
mod qseries;

pub use json::{poly_pairs, SeriesJson};
pub use laurent::XLaurentSeries;
pub use pochhammer::{capparelli_product, inverse_product, poch, product, rr_product, PochCount};
pub use poly::{Factored, QPolynomial};
pub use qseries::QSeries;

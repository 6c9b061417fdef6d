//! Exact verification of Rogers-Ramanujan and Capparelli type identities
//! through Kyoto paths over the perfect crystal `B^{1,3}` of type `A_1^(1)`
//! and through residue-weighted strict partitions.
//!
//! - [`series`]: truncated q-series and Laurent polynomials in `x` over them
//! - [`crystal`]: table-driven perfect crystals and the signature rule
//! - [`path`]: λ-paths, their statistics, enumeration and generating functions
//! - [`transfer`]: the 16x16 transfer matrix and the q-difference equations
//! - [`recurrences`]: the numerator polynomials and the theorem sums
//! - [`partitions`]: strict partitions and the modulus-12 identities
//! - [`catalog`]: named identities and series

pub mod catalog;
pub mod crystal;
pub mod error;
pub mod partitions;
pub mod path;
pub mod recurrences;
pub mod report;
pub mod series;
pub mod transfer;

pub use crystal::{Direction, DominantWeight, PerfectCrystalSpec};
pub use error::{Error, Result};
pub use path::{LambdaPath, PathSpace, PathStats};
pub use report::{Check, Mismatch, Report};
pub use series::{QPolynomial, QSeries, SeriesJson, XLaurentSeries};

//! Exact arithmetic: integers, integer polynomials with heights, truncating
//! fixed-point decimals, real algebraic numbers.

pub mod bounds;
pub mod decimal;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod roots;

pub use bounds::{eigen_height_bounds, poly_height, zero_test, AlgebraicBound, EigenHeightBounds};
pub use decimal::{cmp_places, cmp_truncated, FixedDecimal};
pub use field::{FieldElem, NumberField};
pub use poly::IntPolynomial;

//! Exact polynomial arithmetic, parsing, projective operations and complex
//! root finding.

mod gcd;
mod parse;
mod poly;
mod roots;

pub use gcd::{bivariate_gcd, square_free_decomposition, square_free_part, RatPoly};
pub use parse::parse_polynomial;
pub use poly::{
    BivariatePolynomial, ChartPolynomial, ComplexChartPolynomial, HomogeneousPolynomial, Rational,
};
pub(crate) use poly::rat_to_f64;
pub use roots::{find_roots, resolve_fiber, Root, RootFinderConfig, UnivariateComplexPolynomial};

//! Curves used by the benchmarks.

use infbranch_core::{parse_polynomial, BivariatePolynomial};

pub const WORKED_EXAMPLE: &str = "y^5 - 4*y^4*x + 4*y^3*x^2 + 2*y^2*x - y^2*x^2 + 2*y*x^2 + 2*y*x^3 + x + x^2";
pub const PAIR_A: &str = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3";
pub const PAIR_B: &str = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y - 3*x^2 - x*y + 2*x - 3*y + 1";

pub fn curve(text: &str) -> BivariatePolynomial {
    parse_polynomial(text).expect("fixture parses")
}

//! Curves and oracles shared by the integration tests.
#![allow(dead_code)]

use infbranch_core::{parse_polynomial, BivariatePolynomial, Complex64, InfinityBranch};

pub const EXAMPLE_F: &str = "y^5 - 4*y^4*x + 4*y^3*x^2 + 2*y^2*x - y^2*x^2 + 2*y*x^2 + 2*y*x^3 + x + x^2";
pub const PAIR_F: &str = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3";
pub const PAIR_G: &str = "y^3*x - y^4 + y^2*x - y^3 - x^3 + x^2*y + 2";
pub const ALGO_G: &str = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y - 3*x^2 - x*y + 2*x - 3*y + 1";
pub const QUARTIC: &str = "y^4 - 2*x*y^2 + x^2 - y";
pub const PARABOLA: &str = "y^2 - x";

pub fn poly(text: &str) -> BivariatePolynomial {
    parse_polynomial(text).unwrap()
}

/// Smallest achievable maximum distance over all bijections between two
/// point lists, or `None` when the lengths differ.
pub fn bottleneck_matching(a: &[Complex64], b: &[Complex64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    fn go(a: &[Complex64], b: &[Complex64], used: &mut Vec<bool>, i: usize, worst: f64, best: &mut f64) {
        if worst >= *best {
            return;
        }
        if i == a.len() {
            *best = worst;
            return;
        }
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                go(a, b, used, i + 1, worst.max((a[i] - b[j]).norm()), best);
                used[j] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    go(a, b, &mut vec![false; b.len()], 0, 0.0, &mut best);
    Some(best)
}

/// Every leaf of every branch evaluated at `z`.
pub fn leaf_values(branches: &[InfinityBranch], z: Complex64) -> Vec<Complex64> {
    branches
        .iter()
        .flat_map(|b| b.leaves().map(move |l| l.evaluate(z).unwrap()))
        .collect()
}

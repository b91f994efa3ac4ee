//! Infinity branches of implicit plane algebraic curves.
//!
//! A curve `f(x, y) = 0` is expanded at each of its points at infinity with
//! the Newton–Puiseux method. Every conjugacy class of local solutions gives
//! an infinity branch `r(z)`; two curves have the same asymptotic behavior
//! when every branch of one converges to a branch of the other, which is
//! decided from the terms of non-negative exponent.
//!
//! ```
//! use infbranch_core::{parse_polynomial, same_asymptotic_behavior, CompareConfig, Verdict};
//!
//! let f = parse_polynomial("2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3").unwrap();
//! let g = parse_polynomial("2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y - 3*x^2 - x*y + 2*x - 3*y + 1").unwrap();
//! let report = same_asymptotic_behavior(&f, &g, &CompareConfig::default()).unwrap();
//! assert_eq!(report.verdict, Verdict::Same);
//! ```

pub mod algebra;
pub mod branches;
pub mod compare;
pub mod error;
pub mod json;
pub mod puiseux;

pub use algebra::{
    find_roots, parse_polynomial, resolve_fiber, square_free_part, BivariatePolynomial,
    ChartPolynomial, ComplexChartPolynomial, HomogeneousPolynomial, Rational, Root,
    RootFinderConfig, UnivariateComplexPolynomial,
};
pub use branches::{
    branch_degree, infinity_branches, infinity_points, nonnegative_part, prepare_pair,
    sample_leaf, BranchOptions, InfinityBranch, InfinityPoint, InfinityPoints, Leaf, PreparedPair,
};
pub use compare::{
    approach_profile, branches_convergent, hausdorff_estimate, leaf_pairing, leaves_convergent,
    same_asymptotic_behavior, BehaviorReport, CompareConfig, ConvergenceWitness, FailureStage,
    Pairing, Verdict,
};
pub use error::{Error, ExpansionError, ParseError, Result, RootError};
pub use puiseux::{
    expand_at_origin, Exponent, ExpansionOptions, NewtonPolygon, PuiseuxSeries,
};
pub use num_complex::Complex64;

mod common;

use common::*;
use infbranch_core::{
    branches_convergent, hausdorff_estimate, infinity_branches, prepare_pair, resolve_fiber,
    same_asymptotic_behavior, BivariatePolynomial, BranchOptions, CompareConfig, Complex64, Error,
    Exponent, InfinityBranch, Rational, RootFinderConfig,
};
use num_traits::ToPrimitive;
use proptest::prelude::*;

/// Curves of total degree 2..=4 with small integer coefficients.
fn curve() -> impl Strategy<Value = BivariatePolynomial> {
    (2u32..=4, prop::collection::vec(-3i64..=3, 15)).prop_filter_map("degree too low", |(d, coeffs)| {
        let mut terms = Vec::new();
        let mut k = 0;
        for total in 0..=d {
            for j in 0..=total {
                terms.push(((total - j, j), coeffs[k % coeffs.len()]));
                k += 1;
            }
        }
        // keep the top-degree form non-trivial
        terms.push(((0, d), 1));
        let f = BivariatePolynomial::from_int_terms(&terms);
        (f.total_degree() == Some(d)).then_some(f)
    })
}

fn prepared(f: &BivariatePolynomial) -> BivariatePolynomial {
    prepare_pair(f, None).unwrap().first
}

fn plus_constant(f: &BivariatePolynomial, k: i64) -> BivariatePolynomial {
    f + &BivariatePolynomial::constant(Rational::from_integer(k.into()))
}

/// Branches of a square-free curve, or `None` when the expansion gives up.
fn branches_of(f: &BivariatePolynomial) -> Option<Vec<InfinityBranch>> {
    let f = infbranch_core::square_free_part(f).ok()?;
    match infinity_branches(&f, &BranchOptions::new(Exponent::from_integer(-3), RootFinderConfig::default())) {
        Ok(b) => Some(b),
        Err(Error::Expansion(_) | Error::Root(_)) => None,
        Err(e) => panic!("{e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shear_preparation_is_idempotent(f in curve()) {
        let once = prepare_pair(&f, None).unwrap();
        let twice = prepare_pair(&once.first, None).unwrap();
        prop_assert_eq!(twice.lambda, 0);
        prop_assert_eq!(twice.first, once.first);
    }

    #[test]
    fn leaves_match_fiber_roots(f in curve()) {
        let f = prepared(&f);
        let f = infbranch_core::square_free_part(&f).unwrap();
        let Some(all) = branches_of(&f) else { return Ok(()) };
        let z = Complex64::new(1000.0, 0.0);
        let fiber = resolve_fiber(&f, z, &RootFinderConfig::default()).unwrap();
        let leaves = leaf_values(&all, z);
        let err = bottleneck_matching(&fiber, &leaves);
        prop_assert!(err.is_some(), "{} roots, {} leaves for {}", fiber.len(), leaves.len(), f);
        let scale = 1.0 + leaves.iter().map(|y| y.norm()).fold(0.0, f64::max);
        prop_assert!(err.unwrap() <= 1e-4 * scale, "error {:e} for {}", err.unwrap(), f);
    }

    #[test]
    fn leaves_nearly_solve_the_curve(f in curve()) {
        let f = prepared(&f);
        let Some(all) = branches_of(&f) else { return Ok(()) };
        let z = Complex64::new(1e3, 0.0);
        for b in &all {
            for leaf in b.leaves() {
                let y = leaf.evaluate(z).unwrap();
                // size of the individual terms of f at (z, y)
                let scale: f64 = f
                    .terms()
                    .map(|(&(i, j), a)| a.to_f64().unwrap().abs() * z.norm().powi(i as i32) * y.norm().powi(j as i32))
                    .sum();
                prop_assert!(f.eval(z, y).norm() <= 1e-6 * scale, "{} at leaf {}", f, leaf.index());
            }
        }
    }

    #[test]
    fn linear_coefficient_is_the_point(f in curve()) {
        let f = prepared(&f);
        let Some(all) = branches_of(&f) else { return Ok(()) };
        for b in &all {
            let a1 = b.series().coefficient(Exponent::from_integer(1));
            prop_assert!((a1 - b.point().m).norm() <= 1e-12 * (1.0 + a1.norm()));
            prop_assert!(b.r_terms().iter().all(|(e, _)| *e <= Exponent::from_integer(1)));
        }
    }

    #[test]
    fn convergence_is_symmetric(f in curve(), k in -3i64..=3, g in curve()) {
        let f = prepared(&f);
        for other in [plus_constant(&f, k), prepared(&g)] {
            let (Some(a), Some(b)) = (branches_of(&f), branches_of(&other)) else { continue };
            for x in &a {
                for y in &b {
                    let forward = branches_convergent(x, y, 1e-6, 1e-8).unwrap().is_some();
                    let backward = branches_convergent(y, x, 1e-6, 1e-8).unwrap().is_some();
                    prop_assert_eq!(forward, backward);
                }
            }
        }
    }

    #[test]
    fn convergence_is_transitive(f in curve(), k1 in -3i64..=3, k2 in -3i64..=3) {
        let f = prepared(&f);
        let (Some(a), Some(b1), Some(b2)) = (
            branches_of(&f),
            branches_of(&plus_constant(&f, k1)),
            branches_of(&plus_constant(&f, k2)),
        ) else { return Ok(()) };
        let conv = |x: &InfinityBranch, y: &InfinityBranch| branches_convergent(x, y, 1e-6, 1e-8).unwrap().is_some();
        for x in &a {
            for y1 in b1.iter().filter(|y| conv(x, y)) {
                for y2 in b2.iter().filter(|y| conv(x, y)) {
                    prop_assert!(conv(y1, y2));
                }
            }
        }
    }

    #[test]
    fn verdict_survives_shared_shear(f in curve(), k in -3i64..=3, lambda in 1i64..=2) {
        let cfg = CompareConfig::default();
        let g = plus_constant(&f, k);
        let shift = Rational::from_integer(lambda.into());
        let (Ok(base), Ok(sheared)) = (
            same_asymptotic_behavior(&f, &g, &cfg),
            same_asymptotic_behavior(&f.apply_shear(&shift), &g.apply_shear(&shift), &cfg),
        ) else { return Ok(()) };
        prop_assert_eq!(base.verdict, sheared.verdict, "{} and {}", f, g);
    }

    #[test]
    fn scaling_keeps_the_zero_set(f in curve(), k in 2i64..=5) {
        let cfg = CompareConfig::default();
        let scaled = f.scale(&Rational::from_integer(k.into()));
        let Ok(report) = same_asymptotic_behavior(&f, &scaled, &cfg) else { return Ok(()) };
        prop_assert_eq!(report.verdict, infbranch_core::Verdict::Same);
    }

    #[test]
    fn hausdorff_is_exactly_symmetric(f in curve(), g in curve()) {
        let cfg = CompareConfig::default();
        let a = hausdorff_estimate(&f, &g, 5.0, 16, &cfg);
        let b = hausdorff_estimate(&g, &f, 5.0, 16, &cfg);
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.to_bits(), b.to_bits()),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }
}

#[test]
fn hausdorff_of_identical_curves_is_zero() {
    let f = poly(ALGO_G);
    assert_eq!(hausdorff_estimate(&f, &f, 10.0, 64, &CompareConfig::default()).unwrap(), 0.0);
}

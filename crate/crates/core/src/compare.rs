//! Convergence of leaves and branches, and the asymptotic-behavior test.
//!
//! Two branches converge when their series agree, up to a conjugation of one
//! of them, in every term of non-negative exponent. Two curves have the same
//! asymptotic behavior when they share the same infinity points and every
//! branch of each converges to some branch of the other.

use num_complex::Complex64;
use num_traits::One;

use crate::algebra::{resolve_fiber, BivariatePolynomial, RootFinderConfig};
use crate::branches::{
    branch_degree, degree_of, infinity_branches, infinity_points, nonnegative_part,
    normalize_input, prepare_pair, series_nonnegative_part, BranchOptions, InfinityBranch,
    InfinityPoint,
};
use crate::error::{Error, Result};
use crate::puiseux::{root_of_unity, Exponent, PuiseuxSeries};

#[derive(Clone, Debug, PartialEq)]
pub struct CompareConfig {
    /// Root-finding tolerance.
    pub tol: f64,
    /// Relative tolerance on coefficients of non-negative exponent.
    pub compare_tol: f64,
    /// Relative tolerance when matching infinity points.
    pub point_tol: f64,
    /// Terms of `r(z)` with exponent `>= min_exponent` are computed.
    pub min_exponent: Exponent,
}

impl Default for CompareConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            compare_tol: 1e-6,
            point_tol: 1e-8,
            min_exponent: Exponent::from_integer(-2),
        }
    }
}

impl CompareConfig {
    pub fn root_config(&self) -> RootFinderConfig {
        RootFinderConfig {
            tol: self.tol,
            ..RootFinderConfig::default()
        }
    }

    pub fn branch_options(&self) -> BranchOptions {
        BranchOptions::new(self.min_exponent, self.root_config())
    }
}

/// Why two branches converge: `ā_l = a_l · c^(n_l)` for every matched term.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceWitness {
    /// The `n`-th root of unity `c`.
    pub conjugation_root: Complex64,
    pub matched_exponents: Vec<Exponent>,
    pub max_coefficient_deviation: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Same,
    Different,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureStage {
    Points,
    BranchUnmatchedForward,
    BranchUnmatchedBackward,
}

impl FailureStage {
    pub fn as_str(&self) -> &'static str {
        match self {
            FailureStage::Points => "points",
            FailureStage::BranchUnmatchedForward => "branch_unmatched_forward",
            FailureStage::BranchUnmatchedBackward => "branch_unmatched_backward",
        }
    }
}

/// A branch of the first curve matched with a branch of the second.
#[derive(Clone, Debug, PartialEq)]
pub struct Pairing {
    pub point: Complex64,
    /// Index into [`BehaviorReport::branches_a`].
    pub branch_a: usize,
    /// Index into [`BehaviorReport::branches_b`].
    pub branch_b: usize,
    pub witness: ConvergenceWitness,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BehaviorReport {
    pub verdict: Verdict,
    pub failure_stage: Option<FailureStage>,
    /// Shear applied to both curves before expansion.
    pub lambda: u32,
    pub points_a: Vec<InfinityPoint>,
    pub points_b: Vec<InfinityPoint>,
    /// Empty when the point sets differ.
    pub branches_a: Vec<InfinityBranch>,
    pub branches_b: Vec<InfinityBranch>,
    pub pairing: Vec<Pairing>,
    /// Branches of the first curve with no convergent partner.
    pub unmatched_a: Vec<usize>,
    /// Branches of the second curve with no convergent partner.
    pub unmatched_b: Vec<usize>,
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm())
}

/// Whether two leaves (series at infinity) share every term of non-negative
/// exponent within the relative tolerance `tol`.
pub fn leaves_convergent(r: &PuiseuxSeries, r_bar: &PuiseuxSeries, tol: f64) -> Result<bool> {
    let a = series_nonnegative_part(r)?;
    let b = series_nonnegative_part(r_bar)?;
    Ok(a.len() == b.len()
        && a
            .iter()
            .zip(&b)
            .all(|((ea, ca), (eb, cb))| ea == eb && close(*ca, *cb, tol)))
}

/// A witness that `b` converges to `b_bar`, or `None`. Points are compared
/// with relative tolerance `point_tol`, coefficients with `tol`.
pub fn branches_convergent(
    b: &InfinityBranch,
    b_bar: &InfinityBranch,
    tol: f64,
    point_tol: f64,
) -> Result<Option<ConvergenceWitness>> {
    let a = nonnegative_part(b)?;
    let a_bar = nonnegative_part(b_bar)?;
    if !close(b.point().m, b_bar.point().m, point_tol) {
        return Ok(None);
    }
    let n = degree_of(&a);
    if n != degree_of(&a_bar) || a.len() != a_bar.len() || a.iter().zip(&a_bar).any(|(x, y)| x.0 != y.0) {
        return Ok(None);
    }
    let powers: Vec<i64> = a
        .iter()
        .map(|(e, _)| {
            let k = (Exponent::one() - e) * Exponent::from_integer(n.into());
            debug_assert!(k.is_integer());
            k.to_integer()
        })
        .collect();
    for j in 0..n {
        let c = root_of_unity(j.into(), n.into());
        let mut worst = 0.0f64;
        let ok = a.iter().zip(&a_bar).zip(&powers).all(|(((_, x), (_, y)), &k)| {
            let predicted = x * root_of_unity(k * i64::from(j), n.into());
            let dev = (y - predicted).norm();
            worst = worst.max(dev);
            dev <= tol * (1.0 + x.norm())
        });
        if ok {
            return Ok(Some(ConvergenceWitness {
                conjugation_root: c,
                matched_exponents: a.iter().map(|(e, _)| *e).collect(),
                max_coefficient_deviation: worst,
            }));
        }
    }
    Ok(None)
}

/// All pairs of leaf indices `(i, j)` such that leaf `i` of `b` converges to
/// leaf `j` of `b_bar`.
pub fn leaf_pairing(b: &InfinityBranch, b_bar: &InfinityBranch, tol: f64) -> Result<Vec<(u32, u32)>> {
    let left: Vec<_> = b.leaves().map(|l| l.series()).collect();
    let right: Vec<_> = b_bar.leaves().map(|l| l.series()).collect();
    let mut out = Vec::new();
    for (i, r) in left.iter().enumerate() {
        for (j, r_bar) in right.iter().enumerate() {
            if leaves_convergent(r, r_bar, tol)? {
                out.push((i as u32, j as u32));
            }
        }
    }
    Ok(out)
}

/// For each point of `from`, the index of its partner in `to`.
fn match_points(from: &[InfinityPoint], to: &[InfinityPoint], tol: f64) -> Result<Vec<Option<usize>>> {
    from.iter()
        .map(|p| {
            let hits: Vec<usize> = (0..to.len()).filter(|&k| close(p.m, to[k].m, tol)).collect();
            match hits.len() {
                0 => Ok(None),
                1 => Ok(Some(hits[0])),
                _ => Err(Error::AmbiguousPoints(format!("{}", p.m))),
            }
        })
        .collect()
}

/// Decides whether `f` and `f_bar` have the same asymptotic behavior.
pub fn same_asymptotic_behavior(
    f: &BivariatePolynomial,
    f_bar: &BivariatePolynomial,
    config: &CompareConfig,
) -> Result<BehaviorReport> {
    let f = normalize_input(f)?;
    let f_bar = normalize_input(f_bar)?;
    let prepared = prepare_pair(&f, Some(&f_bar))?;
    let (f, f_bar) = (prepared.first, prepared.second.expect("second curve"));
    let roots = config.root_config();
    let points_a = infinity_points(&f, &roots)?.points;
    let points_b = infinity_points(&f_bar, &roots)?.points;

    let forward = match_points(&points_a, &points_b, config.point_tol)?;
    let backward = match_points(&points_b, &points_a, config.point_tol)?;
    let mut report = BehaviorReport {
        verdict: Verdict::Different,
        failure_stage: Some(FailureStage::Points),
        lambda: prepared.lambda,
        points_a,
        points_b,
        branches_a: Vec::new(),
        branches_b: Vec::new(),
        pairing: Vec::new(),
        unmatched_a: Vec::new(),
        unmatched_b: Vec::new(),
    };
    if forward.iter().chain(&backward).any(Option::is_none) {
        return Ok(report);
    }

    let opts = config.branch_options();
    let branches_a = infinity_branches(&f, &opts)?;
    let branches_b = infinity_branches(&f_bar, &opts)?;
    let tol = config.compare_tol;
    let pt = config.point_tol;

    let mut matched_b = vec![false; branches_b.len()];
    for (i, b) in branches_a.iter().enumerate() {
        let mut found = false;
        for (j, b_bar) in branches_b.iter().enumerate() {
            if let Some(witness) = branches_convergent(b, b_bar, tol, pt)? {
                report.pairing.push(Pairing {
                    point: b.point().m,
                    branch_a: i,
                    branch_b: j,
                    witness,
                });
                matched_b[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            report.unmatched_a.push(i);
        }
    }
    for (j, b_bar) in branches_b.iter().enumerate() {
        if matched_b[j] {
            continue;
        }
        let mut found = false;
        for b in &branches_a {
            if branches_convergent(b_bar, b, tol, pt)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            report.unmatched_b.push(j);
        }
    }

    report.failure_stage = if !report.unmatched_a.is_empty() {
        Some(FailureStage::BranchUnmatchedForward)
    } else if !report.unmatched_b.is_empty() {
        Some(FailureStage::BranchUnmatchedBackward)
    } else {
        None
    };
    if report.failure_stage.is_none() {
        report.verdict = Verdict::Same;
    }
    report.branches_a = branches_a;
    report.branches_b = branches_b;
    Ok(report)
}

/// Distance from leaf 0 of `b` at `z = ρ` to the nearest point of `f_bar`
/// over the same `x`, for each radius. `b` and `f_bar` must live in the same
/// coordinates.
pub fn approach_profile(
    b: &InfinityBranch,
    f_bar: &BivariatePolynomial,
    radii: &[f64],
    config: &CompareConfig,
) -> Result<Vec<(f64, f64)>> {
    branch_degree(b)?;
    let roots = config.root_config();
    radii
        .iter()
        .map(|&rho| {
            if !(rho > 0.0) {
                return Err(Error::InvalidArgument(format!("radius must be positive, got {rho}")));
            }
            let z = Complex64::new(rho, 0.0);
            let y = b.series().evaluate(z, 0)?;
            let fiber = resolve_fiber(f_bar, z, &roots)?;
            let d = fiber
                .iter()
                .map(|q| (y - q).norm())
                .fold(f64::INFINITY, f64::min);
            if !d.is_finite() {
                return Err(Error::EmptySample(format!("fiber of the second curve at x = {rho}")));
            }
            Ok((rho, d))
        })
        .collect()
}

/// Points of the curve over an evenly spaced real `x` grid on `[-R, R]`,
/// keeping `|y| <= 10R`, as vectors in `R^4`.
fn curve_sample(f: &BivariatePolynomial, window: f64, grid: usize, roots: &RootFinderConfig) -> Result<Vec<[f64; 4]>> {
    let mut out = Vec::new();
    for k in 0..grid {
        let x = -window + 2.0 * window * k as f64 / (grid - 1) as f64;
        let fiber = match resolve_fiber(f, Complex64::new(x, 0.0), roots) {
            Ok(fiber) => fiber,
            // the curve contains the vertical line through x; nothing to sample
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        };
        out.extend(
            fiber
                .into_iter()
                .filter(|y| y.norm() <= 10.0 * window)
                .map(|y| [x, 0.0, y.re, y.im]),
        );
    }
    Ok(out)
}

fn directed_hausdorff(from: &[[f64; 4]], to: &[[f64; 4]]) -> f64 {
    from.iter()
        .map(|p| {
            to.iter()
                .map(|q| p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
        .sqrt()
}

/// Discrete symmetric Hausdorff distance between the parts of two curves
/// over `x ∈ [-R, R]`, sampled on `grid` points.
pub fn hausdorff_estimate(
    f: &BivariatePolynomial,
    f_bar: &BivariatePolynomial,
    window: f64,
    grid: usize,
    config: &CompareConfig,
) -> Result<f64> {
    if !(window > 0.0) {
        return Err(Error::InvalidArgument(format!("window must be positive, got {window}")));
    }
    if grid < 8 {
        return Err(Error::InvalidArgument(format!("grid must have at least 8 points, got {grid}")));
    }
    let roots = config.root_config();
    let a = curve_sample(f, window, grid, &roots)?;
    if a.is_empty() {
        return Err(Error::EmptySample("a".into()));
    }
    let b = curve_sample(f_bar, window, grid, &roots)?;
    if b.is_empty() {
        return Err(Error::EmptySample("b".into()));
    }
    Ok(directed_hausdorff(&a, &b).max(directed_hausdorff(&b, &a)))
}

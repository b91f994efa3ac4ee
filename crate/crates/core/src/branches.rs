//! Infinity points, coordinate preparation, and infinity branches.
//!
//! For an infinity point `(1:m:0)` the chart polynomial `g(y, z) = F(1, y, z)`
//! is expanded at `(m, 0)`; each conjugacy class of local solutions `φ(z)`
//! yields a branch `r(z) = z·φ(1/z)` whose leaves are the conjugates of `r`.

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    find_roots, rat_to_f64, square_free_decomposition, square_free_part, BivariatePolynomial,
    RatPoly, Rational, RootFinderConfig, UnivariateComplexPolynomial,
};
use crate::error::{Error, Result};
use crate::puiseux::{expand_at_point, Exponent, ExpansionOptions, PuiseuxSeries};

/// A point `(1:m:0)` of the projective closure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InfinityPoint {
    pub m: Complex64,
    /// Multiplicity of `m` as a root of `leading_form(f)(1, m)`.
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfinityPoints {
    pub points: Vec<InfinityPoint>,
    /// Whether `(0:1:0)` lies on the projective closure.
    pub has_vertical_point: bool,
}

/// Coefficients of `leading_form(f)(1, m)` in ascending powers of `m`.
fn dehomogenized_leading_form(f: &BivariatePolynomial) -> Result<(RatPoly, bool)> {
    let lf = f.leading_form()?;
    let d = f.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (&(_, j), c) in lf.terms() {
        coeffs[j as usize] += c;
    }
    let vertical = coeffs[d].is_zero();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    Ok((coeffs, vertical))
}

/// Roots of the leading form with multiplicities. Multiplicities come from
/// an exact square-free decomposition; linear factors give exact roots.
pub fn infinity_points(f: &BivariatePolynomial, config: &RootFinderConfig) -> Result<InfinityPoints> {
    if f.is_constant() {
        return Err(Error::Degenerate("constant polynomial has no infinity points".into()));
    }
    let (p, has_vertical_point) = dehomogenized_leading_form(f)?;
    let mut points = Vec::new();
    for (factor, mult) in square_free_decomposition(&p) {
        if factor.len() == 2 {
            let root = -(&factor[0] / &factor[1]);
            points.push(InfinityPoint {
                m: Complex64::new(rat_to_f64(&root), 0.0),
                multiplicity: mult as u32,
            });
            continue;
        }
        let poly = UnivariateComplexPolynomial::new(
            factor.iter().map(|c| Complex64::new(rat_to_f64(c), 0.0)).collect(),
        );
        for root in find_roots(&poly, config)? {
            let mut m = root.value;
            // roots of a real polynomial: clean up rounding in the imaginary part
            if m.im.abs() <= config.tol * (1.0 + m.norm()) {
                m.im = 0.0;
            }
            points.push(InfinityPoint {
                m,
                multiplicity: (mult * root.multiplicity) as u32,
            });
        }
    }
    points.sort_by(|a, b| a.m.re.total_cmp(&b.m.re).then(a.m.im.total_cmp(&b.m.im)));
    Ok(InfinityPoints {
        points,
        has_vertical_point,
    })
}

fn vertical_at(f: &BivariatePolynomial, lambda: u32) -> Result<bool> {
    // coefficient of y^d in leading_form(x + λy, y) is leading_form(λ, 1)
    let lf = f.leading_form()?;
    let lam = Rational::from_integer(lambda.into());
    Ok(lf.eval_rational(&lam, &Rational::one()).is_zero())
}

/// Curves after a shared shear `x ↦ x + λy` that moves `(0:1:0)` off both.
#[derive(Clone, Debug, PartialEq)]
pub struct PreparedPair {
    pub first: BivariatePolynomial,
    pub second: Option<BivariatePolynomial>,
    pub lambda: u32,
}

/// Smallest `λ ≥ 0` such that neither curve passes through `(0:1:0)` after
/// `apply_shear(·, λ)`; the same `λ` is applied to both.
pub fn prepare_pair(f: &BivariatePolynomial, other: Option<&BivariatePolynomial>) -> Result<PreparedPair> {
    let curves: Vec<&BivariatePolynomial> = std::iter::once(f).chain(other).collect();
    if curves.iter().any(|c| c.is_constant()) {
        return Err(Error::Degenerate("cannot prepare a constant polynomial".into()));
    }
    let mut lambda = 0u32;
    'search: loop {
        for c in &curves {
            if vertical_at(c, lambda)? {
                lambda += 1;
                continue 'search;
            }
        }
        break;
    }
    let shear = Rational::from_integer(lambda.into());
    Ok(PreparedPair {
        first: f.apply_shear(&shear),
        second: other.map(|g| g.apply_shear(&shear)),
        lambda,
    })
}

/// Square-free part of an input curve; logs a warning when factors were
/// removed.
pub fn normalize_input(f: &BivariatePolynomial) -> Result<BivariatePolynomial> {
    let reduced = square_free_part(f)?;
    if reduced.total_degree() != f.total_degree() {
        log::warn!("input polynomial has repeated factors; using its square-free part {reduced}");
    }
    Ok(reduced)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchOptions {
    /// Terms of `r(z)` with exponent `>= min_exponent` are computed.
    pub min_exponent: Exponent,
    pub expansion: ExpansionOptions,
}

impl Default for BranchOptions {
    fn default() -> Self {
        Self::new(Exponent::from_integer(-2), RootFinderConfig::default())
    }
}

impl BranchOptions {
    pub fn new(min_exponent: Exponent, roots: RootFinderConfig) -> Self {
        Self {
            min_exponent,
            expansion: ExpansionOptions {
                order: Exponent::one() - min_exponent,
                roots,
                ..ExpansionOptions::default()
            },
        }
    }
}

/// One infinity branch: a representative leaf `r(z)` together with its
/// ramification index. The remaining leaves are conjugates of `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct InfinityBranch {
    point: InfinityPoint,
    local: PuiseuxSeries,
    series: PuiseuxSeries,
}

impl InfinityBranch {
    /// Builds a branch from a local solution `φ(z) - m` (positive order).
    pub fn from_local(point: InfinityPoint, local: PuiseuxSeries) -> Self {
        let local = local.canonical_representative();
        let series = local.at_infinity(point.m);
        Self {
            point,
            local,
            series,
        }
    }

    /// Rebuilds the branch from any one of its leaves `r_j(z)`.
    pub fn from_leaf(point: InfinityPoint, leaf: &PuiseuxSeries) -> Result<Self> {
        let one = Exponent::one();
        let terms = leaf
            .terms()
            .iter()
            .filter(|(e, _)| *e != one)
            .map(|&(e, a)| (one - e, a))
            .collect();
        let local = PuiseuxSeries::new(terms, leaf.ramification_index(), one - leaf.watermark())?;
        Ok(Self::from_local(point, local))
    }

    pub fn point(&self) -> &InfinityPoint {
        &self.point
    }

    pub fn ramification_index(&self) -> u32 {
        self.series.ramification_index()
    }

    /// `r(z)` for leaf 0, ascending exponents.
    pub fn series(&self) -> &PuiseuxSeries {
        &self.series
    }

    /// The local solution `φ(z) - m` of the chart equation.
    pub fn local_series(&self) -> &PuiseuxSeries {
        &self.local
    }

    /// Terms of `r(z)` in descending exponent order.
    pub fn r_terms(&self) -> Vec<(Exponent, Complex64)> {
        self.series.terms().iter().rev().copied().collect()
    }

    pub fn watermark(&self) -> Exponent {
        self.series.watermark()
    }

    pub fn degree(&self) -> Result<u32> {
        branch_degree(self)
    }

    pub fn leaf(&self, index: u32) -> Result<Leaf<'_>> {
        Leaf::new(self, index)
    }

    pub fn leaves(&self) -> impl Iterator<Item = Leaf<'_>> {
        (0..self.ramification_index()).map(move |index| Leaf { branch: self, index })
    }
}

/// Leaf `index` of a branch: the conjugate `r_index` of its series.
#[derive(Clone, Copy, Debug)]
pub struct Leaf<'a> {
    branch: &'a InfinityBranch,
    index: u32,
}

impl<'a> Leaf<'a> {
    pub fn new(branch: &'a InfinityBranch, index: u32) -> Result<Self> {
        if index >= branch.ramification_index() {
            return Err(Error::InvalidArgument(format!(
                "leaf {index} out of range for a branch with {} leaves",
                branch.ramification_index()
            )));
        }
        Ok(Self { branch, index })
    }

    pub fn branch(&self) -> &'a InfinityBranch {
        self.branch
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// The leaf's own series `r_index(z)`.
    pub fn series(&self) -> PuiseuxSeries {
        self.branch.series.conjugate(self.index)
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        self.branch.series.evaluate(z, self.index)
    }
}

/// All infinity branches of `f`, grouped by infinity point in the order of
/// [`infinity_points`]. `(0:1:0)` must not lie on the curve; see
/// [`prepare_pair`].
pub fn infinity_branches(f: &BivariatePolynomial, opts: &BranchOptions) -> Result<Vec<InfinityBranch>> {
    let points = infinity_points(f, &opts.expansion.roots)?;
    if points.has_vertical_point {
        return Err(Error::InvalidArgument(
            "(0:1:0) lies on the curve; apply prepare_pair first".into(),
        ));
    }
    let chart = f.homogenize()?.restrict_chart();
    let mut out = Vec::new();
    for point in points.points {
        for local in expand_at_point(&chart, point.m, &opts.expansion)? {
            out.push(InfinityBranch::from_local(point, local));
        }
    }
    Ok(out)
}

fn check_truncation(series: &PuiseuxSeries) -> Result<()> {
    if series.watermark().is_positive() {
        return Err(Error::InsufficientTruncation {
            watermark: crate::puiseux::format_exponent(&series.watermark()),
        });
    }
    Ok(())
}

/// Terms of non-negative exponent of a series at infinity, descending.
pub(crate) fn series_nonnegative_part(series: &PuiseuxSeries) -> Result<Vec<(Exponent, Complex64)>> {
    check_truncation(series)?;
    Ok(series
        .terms()
        .iter()
        .rev()
        .filter(|(e, _)| !e.is_negative())
        .copied()
        .collect())
}

/// Terms of `r(z)` with non-negative exponent, descending.
pub fn nonnegative_part(b: &InfinityBranch) -> Result<Vec<(Exponent, Complex64)>> {
    series_nonnegative_part(&b.series)
}

/// Reduced common denominator of the non-negative exponents of `r(z)`.
pub fn branch_degree(b: &InfinityBranch) -> Result<u32> {
    Ok(degree_of(&nonnegative_part(b)?))
}

pub(crate) fn degree_of(terms: &[(Exponent, Complex64)]) -> u32 {
    terms
        .iter()
        .fold(1i64, |acc, (e, _)| acc.lcm(e.denom())) as u32
}

/// Points `(z, r_leaf(z))` with `z = radius · exp(i·angle)`.
pub fn sample_leaf(leaf: &Leaf<'_>, radii: &[f64], angle: f64) -> Result<Vec<(Complex64, Complex64)>> {
    radii
        .iter()
        .map(|&radius| {
            if !(radius > 0.0) {
                return Err(Error::InvalidArgument(format!("sampling radius must be positive, got {radius}")));
            }
            let z = Complex64::from_polar(radius, angle);
            Ok((z, leaf.evaluate(z)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn p(s: &str) -> BivariatePolynomial {
        parse_polynomial(s).unwrap()
    }

    fn q(n: i64, d: i64) -> Exponent {
        Exponent::new(n, d)
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const SECTION5_F: &str = "2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3";

    #[test]
    fn points_of_section5_curve() {
        let pts = infinity_points(&p(SECTION5_F), &RootFinderConfig::default()).unwrap();
        assert!(!pts.has_vertical_point);
        assert_eq!(
            pts.points,
            vec![
                InfinityPoint { m: c(0.0, 0.0), multiplicity: 3 },
                InfinityPoint { m: c(2.0, 0.0), multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn points_of_line_and_parabola() {
        let cfg = RootFinderConfig::default();
        let pts = infinity_points(&p("y - x"), &cfg).unwrap();
        assert_eq!(pts.points, vec![InfinityPoint { m: c(1.0, 0.0), multiplicity: 1 }]);
        let pts = infinity_points(&p("x^2 - y"), &cfg).unwrap();
        assert!(pts.points.is_empty());
        assert!(pts.has_vertical_point);
        assert!(infinity_points(&p("5"), &cfg).is_err());
    }

    #[test]
    fn irrational_points() {
        let pts = infinity_points(&p("y^2 - 2*x^2 + x"), &RootFinderConfig::default()).unwrap();
        assert_eq!(pts.points.len(), 2);
        assert!((pts.points[0].m - c(-2f64.sqrt(), 0.0)).norm() < 1e-14);
        assert!((pts.points[1].m - c(2f64.sqrt(), 0.0)).norm() < 1e-14);
        let pts = infinity_points(&p("y^2 + x^2 - 1"), &RootFinderConfig::default()).unwrap();
        assert!((pts.points[0].m - c(0.0, -1.0)).norm() < 1e-14);
    }

    #[test]
    fn shear_preparation() {
        let f = p("y^2 - x");
        let prepared = prepare_pair(&f, None).unwrap();
        assert_eq!(prepared.lambda, 0);
        assert_eq!(prepared.first, f);

        let prepared = prepare_pair(&p("x^2 - y"), None).unwrap();
        assert_eq!(prepared.lambda, 1);
        assert_eq!(prepared.first, p("(x + y)^2 - y"));
        // idempotent
        assert_eq!(prepare_pair(&prepared.first, None).unwrap().lambda, 0);

        let g = p("2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y - 3*x^2 - x*y + 2*x - 3*y + 1");
        assert_eq!(prepare_pair(&p(SECTION5_F), Some(&g)).unwrap().lambda, 0);

        // x*(x - y): vertical at λ=0, and (λ - 1) vanishes at λ = 1
        let prepared = prepare_pair(&p("x*(x - y)"), Some(&p("y^2 - x"))).unwrap();
        assert_eq!(prepared.lambda, 2);
    }

    #[test]
    fn branches_of_parabola() {
        let branches = infinity_branches(&p("y^2 - x"), &BranchOptions::default()).unwrap();
        assert_eq!(branches.len(), 1);
        let b = &branches[0];
        assert_eq!(b.ramification_index(), 2);
        assert_eq!(b.r_terms().len(), 1);
        assert_eq!(b.r_terms()[0].0, q(1, 2));
        assert!((b.r_terms()[0].1 - c(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(branch_degree(b).unwrap(), 2);
        assert_eq!(b.watermark(), q(-2, 1));
    }

    #[test]
    fn line_is_its_own_branch() {
        let branches = infinity_branches(&p("y - 3*x - 1"), &BranchOptions::default()).unwrap();
        assert_eq!(branches.len(), 1);
        let b = &branches[0];
        assert_eq!(b.ramification_index(), 1);
        let terms = b.r_terms();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0], (q(1, 1), c(3.0, 0.0)));
        assert!((terms[1].1 - c(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(terms[1].0, q(0, 1));
        assert_eq!(branch_degree(b).unwrap(), 1);

        let samples = sample_leaf(&b.leaf(0).unwrap(), &[1.0, 2.0], 0.0).unwrap();
        assert!((samples[0].1 - c(4.0, 0.0)).norm() < 1e-12);
        assert!((samples[1].1 - c(7.0, 0.0)).norm() < 1e-12);
        assert!(sample_leaf(&b.leaf(0).unwrap(), &[0.0], 0.0).is_err());
        assert!(b.leaf(1).is_err());
    }

    #[test]
    fn vertical_point_is_rejected() {
        assert!(infinity_branches(&p("x^2 - y"), &BranchOptions::default()).is_err());
    }

    #[test]
    fn parabola_leaves() {
        let branches = infinity_branches(&p("y^2 - x"), &BranchOptions::default()).unwrap();
        let b = &branches[0];
        let s0 = sample_leaf(&b.leaf(0).unwrap(), &[4.0], 0.0).unwrap();
        assert!((s0[0].1 - c(2.0, 0.0)).norm() < 1e-12);
        let s1 = sample_leaf(&b.leaf(1).unwrap(), &[4.0], 0.0).unwrap();
        assert!((s1[0].1 - c(-2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn insufficient_truncation() {
        let opts = BranchOptions::new(q(1, 2), RootFinderConfig::default());
        let branches = infinity_branches(&p("y^2 - x"), &opts).unwrap();
        assert!(matches!(nonnegative_part(&branches[0]), Err(Error::InsufficientTruncation { .. })));
        assert!(branch_degree(&branches[0]).is_err());
    }

    #[test]
    fn square_free_normalization() {
        assert_eq!(normalize_input(&p("(y - x)^2")).unwrap(), p("y - x"));
    }
}

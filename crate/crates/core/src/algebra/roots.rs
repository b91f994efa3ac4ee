//! Complex univariate root finding: Aberth–Ehrlich iteration followed by
//! multiplicity clustering and polishing.

use num_complex::Complex64;
use num_traits::Zero;

use super::poly::BivariatePolynomial;
use crate::error::{Error, Result, RootError};

/// Angular offset of the initial guesses on the starting circle. Fixed so
/// that every run is reproducible.
const START_ANGLE: f64 = 0.4;

/// Polynomial with complex coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq)]
pub struct UnivariateComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl UnivariateComplexPolynomial {
    /// Drops exactly-zero leading coefficients.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Expands `lead · Π (z - r)`.
    pub fn from_roots(lead: Complex64, roots: &[Complex64]) -> Self {
        let mut coeffs = vec![lead];
        for r in roots {
            let mut next = vec![Complex64::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i as f64)
                .collect(),
        )
    }

    /// Largest coefficient modulus.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `Σ |c_i| r^i`, the scale of rounding error when evaluating at `|z| = r`.
    fn abs_eval(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Taylor coefficient `p^(k)(z) / k!`.
    fn taylor(&self, z: Complex64, k: usize) -> Complex64 {
        let mut sum = Complex64::zero();
        for (i, c) in self.coeffs.iter().enumerate().skip(k) {
            let mut binom = 1.0;
            for t in 0..k {
                binom = binom * (i - t) as f64 / (t + 1) as f64;
            }
            sum += c * binom * z.powu((i - k) as u32);
        }
        sum
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootFinderConfig {
    /// Relative tolerance used for clustering and acceptance.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for RootFinderConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iterations: 200,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

fn aberth(p: &UnivariateComplexPolynomial, max_iterations: usize) -> Result<Vec<Complex64>, RootError> {
    let n = p.degree().expect("nonzero polynomial");
    let coeffs = p.coefficients();
    let lead = coeffs[n];
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + START_ANGLE;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let dp = p.derivative();
    let mut done = vec![false; n];
    let eps = f64::EPSILON;
    for _ in 0..max_iterations {
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
        for k in 0..n {
            if done[k] {
                continue;
            }
            let pk = p.eval(z[k]);
            if pk.norm() <= 8.0 * n as f64 * eps * p.abs_eval(z[k].norm()) {
                done[k] = true;
                continue;
            }
            let dpk = dp.eval(z[k]);
            if dpk.is_zero() {
                let nudge = Complex64::new(eps.sqrt(), eps.sqrt()) * (1.0 + z[k].norm());
                z[k] += nudge;
                continue;
            }
            let ratio = pk / dpk;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.is_zero() {
                        Complex64::zero()
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[k] -= step;
            if step.norm() <= eps * z[k].norm() {
                done[k] = true;
            }
        }
    }
    if done.iter().all(|&d| d) {
        return Ok(z);
    }
    let residuals: Vec<f64> = z.iter().map(|&r| p.eval(r).norm()).collect();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    Err(RootError::NoConvergence {
        iterations: max_iterations,
        residuals,
        max_residual,
    })
}

struct Cluster {
    members: Vec<Complex64>,
}

impl Cluster {
    fn centroid(&self) -> Complex64 {
        self.members.iter().sum::<Complex64>() / self.members.len() as f64
    }

    fn spread(&self) -> f64 {
        let c = self.centroid();
        self.members.iter().map(|z| (z - c).norm()).fold(0.0, f64::max)
    }
}

/// Ratio of a cluster's spread to the radius within which `k` roots are
/// numerically indistinguishable from one `k`-fold root at tolerance `tol`.
/// Values `<= 1` mean the cluster is accepted as a multiple root.
fn cluster_ratio(p: &UnivariateComplexPolynomial, cluster: &Cluster, tol: f64) -> f64 {
    let k = cluster.members.len();
    let c = cluster.centroid();
    let spread = cluster.spread();
    if spread == 0.0 {
        return 0.0;
    }
    let tk = p.taylor(c, k).norm();
    let scale = tol * p.abs_eval(c.norm()).max(p.norm());
    let allowed = if tk == 0.0 {
        f64::INFINITY
    } else {
        (scale / tk).powf(1.0 / k as f64)
    };
    // a sub-cluster of a larger multiple root may be wider than tol^(1/k),
    // so the hard cap uses the largest possible multiplicity
    let n = p.degree().unwrap_or(1).max(1);
    let cap = tol.powf(1.0 / n as f64) * (1.0 + c.norm());
    spread / allowed.min(cap).max(tol * (1.0 + c.norm()))
}

fn merge(a: &Cluster, b: &Cluster) -> Cluster {
    Cluster {
        members: a.members.iter().chain(&b.members).copied().collect(),
    }
}

fn polish(p: &UnivariateComplexPolynomial, start: Complex64, multiplicity: usize) -> Complex64 {
    let mut q = p.clone();
    for _ in 1..multiplicity {
        q = q.derivative();
    }
    let dq = q.derivative();
    let mut z = start;
    let mut residual = q.eval(z).norm();
    for _ in 0..8 {
        let d = dq.eval(z);
        if d.is_zero() || residual == 0.0 {
            break;
        }
        let next = z - q.eval(z) / d;
        let next_residual = q.eval(next).norm();
        if !(next_residual < residual) {
            break;
        }
        z = next;
        residual = next_residual;
    }
    z
}

/// All roots of `p` with multiplicities. Roots closer than the numerical
/// resolution at tolerance `config.tol` are reported as one multiple root.
pub fn find_roots(p: &UnivariateComplexPolynomial, config: &RootFinderConfig) -> Result<Vec<Root>, RootError> {
    let degree = p.degree().filter(|&d| d >= 1).ok_or(RootError::ConstantPolynomial)?;
    let zero_mult = p.coefficients().iter().take_while(|c| c.is_zero()).count();
    let reduced = UnivariateComplexPolynomial::new(p.coefficients()[zero_mult..].to_vec());
    let mut roots = Vec::new();
    if zero_mult > 0 {
        roots.push(Root {
            value: Complex64::zero(),
            multiplicity: zero_mult,
        });
    }
    match degree - zero_mult {
        0 => {}
        1 => {
            let c = reduced.coefficients();
            roots.push(Root {
                value: -c[0] / c[1],
                multiplicity: 1,
            });
        }
        _ => {
            let approx = aberth(&reduced, config.max_iterations)?;
            let mut clusters: Vec<Cluster> = approx
                .into_iter()
                .map(|z| Cluster { members: vec![z] })
                .collect();
            loop {
                let mut best: Option<(usize, usize, f64)> = None;
                for i in 0..clusters.len() {
                    for j in i + 1..clusters.len() {
                        let r = cluster_ratio(&reduced, &merge(&clusters[i], &clusters[j]), config.tol);
                        if best.is_none_or(|(_, _, b)| r < b) {
                            best = Some((i, j, r));
                        }
                    }
                }
                match best {
                    Some((i, j, r)) if r <= 1.0 => {
                        let b = clusters.remove(j);
                        clusters[i] = merge(&clusters[i], &b);
                    }
                    Some((i, j, r)) if r <= 10.0 => {
                        return Err(RootError::AmbiguousClusters {
                            distance: (clusters[i].centroid() - clusters[j].centroid()).norm(),
                            threshold: r,
                        });
                    }
                    _ => break,
                }
            }
            for c in &clusters {
                let k = c.members.len();
                roots.push(Root {
                    value: polish(&reduced, c.centroid(), k),
                    multiplicity: k,
                });
            }
        }
    }
    roots.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(roots)
}

/// All `y` with `f(x0, y) = 0`, repeated according to multiplicity.
pub fn resolve_fiber(f: &BivariatePolynomial, x0: Complex64, config: &RootFinderConfig) -> Result<Vec<Complex64>> {
    let p = UnivariateComplexPolynomial::new(f.fiber_coefficients(x0));
    if p.degree().is_none_or(|d| d == 0) {
        return Err(Error::Degenerate(format!("fiber at x = {x0} is constant in y")));
    }
    let roots = find_roots(&p, config)?;
    Ok(roots
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn roots_of(coeffs: &[f64]) -> Vec<Root> {
        find_roots(&UnivariateComplexPolynomial::from_real(coeffs), &RootFinderConfig::default()).unwrap()
    }

    #[test]
    fn unit_roots() {
        let r = roots_of(&[-1.0, 0.0, 1.0]);
        assert_eq!(r.len(), 2);
        assert!((r[0].value - c(-1.0, 0.0)).norm() < 1e-12);
        assert!((r[1].value - c(1.0, 0.0)).norm() < 1e-12);
        let r = roots_of(&[1.0, 0.0, 1.0]);
        assert!((r[0].value - c(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1].value - c(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn triple_root_is_clustered() {
        // (z - 1)^3
        let r = roots_of(&[-1.0, 3.0, -3.0, 1.0]);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 3);
        assert!((r[0].value - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn mixed_multiplicities() {
        let p = UnivariateComplexPolynomial::from_roots(
            c(2.0, 1.0),
            &[c(0.5, 0.5), c(0.5, 0.5), c(-1.0, 2.0), c(3.0, 0.0), c(3.0, 0.0), c(3.0, 0.0), c(3.0, 0.0)],
        );
        let r = find_roots(&p, &RootFinderConfig::default()).unwrap();
        let mut mults: Vec<usize> = r.iter().map(|r| r.multiplicity).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 2, 4]);
        for root in &r {
            let expected = match root.multiplicity {
                1 => c(-1.0, 2.0),
                2 => c(0.5, 0.5),
                _ => c(3.0, 0.0),
            };
            assert!((root.value - expected).norm() < 1e-9, "{root:?}");
        }
    }

    #[test]
    fn zero_roots_are_exact() {
        let r = roots_of(&[0.0, 0.0, -4.0, 1.0]);
        assert_eq!(r[0].value, Complex64::zero());
        assert_eq!(r[0].multiplicity, 2);
        assert!((r[1].value - c(4.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn constant_is_rejected() {
        let p = UnivariateComplexPolynomial::from_real(&[3.0]);
        assert_eq!(find_roots(&p, &RootFinderConfig::default()), Err(RootError::ConstantPolynomial));
    }

    #[test]
    fn too_few_iterations_reports_residuals() {
        let p = UnivariateComplexPolynomial::from_real(&[1.0, -2.0, 3.0, 0.5, 7.0, 1.0]);
        let cfg = RootFinderConfig { tol: 1e-10, max_iterations: 1 };
        match find_roots(&p, &cfg) {
            Err(RootError::NoConvergence { residuals, .. }) => assert_eq!(residuals.len(), 5),
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn fibers() {
        let cfg = RootFinderConfig::default();
        let f = parse_polynomial("y^2 - x").unwrap();
        let ys = resolve_fiber(&f, c(4.0, 0.0), &cfg).unwrap();
        assert!((ys[0] - c(-2.0, 0.0)).norm() < 1e-12);
        assert!((ys[1] - c(2.0, 0.0)).norm() < 1e-12);
        let f = parse_polynomial("y - 3*x - 1").unwrap();
        assert_eq!(resolve_fiber(&f, c(2.0, 0.0), &cfg).unwrap(), vec![c(7.0, 0.0)]);
        let f = parse_polynomial("x*y - 1").unwrap();
        assert!(matches!(resolve_fiber(&f, c(0.0, 0.0), &cfg), Err(Error::Degenerate(_))));
    }

    proptest! {
        #[test]
        fn multiplicities_sum_to_degree_and_residuals_small(
            roots in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..7),
            lead in (0.5f64..3.0, -1.0f64..1.0),
        ) {
            let rs: Vec<Complex64> = roots.iter().map(|&(a, b)| c(a, b)).collect();
            let p = UnivariateComplexPolynomial::from_roots(c(lead.0, lead.1), &rs);
            let cfg = RootFinderConfig::default();
            match find_roots(&p, &cfg) {
                Ok(found) => {
                    prop_assert_eq!(found.iter().map(|r| r.multiplicity).sum::<usize>(), rs.len());
                    for r in &found {
                        prop_assert!(p.eval(r.value).norm() <= 10.0 * cfg.tol * p.norm());
                    }
                }
                // random roots can land numerically on top of each other
                Err(RootError::AmbiguousClusters { .. }) => {}
                Err(e) => prop_assert!(false, "{e}"),
            }
        }

        #[test]
        fn parabola_fiber_squares(x0 in (-50.0f64..50.0, -50.0f64..50.0)) {
            prop_assume!(x0.0.abs() + x0.1.abs() > 1e-3);
            let x0 = c(x0.0, x0.1);
            let f = parse_polynomial("y^2 - x").unwrap();
            let ys = resolve_fiber(&f, x0, &RootFinderConfig::default()).unwrap();
            prop_assert_eq!(ys.len(), 2);
            for y in ys {
                prop_assert!((y * y - x0).norm() <= 1e-9 * (1.0 + x0.norm()));
            }
        }
    }
}

//! Newton polygon iteration with formal lifting.
//!
//! A working polynomial `H(Y, s)` stands for the original equation after the
//! substitutions made so far: `y = prefix(z) + z^offset · Y` with `z = s^R`.
//! Each polygon edge of slope `-q/p` (in lowest terms) and each root `w` of
//! its characteristic polynomial in `c^p` contributes the substitution
//! `s = u^p`, `Y = u^q (c + Y1)` with a single `p`-th root `c` of `w`; the
//! other `p`-th roots give conjugates of the same series, so every
//! conjugacy class is produced exactly once. Once only one solution of
//! positive order is left the remaining coefficients follow from a linear
//! recurrence in `s`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::Zero;

use super::series::{Exponent, PuiseuxSeries};
use crate::algebra::{
    find_roots, rat_to_f64, ChartPolynomial, ComplexChartPolynomial, RootFinderConfig,
    UnivariateComplexPolynomial,
};
use crate::error::{ExpansionError, Result};

/// Knobs for [`expand_at_origin`].
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionOptions {
    /// Every term with exponent up to and including `order` is computed.
    pub order: Exponent,
    /// Coefficients whose modulus falls below this fraction of the terms
    /// that produced them are treated as zero.
    pub zero_threshold: f64,
    /// Maximum number of polygon iterations along one solution.
    pub max_depth: usize,
    /// Use the linear recurrence once a solution is isolated. When false,
    /// every term comes from a polygon iteration.
    pub lift: bool,
    pub roots: RootFinderConfig,
}

impl Default for ExpansionOptions {
    fn default() -> Self {
        Self {
            order: Exponent::from_integer(3),
            zero_threshold: 1e-10,
            max_depth: 64,
            lift: true,
            roots: RootFinderConfig::default(),
        }
    }
}

/// One lower-hull segment of a Newton polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    /// Left end `(deg_y, deg_z)`.
    pub start: (u32, u32),
    /// Right end `(deg_y, deg_z)`.
    pub end: (u32, u32),
    /// Slope `Δdeg_z / Δdeg_y`; always negative.
    pub slope: Exponent,
    /// `Σ a_(i,j) c^(i - start.0)` over support points on the edge.
    pub characteristic: UnivariateComplexPolynomial,
}

impl Edge {
    /// Order `γ = -slope` of the solutions this edge describes.
    pub fn gamma(&self) -> Exponent {
        -self.slope
    }
}

/// Support and negative-slope lower hull of a polynomial in `(y, z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonPolygon {
    pub support: Vec<(u32, u32)>,
    /// Ordered by increasing slope.
    pub edges: Vec<Edge>,
}

impl NewtonPolygon {
    pub fn new(h: &ComplexChartPolynomial) -> Self {
        let mut support: Vec<(u32, u32)> = h.terms().map(|(k, _)| *k).collect();
        support.sort();
        // lowest point in each column
        let mut columns: BTreeMap<u32, u32> = BTreeMap::new();
        for &(i, j) in &support {
            columns.entry(i).and_modify(|m| *m = (*m).min(j)).or_insert(j);
        }
        let mut hull: Vec<(i64, i64)> = Vec::new();
        for (&i, &j) in &columns {
            let p = (i as i64, j as i64);
            while hull.len() >= 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                // drop b unless it lies strictly below segment a-p
                let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        let mut edges = Vec::new();
        for w in hull.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b.1 >= a.1 {
                break;
            }
            let slope = Exponent::new(b.1 - a.1, b.0 - a.0);
            let mut coeffs = vec![Complex64::zero(); (b.0 - a.0) as usize + 1];
            for (&(i, j), c) in h.terms() {
                let (i, j) = (i as i64, j as i64);
                if i >= a.0 && i <= b.0 && (j - a.1) * (b.0 - a.0) == (b.1 - a.1) * (i - a.0) {
                    coeffs[(i - a.0) as usize] += c;
                }
            }
            edges.push(Edge {
                start: (a.0 as u32, a.1 as u32),
                end: (b.0 as u32, b.1 as u32),
                slope,
                characteristic: UnivariateComplexPolynomial::new(coeffs),
            });
        }
        Self { support, edges }
    }
}

/// Accumulates a sum of complex terms together with the sum of their moduli
/// so that cancellation down to rounding noise can be recognised.
#[derive(Clone, Copy, Default)]
struct Tracked {
    value: Complex64,
    scale: f64,
}

impl Tracked {
    fn add(&mut self, c: Complex64) {
        self.value += c;
        self.scale += c.norm();
    }
}

fn collect(map: BTreeMap<(u32, u32), Tracked>, zero_threshold: f64) -> ComplexChartPolynomial {
    ComplexChartPolynomial::from_terms(
        map.into_iter()
            .filter(|(_, t)| t.value.norm() > zero_threshold * t.scale)
            .map(|(k, t)| (k, t.value)),
    )
}

fn binomial_f64(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, t| acc * (n - t) as f64 / (t + 1) as f64)
}

/// `u^(-L) · H(u^q (c + Y), u^p)` with `L = min (q·i + p·j)` over the support.
fn substitute(h: &ComplexChartPolynomial, c: Complex64, p: u32, q: u32, zero_threshold: f64) -> ComplexChartPolynomial {
    let base = h
        .terms()
        .map(|(&(i, j), _)| q * i + p * j)
        .min()
        .unwrap_or(0);
    let mut out: BTreeMap<(u32, u32), Tracked> = BTreeMap::new();
    for (&(i, j), a) in h.terms() {
        let shift = q * i + p * j - base;
        for k in 0..=i {
            let term = a * binomial_f64(i, k) * c.powu(i - k);
            out.entry((k, shift)).or_default().add(term);
        }
    }
    collect(out, zero_threshold)
}

/// Shifts an exact chart polynomial to `(m, 0)`, discarding coefficients
/// that cancel to rounding level.
pub fn shift_chart(g: &ChartPolynomial, m: Complex64, zero_threshold: f64) -> ComplexChartPolynomial {
    let as_complex = ComplexChartPolynomial::from_terms(
        g.terms().map(|(k, c)| (*k, Complex64::new(rat_to_f64(c), 0.0))),
    );
    substitute(&as_complex, m, 1, 0, zero_threshold)
}

#[derive(Clone)]
struct Branch {
    prefix: Vec<(Exponent, Complex64)>,
    ramification: u32,
    offset: Exponent,
    depth: usize,
}

struct Expander<'a> {
    opts: &'a ExpansionOptions,
    out: Vec<PuiseuxSeries>,
}

impl Expander<'_> {
    fn emit(&mut self, mut terms: Vec<(Exponent, Complex64)>, ramification: u32) -> Result<()> {
        let largest = terms.iter().map(|(_, c)| c.norm()).fold(0.0, f64::max);
        terms.retain(|(e, c)| *e <= self.opts.order && c.norm() > self.opts.zero_threshold * largest);
        let series = PuiseuxSeries::new(terms, ramification, self.opts.order)?;
        self.out.push(series);
        Ok(())
    }

    fn run(&mut self, mut h: ComplexChartPolynomial, state: Branch) -> Result<()> {
        if h.is_empty() {
            return Err(ExpansionError::ZeroPolynomial.into());
        }
        let residual = h.coefficient(0, 0).norm();
        if residual > 0.0 {
            return Err(ExpansionError::NotThroughOrigin { residual }.into());
        }
        let y_order = h.terms().map(|(&(i, _), _)| i).min().unwrap_or(0);
        if y_order > 0 {
            // Y = 0 solves H exactly: that series terminates here. The other
            // solutions of positive order are those of H / Y^k.
            self.emit(state.prefix.clone(), state.ramification)?;
            h = ComplexChartPolynomial::from_terms(h.terms().map(|(&(i, j), a)| ((i - y_order, j), *a)));
            if !h.coefficient(0, 0).is_zero() {
                return Ok(());
            }
        }
        let isolated = !h.coefficient(1, 0).is_zero();
        if isolated && self.opts.lift {
            return self.lift(&h, state);
        }
        if isolated && state.offset >= self.opts.order {
            return self.emit(state.prefix, state.ramification);
        }
        if state.depth >= self.opts.max_depth {
            return Err(ExpansionError::DepthExceeded {
                max_depth: self.opts.max_depth,
            }
            .into());
        }
        let polygon = NewtonPolygon::new(&h);
        for edge in &polygon.edges {
            let gamma = edge.gamma();
            let (q, p) = (*gamma.numer() as u32, *gamma.denom() as u32);
            // Φ(c) = Ψ(c^p): keep every p-th coefficient
            let reduced: Vec<Complex64> = edge
                .characteristic
                .coefficients()
                .iter()
                .step_by(p as usize)
                .copied()
                .collect();
            let psi = UnivariateComplexPolynomial::new(reduced);
            let roots = find_roots(&psi, &self.opts.roots).map_err(ExpansionError::from)?;
            for root in roots {
                if root.value.is_zero() {
                    continue;
                }
                let c = principal_root(root.value, p);
                let offset = state.offset + gamma / state.ramification as i64;
                let mut prefix = state.prefix.clone();
                prefix.push((offset, c));
                let next = Branch {
                    prefix,
                    ramification: state.ramification * p,
                    offset,
                    depth: state.depth + 1,
                };
                let h1 = substitute(&h, c, p, q, self.opts.zero_threshold);
                self.run(h1, next)?;
            }
        }
        Ok(())
    }

    /// Solves `H(Y, s) = 0` for `Y = Σ_(k≥1) b_k s^k` given `∂H/∂Y(0,0) ≠ 0`.
    fn lift(&mut self, h: &ComplexChartPolynomial, state: Branch) -> Result<()> {
        let ram = state.ramification as i64;
        let budget = (self.opts.order - state.offset) * ram;
        let max_k = if budget < Exponent::zero() {
            0
        } else {
            budget.floor().to_integer() as usize
        };
        let slope = h.coefficient(1, 0);
        let deg_y = h.degree_y().unwrap_or(0) as usize;
        // A_i(s) truncated at degree max_k
        let mut columns = vec![vec![Complex64::zero(); max_k + 1]; deg_y + 1];
        for (&(i, j), a) in h.terms() {
            if (j as usize) <= max_k {
                columns[i as usize][j as usize] += a;
            }
        }
        let mut y = vec![Complex64::zero(); max_k + 1];
        for k in 1..=max_k {
            // [s^k] H(Y_<k(s), s); powers of Y have order ≥ their exponent
            let mut residual = columns[0][k];
            let mut power = y.clone();
            for column in columns.iter().skip(1) {
                residual += (0..=k).map(|t| column[t] * power[k - t]).sum::<Complex64>();
                power = truncated_mul(&power, &y, k);
            }
            y[k] = -residual / slope;
        }
        let mut terms = state.prefix;
        for (k, b) in y.into_iter().enumerate().skip(1) {
            if !b.is_zero() {
                terms.push((state.offset + Exponent::new(k as i64, ram), b));
            }
        }
        self.emit(terms, state.ramification)
    }
}

fn truncated_mul(a: &[Complex64], b: &[Complex64], max_deg: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); a.len()];
    for (i, x) in a.iter().enumerate().take(max_deg + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(max_deg + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn principal_root(w: Complex64, p: u32) -> Complex64 {
    if p == 1 {
        w
    } else {
        let (r, theta) = w.to_polar();
        Complex64::from_polar(r.powf(1.0 / p as f64), theta / p as f64)
    }
}

fn check_origin(h: &ComplexChartPolynomial, opts: &ExpansionOptions) -> Result<()> {
    if h.is_empty() {
        return Err(ExpansionError::ZeroPolynomial.into());
    }
    let residual = h.coefficient(0, 0).norm();
    if residual > opts.roots.tol * h.max_modulus() {
        return Err(ExpansionError::NotThroughOrigin { residual }.into());
    }
    Ok(())
}

fn expand_prepared(h: ComplexChartPolynomial, opts: &ExpansionOptions) -> Result<Vec<PuiseuxSeries>> {
    // check_origin already accepted whatever is left at (0, 0)
    let h = ComplexChartPolynomial::from_terms(h.terms().filter(|(k, _)| **k != (0, 0)).map(|(k, c)| (*k, *c)));
    let mut expander = Expander {
        opts,
        out: Vec::new(),
    };
    let start = Branch {
        prefix: Vec::new(),
        ramification: 1,
        offset: Exponent::zero(),
        depth: 0,
    };
    expander.run(h, start)?;
    Ok(expander
        .out
        .into_iter()
        .map(|s| s.canonical_representative())
        .collect())
}

/// One canonical representative per conjugacy class of the solutions
/// `y(z)` of `h(y, z) = 0` with positive order, each carrying all terms with
/// exponent up to `opts.order`.
///
/// Coefficients below `opts.zero_threshold` relative to the largest
/// coefficient of `h` are discarded first; the constant term must vanish to
/// within the root-finder tolerance.
pub fn expand_at_origin(h: &ComplexChartPolynomial, opts: &ExpansionOptions) -> Result<Vec<PuiseuxSeries>> {
    check_origin(h, opts)?;
    expand_prepared(h.pruned(opts.zero_threshold), opts)
}

/// Expansion of the exact chart polynomial `g` at the point `(m, 0)`.
pub fn expand_at_point(g: &ChartPolynomial, m: Complex64, opts: &ExpansionOptions) -> Result<Vec<PuiseuxSeries>> {
    let h = shift_chart(g, m, opts.zero_threshold);
    check_origin(&h, opts)?;
    expand_prepared(h, opts)
}

/// Number of solutions of positive order that the expansion must account
/// for: the multiplicity of `0` as a root of `h(y, 0)`.
pub fn local_solution_count(h: &ComplexChartPolynomial) -> u32 {
    h.terms()
        .filter(|(&(_, j), _)| j == 0)
        .map(|(&(i, _), _)| i)
        .min()
        .unwrap_or(0)
}

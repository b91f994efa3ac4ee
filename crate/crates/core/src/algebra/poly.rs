//! Exact bivariate polynomials and their projective companions.
//!
//! Affine curves live in [`BivariatePolynomial`] (variables `x`, `y`), their
//! projective closures in [`HomogeneousPolynomial`] (`x`, `y`, `z`), and the
//! affine chart `x = 1` around the line at infinity in [`ChartPolynomial`]
//! (`y`, `z`). All of these carry exact rational coefficients. Only
//! [`ComplexChartPolynomial`], produced by shifting a chart to a numerically
//! located infinity point, carries floating-point coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn insert_term<K: Ord>(terms: &mut BTreeMap<K, Rational>, key: K, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    *terms.entry(key).or_insert_with(Rational::zero) += coeff;
}

fn strip_zeros<K: Ord + Clone>(terms: &mut BTreeMap<K, Rational>) {
    terms.retain(|_, c| !c.is_zero());
}

/// A polynomial in `x`, `y` with exact rational coefficients.
///
/// Keys are `(deg_x, deg_y)`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn monomial(deg_x: u32, deg_y: u32, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_x, deg_y), coeff);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(deg_x, deg_y, coefficient)` triples; like
    /// terms are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            insert_term(&mut map, k, c);
        }
        strip_zeros(&mut map);
        Self { terms: map }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(terms: &[((u32, u32), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(k, c)| (k, rat(c))))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, deg_x: u32, deg_y: u32) -> Rational {
        self.terms
            .get(&(deg_x, deg_y))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * rat(i as i64))),
        )
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * rat(j as i64))),
        )
    }

    pub fn eval_rational(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
        })
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms.iter().fold(Complex64::zero(), |acc, (&(i, j), c)| {
            acc + rat_to_f64(c) * x.powu(i) * y.powu(j)
        })
    }

    /// Coefficients of `f(x0, y)` as a polynomial in `y`, ascending.
    pub fn fiber_coefficients(&self, x0: Complex64) -> Vec<Complex64> {
        let len = self.degree_y().map_or(0, |d| d as usize + 1);
        let mut out = vec![Complex64::zero(); len];
        for (&(i, j), c) in &self.terms {
            out[j as usize] += rat_to_f64(c) * x0.powu(i);
        }
        out
    }

    /// Sum of all terms of maximal total degree. This is `F(x, y, 0)` for
    /// the homogenization `F`.
    pub fn leading_form(&self) -> Result<Self> {
        let d = self
            .total_degree()
            .ok_or_else(|| Error::Degenerate("zero polynomial has no leading form".into()))?;
        Ok(Self {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j == d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        })
    }

    pub fn homogenize(&self) -> Result<HomogeneousPolynomial> {
        let d = self
            .total_degree()
            .ok_or_else(|| Error::Degenerate("cannot homogenize the zero polynomial".into()))?;
        Ok(HomogeneousPolynomial {
            degree: d,
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, j, d - i - j), c.clone()))
                .collect(),
        })
    }

    /// The linear change of coordinates `f(x + λy, y)`.
    pub fn apply_shear(&self, lambda: &Rational) -> Self {
        if lambda.is_zero() {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            // (x + λy)^i y^j = Σ_k C(i,k) x^k λ^(i-k) y^(i-k+j)
            let mut lam_pow = Rational::one();
            let mut pows = Vec::with_capacity(i as usize + 1);
            for _ in 0..=i {
                pows.push(lam_pow.clone());
                lam_pow *= lambda;
            }
            for k in 0..=i {
                let coeff =
                    c * Rational::from_integer(binomial(i, k)) * &pows[(i - k) as usize];
                insert_term(&mut out, (k, i - k + j), coeff);
            }
        }
        strip_zeros(&mut out);
        Self { terms: out }
    }

    /// Lexicographic leading term with `y` dominating `x`.
    pub(crate) fn lex_leading(&self) -> Option<((u32, u32), &Rational)> {
        self.terms
            .iter()
            .max_by_key(|((i, j), _)| (*j, *i))
            .map(|(k, c)| (*k, c))
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let ((bi, bj), bc) = divisor.lex_leading()?;
        let bc = bc.clone();
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some(((ri, rj), rc)) = rem.lex_leading() {
            if ri < bi || rj < bj {
                return None;
            }
            let t = Self::monomial(ri - bi, rj - bj, rc / &bc);
            insert_term(&mut quot, (ri - bi, rj - bj), rc / &bc);
            rem = &rem - &(&t * divisor);
        }
        strip_zeros(&mut quot);
        Some(Self { terms: quot })
    }

    pub fn map_coefficients(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            insert_term(&mut terms, *k, c.clone());
        }
        strip_zeros(&mut terms);
        BivariatePolynomial { terms }
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            insert_term(&mut terms, *k, -c.clone());
        }
        strip_zeros(&mut terms);
        BivariatePolynomial { terms }
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut terms = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                insert_term(&mut terms, (i1 + i2, j1 + j2), c1 * c2);
            }
        }
        strip_zeros(&mut terms);
        BivariatePolynomial { terms }
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        -&self
    }
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &Rational,
    vars: &[(&str, u32)],
) -> fmt::Result {
    let negative = coeff.is_negative();
    let magnitude = coeff.abs();
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let mut factors: Vec<String> = Vec::new();
    let has_vars = vars.iter().any(|&(_, e)| e > 0);
    if !magnitude.is_one() || !has_vars {
        factors.push(magnitude.to_string());
    }
    for &(name, e) in vars {
        match e {
            0 => {}
            1 => factors.push(name.to_string()),
            _ => factors.push(format!("{name}^{e}")),
        }
    }
    write!(f, "{}", factors.join("*"))
}

/// Prints in the grammar accepted by [`crate::algebra::parse_polynomial`],
/// highest total degree first.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.1).cmp(&(a.0 + a.1, a.1)));
        for (n, k) in keys.iter().enumerate() {
            write_monomial(f, n == 0, &self.terms[k], &[("x", k.0), ("y", k.1)])?;
        }
        Ok(())
    }
}

/// A homogeneous polynomial in `x`, `y`, `z`; keys are `(deg_x, deg_y, deg_z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    degree: u32,
    terms: BTreeMap<(u32, u32, u32), Rational>,
}

impl HomogeneousPolynomial {
    /// Validates homogeneity.
    pub fn new(terms: BTreeMap<(u32, u32, u32), Rational>) -> Result<Self> {
        let mut terms = terms;
        strip_zeros(&mut terms);
        let mut degrees = terms.keys().map(|&(i, j, k)| i + j + k);
        let degree = degrees
            .next()
            .ok_or_else(|| Error::Degenerate("zero homogeneous polynomial".into()))?;
        if degrees.any(|d| d != degree) {
            return Err(Error::InvalidArgument("polynomial is not homogeneous".into()));
        }
        Ok(Self { degree, terms })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, i: u32, j: u32, k: u32) -> Rational {
        self.terms
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `F(x, y, 1)`.
    pub fn dehomogenize(&self) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(self.terms.iter().map(|(&(i, j, _), c)| ((i, j), c.clone())))
    }

    /// `F(x, y, 0)`.
    pub fn at_infinity(&self) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(
            self.terms
                .iter()
                .filter(|((_, _, k), _)| *k == 0)
                .map(|(&(i, j, _), c)| ((i, j), c.clone())),
        )
    }

    /// The affine chart `g(y, z) = F(1, y, z)`.
    pub fn restrict_chart(&self) -> ChartPolynomial {
        ChartPolynomial::from_terms(self.terms.iter().map(|(&(_, j, k), c)| ((j, k), c.clone())))
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.1, b.0).cmp(&(a.1, a.0)));
        for (n, k) in keys.iter().enumerate() {
            write_monomial(f, n == 0, &self.terms[k], &[("x", k.0), ("y", k.1), ("z", k.2)])?;
        }
        Ok(())
    }
}

/// A polynomial in the chart variables `y`, `z`; keys are `(deg_y, deg_z)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChartPolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl ChartPolynomial {
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            insert_term(&mut map, k, c);
        }
        strip_zeros(&mut map);
        Self { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, deg_y: u32, deg_z: u32) -> Rational {
        self.terms
            .get(&(deg_y, deg_z))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, y: Complex64, z: Complex64) -> Complex64 {
        self.terms.iter().fold(Complex64::zero(), |acc, (&(i, j), c)| {
            acc + rat_to_f64(c) * y.powu(i) * z.powu(j)
        })
    }

    /// `g(y, 0)` as an exact univariate polynomial in `y`, ascending.
    pub fn at_origin_line(&self) -> Vec<Rational> {
        let deg = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                out[i as usize] += c;
            }
        }
        out
    }

    pub fn to_complex(&self) -> ComplexChartPolynomial {
        ComplexChartPolynomial::from_terms(
            self.terms
                .iter()
                .map(|(k, c)| (*k, Complex64::new(rat_to_f64(c), 0.0))),
        )
    }

    /// `g(y + m, z)`, centering a point `(m, 0)` at the origin.
    pub fn shift_y(&self, m: Complex64) -> ComplexChartPolynomial {
        self.to_complex().shift_y(m)
    }
}

/// A chart polynomial with complex floating-point coefficients. Keys are
/// `(deg_y, deg_z)`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ComplexChartPolynomial {
    terms: BTreeMap<(u32, u32), Complex64>,
}

impl ComplexChartPolynomial {
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Complex64)>,
    {
        let mut map: BTreeMap<(u32, u32), Complex64> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_insert_with(Complex64::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, deg_y: u32, deg_z: u32) -> Complex64 {
        self.terms
            .get(&(deg_y, deg_z))
            .copied()
            .unwrap_or_else(Complex64::zero)
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn eval(&self, y: Complex64, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .fold(Complex64::zero(), |acc, (&(i, j), c)| acc + c * y.powu(i) * z.powu(j))
    }

    pub fn max_modulus(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drops coefficients whose modulus is at most `relative` times the
    /// largest modulus.
    pub fn pruned(&self, relative: f64) -> Self {
        let cutoff = relative * self.max_modulus();
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.norm() > cutoff)
                .map(|(k, c)| (*k, *c))
                .collect(),
        }
    }

    pub fn shift_y(&self, m: Complex64) -> Self {
        if m.is_zero() {
            return self.clone();
        }
        let mut out: BTreeMap<(u32, u32), Complex64> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            for k in 0..=i {
                let b = binomial(i, k).to_f64().unwrap_or(f64::NAN);
                *out.entry((k, j)).or_insert_with(Complex64::zero) += c * b * m.powu(i - k);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self { terms: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn p(s: &str) -> BivariatePolynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn homogenize_examples() {
        let f = p("y^2 - x");
        let h = f.homogenize().unwrap();
        assert_eq!(h.degree(), 2);
        assert_eq!(h.coefficient(0, 2, 0), rat(1));
        assert_eq!(h.coefficient(1, 0, 1), rat(-1));
        assert_eq!(h.dehomogenize(), f);

        let lin = p("x + y + 1").homogenize().unwrap();
        assert_eq!(lin.coefficient(0, 0, 1), rat(1));
        assert_eq!(lin.to_string(), "y + x + z");
    }

    #[test]
    fn homogenize_rejects_zero() {
        assert!(BivariatePolynomial::zero().homogenize().is_err());
        assert!(BivariatePolynomial::zero().leading_form().is_err());
    }

    #[test]
    fn leading_form_selects_top_degree() {
        let f = p("2*y^3*x - y^4 + 2*y^2*x - y^3 - 2*x^3 + x^2*y + 3");
        assert_eq!(f.leading_form().unwrap(), p("2*y^3*x - y^4"));
        assert_eq!(p("y^2 - x").leading_form().unwrap(), p("y^2"));
    }

    #[test]
    fn chart_restriction() {
        let g = p("y^2 - x").homogenize().unwrap().restrict_chart();
        assert_eq!(g.coefficient(2, 0), rat(1));
        assert_eq!(g.coefficient(0, 1), rat(-1));
        let g = p("y - 3*x - 1").homogenize().unwrap().restrict_chart();
        assert_eq!(g.coefficient(0, 0), rat(-3));
        assert_eq!(g.coefficient(1, 0), rat(1));
        assert_eq!(g.coefficient(0, 1), rat(-1));
    }

    #[test]
    fn shift_examples() {
        let g = p("y^2 - x").homogenize().unwrap().restrict_chart();
        assert_eq!(g.shift_y(Complex64::zero()), g.to_complex());
        let g = p("y - 3*x - 1").homogenize().unwrap().restrict_chart();
        let shifted = g.shift_y(Complex64::new(3.0, 0.0));
        assert_eq!(shifted.coefficient(1, 0), Complex64::new(1.0, 0.0));
        assert_eq!(shifted.coefficient(0, 1), Complex64::new(-1.0, 0.0));
        assert_eq!(shifted.len(), 2);
    }

    #[test]
    fn shear_examples() {
        assert_eq!(p("x^2 - y").apply_shear(&rat(1)), p("x^2 + 2*x*y + y^2 - y"));
        assert_eq!(p("y^2 - x").apply_shear(&rat(2)), p("y^2 - x - 2*y"));
        let f = p("x^3*y - 7/2*x + y^4");
        assert_eq!(f.apply_shear(&rat(0)), f);
    }

    #[test]
    fn exact_division() {
        let a = p("(y - x)*(y^2 + x + 1)");
        assert_eq!(a.div_exact(&p("y - x")).unwrap(), p("y^2 + x + 1"));
        assert!(p("y^2 + 1").div_exact(&p("y - x")).is_none());
    }

    #[test]
    fn fiber_coefficients_of_parabola() {
        let c = p("y^2 - x").fiber_coefficients(Complex64::new(4.0, 0.0));
        assert_eq!(c, vec![Complex64::new(-4.0, 0.0), Complex64::zero(), Complex64::new(1.0, 0.0)]);
    }

    fn small_poly() -> impl proptest::strategy::Strategy<Value = BivariatePolynomial> {
        use proptest::prelude::*;
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 1..8)
            .prop_map(|terms| BivariatePolynomial::from_int_terms(&terms))
            .prop_filter("nonzero", |f| !f.is_zero())
    }

    proptest::proptest! {
        #[test]
        fn homogenize_round_trip(f in small_poly()) {
            proptest::prop_assert_eq!(f.homogenize().unwrap().dehomogenize(), f);
        }

        #[test]
        fn leading_form_is_the_part_at_infinity(f in small_poly()) {
            proptest::prop_assert_eq!(f.homogenize().unwrap().at_infinity(), f.leading_form().unwrap());
        }

        #[test]
        fn shear_is_invertible(f in small_poly(), num in -4i64..=4, den in 1i64..=3) {
            let lambda = Rational::new(num.into(), den.into());
            proptest::prop_assert_eq!(f.apply_shear(&lambda).apply_shear(&-lambda.clone()), f);
        }
    }
}

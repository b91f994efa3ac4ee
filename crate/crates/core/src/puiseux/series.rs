use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exponents of truncated Puiseux series.
pub type Exponent = Ratio<i64>;

/// Relative tolerance under which two coefficients count as tied when
/// picking a canonical conjugate.
const TIE_TOLERANCE: f64 = 1e-9;

/// A truncated series `Σ a_k z^(e_k)` with rational exponents.
///
/// Terms are sorted by strictly increasing exponent and every exponent has a
/// denominator dividing the ramification index `N`. The `watermark` marks
/// the truncation point: for a local expansion every term with exponent at
/// most the watermark is present, for a series at infinity every term with
/// exponent at least the watermark is present.
#[derive(Clone, Debug, PartialEq)]
pub struct PuiseuxSeries {
    terms: Vec<(Exponent, Complex64)>,
    ramification: u32,
    watermark: Exponent,
}

impl PuiseuxSeries {
    pub fn new(
        mut terms: Vec<(Exponent, Complex64)>,
        ramification: u32,
        watermark: Exponent,
    ) -> Result<Self> {
        if ramification == 0 {
            return Err(Error::InvalidArgument("ramification index must be positive".into()));
        }
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by_key(|t| t.0);
        if terms.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument("repeated exponent in series".into()));
        }
        if let Some((e, _)) = terms
            .iter()
            .find(|(e, _)| (ramification as i64) % e.denom() != 0)
        {
            return Err(Error::InvalidArgument(format!(
                "exponent {e} incompatible with ramification index {ramification}"
            )));
        }
        if terms.iter().any(|(_, c)| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidArgument("non-finite coefficient".into()));
        }
        Ok(Self {
            terms,
            ramification,
            watermark,
        })
    }

    pub fn terms(&self) -> &[(Exponent, Complex64)] {
        &self.terms
    }

    pub fn ramification_index(&self) -> u32 {
        self.ramification
    }

    pub fn watermark(&self) -> Exponent {
        self.watermark
    }

    pub fn coefficient(&self, exponent: Exponent) -> Complex64 {
        self.terms
            .iter()
            .find(|(e, _)| *e == exponent)
            .map_or(Complex64::zero(), |(_, c)| *c)
    }

    /// Lowest exponent present.
    pub fn order(&self) -> Option<Exponent> {
        self.terms.first().map(|(e, _)| *e)
    }

    /// `e · N` for an exponent of this series.
    fn scaled(&self, e: Exponent) -> i64 {
        (e * self.ramification as i64).to_integer()
    }

    /// The conjugate `σ_ε` for `ε = exp(2πi·index/N)`: a term `a z^(k/N)`
    /// becomes `a ε^k z^(k/N)`.
    pub fn conjugate(&self, index: u32) -> Self {
        let n = self.ramification as i64;
        let terms = self
            .terms
            .iter()
            .map(|&(e, a)| {
                let k = (self.scaled(e) * index as i64).mod_floor(&n);
                (e, a * root_of_unity(k, n))
            })
            .collect();
        Self {
            terms,
            ramification: self.ramification,
            watermark: self.watermark,
        }
    }

    /// All `N` conjugates, starting with the series itself.
    pub fn conjugates(&self) -> Vec<Self> {
        (0..self.ramification).map(|j| self.conjugate(j)).collect()
    }

    /// Deterministic member of the conjugacy class: maximal real part of the
    /// first coefficient, then maximal imaginary part, then the same rule on
    /// the following terms.
    pub fn canonical_representative(&self) -> Self {
        self.conjugates()
            .into_iter()
            .reduce(|best, cand| {
                if compare_for_canonical(&cand, &best) == Ordering::Greater {
                    cand
                } else {
                    best
                }
            })
            .expect("at least one conjugate")
    }

    /// Evaluates leaf `leaf` at `z0`: `Σ a_k (z0^(1/N) · exp(2πi·leaf/N))^(e_k N)`
    /// with the principal branch `arg z0 ∈ (-π, π]`.
    pub fn evaluate(&self, z0: Complex64, leaf: u32) -> Result<Complex64> {
        if z0.is_zero() {
            return Err(Error::InvalidArgument("cannot evaluate a Puiseux series at 0".into()));
        }
        if leaf >= self.ramification {
            return Err(Error::InvalidArgument(format!(
                "leaf {leaf} out of range for ramification index {}",
                self.ramification
            )));
        }
        let n = self.ramification as i64;
        let (r, theta) = z0.to_polar();
        let w = Complex64::from_polar(r.powf(1.0 / n as f64), theta / n as f64);
        Ok(self
            .terms
            .iter()
            .map(|&(e, a)| {
                let k = self.scaled(e);
                a * w.powi(k as i32) * root_of_unity((k * leaf as i64).mod_floor(&n), n)
            })
            .sum())
    }

    /// Maps each exponent `e` to `1 - e` and adds `m·z`: the passage from a
    /// local solution `φ` of the chart equation to `r(z) = z·φ(1/z)`.
    pub fn at_infinity(&self, m: Complex64) -> Self {
        let one = Exponent::from_integer(1);
        let mut terms: Vec<(Exponent, Complex64)> = self.terms.iter().map(|&(e, a)| (one - e, a)).collect();
        if !m.is_zero() {
            terms.push((one, m));
        }
        terms.sort_by_key(|t| t.0);
        Self {
            terms,
            ramification: self.ramification,
            watermark: one - self.watermark,
        }
    }
}

/// `exp(2πi·k/n)`, exact at multiples of a quarter turn.
pub(crate) fn root_of_unity(k: i64, n: i64) -> Complex64 {
    let k = k.rem_euclid(n);
    match (4 * k % n == 0).then_some(4 * k / n) {
        Some(0) => Complex64::new(1.0, 0.0),
        Some(1) => Complex64::new(0.0, 1.0),
        Some(2) => Complex64::new(-1.0, 0.0),
        Some(3) => Complex64::new(0.0, -1.0),
        _ => Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64),
    }
}

fn compare_for_canonical(a: &PuiseuxSeries, b: &PuiseuxSeries) -> Ordering {
    for ((_, ca), (_, cb)) in a.terms.iter().zip(&b.terms) {
        let tol = TIE_TOLERANCE * (1.0 + ca.norm().max(cb.norm()));
        if (ca.re - cb.re).abs() > tol {
            return ca.re.total_cmp(&cb.re);
        }
        if (ca.im - cb.im).abs() > tol {
            return ca.im.total_cmp(&cb.im);
        }
    }
    Ordering::Equal
}

/// Formats an exponent as `p/q` (or `p` when integral).
pub fn format_exponent(e: &Exponent) -> String {
    if e.is_integer() {
        e.numer().to_string()
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

pub fn parse_exponent(text: &str) -> Result<Exponent> {
    let bad = || Error::InvalidArgument(format!("invalid exponent `{text}`"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(bad());
    }
    Ok(Exponent::new(num, den))
}

impl std::fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, a)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({:.12}{:+.12}i)", a.re, a.im)?;
            if !e.is_zero() {
                if e.is_negative() || !e.is_integer() {
                    write!(f, "*z^({})", format_exponent(e))?;
                } else {
                    write!(f, "*z^{}", format_exponent(e))?;
                }
            }
        }
        Ok(())
    }
}

//! Exact gcd machinery over `Q[x]` and `Q[x][y]`.

use num_traits::{One, Zero};

use super::poly::{rat, BivariatePolynomial, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over `Q`, ascending coefficients, no
/// trailing zeros. The empty vector is zero.
pub type RatPoly = Vec<Rational>;

pub(crate) fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn degree(p: &RatPoly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn poly_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

pub(crate) fn poly_divrem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead = b[db].clone();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem).filter(|&d| d >= db) {
        let factor = &rem[dr] / &lead;
        for (i, c) in b.iter().enumerate() {
            rem[dr - db + i] -= &factor * c;
        }
        quot[dr - db] = factor;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn make_monic(mut p: RatPoly) -> RatPoly {
    if let Some(lead) = p.last().cloned() {
        for c in &mut p {
            *c /= &lead;
        }
    }
    p
}

/// Monic gcd in `Q[x]`; gcd(0, 0) = 0.
pub(crate) fn poly_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
    }
    make_monic(a)
}

pub(crate) fn poly_derivative(p: &RatPoly) -> RatPoly {
    let mut out: RatPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat(i as i64))
        .collect();
    trim(&mut out);
    out
}

/// Yun's square-free decomposition: returns `(factor, multiplicity)` pairs
/// with pairwise coprime, square-free, monic, non-constant factors whose
/// product (with multiplicities) is `p` up to a constant.
pub fn square_free_decomposition(p: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut p = p.clone();
    trim(&mut p);
    if p.len() <= 1 {
        return Vec::new();
    }
    let dp = poly_derivative(&p);
    let a0 = poly_gcd(&p, &dp);
    let mut b = poly_divrem(&p, &a0).0;
    let c = poly_divrem(&dp, &a0).0;
    let mut d = poly_sub(&c, &poly_derivative(&b));
    let mut out = Vec::new();
    let mut k = 1;
    while degree(&b).is_some_and(|d| d > 0) {
        let a = poly_gcd(&b, &d);
        if degree(&a).is_some_and(|d| d > 0) {
            out.push((make_monic(a.clone()), k));
        }
        let nb = poly_divrem(&b, &a).0;
        let c = poly_divrem(&d, &a).0;
        d = poly_sub(&c, &poly_derivative(&nb));
        b = nb;
        k += 1;
    }
    out
}

/// `f` viewed in `Q[x][y]`: index = degree in `y`.
type YPoly = Vec<RatPoly>;

fn to_ypoly(f: &BivariatePolynomial) -> YPoly {
    let dy = f.degree_y().map_or(0, |d| d as usize + 1);
    let mut out: YPoly = vec![Vec::new(); dy];
    for (&(i, j), c) in f.terms() {
        let slot = &mut out[j as usize];
        if slot.len() <= i as usize {
            slot.resize(i as usize + 1, Rational::zero());
        }
        slot[i as usize] = c.clone();
    }
    for slot in &mut out {
        trim(slot);
    }
    out
}

fn from_ypoly(p: &YPoly) -> BivariatePolynomial {
    BivariatePolynomial::from_terms(p.iter().enumerate().flat_map(|(j, cx)| {
        cx.iter()
            .enumerate()
            .map(move |(i, c)| ((i as u32, j as u32), c.clone()))
    }))
}

fn trim_y(p: &mut YPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn content(p: &YPoly) -> RatPoly {
    p.iter()
        .fold(Vec::new(), |acc, c| if acc.is_empty() { make_monic(c.clone()) } else { poly_gcd(&acc, c) })
}

fn primitive_part(p: &YPoly) -> YPoly {
    let cont = content(p);
    if cont.is_empty() {
        return p.clone();
    }
    p.iter().map(|c| poly_divrem(c, &cont).0).collect()
}

fn pseudo_remainder(a: &YPoly, b: &YPoly) -> YPoly {
    let db = b.len() - 1;
    let lead_b = &b[db];
    let mut r = a.clone();
    trim_y(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lead_r = r[dr].clone();
        let shift = dr - db;
        let mut next: YPoly = r.iter().map(|c| poly_mul(c, lead_b)).collect();
        for (i, c) in b.iter().enumerate() {
            next[shift + i] = poly_sub(&next[shift + i], &poly_mul(c, &lead_r));
        }
        next.truncate(dr);
        r = next;
        trim_y(&mut r);
    }
    r
}

/// Gcd in `Q[x, y]`, normalized so its lexicographic leading coefficient
/// (`y` before `x`) is 1.
pub fn bivariate_gcd(f: &BivariatePolynomial, g: &BivariatePolynomial) -> BivariatePolynomial {
    if f.is_zero() {
        return normalize(g);
    }
    if g.is_zero() {
        return normalize(f);
    }
    let (a, b) = (to_ypoly(f), to_ypoly(g));
    let cont = poly_gcd(&content(&a), &content(&b));
    let (mut a, mut b) = (primitive_part(&a), primitive_part(&b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            // b is a nonzero element of Q[x] and a, b are primitive: the
            // primitive gcd is a unit.
            a = vec![vec![Rational::one()]];
            break;
        }
        let r = pseudo_remainder(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive_part(&r) };
    }
    let g: YPoly = a.iter().map(|c| poly_mul(c, &cont)).collect();
    normalize(&from_ypoly(&g))
}

fn normalize(f: &BivariatePolynomial) -> BivariatePolynomial {
    match f.lex_leading() {
        Some((_, lead)) => {
            let inv = Rational::one() / lead;
            f.scale(&inv)
        }
        None => f.clone(),
    }
}

fn eval_x(p: &YPoly, t: &Rational) -> RatPoly {
    let mut out: RatPoly = p
        .iter()
        .map(|cx| cx.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c))
        .collect();
    trim(&mut out);
    out
}

/// Exact test that a primitive `p` has no repeated factor of positive
/// degree in `y`, by specializing `x` where the leading coefficient survives.
/// `None` means every specialization tried was inconclusive.
fn specialization_says_square_free(p: &YPoly) -> Option<bool> {
    let lead = p.last()?;
    // small points first; x = 0 is often special, so it goes last
    [3i64, -2, 5, -7, 11, 1, -1, 0]
        .iter()
        .map(|&n| Rational::from_integer(n.into()))
        .filter(|t| !lead.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c).is_zero())
        .any(|t| {
            let u = eval_x(p, &t);
            // a repeated factor h^2 of p stays a repeated factor of p(t, y)
            // of the same degree in y, so a constant gcd proves square-freeness
            degree(&poly_gcd(&u, &poly_derivative(&u))) == Some(0)
        })
        .then_some(true)
}

/// Removes repeated factors: `f / gcd(f, ∂f/∂x, ∂f/∂y)`.
///
/// The content in `Q[x]` and the primitive part are treated separately; the
/// primitive part usually passes an exact specialization test, which avoids
/// the bivariate gcd.
pub fn square_free_part(f: &BivariatePolynomial) -> Result<BivariatePolynomial> {
    if f.is_constant() {
        return Err(Error::Degenerate("square-free part of a constant".into()));
    }
    let a = to_ypoly(f);
    let cont = content(&a);
    let prim = primitive_part(&a);
    let cont_sf = if degree(&cont).is_some_and(|d| d > 0) {
        poly_divrem(&cont, &poly_gcd(&cont, &poly_derivative(&cont))).0
    } else {
        vec![Rational::one()]
    };
    let prim_sf = if prim.len() <= 1 || specialization_says_square_free(&prim) == Some(true) {
        from_ypoly(&prim)
    } else {
        let pf = from_ypoly(&prim);
        let g = bivariate_gcd(&bivariate_gcd(&pf, &pf.derivative_x()), &pf.derivative_y());
        if g.is_constant() {
            pf
        } else {
            pf.div_exact(&g)
                .ok_or_else(|| Error::Degenerate("gcd does not divide polynomial".into()))?
        }
    };
    let out = &from_ypoly(&vec![cont_sf]) * &prim_sf;
    if out.total_degree() == f.total_degree() {
        // nothing removed: hand back the input unchanged
        return Ok(f.clone());
    }
    Ok(normalize(&out))
}

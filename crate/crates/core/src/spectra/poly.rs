//! Integer and real polynomials. Coefficients are stored constant term first.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic polynomial `det(xI - A) = Σ c_k x^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.last() {
            Some(lead) if lead.is_one() => Ok(Self { coeffs }),
            _ => Err(Error::PolyParse("polynomial must be monic".into())),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub(crate) fn from_coeffs_unchecked(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(coeffs.last().is_some_and(One::is_one));
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Space-separated decimal coefficients, constant term first.
    pub fn to_text(&self) -> String {
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| Error::PolyParse(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::PolyParse("no coefficients".into()));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn to_real(&self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(big_to_f64).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Real roots with multiplicity, descending. Every characteristic
    /// polynomial of a symmetric matrix has only real roots; the square-free
    /// parts are solved numerically and polished.
    pub fn real_roots(&self) -> Vec<f64> {
        let mut roots = Vec::with_capacity(self.degree());
        for (mult, factor) in square_free_factors(&self.coeffs) {
            for r in RealPoly::new(factor.iter().map(big_to_f64).collect()).roots() {
                roots.extend(std::iter::repeat_n(r.re, mult));
            }
        }
        roots.sort_by(|a, b| b.total_cmp(a));
        roots
    }
}

/// Serialized as decimal strings, constant term first.
impl Serialize for CharPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        CharPoly::parse(&raw.join(" ")).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn is_zero_poly(p: &[BigInt]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    if p.len() <= 1 {
        return vec![BigInt::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let p = trim(p.to_vec());
    let c = content(&p);
    if c.is_zero() {
        return p;
    }
    let sign = if p.last().unwrap().is_negative() { -c } else { c };
    p.iter().map(|x| x / &sign).collect()
}

/// Pseudo-remainder of `a` by `b` (deg b >= 0, b nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    while !is_zero_poly(&r) && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lead;
        }
        for (k, bc) in b.iter().enumerate() {
            r[dr - db + k] -= &lr * bc;
        }
        r = trim(r);
        if r.len() - 1 == dr {
            // leading term cancelled to zero but trim kept a constant
            break;
        }
    }
    r
}

fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !is_zero_poly(&b) {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if is_zero_poly(&r) { vec![BigInt::zero()] } else { primitive(&r) };
    }
    primitive(&a)
}

/// Exact division; `b` must divide `a` over the rationals and the result
/// must be integral (true for the primitive factors used here).
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    if r.len() - 1 < db {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let (coef, rem) = r[k + db].div_rem(&b[db]);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &coef * bc;
        }
        q[k] = coef;
    }
    q
}

/// Yun's square-free factorization: returns `(multiplicity, factor)` pairs
/// with non-constant primitive factors.
pub(crate) fn square_free_factors(p: &[BigInt]) -> Vec<(usize, Vec<BigInt>)> {
    let f = primitive(p);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let df = derivative(&f);
    let a0 = poly_gcd(&f, &df);
    let mut b = exact_div(&f, &a0);
    let mut c = exact_div(&df, &a0);
    let mut d: Vec<BigInt> = {
        let db = derivative(&b);
        let len = c.len().max(db.len());
        (0..len)
            .map(|k| c.get(k).cloned().unwrap_or_default() - db.get(k).cloned().unwrap_or_default())
            .collect()
    };
    let mut i = 1;
    while b.len() > 1 {
        let a = if is_zero_poly(&d) { b.clone() } else { poly_gcd(&b, &d) };
        if a.len() > 1 {
            out.push((i, a.clone()));
        }
        b = exact_div(&b, &a);
        c = exact_div(&d, &a);
        let db = derivative(&b);
        let len = c.len().max(db.len());
        d = (0..len)
            .map(|k| c.get(k).cloned().unwrap_or_default() - db.get(k).cloned().unwrap_or_default())
            .collect();
        i += 1;
    }
    out
}

/// Polynomial with real coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealPoly {
    pub coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    fn eval_complex(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// Largest absolute coefficient difference; shorter polys are zero-padded.
    pub fn max_coeff_diff(&self, other: &RealPoly) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or(0.0);
                let b = other.coeffs.get(k).copied().unwrap_or(0.0);
                (a - b).abs()
            })
            .fold(0.0, f64::max)
    }

    /// All complex roots by Aberth iteration followed by Newton polishing.
    pub fn roots(&self) -> Vec<Complex64> {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        let d = coeffs.len() - 1;
        if d == 0 {
            return Vec::new();
        }
        let lead = coeffs[d];
        let monic = RealPoly::new(coeffs.iter().map(|c| c / lead).collect());
        if d == 1 {
            return vec![Complex64::new(-monic.coeffs[0], 0.0)];
        }
        // Cauchy bound on root moduli
        let bound = 1.0
            + monic.coeffs[..d]
                .iter()
                .map(|c| c.abs())
                .fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..d)
            .map(|k| {
                let theta = std::f64::consts::TAU * (k as f64 + 0.25) / d as f64 + 0.4;
                Complex64::from_polar(bound * 0.5 + 0.1, theta)
            })
            .collect();
        for _ in 0..2000 {
            let mut moved = 0.0f64;
            for i in 0..d {
                let (p, dp) = monic.eval_complex(z[i]);
                if p.norm() == 0.0 {
                    continue;
                }
                let ratio = p / dp;
                let repulsion: Complex64 = (0..d)
                    .filter(|&j| j != i)
                    .map(|j| 1.0 / (z[i] - z[j]))
                    .sum();
                let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
                if step.is_finite() {
                    z[i] -= step;
                    moved = moved.max(step.norm() / (1.0 + z[i].norm()));
                }
            }
            if moved < 1e-15 {
                break;
            }
        }
        for zi in z.iter_mut() {
            for _ in 0..3 {
                let (p, dp) = monic.eval_complex(*zi);
                if dp.norm() == 0.0 {
                    break;
                }
                let step = p / dp;
                if !step.is_finite() {
                    break;
                }
                *zi -= step;
            }
        }
        z
    }

    /// Real parts of the roots whose imaginary part is below `imag_tol`,
    /// descending.
    pub fn real_roots(&self, imag_tol: f64) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .roots()
            .into_iter()
            .filter(|z| z.im.abs() <= imag_tol)
            .map(|z| z.re)
            .collect();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn display_and_text_forms() {
        let p = CharPoly::from_i64(&[4, 5, -4, -6, 0, 1]).unwrap();
        assert_eq!(p.to_string(), "x^5 - 6x^3 - 4x^2 + 5x + 4");
        assert_eq!(p.to_text(), "4 5 -4 -6 0 1");
        assert_eq!(CharPoly::parse(&p.to_text()).unwrap(), p);
        assert!(CharPoly::parse("1 2").is_err());
        assert!(CharPoly::parse("1 x 1").is_err());
        assert!(CharPoly::parse("").is_err());
    }

    #[test]
    fn yun_splits_multiplicities() {
        // (x-1)^3 (x+2)^2 x
        let p = poly_mul(
            &poly_mul(&poly_mul(&big(&[-1, 1]), &poly_mul(&big(&[-1, 1]), &big(&[-1, 1]))), &poly_mul(&big(&[2, 1]), &big(&[2, 1]))),
            &big(&[0, 1]),
        );
        let factors = square_free_factors(&p);
        let mults: Vec<usize> = factors.iter().map(|f| f.0).collect();
        assert_eq!(mults, vec![1, 2, 3]);
        assert_eq!(factors[0].1, big(&[0, 1]));
        assert_eq!(factors[1].1, big(&[2, 1]));
        assert_eq!(factors[2].1, big(&[-1, 1]));
    }

    #[test]
    fn real_roots_of_charpoly_with_multiplicity() {
        // x^4 (x+2)^2 (x-4): complement of F_3
        let mut p = big(&[1]);
        for f in [[0, 1], [0, 1], [0, 1], [0, 1], [2, 1], [2, 1], [-4, 1]] {
            p = poly_mul(&p, &big(&f));
        }
        let roots = CharPoly::from_coeffs(p).unwrap().real_roots();
        let want = [4.0, 0.0, 0.0, 0.0, 0.0, -2.0, -2.0];
        for (r, w) in roots.iter().zip(want) {
            assert!((r - w).abs() < 1e-12, "{roots:?}");
        }
    }

    #[test]
    fn aberth_on_quadratic_and_complex_pair() {
        let q = RealPoly::new(vec![-2.0, -1.0, 1.0]);
        let r = q.real_roots(1e-9);
        assert!((r[0] - 2.0).abs() < 1e-13 && (r[1] + 1.0).abs() < 1e-13);
        let c = RealPoly::new(vec![1.0, 0.0, 1.0]);
        assert!(c.real_roots(1e-9).is_empty());
        assert_eq!(c.roots().len(), 2);
    }
}

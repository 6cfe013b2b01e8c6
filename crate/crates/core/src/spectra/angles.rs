use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::charpoly::char_poly;
use super::eigen::{eigen_decomposition, Spectrum, TAU_GROUP};
use super::poly::{big_to_f64, poly_mul, RealPoly};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MainAngle {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    pub beta: f64,
}

/// One entry per distinct eigenvalue, descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MainAngles {
    pub order: usize,
    pub angles: Vec<MainAngle>,
}

impl MainAngles {
    /// `β²` at the eigenvalue within `TAU_GROUP` of `mu`, zero when `mu` is
    /// not an eigenvalue.
    pub fn beta_sq_at(&self, mu: f64) -> f64 {
        self.angles
            .iter()
            .find(|a| (a.eigenvalue - mu).abs() < TAU_GROUP)
            .map_or(0.0, |a| a.beta * a.beta)
    }

    pub fn sum_beta_sq(&self) -> f64 {
        self.angles.iter().map(|a| a.beta * a.beta).sum()
    }

    /// `n Σ μ_i β_i²`, which equals the degree sum `2|E|`.
    pub fn weighted_sum(&self) -> f64 {
        self.order as f64
            * self
                .angles
                .iter()
                .map(|a| a.eigenvalue * a.beta * a.beta)
                .sum::<f64>()
    }
}

pub fn main_angles(g: &Graph) -> MainAngles {
    let n = g.order();
    let (values, vectors) = eigen_decomposition(g);
    let spectrum = Spectrum::from_values(values.clone(), TAU_GROUP);
    let mut angles = Vec::with_capacity(spectrum.groups.len());
    let mut idx = 0;
    for &(mu, mult) in &spectrum.groups {
        let beta_sq: f64 = vectors[idx..idx + mult]
            .iter()
            .map(|v| {
                let s: f64 = v.iter().sum();
                s * s / n as f64
            })
            .sum();
        angles.push(MainAngle {
            eigenvalue: mu,
            multiplicity: mult,
            beta: beta_sq.sqrt().min(1.0),
        });
        idx += mult;
    }
    MainAngles { order: n, angles }
}

/// `(b, c)` = squared main angles at eigenvalues `1` and `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplementAngleParams {
    pub b: f64,
    pub c: f64,
}

impl ComplementAngleParams {
    pub fn new(b: f64, c: f64) -> Result<Self> {
        if !(b >= 0.0 && c >= 0.0 && b + c <= 1.0 + 1e-12) {
            return Err(Error::Precondition(format!(
                "angle parameters need b, c >= 0 and b + c <= 1 (got b={b}, c={c})"
            )));
        }
        Ok(Self { b, c })
    }

    pub fn from_angles(angles: &MainAngles) -> Result<Self> {
        Self::new(angles.beta_sq_at(1.0), angles.beta_sq_at(-1.0))
    }
}

/// `(-1)^n P_G(-x-1)`, i.e. `Π (x + 1 + λ_j)`, exactly.
pub(crate) fn shifted_reflection(g: &Graph) -> Vec<BigInt> {
    let p = char_poly(g);
    let n = p.degree();
    // substitute x -> -(x+1): Σ c_k (-1)^k (x+1)^k, then multiply by (-1)^n
    let mut out = vec![BigInt::from(0); n + 1];
    let mut pow = vec![BigInt::from(1)];
    for (k, c) in p.coeffs().iter().enumerate() {
        let sign = if (k + n).is_multiple_of(2) { 1 } else { -1 };
        for (i, b) in pow.iter().enumerate() {
            out[i] += c * b * sign;
        }
        pow = poly_mul(&pow, &[BigInt::from(1), BigInt::from(1)]);
    }
    out
}

/// Divides by `(x - r)` where `r` is a root; the remainder is dropped.
/// Runs from the leading coefficient when `|r| <= 1` and from the constant
/// term otherwise, so rounding errors shrink instead of growing by `|r|`
/// per step.
fn deflate(p: &[f64], r: f64) -> Vec<f64> {
    let d = p.len() - 1;
    let mut q = vec![0.0; d];
    if r.abs() <= 1.0 {
        let mut carry = 0.0;
        for k in (1..=d).rev() {
            carry = p[k] + r * carry;
            q[k - 1] = carry;
        }
    } else {
        // p = (x - r) q  =>  q_0 = -p_0 / r,  q_k = (q_{k-1} - p_k) / r
        let mut carry = 0.0;
        for k in 0..d {
            carry = (carry - p[k]) / r;
            q[k] = carry;
        }
    }
    q
}

/// Complement characteristic polynomial from the spectrum and main angles:
/// `P(x) = (-1)^n P_G(-x-1) (1 - n Σ β_i² / (x + 1 + μ_i))`.
pub fn complement_char_poly_via_angles(g: &Graph) -> RealPoly {
    let n = g.order();
    let q: Vec<f64> = shifted_reflection(g).iter().map(big_to_f64).collect();
    let mut out = q.clone();
    for angle in &main_angles(g).angles {
        let w = n as f64 * angle.beta * angle.beta;
        if w == 0.0 {
            continue;
        }
        let part = deflate(&q, -1.0 - angle.eigenvalue);
        for (k, v) in part.iter().enumerate() {
            out[k] -= w * v;
        }
    }
    RealPoly::new(out)
}

/// Quartic whose roots, together with `-2` and `0`, are the eigenvalues of
/// the complement of a graph cospectral with `F_n`, parametrised by the
/// squared main angles at `1` and `-1`.
pub fn complement_candidate_quartic(n: usize, p: ComplementAngleParams) -> Result<RealPoly> {
    if n <= 2 {
        return Err(Error::Parameter {
            family: "complement_candidate_quartic",
            value: n,
            expected: "n > 2",
        });
    }
    let p = ComplementAngleParams::new(p.b, p.c)?;
    let (b, c, nf) = (p.b, p.c, n as f64);
    let n2 = nf * nf;
    Ok(RealPoly::new(vec![
        8.0 * c * n2 - 4.0 * c * nf - 4.0 * c,
        4.0 * b * n2 + 4.0 * c * n2 - 2.0 * c * nf + 2.0 * b * nf - 2.0 * c,
        4.0 - 4.0 * nf,
        4.0 - 2.0 * nf,
        1.0,
    ]))
}

/// Two distinct non-adjacent vertices with the same neighbourhood.
pub fn has_duplicate_open_neighborhood(g: &Graph) -> bool {
    let rows = g.rows();
    (0..rows.len()).any(|u| (u + 1..rows.len()).any(|v| rows[u] == rows[v]))
}

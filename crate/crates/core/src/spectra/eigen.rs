use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Eigenvalues closer than this are treated as one multiple eigenvalue.
pub const TAU_GROUP: f64 = 1e-7;
/// Comparison tolerance for eigenvalue inequalities.
pub const TAU_EIG: f64 = 1e-9;
/// Agreement required with values quoted to five or six significant digits.
pub const TAU_FIXTURE: f64 = 5e-6;

const OFF_DIAGONAL_TARGET: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    /// Descending.
    pub values: Vec<f64>,
    /// `(representative, multiplicity)` in descending order.
    pub groups: Vec<(f64, usize)>,
}

impl Spectrum {
    /// Sorts `values` descending and groups runs whose spread from the first
    /// member stays below `tau`. The representative is the run's mean.
    pub fn from_values(mut values: Vec<f64>, tau: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            if i == values.len() || values[start] - values[i] >= tau {
                let run = &values[start..i];
                if !run.is_empty() {
                    groups.push((run.iter().sum::<f64>() / run.len() as f64, run.len()));
                }
                start = i;
            }
        }
        Self { values, groups }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "values": self.values,
            "groups": self.groups.iter().map(|&(v, m)| serde_json::json!([v, m])).collect::<Vec<_>>(),
        })
    }
}

/// Eigenvalues (descending) and orthonormal eigenvectors (`vectors[i]`
/// belongs to `values[i]`) of a symmetric matrix given row-major.
pub fn jacobi_eigen(n: usize, mut a: Vec<f64>) -> (Vec<f64>, Vec<Vec<f64>>) {
    assert_eq!(a.len(), n * n);
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off < OFF_DIAGONAL_TARGET {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&col| (0..n).map(|k| v[k * n + col]).collect())
        .collect();
    (values, vectors)
}

pub(crate) fn adjacency_f64(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut a = vec![0.0; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    a
}

pub fn eigen_decomposition(g: &Graph) -> (Vec<f64>, Vec<Vec<f64>>) {
    jacobi_eigen(g.order(), adjacency_f64(g))
}

pub fn eigenvalues(g: &Graph) -> Spectrum {
    let n = g.order();
    if g.edge_count() == 0 {
        return Spectrum::from_values(vec![0.0; n], TAU_GROUP);
    }
    let (values, _) = jacobi_eigen(n, adjacency_f64(g));
    Spectrum::from_values(values, TAU_GROUP)
}

/// Closed form: `(1 ± sqrt(8n+1))/2` once each, `1` with multiplicity
/// `n-1` and `-1` with multiplicity `n`.
pub fn friendship_spectrum(n: usize) -> Result<Spectrum> {
    if n == 0 {
        return Err(Error::Parameter {
            family: "friendship_spectrum",
            value: n,
            expected: "n >= 1",
        });
    }
    let root = ((8 * n + 1) as f64).sqrt();
    let mut values = vec![(1.0 + root) / 2.0, (1.0 - root) / 2.0];
    values.extend(std::iter::repeat_n(1.0, n - 1));
    values.extend(std::iter::repeat_n(-1.0, n));
    Ok(Spectrum::from_values(values, TAU_GROUP))
}

/// Cauchy interlacing of an order-`m` spectrum inside an order-`n` one:
/// `λ_j >= μ_j >= λ_{j+n-m}` up to `tau`.
pub fn interlaces_with(sub: &Spectrum, sup: &Spectrum, tau: f64) -> Result<bool> {
    let (m, n) = (sub.len(), sup.len());
    if m > n {
        return Err(Error::Precondition(format!(
            "interlacing needs the smaller spectrum first ({m} > {n})"
        )));
    }
    Ok((0..m).all(|j| {
        let mu = sub.values[j];
        sup.values[j] + tau >= mu && mu >= sup.values[j + n - m] - tau
    }))
}

pub fn interlaces(sub: &Spectrum, sup: &Spectrum) -> Result<bool> {
    interlaces_with(sub, sup, TAU_EIG)
}

pub fn second_largest(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::Precondition(
            "the second largest eigenvalue needs at least two vertices".into(),
        ));
    }
    Ok(eigenvalues(g).values[1])
}

/// Number of eigenvalues strictly below `t - TAU_EIG`.
pub fn count_eigs_below(g: &Graph, t: f64) -> usize {
    eigenvalues(g).values.iter().filter(|&&x| x < t - TAU_EIG).count()
}

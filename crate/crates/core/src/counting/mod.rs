//! Subgraph counts from traces of adjacency powers, induced pattern search,
//! odd hole scanning, and a brute-force embedding counter used as an oracle.

mod holes;
mod pattern;

use serde::{Deserialize, Serialize};

pub use holes::{find_odd_holes_and_antiholes, HoleKind, OddHole, HOLE_SCAN_LIMIT};
pub use pattern::{brute_force_count, contains_induced, CountMode, BRUTE_FORCE_PATTERN_LIMIT};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::closed_walks_per_vertex;

/// `t[i]` is the number of triangles through vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleProfile {
    pub t: Vec<u64>,
}

impl TriangleProfile {
    pub fn total(&self) -> u64 {
        self.t.iter().sum()
    }

    /// `Σ t_i deg_i`.
    pub fn degree_weighted(&self, g: &Graph) -> u64 {
        self.t
            .iter()
            .enumerate()
            .map(|(i, &t)| t * g.degree(i) as u64)
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    #[serde(rename = "c3")]
    pub n_c3: u64,
    #[serde(rename = "c4")]
    pub n_c4: u64,
    #[serde(rename = "c5")]
    pub n_c5: u64,
    #[serde(rename = "c3_star")]
    pub n_c3_star: u64,
}

fn trace(g: &Graph, k: u32) -> u128 {
    closed_walks_per_vertex(g, k).iter().sum()
}

pub fn triangle_profile(g: &Graph) -> TriangleProfile {
    TriangleProfile {
        t: closed_walks_per_vertex(g, 3)
            .into_iter()
            .map(|w| (w / 2) as u64)
            .collect(),
    }
}

/// `tr(A^3) / 6`.
pub fn count_c3(g: &Graph) -> u64 {
    (trace(g, 3) / 6) as u64
}

/// `(tr(A^4) - 2 Σ d_i² + 2|E|) / 8`.
pub fn count_c4(g: &Graph) -> u64 {
    let sq: u128 = (0..g.order()).map(|v| (g.degree(v) as u128).pow(2)).sum();
    let num = trace(g, 4) + 2 * g.edge_count() as u128 - 2 * sq;
    debug_assert_eq!(num % 8, 0);
    (num / 8) as u64
}

/// Triangles with a pendant edge, `Σ t_i (deg_i - 2)`.
pub fn count_c3_star(g: &Graph) -> u64 {
    triangle_profile(g)
        .t
        .iter()
        .enumerate()
        .map(|(i, &t)| t * (g.degree(i) as u64).saturating_sub(2))
        .sum()
}

/// `(tr(A^5) - 30 N(C3) - 10 N(C3*)) / 10`; the division is checked.
pub fn count_c5(g: &Graph) -> Result<u64> {
    let tr5 = trace(g, 5) as i128;
    let rest = tr5 - 30 * i128::from(count_c3(g)) - 10 * i128::from(count_c3_star(g));
    if rest < 0 || rest % 10 != 0 {
        return Err(Error::Inconsistent(format!(
            "closed 5-walks leave remainder {rest} that is not a non-negative multiple of 10"
        )));
    }
    Ok((rest / 10) as u64)
}

pub fn count_report(g: &Graph) -> Result<CountReport> {
    Ok(CountReport {
        n_c3: count_c3(g),
        n_c4: count_c4(g),
        n_c5: count_c5(g)?,
        n_c3_star: count_c3_star(g),
    })
}

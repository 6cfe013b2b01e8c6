//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `k + 1` vertices is grown from a graph on `k` vertices by adding
//! one vertex joined to a subset of the existing ones. The child is kept only
//! when the new vertex lies in the orbit of the child's canonical deletion
//! vertex: among the vertices of minimum `(degree, neighbour degree sum)`,
//! the one placed last by the canonical labeling. Children of one parent are
//! deduplicated by certificate. Every isomorphism class then appears exactly
//! once.
//!
//! Deleting a minimum-degree vertex never lowers the edge density, which
//! gives a lower bound on the edge count of every ancestor of a graph with a
//! prescribed number of edges.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{self, Certificate};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_mask, Graph};

/// Largest order the exhaustive enumerator accepts.
pub const ENUM_LIMIT: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumFilter {
    /// Order of the generated graphs.
    pub max_vertices: usize,
    pub exact_edges: Option<usize>,
    pub min_degree: Option<usize>,
    pub connected_only: bool,
    pub max_edges: Option<usize>,
}

impl EnumFilter {
    pub fn order(n: usize) -> Self {
        Self {
            max_vertices: n,
            exact_edges: None,
            min_degree: None,
            connected_only: false,
            max_edges: None,
        }
    }

    pub fn with_edges(mut self, m: usize) -> Self {
        self.exact_edges = Some(m);
        self
    }

    pub fn with_max_edges(mut self, m: usize) -> Self {
        self.max_edges = Some(m);
        self
    }

    pub fn with_min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.max_vertices;
        if n == 0 || n > ENUM_LIMIT {
            return Err(Error::Scope {
                requested: n,
                limit: ENUM_LIMIT,
            });
        }
        let pairs = n * (n - 1) / 2;
        if let Some(m) = self.exact_edges {
            if m > pairs || self.max_edges.is_some_and(|cap| m > cap) {
                return Err(Error::Precondition(format!(
                    "exact edge count {m} is incompatible with {n} vertices or the edge cap"
                )));
            }
        }
        if let Some(d) = self.min_degree {
            if d >= n.max(1) && !(n == 1 && d == 0) {
                return Err(Error::Precondition(format!(
                    "minimum degree {d} is impossible on {n} vertices"
                )));
            }
        }
        Ok(())
    }

    fn edge_cap(&self) -> usize {
        match (self.exact_edges, self.max_edges) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => usize::MAX,
        }
    }

    /// Smallest edge count an ancestor on `k` vertices can have.
    fn edge_floor(&self, k: usize) -> usize {
        let n = self.max_vertices;
        let Some(m) = self.exact_edges.or(self.min_degree.map(|d| (n * d).div_ceil(2))) else {
            return 0;
        };
        if n < 2 || k < 2 {
            return 0;
        }
        // m * C(k,2) / C(n,2), rounded up
        (m * k * (k - 1)).div_ceil(n * (n - 1))
    }

    fn accepts_final(&self, g: &Graph) -> bool {
        let m = g.edge_count();
        if self.exact_edges.is_some_and(|e| e != m) || m > self.edge_cap() {
            return false;
        }
        if let Some(d) = self.min_degree {
            if (0..g.order()).any(|v| g.degree(v) < d) {
                return false;
            }
        }
        !self.connected_only || g.is_connected()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumOptions {
    /// Graphs of this order are the independent units of parallel work.
    pub split_order: usize,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            split_order: 6,
            workers: None,
        }
    }
}

/// Minimum-key vertices; the key is `(degree, sum of neighbour degrees)`.
fn deletion_candidates(rows: &[u128]) -> u128 {
    let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let mut best = (u32::MAX, u32::MAX);
    let mut mask = 0u128;
    for (v, r) in rows.iter().enumerate() {
        let key = (deg[v], bits(*r).map(|u| deg[u]).sum::<u32>());
        if key < best {
            best = key;
            mask = bit(v);
        } else if key == best {
            mask |= bit(v);
        }
    }
    mask
}

/// Certificate of `rows` if the last vertex is a canonical deletion vertex.
fn accept_child(rows: &[u128]) -> Option<Certificate> {
    let n = rows.len();
    let last = n - 1;
    let cands = deletion_candidates(rows);
    if cands & bit(last) == 0 {
        return None;
    }
    let (lab, cert) = canon::search(rows, None);
    if cands.count_ones() == 1 {
        return Some(cert);
    }
    let w = usize::from(
        *lab.iter()
            .rev()
            .find(|&&v| cands & bit(usize::from(v)) != 0)
            .expect("candidate set is non-empty"),
    );
    if w == last {
        return Some(cert);
    }
    let mark = |v: usize| -> Vec<u32> { (0..n).map(|u| u32::from(u != v)).collect() };
    let same_orbit = canon::certificate(rows, Some(&mark(last))) == canon::certificate(rows, Some(&mark(w)));
    same_orbit.then_some(cert)
}

struct Expander<'a> {
    filter: &'a EnumFilter,
    cap: usize,
}

impl Expander<'_> {
    /// Whether an intermediate graph on `k` vertices can still lead to an
    /// accepted graph. Every bound holds for all induced subgraphs of a
    /// valid final graph, or for its canonical ancestors.
    fn viable(&self, rows: &[u128], edges: usize) -> bool {
        let k = rows.len();
        let n = self.filter.max_vertices;
        if edges > self.cap || edges < self.filter.edge_floor(k) {
            return false;
        }
        if let Some(m) = self.filter.exact_edges {
            let room = n * (n - 1) / 2 - k * (k.saturating_sub(1)) / 2;
            if edges + room < m {
                return false;
            }
        }
        if let Some(d) = self.filter.min_degree {
            let slack = n - k;
            if rows.iter().any(|r| (r.count_ones() as usize) + slack < d) {
                return false;
            }
        }
        true
    }

    /// Children of `rows` that pass the canonicity test and the bounds.
    fn children(&self, rows: &[u128], edges: usize) -> Vec<(Vec<u128>, usize)> {
        let k = rows.len();
        let mut seen: HashSet<Certificate> = HashSet::new();
        let mut out = Vec::new();
        let mut child: Vec<u128> = rows.to_vec();
        child.push(0);
        let min_deg = rows.iter().map(|r| r.count_ones()).min().unwrap_or(0);
        for s in 0..(1u128 << k) {
            let d = s.count_ones();
            // the new vertex must have minimum degree in the child
            if d > min_deg + 1 {
                continue;
            }
            let ce = edges + d as usize;
            if ce > self.cap {
                continue;
            }
            for (v, slot) in child.iter_mut().enumerate().take(k) {
                *slot = rows[v] | if s & bit(v) != 0 { bit(k) } else { 0 };
            }
            child[k] = s & low_mask(k);
            if !self.viable(&child, ce) {
                continue;
            }
            let Some(cert) = accept_child(&child) else {
                continue;
            };
            if seen.insert(cert) {
                out.push((child.clone(), ce));
            }
        }
        out
    }

    fn expand(&self, rows: Vec<u128>, edges: usize, visit: &mut dyn FnMut(Graph)) {
        if rows.len() == self.filter.max_vertices {
            let g = Graph::from_rows_unchecked(rows);
            if self.filter.accepts_final(&g) {
                visit(g);
            }
            return;
        }
        for (c, e) in self.children(&rows, edges) {
            self.expand(c, e, visit);
        }
    }

    /// All viable accepted graphs of order `k`, in generation order.
    fn level(&self, k: usize) -> Vec<(Vec<u128>, usize)> {
        let mut frontier = vec![(vec![0u128], 0usize)];
        for _ in 1..k {
            frontier = frontier
                .iter()
                .flat_map(|(r, e)| self.children(r, *e))
                .collect();
        }
        frontier.retain(|(r, e)| self.viable(r, *e));
        frontier
    }
}

/// Runs `visit` over every generated graph, with one accumulator per unit of
/// parallel work. Accumulators come back in a fixed order that does not
/// depend on the number of workers.
pub fn fold_graphs<A, I, V>(filter: &EnumFilter, opts: &EnumOptions, init: I, visit: V) -> Result<Vec<A>>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, Graph) + Sync,
{
    filter.validate()?;
    let ex = Expander {
        filter,
        cap: filter.edge_cap(),
    };
    let split = opts.split_order.clamp(1, filter.max_vertices);
    let run = || -> Vec<A> {
        let roots = ex.level(split);
        roots
            .into_par_iter()
            .map(|(rows, e)| {
                let mut acc = init();
                ex.expand(rows, e, &mut |g| visit(&mut acc, g));
                acc
            })
            .collect()
    };
    match opts.workers {
        None => Ok(run()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
            Ok(pool.install(run))
        }
    }
}

/// All graphs passing `filter`, one per isomorphism class.
pub fn enumerate_graphs(filter: &EnumFilter) -> Result<Vec<Graph>> {
    enumerate_graphs_with(filter, &EnumOptions::default())
}

pub fn enumerate_graphs_with(filter: &EnumFilter, opts: &EnumOptions) -> Result<Vec<Graph>> {
    let parts = fold_graphs(filter, opts, Vec::new, |acc: &mut Vec<Graph>, g| acc.push(g))?;
    Ok(parts.into_iter().flatten().collect())
}

pub fn count_graphs(filter: &EnumFilter, opts: &EnumOptions) -> Result<u64> {
    let parts = fold_graphs(filter, opts, || 0u64, |acc, _| *acc += 1)?;
    Ok(parts.into_iter().sum())
}

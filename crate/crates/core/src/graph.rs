//! Simple undirected graphs stored as one adjacency bitset per vertex.
//!
//! Every constructor validates the order and produces a symmetric, loop-free
//! adjacency. Graphs are immutable values; all operations return new graphs.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count (one `u128` word per adjacency row).
pub const MAX_VERTICES: usize = 128;

#[inline]
pub(crate) const fn bit(v: usize) -> u128 {
    1u128 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Iterates the set bits of a row in ascending order.
pub(crate) fn bits(mut word: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let v = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
}

/// Degrees `deg(v_0), …, deg(v_{n-1})` in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    pub degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn min(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Number of vertices of degree exactly `d`.
    pub fn count(&self, d: usize) -> usize {
        self.degrees.iter().filter(|&&x| x == d).count()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::Order(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u128; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::Vertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self { n, adj })
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u128>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Vertex {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    order: n,
                });
            }
            if row & bit(i) != 0 {
                return Err(Error::Loop(i));
            }
            for j in bits(row) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { n, adj: rows })
    }

    /// Caller guarantees the rows are symmetric, loop-free and within `1..=128`.
    pub(crate) fn from_rows_unchecked(rows: Vec<u128>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_VERTICES);
        Self {
            n: rows.len(),
            adj: rows,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u128] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u128 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence {
            degrees: (0..self.n).map(|v| self.degree(v)).collect(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u].checked_shr(u as u32 + 1).unwrap_or(0)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mask = low_mask(self.n);
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & mask & !bit(v))
            .collect();
        Self { n: self.n, adj }
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in ascending original order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut sel: Vec<usize> = vertices.to_vec();
        sel.sort_unstable();
        sel.dedup();
        if sel.is_empty() {
            return Err(Error::EmptySelection);
        }
        if let Some(&v) = sel.iter().find(|&&v| v >= self.n) {
            return Err(Error::Vertex {
                vertex: v,
                order: self.n,
            });
        }
        let adj = sel
            .iter()
            .map(|&u| {
                sel.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(u, w))
                    .fold(0u128, |acc, (j, _)| acc | bit(j))
            })
            .collect();
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Induced subgraph on the vertices of a bitmask.
    pub fn induced_by_mask(&self, mask: u128) -> Result<Self> {
        let sel: Vec<usize> = bits(mask).collect();
        self.induced_subgraph(&sel)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {} for a graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u128;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::Precondition("not a permutation".into()));
            }
            seen |= bit(p);
        }
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Self {
        let mut adj = vec![0u128; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Self { n: self.n, adj }
    }

    /// Connected components by breadth-first search, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u128;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen |= bit(start);
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for w in bits(self.adj[u] & !seen) {
                    seen |= bit(w);
                    queue.push_back(w);
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0u128;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == low_mask(self.n)
    }

    /// `true` iff every two distinct vertices have exactly one common neighbour.
    pub fn has_unique_common_neighbors(&self) -> bool {
        (0..self.n).all(|u| {
            (u + 1..self.n).all(|v| (self.adj[u] & self.adj[v]).count_ones() == 1)
        })
    }

    /// Graphviz DOT text: vertex ids `0..n`, undirected edges, no attributes.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

/// Friendship graph: `n` triangles sharing vertex 0; triangle `k` is `{0, 2k-1, 2k}`.
pub fn friendship(n: usize) -> Result<Graph> {
    if n == 0 || 2 * n + 1 > MAX_VERTICES {
        return Err(Error::Parameter {
            family: "friendship",
            value: n,
            expected: "1 <= n <= 63",
        });
    }
    let mut edges = Vec::with_capacity(3 * n);
    for k in 1..=n {
        let (a, b) = (2 * k - 1, 2 * k);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::from_edges(2 * n + 1, &edges)
}

/// `K_{2n}` minus the perfect matching `{2k, 2k+1}`.
pub fn cocktail_party(n: usize) -> Result<Graph> {
    if n == 0 || 2 * n > MAX_VERTICES {
        return Err(Error::Parameter {
            family: "cocktail_party",
            value: n,
            expected: "1 <= n <= 64",
        });
    }
    let k = complete(2 * n)?;
    let adj = (0..2 * n).map(|v| k.adj[v] & !bit(v ^ 1)).collect();
    Ok(Graph::from_rows_unchecked(adj))
}

/// Join of a new vertex (the last one) with every vertex of `g`.
pub fn cone(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n + 1 > MAX_VERTICES {
        return Err(Error::Order(n + 1));
    }
    let mut adj: Vec<u128> = g.adj.iter().map(|&r| r | bit(n)).collect();
    adj.push(low_mask(n));
    Ok(Graph::from_rows_unchecked(adj))
}

pub fn cycle(k: usize) -> Result<Graph> {
    if !(3..=MAX_VERTICES).contains(&k) {
        return Err(Error::Parameter {
            family: "cycle",
            value: k,
            expected: "3 <= k <= 128",
        });
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &edges)
}

pub fn path(k: usize) -> Result<Graph> {
    check_order(k)?;
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges)
}

pub fn complete(k: usize) -> Result<Graph> {
    check_order(k)?;
    let mask = low_mask(k);
    Ok(Graph::from_rows_unchecked(
        (0..k).map(|v| mask & !bit(v)).collect(),
    ))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    check_order(a + b)?;
    let left = low_mask(a);
    let right = low_mask(a + b) & !left;
    Ok(Graph::from_rows_unchecked(
        (0..a + b)
            .map(|v| if v < a { right } else { left })
            .collect(),
    ))
}

/// Star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    complete_bipartite(1, k)
}

/// Vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    check_order(n + m)?;
    let mut adj = g.adj.clone();
    adj.extend(h.adj.iter().map(|&r| r << n));
    Ok(Graph::from_rows_unchecked(adj))
}

/// `k` disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::EmptySelection);
    }
    let mut out = g.clone();
    for _ in 1..k {
        out = disjoint_union(&out, g)?;
    }
    Ok(out)
}

/// Tensor product: `(u, v) ~ (u', v')` iff `u ~ u'` in `g` and `v ~ v'` in `h`.
/// Vertex `(u, v)` is numbered `u * |h| + v`.
pub fn kronecker_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |gu, _, hv, _| gu && hv)
}

/// Cartesian product: `(u, v) ~ (u', v')` iff one coordinate is equal and the
/// other adjacent. `P_2 □ P_3` is the domino (two 4-cycles sharing an edge).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |gu, same_g, hv, same_h| (same_g && hv) || (gu && same_h))
}

/// `rule(g-adjacent, g-equal, h-adjacent, h-equal)` decides adjacency of two
/// distinct product vertices.
fn product(
    g: &Graph,
    h: &Graph,
    rule: impl Fn(bool, bool, bool, bool) -> bool,
) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    check_order(n * m)?;
    let mut adj = vec![0u128; n * m];
    for (u1, u2) in (0..n).flat_map(|a| (0..n).map(move |b| (a, b))) {
        for (v1, v2) in (0..m).flat_map(|a| (0..m).map(move |b| (a, b))) {
            let (x, y) = (u1 * m + v1, u2 * m + v2);
            if x == y {
                continue;
            }
            if rule(g.has_edge(u1, u2), u1 == u2, h.has_edge(v1, v2), v1 == v2) {
                adj[x] |= bit(y);
            }
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

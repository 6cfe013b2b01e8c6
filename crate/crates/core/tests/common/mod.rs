#![allow(dead_code)]

use rand::Rng;
use windmill::Graph;

/// Graph on `n` vertices whose upper-triangle bits (graph6 order) are `mask`.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Upper-triangle bits of `g` relabeled by `perm` (vertex v -> perm[v]),
/// packed in graph6 order with the first pair as the most significant bit.
fn packed_bits(g: &Graph, inv: &[usize]) -> u64 {
    let n = g.order();
    let mut out = 0u64;
    for j in 1..n {
        for i in 0..j {
            out = (out << 1) | u64::from(g.has_edge(inv[i], inv[j]));
        }
    }
    out
}

/// Canonical key by exhaustive relabeling: the smallest packed bit string.
/// Independent of the library's canonical labeling.
pub fn brute_canonical_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| packed_bits(g, p)).min().unwrap()
}

/// One representative of every isomorphism class with at most `max_n`
/// vertices.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    use windmill::search::{enumerate_graphs, EnumFilter};
    (1..=max_n)
        .flat_map(|n| enumerate_graphs(&EnumFilter::order(n)).unwrap())
        .collect()
}

pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<(usize, usize)> = pairs.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn shuffled(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

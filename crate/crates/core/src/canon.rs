//! Canonical labeling by individualization-refinement.
//!
//! The search tree is explored depth first. Each node holds an ordered
//! equitable partition; children individualize one vertex of the first
//! non-singleton cell. A leaf (discrete partition) yields a certificate: the
//! upper-triangle adjacency bits of the relabeled graph in graph6 order. The
//! canonical leaf is the one with the lexicographically smallest certificate.
//!
//! Automorphisms discovered by equal certificates prune the tree in two ways:
//! a jump back to the node where the two leaf paths diverge, and orbit
//! pruning among siblings using automorphisms that fix the current path.

use serde::{Deserialize, Serialize};

use crate::graph::{bit, low_mask, Graph};
use crate::graph6;

/// Canonical relabeling: vertex `v` of the input becomes vertex `perm[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalLabel {
    pub perm: Vec<usize>,
    pub canon_g6: String,
}

/// Packed certificate; equal certificates mean isomorphic graphs
/// (for the same vertex count and initial colouring).
pub(crate) type Certificate = Vec<u64>;

pub fn canonical_label(g: &Graph) -> CanonicalLabel {
    let (lab, _) = search(g.rows(), None);
    let mut perm = vec![0usize; g.order()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[usize::from(v)] = pos;
    }
    let canon = g.permute_unchecked(&perm);
    CanonicalLabel {
        perm,
        canon_g6: graph6::encode(&canon),
    }
}

pub fn canonical_form(g: &Graph) -> Graph {
    let (lab, _) = search(g.rows(), None);
    let perm = inverse(&lab);
    g.permute_unchecked(&perm)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (mut dg, mut dh) = (g.degrees().degrees, h.degrees().degrees);
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    certificate(g.rows(), None) == certificate(h.rows(), None)
}

/// Certificate of the graph given by `rows`, optionally with a vertex
/// colouring. Colour classes are ordered by colour value.
pub(crate) fn certificate(rows: &[u128], colors: Option<&[u32]>) -> Certificate {
    search(rows, colors).1
}

/// Returns the canonical labeling (`lab[pos] = vertex`) and its certificate.
pub(crate) fn search(rows: &[u128], colors: Option<&[u32]>) -> (Vec<u8>, Certificate) {
    let n = rows.len();
    debug_assert!((1..=128).contains(&n));
    let root = initial_partition(n, colors);
    let mut s = Searcher {
        adj: rows,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut root = root;
    let pending = root.cell_starts();
    refine(rows, &mut root, pending);
    let mut path = Vec::with_capacity(n);
    s.descend(&root, &mut path);
    let best = s.best.expect("search visits at least one leaf");
    (best.lab, best.cert)
}

fn inverse(lab: &[u8]) -> Vec<usize> {
    let mut perm = vec![0usize; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[usize::from(v)] = pos;
    }
    perm
}

#[derive(Clone)]
struct Partition {
    /// `lab[pos]` is the vertex at position `pos`.
    lab: Vec<u8>,
    /// Bit `p` set when position `p` closes a cell.
    ends: u128,
}

impl Partition {
    fn len(&self) -> usize {
        self.lab.len()
    }

    fn cell_end(&self, start: usize) -> usize {
        start + (self.ends >> start).trailing_zeros() as usize
    }

    fn is_discrete(&self) -> bool {
        self.ends == low_mask(self.len())
    }

    fn cell_starts(&self) -> u128 {
        // position 0 plus every position that follows a cell end
        let n = self.len();
        (1 | (self.ends << 1)) & low_mask(n)
    }

    fn first_nontrivial_cell(&self) -> Option<(usize, usize)> {
        let mut s = 0;
        while s < self.len() {
            let e = self.cell_end(s);
            if e > s {
                return Some((s, e));
            }
            s = e + 1;
        }
        None
    }
}

fn initial_partition(n: usize, colors: Option<&[u32]>) -> Partition {
    match colors {
        None => Partition {
            lab: (0..n as u8).collect(),
            ends: bit(n - 1),
        },
        Some(colors) => {
            let mut order: Vec<(u32, u8)> = (0..n).map(|v| (colors[v], v as u8)).collect();
            order.sort_unstable();
            let mut ends = bit(n - 1);
            for k in 0..n - 1 {
                if order[k].0 != order[k + 1].0 {
                    ends |= bit(k);
                }
            }
            Partition {
                lab: order.into_iter().map(|(_, v)| v).collect(),
                ends,
            }
        }
    }
}

/// Refines `p` to the coarsest equitable partition below it, using the cells
/// starting at the positions in `pending` as initial splitters. Splitters
/// are taken in order of starting position so the result depends only on
/// the ordered partition, never on vertex names.
fn refine(adj: &[u128], p: &mut Partition, mut pending: u128) {
    let n = p.len();
    let mut counts = [0u32; 128];
    let mut scratch: Vec<(u32, u8)> = Vec::with_capacity(n);
    while pending != 0 && !p.is_discrete() {
        let ws = pending.trailing_zeros() as usize;
        pending &= !bit(ws);
        let we = p.cell_end(ws);
        let wmask = p.lab[ws..=we]
            .iter()
            .fold(0u128, |acc, &v| acc | bit(usize::from(v)));

        let mut xs = 0;
        while xs < n {
            let xe = p.cell_end(xs);
            if xe > xs {
                let mut uniform = true;
                for q in xs..=xe {
                    counts[q] = (adj[usize::from(p.lab[q])] & wmask).count_ones();
                    uniform &= counts[q] == counts[xs];
                }
                if !uniform {
                    scratch.clear();
                    scratch.extend((xs..=xe).map(|q| (counts[q], p.lab[q])));
                    scratch.sort_unstable();
                    for (k, &(_, v)) in scratch.iter().enumerate() {
                        p.lab[xs + k] = v;
                    }
                    pending |= bit(xs);
                    for k in 0..scratch.len() - 1 {
                        if scratch[k].0 != scratch[k + 1].0 {
                            p.ends |= bit(xs + k);
                            pending |= bit(xs + k + 1);
                        }
                    }
                }
            }
            xs = xe + 1;
        }
    }
}

fn leaf_certificate(adj: &[u128], lab: &[u8]) -> Certificate {
    let n = lab.len();
    let nbits = n * (n - 1) / 2;
    let mut cert = vec![0u64; nbits.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        let row = adj[usize::from(lab[j])];
        for &li in &lab[..j] {
            if row & bit(usize::from(li)) != 0 {
                cert[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    cert
}

struct Leaf {
    cert: Certificate,
    lab: Vec<u8>,
    path: Vec<u8>,
}

struct Searcher<'a> {
    adj: &'a [u128],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    autos: Vec<Vec<u8>>,
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Searcher<'_> {
    /// Returns `Some(d)` to unwind to the node at depth `d`.
    fn descend(&mut self, part: &Partition, path: &mut Vec<u8>) -> Option<usize> {
        let Some((cs, ce)) = part.first_nontrivial_cell() else {
            return self.leaf(part, path);
        };
        let depth = path.len();
        let mut cell: Vec<u8> = part.lab[cs..=ce].to_vec();
        cell.sort_unstable();
        let mut done: Vec<u8> = Vec::new();
        for v in cell {
            if !done.is_empty() && self.equivalent_to_done(path, &done, v) {
                continue;
            }
            let mut child = part.clone();
            let pos = child.lab[cs..=ce].iter().position(|&u| u == v).unwrap() + cs;
            child.lab.swap(cs, pos);
            child.ends |= bit(cs);
            refine(self.adj, &mut child, bit(cs));
            path.push(v);
            let jump = self.descend(&child, path);
            path.pop();
            done.push(v);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn equivalent_to_done(&self, path: &[u8], done: &[u8], v: u8) -> bool {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(parent: &mut [u8], mut x: u8) -> u8 {
            while parent[usize::from(x)] != x {
                let up = parent[usize::from(parent[usize::from(x)])];
                parent[usize::from(x)] = up;
                x = up;
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if path.iter().any(|&p| gamma[usize::from(p)] != p) {
                continue;
            }
            any = true;
            for x in 0..self.n as u8 {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[usize::from(x)]));
                if a != b {
                    parent[usize::from(a.max(b))] = a.min(b);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        done.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, part: &Partition, path: &[u8]) -> Option<usize> {
        let cert = leaf_certificate(self.adj, &part.lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                cert,
                lab: part.lab.clone(),
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gamma = self.automorphism(&first.lab, &part.lab);
            let d = common_prefix(&first.path, path);
            self.autos.push(gamma);
            return Some(d);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let gamma = self.automorphism(&best.lab, &part.lab);
                let d = common_prefix(&best.path, path);
                self.autos.push(gamma);
                Some(d)
            }
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    cert,
                    lab: part.lab.clone(),
                    path: path.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn automorphism(&self, from: &[u8], to: &[u8]) -> Vec<u8> {
        let mut gamma = vec![0u8; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[usize::from(a)] = b;
        }
        gamma
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

pub const BRUTE_FORCE_PATTERN_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    /// Edges of the pattern must be edges of the host.
    Subgraph,
    /// Edges and non-edges must both match.
    Induced,
}

/// Pattern vertices in search order: highest degree first, then vertices
/// with the most already-placed neighbours so mismatches surface early.
fn search_order(p: &Graph) -> Vec<usize> {
    let k = p.order();
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = 0u128;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((p.neighbors(v) & placed).count_ones(), p.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(next);
        placed |= bit(next);
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    p: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    mode: CountMode,
    candidates: Vec<usize>,
}

impl Matcher<'_> {
    fn new<'a>(g: &'a Graph, p: &'a Graph, mode: CountMode) -> Matcher<'a> {
        let mut candidates: Vec<usize> = (0..g.order()).collect();
        candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Matcher {
            g,
            p,
            order: search_order(p),
            map: vec![usize::MAX; p.order()],
            mode,
            candidates,
        }
    }

    fn fits(&self, depth: usize, host: usize) -> bool {
        let pv = self.order[depth];
        if self.g.degree(host) < self.p.degree(pv) {
            return false;
        }
        self.order[..depth].iter().all(|&pu| {
            let hu = self.map[pu];
            let want = self.p.has_edge(pu, pv);
            let have = self.g.has_edge(hu, host);
            match self.mode {
                CountMode::Subgraph => !want || have,
                CountMode::Induced => want == have,
            }
        })
    }

    /// Visits complete embeddings; `visit` returns false to stop early.
    fn run(&mut self, depth: usize, used: u128, visit: &mut dyn FnMut() -> bool) -> bool {
        if depth == self.order.len() {
            return visit();
        }
        for idx in 0..self.candidates.len() {
            let host = self.candidates[idx];
            if used & bit(host) != 0 || !self.fits(depth, host) {
                continue;
            }
            self.map[self.order[depth]] = host;
            if !self.run(depth + 1, used | bit(host), visit) {
                return false;
            }
        }
        self.map[self.order[depth]] = usize::MAX;
        true
    }
}

/// Whether some vertex subset of `g` induces a copy of `pattern`.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> bool {
    if pattern.order() > g.order() {
        return false;
    }
    let mut found = false;
    Matcher::new(g, pattern, CountMode::Induced).run(0, 0, &mut || {
        found = true;
        false
    });
    found
}

fn count_embeddings(g: &Graph, p: &Graph, mode: CountMode) -> u64 {
    let mut count = 0u64;
    Matcher::new(g, p, mode).run(0, 0, &mut || {
        count += 1;
        true
    });
    count
}

/// Number of copies of `pattern` in `g`: injective edge-preserving maps
/// (edge- and non-edge-preserving in induced mode) divided by the number of
/// automorphisms of `pattern`. Exponential; meant as a reference.
pub fn brute_force_count(g: &Graph, pattern: &Graph, mode: CountMode) -> Result<u64> {
    if pattern.order() > BRUTE_FORCE_PATTERN_LIMIT {
        return Err(Error::Scope {
            requested: pattern.order(),
            limit: BRUTE_FORCE_PATTERN_LIMIT,
        });
    }
    if pattern.order() > g.order() {
        return Ok(0);
    }
    let aut = count_embeddings(pattern, pattern, CountMode::Induced);
    let emb = count_embeddings(g, pattern, mode);
    debug_assert_eq!(emb % aut, 0);
    Ok(emb / aut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, friendship, path, star};

    #[test]
    fn oracle_examples() {
        let k4 = complete(4).unwrap();
        assert_eq!(brute_force_count(&k4, &cycle(4).unwrap(), CountMode::Subgraph).unwrap(), 3);
        assert_eq!(brute_force_count(&k4, &cycle(4).unwrap(), CountMode::Induced).unwrap(), 0);
        let f3 = friendship(3).unwrap();
        assert_eq!(brute_force_count(&f3, &complete(3).unwrap(), CountMode::Subgraph).unwrap(), 3);
        assert_eq!(
            brute_force_count(&f3, &complete(2).unwrap(), CountMode::Subgraph).unwrap(),
            f3.edge_count() as u64
        );
        assert_eq!(brute_force_count(&k4, &path(3).unwrap(), CountMode::Subgraph).unwrap(), 12);
        assert!(brute_force_count(&k4, &complete(9).unwrap(), CountMode::Subgraph).is_err());
    }

    #[test]
    fn induced_detection() {
        let f2 = friendship(2).unwrap();
        // every 4-subset of F2 holds the centre (degree 3 there) or is 2K2,
        // so P4 occurs only as a non-induced subgraph
        assert!(!contains_induced(&f2, &path(4).unwrap()));
        assert_eq!(brute_force_count(&f2, &path(4).unwrap(), CountMode::Subgraph).unwrap(), 8);
        assert!(contains_induced(&f2, &path(3).unwrap()));
        for n in 1..6 {
            assert!(!contains_induced(&friendship(n).unwrap(), &cycle(4).unwrap()));
        }
        assert!(contains_induced(&f2, &Graph::empty(1).unwrap()));
        assert!(contains_induced(&star(4).unwrap(), &Graph::empty(4).unwrap()));
        assert!(!contains_induced(&star(4).unwrap(), &complete(3).unwrap()));
    }

    #[test]
    fn induced_matches_subset_scan() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(3);
        let p4 = path(4).unwrap();
        for _ in 0..200 {
            let n = rng.gen_range(4..=8);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.4) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let scan = (0u32..1 << n).filter(|m| m.count_ones() == 4).any(|m| {
                let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                crate::canon::are_isomorphic(&g.induced_subgraph(&vs).unwrap(), &p4)
            });
            assert_eq!(contains_induced(&g, &p4), scan);
        }
    }
}

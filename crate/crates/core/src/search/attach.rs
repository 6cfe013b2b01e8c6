//! Case generators for local configurations: a triangle attached to a base
//! graph, extra edges inside a base graph, and a pendant vertex with
//! optional chords. Vertices in `frozen` have their degree fixed, so no
//! generated edge ever touches them.

use std::collections::BTreeMap;

use crate::canon::canonical_label;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Largest graph any case generator may produce.
pub const CASE_LIMIT: usize = 12;

fn check_frozen(base: &Graph, frozen: &[usize]) -> Result<u128> {
    let mut mask = 0;
    for &v in frozen {
        if v >= base.order() {
            return Err(Error::Vertex {
                vertex: v,
                order: base.order(),
            });
        }
        mask |= bit(v);
    }
    Ok(mask)
}

fn check_size(n: usize) -> Result<()> {
    if n > CASE_LIMIT {
        return Err(Error::Scope {
            requested: n,
            limit: CASE_LIMIT,
        });
    }
    Ok(())
}

/// Deduplicates by canonical form; output is sorted by canonical graph6.
fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut by_canon: BTreeMap<String, Graph> = BTreeMap::new();
    for g in graphs {
        by_canon.entry(canonical_label(&g).canon_g6).or_insert(g);
    }
    by_canon.into_values().collect()
}

/// Every class obtained by adding a triangle to `base` that shares nothing,
/// one free vertex, or one edge between free vertices, then joining the new
/// triangle vertices to any subset of the free base vertices outside the
/// shared part.
pub fn triangle_attachment_cases(base: &Graph, frozen: &[usize]) -> Result<Vec<Graph>> {
    let frozen = check_frozen(base, frozen)?;
    let n = base.order();
    check_size(n + 3)?;
    let free: Vec<usize> = (0..n).filter(|&v| frozen & bit(v) == 0).collect();
    let mut shares: Vec<Vec<usize>> = vec![vec![]];
    shares.extend(free.iter().map(|&v| vec![v]));
    for (i, &u) in free.iter().enumerate() {
        for &v in &free[i + 1..] {
            if base.has_edge(u, v) {
                shares.push(vec![u, v]);
            }
        }
    }
    let mut out = Vec::new();
    for shared in shares {
        let k = 3 - shared.len();
        let fresh: Vec<usize> = (n..n + k).collect();
        let tri: Vec<usize> = shared.iter().chain(&fresh).copied().collect();
        let mut edges = base.edges();
        for (i, &a) in tri.iter().enumerate() {
            for &b in &tri[i + 1..] {
                if a >= n || b >= n || !base.has_edge(a, b) {
                    edges.push((a, b));
                }
            }
        }
        let slots: Vec<(usize, usize)> = fresh
            .iter()
            .flat_map(|&a| {
                free.iter()
                    .filter(|b| !shared.contains(b))
                    .map(move |&b| (a, b))
            })
            .collect();
        for mask in 0u64..(1 << slots.len()) {
            let mut e = edges.clone();
            e.extend(
                slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &s)| s),
            );
            out.push(Graph::from_edges(n + k, &e)?);
        }
    }
    Ok(dedup(out))
}

/// Every class obtained by adding any set of missing edges between free
/// vertices of `base`.
pub fn edge_completion_cases(base: &Graph, frozen: &[usize]) -> Result<Vec<Graph>> {
    let frozen = check_frozen(base, frozen)?;
    let n = base.order();
    check_size(n)?;
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| frozen & (bit(u) | bit(v)) == 0 && !base.has_edge(u, v))
        .collect();
    if slots.len() > 20 {
        return Err(Error::Scope {
            requested: slots.len(),
            limit: 20,
        });
    }
    let base_edges = base.edges();
    let mut out = Vec::with_capacity(1 << slots.len());
    for mask in 0u32..(1 << slots.len()) {
        let mut e = base_edges.clone();
        e.extend(
            slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s),
        );
        out.push(Graph::from_edges(n, &e)?);
    }
    Ok(dedup(out))
}

/// Every class obtained by adding a vertex adjacent to `anchor` and to any
/// subset of the other free vertices.
pub fn pendant_cases(base: &Graph, frozen: &[usize], anchor: usize) -> Result<Vec<Graph>> {
    let frozen_mask = check_frozen(base, frozen)?;
    let n = base.order();
    check_size(n + 1)?;
    if anchor >= n {
        return Err(Error::Vertex { vertex: anchor, order: n });
    }
    if frozen_mask & bit(anchor) != 0 {
        return Err(Error::Precondition(format!("anchor {anchor} is frozen")));
    }
    let others: Vec<usize> = (0..n)
        .filter(|&v| v != anchor && frozen_mask & bit(v) == 0)
        .collect();
    let mut base_edges = base.edges();
    base_edges.push((anchor, n));
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut e = base_edges.clone();
        e.extend(
            others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| (v, n)),
        );
        out.push(Graph::from_edges(n + 1, &e)?);
    }
    Ok(dedup(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::{complete, cycle, disjoint_union, friendship, path};

    #[test]
    fn triangle_on_triangle() {
        // K3 with two frozen vertices: share the free vertex (F2) or none,
        // then 0..3 edges from the new triangle to the free vertex
        let cases = triangle_attachment_cases(&complete(3).unwrap(), &[0, 1]).unwrap();
        assert_eq!(cases.len(), 5);
        assert!(cases.iter().any(|g| are_isomorphic(g, &friendship(2).unwrap())));
        let two = disjoint_union(&complete(3).unwrap(), &complete(3).unwrap()).unwrap();
        assert!(cases.iter().any(|g| are_isomorphic(g, &two)));
    }

    #[test]
    fn frozen_degrees_never_change() {
        let base = cycle(4).unwrap();
        for g in triangle_attachment_cases(&base, &[0, 1]).unwrap() {
            // some labeling keeps two adjacent degree-2 vertices on a 4-cycle
            assert!(g.order() >= 4 && g.order() <= 7);
            assert!((0..g.order()).filter(|&v| g.degree(v) == 2).count() >= 2);
        }
        assert!(triangle_attachment_cases(&base, &[9]).is_err());
    }

    #[test]
    fn completions_of_a_path() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 4), (4, 3)]).unwrap();
        let cases = edge_completion_cases(&p5, &[1, 4]).unwrap();
        assert_eq!(cases.len(), 6);
        assert!(cases.iter().any(|g| are_isomorphic(g, &path(5).unwrap())));
    }

    #[test]
    fn pendant_vertex() {
        let cases = pendant_cases(&path(3).unwrap(), &[1], 0).unwrap();
        // new vertex joined to 0, optionally to 2
        assert_eq!(cases.len(), 2);
        assert!(pendant_cases(&path(3).unwrap(), &[0], 0).is_err());
    }

    #[test]
    fn size_limit() {
        assert!(triangle_attachment_cases(&cycle(10).unwrap(), &[]).is_err());
    }
}

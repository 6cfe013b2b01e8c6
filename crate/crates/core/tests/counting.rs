mod common;

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use windmill::counting::{
    brute_force_count, count_c3, count_c3_star, count_c4, count_c5, count_report,
    find_odd_holes_and_antiholes, triangle_profile, CountMode, HoleKind,
};
use windmill::graph::{complete, cycle, friendship};
use windmill::{are_isomorphic, Graph};

fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
}

#[test]
fn trace_counts_match_brute_force_up_to_seven() {
    let (c3, c4, c5, p) = (complete(3).unwrap(), cycle(4).unwrap(), cycle(5).unwrap(), paw());
    for g in common::all_graphs_up_to(7) {
        let bf = |pat: &Graph| brute_force_count(&g, pat, CountMode::Subgraph).unwrap();
        assert_eq!(count_c3(&g), bf(&c3));
        assert_eq!(count_c4(&g), bf(&c4));
        assert_eq!(count_c5(&g).unwrap(), bf(&c5));
        assert_eq!(count_c3_star(&g), bf(&p));
    }
}

/// Triangles through each vertex by looping over pairs of neighbours.
fn triangles_at(g: &Graph) -> Vec<u64> {
    let n = g.order();
    (0..n)
        .map(|v| {
            let mut t = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if g.has_edge(v, a) && g.has_edge(v, b) && g.has_edge(a, b) {
                        t += 1;
                    }
                }
            }
            t
        })
        .collect()
}

#[test]
fn triangle_profile_accounting() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, p);
        let prof = triangle_profile(&g);
        let oracle = triangles_at(&g);
        assert_eq!(prof.t, oracle);
        assert_eq!(prof.total(), 3 * count_c3(&g));
        let weighted: u64 = oracle.iter().enumerate().map(|(v, t)| t * g.degree(v) as u64).sum();
        assert_eq!(prof.degree_weighted(&g), weighted);
    }
    for n in 1..=20u64 {
        let g = friendship(n as usize).unwrap();
        let prof = triangle_profile(&g);
        assert_eq!(prof.total(), 3 * n);
        // centre: n triangles at degree 2n; the rest: one triangle at degree 2
        assert_eq!(prof.degree_weighted(&g), 2 * n * n + 4 * n);
    }
}

#[test]
fn report_serialization_keys() {
    let r = count_report(&friendship(2).unwrap()).unwrap();
    let v = serde_json::to_value(r).unwrap();
    assert_eq!(v, serde_json::json!({"c3": 2, "c4": 0, "c5": 0, "c3_star": 4}));
}

/// Scan of all odd vertex subsets of size `5..=max_len`: `(kind, vertices)`.
fn oracle_holes(g: &Graph, max_len: usize) -> BTreeSet<(bool, Vec<usize>)> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << n {
        let k = mask.count_ones() as usize;
        if k < 5 || k > max_len || k.is_multiple_of(2) {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&vs).unwrap();
        let ck = cycle(k).unwrap();
        if are_isomorphic(&h, &ck) {
            out.insert((true, vs));
        } else if are_isomorphic(&h.complement(), &ck) {
            out.insert((false, vs));
        }
    }
    out
}

#[test]
fn hole_scan_matches_subset_oracle() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..150 {
        let n = rng.gen_range(5..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = common::random_graph(&mut rng, n, p);
        let got: BTreeSet<(bool, Vec<usize>)> = find_odd_holes_and_antiholes(&g, n)
            .unwrap()
            .into_iter()
            .map(|h| (h.kind == HoleKind::Hole, h.vertices))
            .collect();
        assert_eq!(got, oracle_holes(&g, n));
    }
    let c7 = cycle(7).unwrap();
    let found = find_odd_holes_and_antiholes(&c7.complement(), 7).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].kind, HoleKind::Antihole);
    assert!(find_odd_holes_and_antiholes(&c7, 8).is_err());
}

mod common;

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::SeedableRng;

use common::shuffled;
use windmill::fixtures::Catalog;
use windmill::graph::{cocktail_party, complete, cycle, disjoint_union, friendship};
use windmill::search::{
    certify_ds, cospectral_mates, cospectral_mates_with, edge_completion_cases, pendant_cases,
    triangle_attachment_cases, SearchOptions,
};
use windmill::spectra::char_poly;
use windmill::{are_isomorphic, canonical_label, graph6, Graph};

fn canon(g: &Graph) -> String {
    canonical_label(g).canon_g6
}

/// Mates of every graph up to order 6, read off a table of all classes
/// grouped by characteristic polynomial.
#[test]
fn mates_match_polynomial_grouping() {
    let graphs = common::all_graphs_up_to(6);
    let mut by_poly: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for g in &graphs {
        by_poly.entry(char_poly(g).to_text()).or_default().push(canon(g));
    }
    for g in &graphs {
        let me = canon(g);
        let want: BTreeSet<String> = by_poly[&char_poly(g).to_text()]
            .iter()
            .filter(|c| **c != me)
            .cloned()
            .collect();
        let r = cospectral_mates(g, g.order()).unwrap();
        let got: BTreeSet<String> = r.mates.iter().cloned().collect();
        assert_eq!(got, want, "{}", graph6::encode(g));
        assert_eq!(r.ds_within_scope, want.is_empty());
        for m in &r.mates {
            let h = graph6::decode(m).unwrap();
            assert!(!are_isomorphic(g, &h));
            assert_eq!(char_poly(&h), char_poly(g));
        }
    }
}

#[test]
fn prefilters_do_not_change_mates() {
    let mut targets = common::all_graphs_up_to(6);
    targets.extend(
        common::all_graphs_up_to(7)
            .into_iter()
            .filter(|g| g.order() == 7)
            .step_by(9),
    );
    targets.push(friendship(3).unwrap());
    targets.push(disjoint_union(&cocktail_party(3).unwrap(), &complete(1).unwrap()).unwrap());
    let variants = [
        SearchOptions { edge_prefilter: false, ..SearchOptions::default() },
        SearchOptions { structural_prefilter: true, ..SearchOptions::default() },
        SearchOptions { edge_prefilter: false, structural_prefilter: true, ..SearchOptions::default() },
    ];
    for g in &targets {
        let base = cospectral_mates(g, g.order()).unwrap();
        for opts in &variants {
            let other = cospectral_mates_with(g, g.order(), opts).unwrap();
            assert_eq!(other.mates, base.mates, "{}", graph6::encode(g));
        }
    }
}

#[test]
fn results_ignore_target_labeling() {
    let mut rng = StdRng::seed_from_u64(77);
    let targets = [
        friendship(3).unwrap(),
        disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap(),
        Catalog::builtin().require("B2").unwrap().graph.clone(),
    ];
    for g in targets {
        let base = serde_json::to_string(&certify_ds(&g).unwrap()).unwrap();
        let base: serde_json::Value = serde_json::from_str(&base).unwrap();
        for _ in 0..5 {
            let h = g.permute(&shuffled(&mut rng, g.order())).unwrap();
            let mut r = serde_json::to_value(certify_ds(&h).unwrap()).unwrap();
            let mut b = base.clone();
            // the input encoding is the only labeling-dependent field
            r["target_g6"] = serde_json::Value::Null;
            b["target_g6"] = serde_json::Value::Null;
            assert_eq!(r, b);
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let g = friendship(3).unwrap();
    let a = serde_json::to_string(&certify_ds(&g).unwrap()).unwrap();
    let b = serde_json::to_string(&certify_ds(&g).unwrap()).unwrap();
    assert_eq!(a, b);
    assert!(!a.contains("elapsed"));
}

fn names_in(catalog: &Catalog, cases: &[Graph], names: &[&str]) -> Vec<String> {
    let have: BTreeSet<String> = cases.iter().map(canon).collect();
    names
        .iter()
        .filter(|n| !have.contains(&canon(&catalog.require(n).unwrap().graph)))
        .map(|n| n.to_string())
        .collect()
}

#[test]
fn catalog_families_are_generated() {
    let c = Catalog::builtin();
    let k3 = triangle_attachment_cases(&complete(3).unwrap(), &[0, 1]).unwrap();
    assert!(names_in(&c, &k3, &["A1", "A2", "A3", "A4"]).is_empty());
    let a1 = c.require("A1").unwrap();
    let on_a1 = triangle_attachment_cases(&a1.graph, &a1.frozen()).unwrap();
    assert!(names_in(&c, &on_a1, &["B1", "B2"]).is_empty());

    let e1 = c.require("E1").unwrap();
    let completions = edge_completion_cases(&e1.graph, &e1.frozen()).unwrap();
    assert_eq!(completions.len(), 6);
    assert!(names_in(&c, &completions, &["E1", "E2", "E3", "E4", "E5", "E6"]).is_empty());

    for (base, members) in [("E2", ["E2_1", "E2_2", "E2_3", "E2_4"]), ("E3", ["E3_1", "E3_2", "E3_3", "E3_4"])] {
        let f = c.require(base).unwrap();
        let cases = pendant_cases(&f.graph, &f.frozen(), f.role("a").unwrap()).unwrap();
        assert_eq!(cases.len(), 4);
        assert!(names_in(&c, &cases, &members).is_empty(), "{base}");
    }
}

#[test]
fn fixtures_match_their_notes() {
    for f in Catalog::builtin().fixtures() {
        let want = format!("{} vertices, {} edges", f.graph.order(), f.graph.edge_count());
        assert_eq!(f.note, want, "{}", f.name);
        assert_eq!(graph6::encode(&f.graph), f.g6);
    }
}

//! Ledger of checks replayed by `windmill verify`. Each claim reports pass,
//! fail (with a counterexample) or skipped (with the reason).

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use anyhow::{bail, Result};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};

use windmill::counting::{
    brute_force_count, count_c3, find_odd_holes_and_antiholes, triangle_profile, CountMode,
};
use windmill::fixtures::{Catalog, CATALOG_FILE};
use windmill::graph::{
    cocktail_party, complete, complete_bipartite, cycle, disjoint_union, friendship,
};
use windmill::search::{
    classify_forbidden, cospectral_mates_with, count_graphs, edge_completion_cases,
    enumerate_graphs_with, pendant_cases, triangle_attachment_cases, EnumFilter, EnumOptions,
    SearchOptions, Verdict,
};
use windmill::spectra::{
    char_poly, closed_walk_count, complement_candidate_quartic, complement_char_poly_via_angles,
    eigenvalues, friendship_char_poly, has_duplicate_open_neighborhood, main_angles,
    second_largest, ComplementAngleParams,
};
use windmill::{canonical_label, graph6, Graph};

use crate::commands::enum_options;
use crate::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub claim_id: &'static str,
    pub status: Status,
    pub details: String,
    #[serde(skip)]
    pub elapsed: f64,
}

pub struct Ledger {
    pub results: Vec<ClaimResult>,
    fixtures: String,
}

impl Ledger {
    /// Deterministic document; timings only when requested, in their own
    /// field.
    pub fn to_json(&self, cfg: &RunConfig) -> Value {
        let count = |s: Status| self.results.iter().filter(|r| r.status == s).count();
        let mut doc = json!({
            "config": {
                "max_vertices": cfg.max_vertices,
                "tolerance_eig": cfg.tolerance_eig,
                "tolerance_fixture": cfg.tolerance_fixture,
                "fixtures": self.fixtures,
            },
            "claims": self.results,
            "summary": {
                "pass": count(Status::Pass),
                "fail": count(Status::Fail),
                "skipped": count(Status::Skipped),
            },
        });
        if cfg.timings {
            let t: BTreeMap<&str, f64> = self.results.iter().map(|r| (r.claim_id, r.elapsed)).collect();
            doc["timings"] = json!(t);
        }
        doc
    }
}

enum Fixtures {
    Loaded(Catalog),
    Missing(String),
    Corrupt(String),
}

struct Ctx<'a> {
    cfg: &'a RunConfig,
    catalog: Option<&'a Catalog>,
    opts: EnumOptions,
}

impl Ctx<'_> {
    fn catalog(&self) -> &Catalog {
        self.catalog.expect("fixture claims run only with a catalog")
    }

    fn fixture(&self, name: &str) -> Result<Graph, String> {
        self.catalog()
            .require(name)
            .map(|f| f.graph.clone())
            .map_err(|e| e.to_string())
    }

    fn graphs(&self, n: usize) -> Vec<Graph> {
        enumerate_graphs_with(&EnumFilter::order(n), &self.opts).expect("order within limits")
    }

    fn graphs_up_to(&self, n: usize) -> Vec<Graph> {
        (1..=n).flat_map(|k| self.graphs(k)).collect()
    }

    fn search(&self) -> SearchOptions {
        SearchOptions {
            enumeration: self.opts,
            ..SearchOptions::default()
        }
    }
}

type Check = fn(&Ctx) -> Result<String, String>;

struct Claim {
    id: &'static str,
    /// Largest graph order the claim enumerates or searches.
    order: usize,
    fixtures: bool,
    check: Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g6(g: &Graph) -> String {
    graph6::encode(g)
}

fn canon(g: &Graph) -> String {
    canonical_label(g).canon_g6
}

/// Numbers of graphs on 1..=11 unlabeled vertices.
const CLASS_COUNTS: [u64; 11] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168, 1018997864];

/// Required catalog names.
fn expected_names() -> Vec<String> {
    let mut names: Vec<String> = ["A1", "A2", "A3", "A4", "B1", "B2", "C", "D"].iter().map(|s| s.to_string()).collect();
    names.extend((1..=26).map(|i| format!("C{i}")));
    names.extend((1..=20).map(|i| format!("D{i}")));
    names.extend((1..=6).map(|i| format!("E{i}")));
    names
}

fn catalog_claim(ctx: &Ctx) -> Result<String, String> {
    let catalog = ctx.catalog();
    let missing: Vec<String> = expected_names()
        .into_iter()
        .filter(|n| catalog.get(n).is_none())
        .collect();
    ensure(missing.is_empty(), || format!("missing fixtures {missing:?}"))?;
    Ok(format!("{} named graphs", catalog.fixtures().len()))
}

fn friendship_charpoly(_: &Ctx) -> Result<String, String> {
    for n in 1..=40 {
        let closed = friendship_char_poly(n).map_err(|e| e.to_string())?;
        let direct = char_poly(&friendship(n).unwrap());
        ensure(closed == direct, || format!("F{n} {}: closed form {closed}, computed {direct}", g6(&friendship(n).unwrap())))?;
    }
    Ok("exact for n = 1..40".into())
}

fn friendship_spectrum(ctx: &Ctx) -> Result<String, String> {
    let tol = ctx.cfg.tolerance_eig;
    let mut worst = 0.0f64;
    for n in 1..=31usize {
        let root = ((8 * n + 1) as f64).sqrt();
        let mut want: Vec<(f64, usize)> = vec![((1.0 + root) / 2.0, 1)];
        if n > 1 {
            want.push((1.0, n - 1));
        }
        let low = (1.0 - root) / 2.0;
        if (low + 1.0).abs() < 1e-12 {
            want.push((-1.0, n + 1));
        } else {
            want.push((-1.0, n));
            want.push((low, 1));
        }
        let got = eigenvalues(&friendship(n).unwrap()).groups;
        ensure(got.len() == want.len(), || format!("F{n}: groups {got:?}, expected {want:?}"))?;
        for (&(g, gm), &(w, wm)) in got.iter().zip(&want) {
            ensure(gm == wm && (g - w).abs() <= tol, || format!("F{n}: group ({g}, {gm}), expected ({w}, {wm})"))?;
            worst = worst.max((g - w).abs());
        }
    }
    Ok(format!("n = 1..31, max deviation {worst:.1e}"))
}

fn poly_from_roots(roots: &[(i64, usize)]) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(1)];
    for &(r, m) in roots {
        for _ in 0..m {
            let mut next = vec![BigInt::from(0); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            p = next;
        }
    }
    p
}

fn cocktail_party_charpoly(_: &Ctx) -> Result<String, String> {
    for n in 3..=15usize {
        let g = disjoint_union(&cocktail_party(n).unwrap(), &complete(1).unwrap()).unwrap();
        let want = poly_from_roots(&[(0, n + 1), (-2, n - 1), (2 * n as i64 - 2, 1)]);
        let got = char_poly(&g);
        ensure(got.coeffs() == want.as_slice(), || format!("n={n} {}: computed {got}", g6(&g)))?;
    }
    Ok("x^(n+1) (x+2)^(n-1) (x-2n+2) for n = 3..15".into())
}

fn class_counts(ctx: &Ctx) -> Result<String, String> {
    let top = usize::from(ctx.cfg.max_vertices);
    for n in 1..=top {
        let got = count_graphs(&EnumFilter::order(n), &ctx.opts).map_err(|e| e.to_string())?;
        ensure(got == CLASS_COUNTS[n - 1], || format!("order {n}: {got} classes, expected {}", CLASS_COUNTS[n - 1]))?;
    }
    Ok(format!("orders 1..={top} match {:?}", &CLASS_COUNTS[..top]))
}

fn extension_cross_check(ctx: &Ctx) -> Result<String, String> {
    let top = usize::from(ctx.cfg.max_vertices).min(9);
    for n in 2..=top {
        let mut seen: HashSet<String> = HashSet::new();
        for g in ctx.graphs(n - 1) {
            for s in 0u32..1 << (n - 1) {
                let mut edges = g.edges();
                edges.extend((0..n - 1).filter(|&v| s >> v & 1 == 1).map(|v| (v, n - 1)));
                seen.insert(canon(&Graph::from_edges(n, &edges).unwrap()));
            }
        }
        let generated: HashSet<String> = ctx.graphs(n).iter().map(canon).collect();
        ensure(seen == generated, || {
            let extra: Vec<&String> = seen.symmetric_difference(&generated).take(3).collect();
            format!("order {n}: extension gives {}, enumeration {}; differing {extra:?}", seen.len(), generated.len())
        })?;
    }
    Ok(format!("orders 2..={top} agree with one-vertex extension"))
}

fn ds_friendship(ctx: &Ctx, n: usize) -> Result<String, String> {
    let g = friendship(n).unwrap();
    let r = cospectral_mates_with(&g, g.order(), &ctx.search()).map_err(|e| e.to_string())?;
    ensure(r.mates.is_empty(), || format!("F{n} {} has mates {:?}", g6(&g), r.mates))?;
    Ok(format!("no mates among {} classes on {} vertices", r.vertices_scanned, r.order))
}

fn ds_f1(ctx: &Ctx) -> Result<String, String> {
    ds_friendship(ctx, 1)
}
fn ds_f2(ctx: &Ctx) -> Result<String, String> {
    ds_friendship(ctx, 2)
}
fn ds_f3(ctx: &Ctx) -> Result<String, String> {
    ds_friendship(ctx, 3)
}
fn ds_f4(ctx: &Ctx) -> Result<String, String> {
    ds_friendship(ctx, 4)
}

fn minimal_pair(ctx: &Ctx) -> Result<String, String> {
    let g = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap();
    let r = cospectral_mates_with(&g, 5, &ctx.search()).map_err(|e| e.to_string())?;
    let star = canon(&complete_bipartite(1, 4).unwrap());
    ensure(r.mates == vec![star.clone()], || format!("C4+K1 {}: mates {:?}, expected [{star}]", g6(&g), r.mates))?;
    Ok(format!("C4+K1 has exactly one mate, K1,4 = {star}"))
}

fn ds_complement(ctx: &Ctx, n: usize) -> Result<String, String> {
    let g = friendship(n).unwrap().complement();
    let r = cospectral_mates_with(&g, g.order(), &ctx.search()).map_err(|e| e.to_string())?;
    ensure(r.mates.is_empty(), || format!("complement of F{n} {}: mates {:?}", g6(&g), r.mates))?;
    Ok(format!("no mates among {} classes", r.vertices_scanned))
}

fn ds_cf3(ctx: &Ctx) -> Result<String, String> {
    ds_complement(ctx, 3)
}
fn ds_cf4(ctx: &Ctx) -> Result<String, String> {
    ds_complement(ctx, 4)
}

fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
}

fn closed_five_walks(ctx: &Ctx) -> Result<String, String> {
    let graphs = ctx.graphs_up_to(7);
    let (k3, c5, paw) = (complete(3).unwrap(), cycle(5).unwrap(), paw());
    for g in &graphs {
        let n = |p: &Graph| brute_force_count(g, p, CountMode::Subgraph).unwrap() as u128;
        let lhs = closed_walk_count(g, 5).unwrap();
        let rhs = 30 * n(&k3) + 10 * n(&c5) + 10 * n(&paw);
        ensure(lhs == rhs, || format!("{}: tr A^5 = {lhs}, 30 N(C3) + 10 N(C5) + 10 N(paw) = {rhs}", g6(g)))?;
    }
    Ok(format!("holds on all {} graphs with at most 7 vertices", graphs.len()))
}

fn c4_free_bound(ctx: &Ctx) -> Result<String, String> {
    let c4 = cycle(4).unwrap();
    let mut equality = BTreeSet::new();
    let mut checked = 0;
    for g in ctx.graphs_up_to(7) {
        if brute_force_count(&g, &c4, CountMode::Subgraph).unwrap() > 0 {
            continue;
        }
        checked += 1;
        let l = eigenvalues(&g).largest();
        let gap = l * l - l - (g.order() as f64 - 1.0);
        ensure(gap <= 1e-7, || format!("{}: λ1² - λ1 - (n-1) = {gap:e}", g6(&g)))?;
        if gap.abs() <= 1e-7 && g.is_connected() && g.order() > 1 {
            equality.insert(canon(&g));
        }
    }
    let want: BTreeSet<String> = (1..=3).map(|n| canon(&friendship(n).unwrap())).collect();
    ensure(equality == want, || format!("equality on {equality:?}, expected F1, F2, F3 = {want:?}"))?;
    Ok(format!(
        "λ1² - λ1 <= n - 1 on {checked} C4-free graphs (tested as an upper bound); equality exactly on F1, F2, F3 besides K1"
    ))
}

fn fixture_eigenvalues(ctx: &Ctx) -> Result<String, String> {
    let k3 = complete(3).unwrap();
    let tol = ctx.cfg.tolerance_fixture;
    let cases = [
        ("A2", false, 1.73205),
        ("A3", false, 1.50694),
        ("A4", false, 1.33988),
        ("B1", false, 1.19799),
        ("B2", false, 1.28917),
        ("C", true, 2.0),
        ("D", true, 1.61803),
    ];
    for (name, with_k3, want) in cases {
        let mut g = ctx.fixture(name)?;
        if with_k3 {
            g = disjoint_union(&g, &k3).unwrap();
        }
        let got = second_largest(&g).map_err(|e| e.to_string())?;
        ensure((got - want).abs() <= tol, || format!("{name} {}: λ2 = {got:.7}, expected {want}", g6(&g)))?;
    }
    Ok(format!("7 values within {tol:e}"))
}

fn forbidden_cases(ctx: &Ctx) -> Result<String, String> {
    let catalog = ctx.catalog();
    let mut total = 0;
    let mut two_below = BTreeSet::new();
    let mut seen = HashSet::new();
    for base in ["C", "D"] {
        let f = catalog.require(base).map_err(|e| e.to_string())?;
        for g in triangle_attachment_cases(&f.graph, &f.frozen()).map_err(|e| e.to_string())? {
            total += 1;
            let v = classify_forbidden(&g);
            ensure(v.verdict != Verdict::NotForbidden, || {
                format!("{} on base {base}: λ2 = {:.6}, {} eigenvalues below -1", g6(&g), v.lambda2, v.eigs_below_minus1)
            })?;
            if v.verdict == Verdict::TwoEigsBelowMinusOne {
                two_below.insert(canon(&g));
            }
            seen.insert(canon(&g));
        }
    }
    let want: BTreeSet<String> = ["C1", "C5", "D3"]
        .iter()
        .map(|n| ctx.fixture(n).map(|g| canon(&g)))
        .collect::<Result<_, _>>()?;
    ensure(two_below == want, || format!("two eigenvalues below -1 on {two_below:?}, expected C1, C5, D3"))?;
    let missing: Vec<&str> = catalog
        .family("C")
        .into_iter()
        .chain(catalog.family("D"))
        .filter(|f| !seen.contains(&canon(&f.graph)))
        .map(|f| f.name.as_str())
        .collect();
    ensure(missing.is_empty(), || format!("fixtures never generated: {missing:?}"))?;
    Ok(format!("{total} classes all excluded"))
}

fn generated_families(ctx: &Ctx) -> Result<String, String> {
    let catalog = ctx.catalog();
    let covers = |cases: &[Graph], names: &[&str]| -> Result<(), String> {
        let have: HashSet<String> = cases.iter().map(canon).collect();
        for n in names {
            let g = ctx.fixture(n)?;
            ensure(have.contains(&canon(&g)), || format!("{n} ({}) not generated", g6(&g)))?;
        }
        Ok(())
    };
    let on_k3 = triangle_attachment_cases(&complete(3).unwrap(), &[0, 1]).map_err(|e| e.to_string())?;
    covers(&on_k3, &["A1", "A2", "A3", "A4"])?;
    let a1 = catalog.require("A1").map_err(|e| e.to_string())?;
    let on_a1 = triangle_attachment_cases(&a1.graph, &a1.frozen()).map_err(|e| e.to_string())?;
    covers(&on_a1, &["B1", "B2"])?;
    let e1 = catalog.require("E1").map_err(|e| e.to_string())?;
    let completions = edge_completion_cases(&e1.graph, &e1.frozen()).map_err(|e| e.to_string())?;
    covers(&completions, &["E1", "E2", "E3", "E4", "E5", "E6"])?;
    for (base, names) in [("E2", ["E2_1", "E2_2", "E2_3", "E2_4"]), ("E3", ["E3_1", "E3_2", "E3_3", "E3_4"])] {
        if catalog.get(names[0]).is_none() {
            continue;
        }
        let f = catalog.require(base).map_err(|e| e.to_string())?;
        let anchor = f.role("a").map_err(|e| e.to_string())?;
        covers(&pendant_cases(&f.graph, &f.frozen(), anchor).map_err(|e| e.to_string())?, &names)?;
    }
    Ok("A, B and E families appear among the generated cases".into())
}

fn complement_formula(_: &Ctx) -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let mut graphs: Vec<Graph> = (0..10_000)
        .map(|_| {
            let n = rng.gen_range(1..=8usize);
            let p = rng.gen_range(0.05..0.95);
            let edges: Vec<(usize, usize)> = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect();
    graphs.extend((2..=10).map(|n| friendship(n).unwrap()));
    let mut worst = 0.0f64;
    for g in &graphs {
        let d = complement_char_poly_via_angles(g).max_coeff_diff(&char_poly(&g.complement()).to_real());
        ensure(d <= 1e-6, || format!("{}: coefficient error {d:e}", g6(g)))?;
        worst = worst.max(d);
    }
    Ok(format!("{} graphs, max coefficient error {worst:.1e}", graphs.len()))
}

fn friendship_quartic(ctx: &Ctx) -> Result<String, String> {
    let tol = ctx.cfg.tolerance_eig.max(1e-7);
    for n in 3..=10 {
        let g = friendship(n).unwrap();
        let p = ComplementAngleParams::from_angles(&main_angles(&g)).map_err(|e| e.to_string())?;
        ensure(p.b.abs() <= 1e-9 && p.c.abs() <= 1e-9, || format!("F{n}: b = {:e}, c = {:e}", p.b, p.c))?;
        let mut roots = complement_candidate_quartic(n, p).map_err(|e| e.to_string())?.real_roots(1e-6);
        roots.extend([-2.0, 0.0]);
        let spectrum: Vec<f64> = eigenvalues(&g.complement()).groups.iter().map(|&(v, _)| v).collect();
        let near = |x: f64, set: &[f64]| set.iter().any(|y| (x - y).abs() <= tol);
        ensure(
            roots.iter().all(|&x| near(x, &spectrum)) && spectrum.iter().all(|&y| near(y, &roots)),
            || format!("F{n}: quartic roots with -2, 0 give {roots:?}, spectrum {spectrum:?}"),
        )?;
    }
    Ok("b = c = 0 and the quartic recovers the complement spectrum for n = 3..10".into())
}

fn degree_two_vertices(g: &Graph) -> usize {
    (0..g.order()).filter(|&v| g.degree(v) == 2).count()
}

fn friendship_min_degree(_: &Ctx) -> Result<String, String> {
    for n in 1..=20 {
        let g = friendship(n).unwrap();
        let min = (0..g.order()).map(|v| g.degree(v)).min().unwrap();
        let d2 = degree_two_vertices(&g);
        ensure(min == 2 && d2 >= 3 && (n == 1 || d2 == 2 * n), || format!("F{n}: minimum degree {min}, {d2} vertices of degree 2"))?;
    }
    Ok("minimum degree 2 with 2n (at least 3) degree-2 vertices, n = 1..20".into())
}

fn friendship_degree_bound(_: &Ctx) -> Result<String, String> {
    for n in 1..=20 {
        let g = friendship(n).unwrap();
        let d2 = degree_two_vertices(&g) as f64;
        let l = eigenvalues(&g).largest();
        ensure(d2 >= 1.0 + l - 1e-9, || format!("F{n}: {d2} degree-2 vertices < 1 + λmax = {}", 1.0 + l))?;
    }
    Ok("degree-2 count >= 1 + λmax for n = 1..20 (equality at n = 1)".into())
}

fn friendship_centre(_: &Ctx) -> Result<String, String> {
    for n in 1..=20 {
        let g = friendship(n).unwrap();
        let rest = g.induced_subgraph(&(1..g.order()).collect::<Vec<_>>()).unwrap();
        let comps = rest.components();
        ensure(
            comps.len() == n && comps.iter().all(|c| c.len() == 2 && rest.has_edge(c[0], c[1])),
            || format!("F{n} minus centre: components {comps:?}"),
        )?;
    }
    Ok("removing the centre leaves n disjoint edges, n = 1..20".into())
}

fn friendship_holes(_: &Ctx) -> Result<String, String> {
    for n in 1..=5 {
        let g = friendship(n).unwrap();
        for h in [g.clone(), g.complement()] {
            let found = find_odd_holes_and_antiholes(&h, h.order()).map_err(|e| e.to_string())?;
            ensure(found.is_empty(), || format!("{}: {found:?}", g6(&h)))?;
        }
    }
    Ok("no odd hole or antihole in F_n or its complement, n = 1..5".into())
}

fn twins_singular(ctx: &Ctx) -> Result<String, String> {
    let top = usize::from(ctx.cfg.max_vertices).min(8);
    let mut hits = 0;
    let graphs = ctx.graphs_up_to(top);
    for g in &graphs {
        if has_duplicate_open_neighborhood(g) {
            hits += 1;
            let c0 = char_poly(g).coeff(0);
            ensure(c0 == BigInt::from(0), || format!("{}: constant term {c0}", g6(g)))?;
        }
    }
    Ok(format!("{hits} of {} graphs up to {top} vertices have non-adjacent twins; all singular", graphs.len()))
}

fn triangle_accounting(ctx: &Ctx) -> Result<String, String> {
    for g in ctx.graphs_up_to(7) {
        let t = triangle_profile(&g).total();
        ensure(t == 3 * count_c3(&g), || format!("{}: Σ t_i = {t}, triangles {}", g6(&g), count_c3(&g)))?;
    }
    for n in 1..=20u64 {
        let g = friendship(n as usize).unwrap();
        let p = triangle_profile(&g);
        ensure(p.total() == 3 * n && p.degree_weighted(&g) == 2 * n * n + 4 * n, || {
            format!("F{n}: Σ t_i = {}, Σ t_i d_i = {}", p.total(), p.degree_weighted(&g))
        })?;
    }
    Ok("Σ t_i = 3 N(C3) on graphs up to 7 vertices; Σ t_i d_i = 2n² + 4n on F_n".into())
}

fn claims() -> Vec<Claim> {
    let c = |id, order, fixtures, check| Claim { id, order, fixtures, check };
    vec![
        c("fixtures.catalog", 0, true, catalog_claim as Check),
        c("friendship.charpoly-closed-form", 0, false, friendship_charpoly),
        c("friendship.spectrum-closed-form", 0, false, friendship_spectrum),
        c("complement.charpoly-cocktail-party", 0, false, cocktail_party_charpoly),
        c("enumeration.class-counts", 1, false, class_counts),
        c("enumeration.extension-cross-check", 2, false, extension_cross_check),
        c("ds.friendship-1", 3, false, ds_f1),
        c("ds.friendship-2", 5, false, ds_f2),
        c("ds.friendship-3", 7, false, ds_f3),
        c("ds.friendship-4", 9, false, ds_f4),
        c("cospectral.c4-plus-k1-star", 5, false, minimal_pair),
        c("ds.complement-friendship-3", 7, false, ds_cf3),
        c("ds.complement-friendship-4", 9, false, ds_cf4),
        c("walks.closed-5-identity", 7, false, closed_five_walks),
        c("bound.c4-free-spectral-radius", 7, false, c4_free_bound),
        c("fixtures.second-eigenvalues", 0, true, fixture_eigenvalues),
        c("forbidden.case-completeness", 0, true, forbidden_cases),
        c("fixtures.generated-families", 0, true, generated_families),
        c("angles.complement-formula", 0, false, complement_formula),
        c("angles.friendship-quartic", 0, false, friendship_quartic),
        c("friendship.minimum-degree", 0, false, friendship_min_degree),
        c("friendship.degree-two-bound", 0, false, friendship_degree_bound),
        c("friendship.centre-removal", 0, false, friendship_centre),
        c("friendship.no-odd-holes", 0, false, friendship_holes),
        c("twins.singular", 1, false, twins_singular),
        c("counting.triangle-accounting", 7, false, triangle_accounting),
    ]
}

pub fn claim_ids() -> Vec<&'static str> {
    claims().iter().map(|c| c.id).collect()
}

fn load_fixtures(cfg: &RunConfig) -> (Fixtures, String) {
    let Some(dir) = &cfg.fixtures else {
        return (Fixtures::Loaded(Catalog::builtin()), "builtin".into());
    };
    let label = dir.display().to_string();
    if !dir.join(CATALOG_FILE).is_file() {
        let reason = format!("no {CATALOG_FILE} in {label}");
        return (Fixtures::Missing(reason), label);
    }
    match Catalog::load_dir(dir) {
        Ok(c) => (Fixtures::Loaded(c), label),
        Err(e) => (Fixtures::Corrupt(e.to_string()), label),
    }
}

pub fn run(cfg: &RunConfig) -> Result<Ledger> {
    let all = claims();
    let known: HashSet<&str> = all.iter().map(|c| c.id).collect();
    for id in &cfg.claims {
        if !known.contains(id.as_str()) {
            bail!("unknown claim {id:?}; known claims: {}", claim_ids().join(", "));
        }
    }
    let (fixtures, label) = load_fixtures(cfg);
    let catalog = match &fixtures {
        Fixtures::Loaded(c) => Some(c),
        _ => None,
    };
    let ctx = Ctx {
        cfg,
        catalog,
        opts: enum_options(cfg),
    };
    let limit = usize::from(cfg.max_vertices);
    let mut results = Vec::new();
    for claim in all {
        if !cfg.claims.is_empty() && !cfg.claims.iter().any(|c| c == claim.id) {
            continue;
        }
        let start = Instant::now();
        let outcome: Result<Result<String, String>, String> = if claim.order > limit {
            Err(format!("needs {} vertices; --max-vertices is {limit}", claim.order))
        } else if claim.fixtures {
            match (&fixtures, claim.id) {
                (Fixtures::Loaded(_), _) => Ok((claim.check)(&ctx)),
                (Fixtures::Corrupt(e), "fixtures.catalog") => Ok(Err(e.clone())),
                (Fixtures::Corrupt(_), _) => Err("fixture catalog failed to parse".into()),
                (Fixtures::Missing(reason), _) => Err(reason.clone()),
            }
        } else {
            Ok((claim.check)(&ctx))
        };
        let (status, details) = match outcome {
            Ok(Ok(d)) => (Status::Pass, d),
            Ok(Err(d)) => (Status::Fail, d),
            Err(reason) => (Status::Skipped, reason),
        };
        results.push(ClaimResult {
            claim_id: claim.id,
            status,
            details,
            elapsed: start.elapsed().as_secs_f64(),
        });
    }
    Ok(Ledger { results, fixtures: label })
}

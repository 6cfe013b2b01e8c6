use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::enumerate::{fold_graphs, EnumFilter, EnumOptions, ENUM_LIMIT};
use crate::canon::canonical_label;
use crate::counting::count_c3;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::spectra::{char_poly, closed_walk_count, CharPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Prune the enumeration to graphs with the target's edge count.
    pub edge_prefilter: bool,
    /// Skip the characteristic polynomial for candidates whose triangle
    /// count or closed 4-walk count differs from the target's.
    pub structural_prefilter: bool,
    pub enumeration: EnumOptions,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            edge_prefilter: true,
            structural_prefilter: false,
            enumeration: EnumOptions::default(),
        }
    }
}

/// One spectrum-determined invariant and how the scan related to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefilterAudit {
    pub name: String,
    pub value: String,
    /// Whether it pruned the scan or was only tallied.
    pub pruning: bool,
    /// Scanned classes that agree with the target on this invariant.
    pub matching: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub target_g6: String,
    pub target_canonical_g6: String,
    pub target_charpoly: CharPoly,
    pub order: usize,
    pub edges: usize,
    /// Isomorphism classes examined.
    pub vertices_scanned: u64,
    /// Canonical graph6 of every non-isomorphic cospectral mate, sorted.
    pub mates: Vec<String>,
    pub ds_within_scope: bool,
    pub prefilters: Vec<PrefilterAudit>,
    /// Wall-clock seconds; excluded from serialization so reports compare
    /// byte for byte.
    #[serde(skip)]
    pub elapsed: f64,
}

impl SearchReport {
    pub fn verdict(&self) -> &'static str {
        if self.ds_within_scope {
            "determined by spectrum within exhaustive scope"
        } else {
            "not determined by spectrum"
        }
    }

    /// `canonical_g6,charpoly` lines for the target and each mate.
    pub fn to_csv(&self) -> String {
        let poly = self.target_charpoly.to_text();
        let mut out = String::from("canonical_g6,charpoly\n");
        for g6 in std::iter::once(&self.target_canonical_g6).chain(&self.mates) {
            out.push_str(&format!("{g6},{poly}\n"));
        }
        out
    }
}

#[derive(Default)]
struct Tally {
    scanned: u64,
    edge_match: u64,
    triangle_match: u64,
    walk4_match: u64,
    mates: Vec<Graph>,
}

pub fn cospectral_mates(target: &Graph, scope_vertices: usize) -> Result<SearchReport> {
    cospectral_mates_with(target, scope_vertices, &SearchOptions::default())
}

pub fn cospectral_mates_with(
    target: &Graph,
    scope_vertices: usize,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    let start = Instant::now();
    let n = target.order();
    if scope_vertices > ENUM_LIMIT {
        return Err(Error::Scope {
            requested: scope_vertices,
            limit: ENUM_LIMIT,
        });
    }
    if scope_vertices != n {
        return Err(Error::Precondition(format!(
            "cospectral graphs share the vertex count; scope {scope_vertices} differs from {n}"
        )));
    }
    let poly = char_poly(target);
    let m = target.edge_count();
    let tri = count_c3(target);
    let walk4 = closed_walk_count(target, 4)?;
    let canon = canonical_label(target).canon_g6;

    let mut filter = EnumFilter::order(n);
    if opts.edge_prefilter {
        filter.exact_edges = Some(m);
    }
    let parts = fold_graphs(&filter, &opts.enumeration, Tally::default, |t: &mut Tally, g| {
        t.scanned += 1;
        if g.edge_count() != m {
            return;
        }
        t.edge_match += 1;
        let tri_ok = count_c3(&g) == tri;
        let walk_ok = closed_walk_count(&g, 4).is_ok_and(|w| w == walk4);
        t.triangle_match += u64::from(tri_ok);
        t.walk4_match += u64::from(walk_ok);
        if opts.structural_prefilter && !(tri_ok && walk_ok) {
            return;
        }
        if char_poly(&g) == poly {
            t.mates.push(g);
        }
    })?;

    let mut tally = Tally::default();
    for p in parts {
        tally.scanned += p.scanned;
        tally.edge_match += p.edge_match;
        tally.triangle_match += p.triangle_match;
        tally.walk4_match += p.walk4_match;
        tally.mates.extend(p.mates);
    }

    let mut mates = BTreeSet::new();
    let mut saw_target = false;
    for g in &tally.mates {
        if char_poly(g) != poly {
            return Err(Error::Inconsistent(format!(
                "mate {} does not share the target polynomial",
                graph6::encode(g)
            )));
        }
        let c = canonical_label(g).canon_g6;
        if c == canon {
            saw_target = true;
            continue;
        }
        if !mates.insert(c.clone()) {
            return Err(Error::Inconsistent(format!("class {c} was generated twice")));
        }
    }
    if !saw_target {
        return Err(Error::Inconsistent(format!(
            "the enumeration never produced the target class {canon}"
        )));
    }

    let prefilters = vec![
        PrefilterAudit {
            name: "edge-count".into(),
            value: m.to_string(),
            pruning: opts.edge_prefilter,
            matching: tally.edge_match,
        },
        PrefilterAudit {
            name: "triangle-count".into(),
            value: tri.to_string(),
            pruning: opts.structural_prefilter,
            matching: tally.triangle_match,
        },
        PrefilterAudit {
            name: "closed-4-walks".into(),
            value: walk4.to_string(),
            pruning: opts.structural_prefilter,
            matching: tally.walk4_match,
        },
    ];
    let mates: Vec<String> = mates.into_iter().collect();
    Ok(SearchReport {
        target_g6: graph6::encode(target),
        target_canonical_g6: canon,
        target_charpoly: poly,
        order: n,
        edges: m,
        vertices_scanned: tally.scanned,
        ds_within_scope: mates.is_empty(),
        mates,
        prefilters,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// Exhaustive search over all graphs with the target's order and edge count.
pub fn certify_ds(target: &Graph) -> Result<SearchReport> {
    cospectral_mates(target, target.order())
}

pub fn certify_ds_with(target: &Graph, opts: &SearchOptions) -> Result<SearchReport> {
    cospectral_mates_with(target, target.order(), opts)
}

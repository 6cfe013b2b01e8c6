use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Largest graph the exhaustive subset scan accepts.
pub const HOLE_SCAN_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoleKind {
    Hole,
    Antihole,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OddHole {
    pub kind: HoleKind,
    pub vertices: Vec<usize>,
}

/// Whether the graph induced on `mask` is a single cycle through all of it.
fn induces_cycle(rows: &[u128], mask: u128) -> bool {
    if bits(mask).any(|v| (rows[v] & mask).count_ones() != 2) {
        return false;
    }
    // 2-regular: a cycle iff connected
    let start = mask.trailing_zeros() as usize;
    let mut seen = bit(start);
    let mut frontier = bit(start);
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= rows[v] & mask;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == mask
}

/// Every induced odd cycle of length `5..=max_len` (hole) and every induced
/// complement of one (antihole). A 5-cycle is its own complement and is
/// reported once, as a hole.
pub fn find_odd_holes_and_antiholes(g: &Graph, max_len: usize) -> Result<Vec<OddHole>> {
    let n = g.order();
    if max_len > n {
        return Err(Error::Precondition(format!(
            "max_len {max_len} exceeds the vertex count {n}"
        )));
    }
    if n > HOLE_SCAN_LIMIT {
        return Err(Error::Scope {
            requested: n,
            limit: HOLE_SCAN_LIMIT,
        });
    }
    let rows = g.rows();
    let comp = g.complement();
    let crows = comp.rows();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 5 || size > max_len || size.is_multiple_of(2) {
            continue;
        }
        let m = u128::from(mask);
        let vertices = || bits(m).collect::<Vec<_>>();
        if induces_cycle(rows, m) {
            out.push(OddHole {
                kind: HoleKind::Hole,
                vertices: vertices(),
            });
        } else if induces_cycle(crows, m) {
            out.push(OddHole {
                kind: HoleKind::Antihole,
                vertices: vertices(),
            });
        }
    }
    out.sort_by(|a, b| (a.vertices.len(), &a.vertices).cmp(&(b.vertices.len(), &b.vertices)));
    Ok(out)
}

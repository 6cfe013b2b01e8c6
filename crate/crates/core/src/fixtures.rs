//! Named graph catalog, one `NAME GRAPH6 ROLES` entry per line.
//!
//! `ROLES` is `-` or a comma-separated list of `role=vertex`; text after `#`
//! is a comment. The default catalog is compiled in; a directory containing
//! `figures.g6` can replace it at run time.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

pub const CATALOG_FILE: &str = "figures.g6";

const BUILTIN: &str = include_str!("../fixtures/figures.g6");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fixture {
    pub name: String,
    pub g6: String,
    #[serde(skip)]
    pub graph: Graph,
    pub roles: BTreeMap<String, usize>,
    pub note: String,
}

impl Fixture {
    pub fn role(&self, r: &str) -> Result<usize> {
        self.roles
            .get(r)
            .copied()
            .ok_or_else(|| Error::Fixture(format!("{} has no vertex with role {r}", self.name)))
    }

    /// The vertices whose degree the case analysis fixes (`x` and `y`).
    pub fn frozen(&self) -> Vec<usize> {
        ["x", "y"]
            .iter()
            .filter_map(|r| self.roles.get(*r).copied())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    fixtures: Vec<Fixture>,
}

fn parse_line(line: &str) -> Result<Option<Fixture>> {
    let (body, note) = match line.split_once('#') {
        Some((b, n)) => (b.trim(), n.trim()),
        None => (line.trim(), ""),
    };
    if body.is_empty() {
        return Ok(None);
    }
    let fields: Vec<&str> = body.split_whitespace().collect();
    let [name, g6, roles] = fields[..] else {
        return Err(Error::Fixture(format!(
            "expected NAME GRAPH6 ROLES, found {} fields",
            fields.len()
        )));
    };
    let graph = graph6::decode(g6)?;
    let mut role_map = BTreeMap::new();
    if roles != "-" {
        for pair in roles.split(',') {
            let (r, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::Fixture(format!("bad role entry {pair:?}")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::Fixture(format!("bad vertex in role entry {pair:?}")))?;
            if v >= graph.order() {
                return Err(Error::Vertex {
                    vertex: v,
                    order: graph.order(),
                });
            }
            role_map.insert(r.to_string(), v);
        }
    }
    Ok(Some(Fixture {
        name: name.to_string(),
        g6: g6.to_string(),
        graph,
        roles: role_map,
        note: note.to_string(),
    }))
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("the bundled catalog is well formed")
    }

    /// Errors name the offending 1-based line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut fixtures: Vec<Fixture> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let parsed = parse_line(line).map_err(|e| Error::Fixture(format!("line {}: {e}", idx + 1)))?;
            if let Some(f) = parsed {
                if fixtures.iter().any(|g| g.name == f.name) {
                    return Err(Error::Fixture(format!("line {}: duplicate name {}", idx + 1, f.name)));
                }
                fixtures.push(f);
            }
        }
        Ok(Self { fixtures })
    }

    pub fn load_dir(dir: &Path) -> Result<Self> {
        let path = dir.join(CATALOG_FILE);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn fixtures(&self) -> &[Fixture] {
        &self.fixtures
    }

    pub fn get(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }

    pub fn require(&self, name: &str) -> Result<&Fixture> {
        self.get(name)
            .ok_or_else(|| Error::Fixture(format!("no fixture named {name}")))
    }

    /// Members named `prefix` followed only by digits, in catalog order.
    pub fn family(&self, prefix: &str) -> Vec<&Fixture> {
        self.fixtures
            .iter()
            .filter(|f| {
                f.name
                    .strip_prefix(prefix)
                    .is_some_and(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
            })
            .collect()
    }
}

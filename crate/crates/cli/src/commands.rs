use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use windmill::fixtures::Catalog;
use windmill::graph::{cocktail_party, complete, cycle, disjoint_union, friendship, path, star};
use windmill::search::{cospectral_mates_with, EnumOptions, SearchOptions};
use windmill::spectra::{char_poly, count_eigs_below, eigenvalues, main_angles, second_largest};
use windmill::{graph6, Graph};

use crate::claims::{self, Status};
use crate::{Family, Format, RunConfig};

/// Everything a command prints, written in one go by `main`.
pub struct Output {
    pub text: String,
    pub code: ExitCode,
}

impl Output {
    fn new(text: String) -> Self {
        Self {
            text,
            code: ExitCode::SUCCESS,
        }
    }
}

macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("writing to a String cannot fail")
    };
}

pub fn gen(family: Family, param: usize) -> Result<Output> {
    let g = match family {
        Family::Friendship => friendship(param),
        Family::CocktailParty => cocktail_party(param),
        Family::Cycle => cycle(param),
        Family::Path => path(param),
        Family::Complete => complete(param),
        Family::Star => star(param),
    }
    .with_context(|| format!("cannot build {family:?} with parameter {param}"))?;
    Ok(Output::new(format!("{}\n", graph6::encode(&g))))
}

fn read_inputs(inputs: &[PathBuf]) -> Result<Vec<(String, Graph)>> {
    let mut sources = Vec::new();
    if inputs.is_empty() {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        sources.push(("<stdin>".to_string(), text));
    }
    for p in inputs {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        sources.push((p.display().to_string(), text));
    }
    let mut out = Vec::new();
    for (name, text) in sources {
        let graphs = graph6::parse_lines(&text).map_err(|(line, e)| anyhow::anyhow!("{name}: line {line}: {e}"))?;
        out.extend(graphs.into_iter().map(|g| (graph6::encode(&g), g)));
    }
    Ok(out)
}

fn spectrum_record(g6: &str, g: &Graph) -> Value {
    let spectrum = eigenvalues(g);
    json!({
        "g6": g6,
        "order": g.order(),
        "edges": g.edge_count(),
        "charpoly": char_poly(g).to_decimal_strings(),
        "spectrum": spectrum.groups.iter().map(|&(v, m)| json!([v, m])).collect::<Vec<_>>(),
        "main_angles": main_angles(g).angles,
    })
}

pub fn spectrum(cfg: &RunConfig, inputs: &[PathBuf]) -> Result<Output> {
    let mut out = String::new();
    let graphs = read_inputs(inputs)?;
    match cfg.format {
        Format::Json => {
            let all: Vec<Value> = graphs.iter().map(|(s, g)| spectrum_record(s, g)).collect();
            outln!(out, "{}", serde_json::to_string_pretty(&all)?);
        }
        Format::Text => {
            for (s, g) in &graphs {
                outln!(out, "{}", spectrum_record(s, g));
            }
        }
        Format::Csv => {
            outln!(out, "g6,charpoly,spectrum");
            for (s, g) in &graphs {
                let groups: Vec<String> = eigenvalues(g)
                    .groups
                    .iter()
                    .map(|&(v, m)| format!("{v:.9}^{m}"))
                    .collect();
                outln!(out, "{s},{},{}", char_poly(g).to_text(), groups.join(" "));
            }
        }
    }
    Ok(Output::new(out))
}

pub fn enum_options(cfg: &RunConfig) -> EnumOptions {
    EnumOptions {
        workers: cfg.workers.map(usize::from),
        ..EnumOptions::default()
    }
}

pub fn search(cfg: &RunConfig, target: &str) -> Result<Output> {
    let mut out = String::new();
    let g = if target == "-" {
        read_inputs(&[])?
            .into_iter()
            .next()
            .map(|(_, g)| g)
            .context("no graph on standard input")?
    } else {
        graph6::decode(target.trim()).with_context(|| format!("target {target:?}"))?
    };
    let limit = usize::from(cfg.max_vertices);
    if g.order() > limit {
        bail!("target has {} vertices; --max-vertices is {limit}", g.order());
    }
    let opts = SearchOptions {
        enumeration: enum_options(cfg),
        ..SearchOptions::default()
    };
    let report = cospectral_mates_with(&g, g.order(), &opts)?;
    match cfg.format {
        Format::Json => {
            let mut doc = serde_json::to_value(&report)?;
            doc["verdict"] = json!(report.verdict());
            if cfg.timings {
                doc["timings"] = json!({ "search_seconds": report.elapsed });
            }
            outln!(out, "{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => out.push_str(&report.to_csv()),
        Format::Text => {
            outln!(out, "target {} ({} vertices, {} edges)", report.target_canonical_g6, report.order, report.edges);
            outln!(out, "characteristic polynomial {}", report.target_charpoly);
            outln!(out, "classes scanned {}", report.vertices_scanned);
            outln!(out, "mates {}", report.mates.len());
            for m in &report.mates {
                outln!(out, "  {m}");
            }
            outln!(out, "{}", report.verdict());
            if cfg.timings {
                outln!(out, "elapsed {:.3}s", report.elapsed);
            }
        }
    }
    Ok(Output::new(out))
}

pub fn verify(cfg: &RunConfig) -> Result<Output> {
    let mut out = String::new();
    let ledger = claims::run(cfg)?;
    let failed = ledger.results.iter().filter(|r| r.status == Status::Fail).count();
    match cfg.format {
        Format::Json => outln!(out, "{}", serde_json::to_string_pretty(&ledger.to_json(cfg))?),
        Format::Csv => {
            outln!(out, "claim_id,status,details");
            for r in &ledger.results {
                outln!(out, "{},{},\"{}\"", r.claim_id, r.status.as_str(), r.details.replace('"', "\"\""));
            }
        }
        Format::Text => {
            for r in &ledger.results {
                let time = if cfg.timings { format!(" ({:.2}s)", r.elapsed) } else { String::new() };
                outln!(out, "{:<7} {:<40} {}{time}", r.status.as_str(), r.claim_id, r.details);
            }
            let count = |s: Status| ledger.results.iter().filter(|r| r.status == s).count();
            outln!(out, 
                "{} passed, {} failed, {} skipped",
                count(Status::Pass),
                failed,
                count(Status::Skipped)
            );
        }
    }
    Ok(Output {
        text: out,
        code: if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) },
    })
}

/// λ₂ rounded for display; tiny negatives print as zero.
fn lambda2_text(x: f64) -> String {
    let x = if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{x:.5}")
}

pub fn load_catalog(cfg: &RunConfig) -> Result<Catalog> {
    match &cfg.fixtures {
        Some(dir) => Catalog::load_dir(dir).map_err(Into::into),
        None => Ok(Catalog::builtin()),
    }
}

pub fn catalog(cfg: &RunConfig) -> Result<Output> {
    let mut out = String::new();
    let catalog = load_catalog(cfg)?;
    let k3 = complete(3)?;
    let mut rows = Vec::new();
    for f in catalog.fixtures() {
        let g = &f.graph;
        let with_k3 = disjoint_union(g, &k3)?;
        rows.push((
            f,
            second_largest(g)?,
            second_largest(&with_k3)?,
            count_eigs_below(g, -1.0),
        ));
    }
    match cfg.format {
        Format::Json => {
            let doc: Vec<Value> = rows
                .iter()
                .map(|(f, l2, l2k3, below)| {
                    json!({
                        "name": f.name,
                        "g6": f.g6,
                        "order": f.graph.order(),
                        "edges": f.graph.edge_count(),
                        "lambda2": lambda2_text(*l2),
                        "lambda2_with_k3": lambda2_text(*l2k3),
                        "eigs_below_minus1": below,
                        "roles": f.roles,
                    })
                })
                .collect();
            outln!(out, "{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => {
            outln!(out, "name,g6,order,edges,lambda2,lambda2_with_k3,eigs_below_minus1");
            for (f, l2, l2k3, below) in &rows {
                outln!(out, 
                    "{},{},{},{},{},{},{below}",
                    f.name,
                    f.g6,
                    f.graph.order(),
                    f.graph.edge_count(),
                    lambda2_text(*l2),
                    lambda2_text(*l2k3)
                );
            }
        }
        Format::Text => {
            outln!(out, "{:<6} {:<8} {:>2} {:>3} {:>9} {:>10} {:>6}", "name", "g6", "n", "m", "lambda2", "with K3", "< -1");
            for (f, l2, l2k3, below) in &rows {
                outln!(out, 
                    "{:<6} {:<8} {:>2} {:>3} {:>9} {:>10} {:>6}",
                    f.name,
                    f.g6,
                    f.graph.order(),
                    f.graph.edge_count(),
                    lambda2_text(*l2),
                    lambda2_text(*l2k3),
                    below
                );
            }
        }
    }
    Ok(Output::new(out))
}

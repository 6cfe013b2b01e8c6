use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use windmill::graph::{complete, complete_bipartite, cycle, disjoint_union, friendship};
use windmill::{canonical_label, graph6};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_windmill"));
    cmd.args(args)
        .env_remove("WINDMILL_FIXTURES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn gen_families() {
    let o = run(&["gen", "friendship", "2"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), graph6::encode(&friendship(2).unwrap()));
    let o = run(&["gen", "cocktail_party", "3"], None);
    let g = graph6::decode(stdout(&o).trim()).unwrap();
    assert_eq!((g.order(), g.edge_count()), (6, 12));
    for family in ["cycle", "path", "complete", "star"] {
        assert!(run(&["gen", family, "5"], None).status.success(), "{family}");
    }
}

#[test]
fn gen_rejects_bad_input() {
    let o = run(&["gen", "friendship", "0"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(run(&["gen", "petersen", "1"], None).status.code(), Some(2));
    assert_eq!(run(&["gen", "cycle", "2"], None).status.code(), Some(2));
}

#[test]
fn spectrum_lines() {
    let f2 = graph6::encode(&friendship(2).unwrap());
    let star = graph6::encode(&complete_bipartite(1, 4).unwrap());
    let k2 = graph6::encode(&complete(2).unwrap());
    let input = format!("# three graphs\n{f2}\n\n{star}\n{k2}\n");
    let o = run(&["spectrum"], Some(&input));
    assert!(o.status.success());
    let rows: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["charpoly"], serde_json::json!(["4", "5", "-4", "-6", "0", "1"]));
    assert_eq!(rows[1]["charpoly"], serde_json::json!(["0", "0", "0", "-4", "0", "1"]));
    let groups = rows[2]["spectrum"].as_array().unwrap();
    assert_eq!(groups.len(), 2);
    assert!((groups[0][0].as_f64().unwrap() - 1.0).abs() < 1e-12 && groups[0][1] == 1);
    assert!((groups[1][0].as_f64().unwrap() + 1.0).abs() < 1e-12 && groups[1][1] == 1);
    assert!(rows[0]["main_angles"].as_array().unwrap().len() >= 2);

    let o = run(&["spectrum", "--format", "json"], Some(&input));
    assert_eq!(json(&o).as_array().unwrap().len(), 3);
    let o = run(&["spectrum", "--format", "csv"], Some(&input));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn spectrum_reads_files_and_reports_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    std::fs::write(&path, "Bw\n# fine\nB!\n").unwrap();
    let o = run(&["spectrum", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    std::fs::write(&path, "Bw\n").unwrap();
    let o = run(&["spectrum", path.to_str().unwrap()], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn search_reports() {
    let f3 = graph6::encode(&friendship(3).unwrap());
    let o = run(&["search", &f3, "--format", "json"], None);
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["mates"], serde_json::json!([]));
    assert_eq!(r["ds_within_scope"], true);

    let pair = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap();
    let star = canonical_label(&complete_bipartite(1, 4).unwrap()).canon_g6;
    let a = run(&["search", &graph6::encode(&pair), "--format", "json"], None);
    assert_eq!(json(&a)["mates"], serde_json::json!([star]));
    // the complement of F2 is the same graph under another labeling
    let cf2 = graph6::encode(&friendship(2).unwrap().complement());
    let b = run(&["search", &cf2, "--format", "json"], None);
    assert_eq!(json(&a)["mates"], json(&b)["mates"]);
    assert_eq!(json(&a)["target_canonical_g6"], json(&b)["target_canonical_g6"]);

    let csv = run(&["search", "-", "--format", "csv"], Some(&format!("{}\n", graph6::encode(&pair))));
    assert_eq!(stdout(&csv).lines().count(), 3);
}

#[test]
fn search_is_reproducible_across_workers() {
    let f4 = graph6::encode(&friendship(4).unwrap());
    let one = run(&["search", &f4, "--format", "json", "--workers", "1"], None);
    let many = run(&["search", &f4, "--format", "json", "--workers", "3"], None);
    let again = run(&["search", &f4, "--format", "json", "--workers", "3"], None);
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(many.stdout, again.stdout);
    let timed = json(&run(&["search", &f4, "--format", "json", "--timings"], None));
    assert!(timed["timings"]["search_seconds"].is_number());
}

#[test]
fn search_scope_is_enforced() {
    let f4 = graph6::encode(&friendship(4).unwrap());
    let o = run(&["search", &f4, "--max-vertices", "7"], None);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["search", &f4, "--max-vertices", "12"], None).status.code(), Some(2));
    assert_eq!(run(&["search", &f4, "--workers", "0"], None).status.code(), Some(2));
}

#[test]
fn verify_default_run_passes() {
    let o = run(&["verify", "--format", "json"], None);
    let doc = json(&o);
    assert_eq!(o.status.code(), Some(0), "{doc:#}");
    let claims = doc["claims"].as_array().unwrap();
    assert!(claims.len() >= 18);
    assert!(claims.iter().all(|c| c["status"] == "pass"), "{doc:#}");
    let ids: std::collections::HashSet<&str> = claims.iter().map(|c| c["claim_id"].as_str().unwrap()).collect();
    assert_eq!(ids.len(), claims.len());
    assert!(doc.get("timings").is_none());
}

#[test]
fn verify_gates_on_scope() {
    let o = run(&["verify", "--max-vertices", "7", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let f4 = claim(&doc, "ds.friendship-4");
    assert_eq!(f4["status"], "skipped");
    assert!(f4["details"].as_str().unwrap().contains("9 vertices"));
}

fn claim<'a>(doc: &'a Value, id: &str) -> &'a Value {
    doc["claims"].as_array().unwrap().iter().find(|c| c["claim_id"] == id).unwrap()
}

const QUICK: &str = "fixtures.catalog,fixtures.second-eigenvalues,ds.friendship-3,walks.closed-5-identity";

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify", "--claims", QUICK, "--format", "json", "--workers", "1"], None);
    let b = run(&["verify", "--claims", QUICK, "--format", "json", "--workers", "4"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["claims"].as_array().unwrap().len(), 4);
    let timed = json(&run(&["verify", "--claims", QUICK, "--format", "json", "--timings"], None));
    assert_eq!(timed["timings"].as_object().unwrap().len(), 4);
}

#[test]
fn verify_reports_fixture_problems() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();

    // no catalog file: fixture claims are skipped
    let o = run(&["verify", "--claims", QUICK, "--fixtures", d, "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(claim(&doc, "fixtures.catalog")["status"], "skipped");
    assert_eq!(claim(&doc, "fixtures.second-eigenvalues")["status"], "skipped");

    // corrupted catalog: the catalog claim fails and names the line
    std::fs::write(dir.path().join("figures.g6"), "A2 ExCW y=0\nB1 not!graph6 -\n").unwrap();
    let o = run(&["verify", "--claims", QUICK, "--fixtures", d, "--format", "json"], None);
    assert_eq!(o.status.code(), Some(1));
    let doc = json(&o);
    assert_eq!(claim(&doc, "fixtures.catalog")["status"], "fail");
    assert!(claim(&doc, "fixtures.catalog")["details"].as_str().unwrap().contains("line 2"));
    assert_eq!(claim(&doc, "fixtures.second-eigenvalues")["status"], "skipped");
    assert_eq!(claim(&doc, "ds.friendship-3")["status"], "pass");

    // the environment variable selects the directory too
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_windmill"));
    let o = cmd
        .args(["verify", "--claims", "fixtures.catalog"])
        .env("WINDMILL_FIXTURES", d)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_rejects_unknown_claims() {
    let o = run(&["verify", "--claims", "no.such-claim"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_text_and_csv() {
    let o = run(&["verify", "--claims", QUICK], None);
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().starts_with("4 passed, 0 failed"));
    let o = run(&["verify", "--claims", QUICK, "--format", "csv"], None);
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn catalog_rows() {
    let o = run(&["catalog", "--format", "json"], None);
    assert!(o.status.success());
    let rows = json(&o);
    let row = |name: &str| rows.as_array().unwrap().iter().find(|r| r["name"] == name).unwrap().clone();
    assert_eq!(row("A2")["lambda2"], "1.73205");
    assert_eq!(row("B2")["lambda2"], "1.28917");
    assert_eq!(row("C")["lambda2_with_k3"], "2.00000");
    assert_eq!(row("D")["lambda2_with_k3"], "1.61803");
    assert_eq!(row("C1")["eigs_below_minus1"], 2);
    let text = stdout(&run(&["catalog"], None));
    assert!(text.lines().any(|l| l.starts_with("A2 ") && l.contains("1.73205")));

    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("figures.g6"), "K4 C~ -  # complete\n").unwrap();
    let o = run(&["catalog", "--fixtures", dir.path().to_str().unwrap(), "--format", "csv"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "K4,C~,4,6,-1.00000,2.00000,0");
    let missing = run(&["catalog", "--fixtures", "/nonexistent/dir"], None);
    assert_eq!(missing.status.code(), Some(2));
}

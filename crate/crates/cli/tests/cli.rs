use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use polycontact::{AdjacencySpace, CountermodelCertificate, PlanePolytope};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycontact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const LOWER_LEFT: &str = "poly { basic { 1 0 <= 0; 0 1 <= 0; } }";
const UPPER_RIGHT: &str = "poly { basic { -1 0 <= 0; 0 -1 <= 0; } }";
const TRIANGLE: &str = "space { cells a b c; edges a-b b-c a-c; }";

#[test]
fn vertical_angles_touch_without_strong_contact() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (
        file(&dir, "q1.poly", LOWER_LEFT),
        file(&dir, "q3.poly", UPPER_RIGHT),
    );
    let svg = dir.path().join("out.svg");
    let o = run(&["sc-check", s(&a), s(&b), "--svg", s(&svg)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "SC=false C=true overlap=false\n");
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn shared_edge_has_a_witness() {
    let dir = TempDir::new().unwrap();
    let a = file(
        &dir,
        "a.poly",
        "poly { basic { 1 0 <= 1; -1 0 <= 0; 0 1 <= 1; 0 -1 <= 0; } }",
    );
    let b = file(
        &dir,
        "b.poly",
        "poly { basic { 1 0 <= 2; -1 0 <= -1; 0 1 <= 1; 0 -1 <= 0; } }",
    );
    let o = run(&["sc-check", s(&a), s(&b)]);
    let out = stdout(&o);
    assert!(
        out.starts_with("SC=true C=true overlap=false\nwitness=centre="),
        "{out}"
    );
    let o = run(&["c-check", s(&a), s(&b)]);
    assert_eq!(stdout(&o), "C=true\n");
}

#[test]
fn synthesize_emits_a_certificate_that_verifies() {
    let dir = TempDir::new().unwrap();
    let cert = dir.path().join("cert.txt");
    let svg = dir.path().join("cert.svg");
    let o = run(&[
        "synthesize",
        "C(p,q) => p.q != 0",
        "--bound",
        "3",
        "--dim",
        "1",
        "--out",
        s(&cert),
        "--svg",
        s(&svg),
    ]);
    assert_eq!(o.status.code(), Some(1), "a countermodel exits with 1");
    let out = stdout(&o);
    assert!(
        out.contains("geometric.value.p=cyl n=1 { (-inf,1]; [2,inf) }\n"),
        "{out}"
    );
    assert!(
        out.contains("geometric.value.q=cyl n=1 { [1,2] }\n"),
        "{out}"
    );
    let parsed = CountermodelCertificate::parse(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(parsed.to_string(), out);
    let o = run(&["verify", s(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("result=PASS\n"));
    assert!(fs::read_to_string(&svg).unwrap().contains("</svg>"));
}

#[test]
fn tampered_certificate_fails_verification() {
    let dir = TempDir::new().unwrap();
    let o = run(&["synthesize", "C(p,q) => p.q != 0", "--bound", "2"]);
    let text = stdout(&o).replace("image.b=cyl n=1 { [1,2] }", "image.b=cyl n=1 { [20,21] }");
    let cert = file(&dir, "cert.txt", &text);
    let o = run(&["verify", s(&cert)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    // b's image now lies inside a's ray
    assert!(
        out.contains("merge-injective=FAIL a={a} b={a,b}\n"),
        "{out}"
    );
    assert!(out.ends_with("result=FAIL\n"), "{out}");
}

#[test]
fn valid_formulas_have_no_countermodel() {
    let o = run(&["countermodel", "~C(0,p)", "--bound", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("countermodel=none bound=4"));
    let o = run(&["synthesize", "C(x,y) => C(y,x)", "--bound", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certificate=none"));
}

#[test]
fn formula_files_report_per_line() {
    let dir = TempDir::new().unwrap();
    let f = file(
        &dir,
        "f.txt",
        "# contact facts\nC(p,q) => C(q,p)\n\nC(p,q) => p.q != 0\n",
    );
    let o = run(&["countermodel", "--file", s(&f), "--bound", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("line.2.countermodel=none"), "{out}");
    assert!(
        out.contains("line.4.countermodel=space { cells a b; edges a-b; }"),
        "{out}"
    );
    assert!(out.contains("line.4.value.p={a}"), "{out}");
}

#[test]
fn untie_writes_a_tree_that_reparses() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "tri.graph", TRIANGLE);
    let out = dir.path().join("tree.graph");
    let o = run(&["untie", s(&g), "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("map.a'=a\n"), "{text}");
    let tree = AdjacencySpace::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(tree.is_tree());
    assert_eq!(tree.len(), 4);
    let o = run(&["project", s(&out), "--dim", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("arrangement=a c b a' b c a\n"), "{text}");
    assert!(
        text.contains("image.a=cyl n=2 { (-inf,1]; [6,inf) }\n"),
        "{text}"
    );
}

#[test]
fn project_rejects_cyclic_graphs() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "tri.graph", TRIANGLE);
    assert_eq!(run(&["project", s(&g)]).status.code(), Some(2));
}

#[test]
fn eval_in_a_space_and_on_the_line() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "tri.graph", TRIANGLE);
    let o = run(&["eval", "C(p,q)", "--space", s(&g), "p=a", "q=b,c"]);
    assert!(stdout(&o).contains("value=true"));
    let o = run(&["eval", "p.q == 0", "p=[0,1]", "q=[1,2]"]);
    assert!(stdout(&o).contains("value=true"));
    let o = run(&["eval", "C(x,y) => C(y,x)", "x=[0,1]", "y=empty"]);
    assert!(stdout(&o).contains("axiom=C3"), "{}", stdout(&o));
}

#[test]
fn audits_report_each_axiom() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "tri.graph", TRIANGLE);
    let o = run(&["audit", s(&g), "--boolean"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("C2=PASS checked=512"), "{out}");
    assert!(out.contains("distrib.=PASS"), "{out}");
    let o = run(&["audit", "interval", "--samples", "100", "--seed", "9"]);
    assert!(stdout(&o).ends_with("result=PASS\n"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["audit", "plane", "--samples", "20", "--seed", "3"]);
    let b = run(&[
        "audit",
        "plane",
        "--samples",
        "20",
        "--seed",
        "3",
        "--jobs",
        "2",
    ]);
    assert_eq!(stdout(&a), stdout(&b));
    let a = run(&[
        "synthesize",
        "p != 0 & q != 0 & r != 0 & p.q == 0 & p.r == 0 & q.r == 0 & C(p,q) & C(q,r) & C(p,r) => F",
    ]);
    let b = run(&[
        "synthesize",
        "p != 0 & q != 0 & r != 0 & p.q == 0 & p.r == 0 & q.r == 0 & C(p,q) & C(q,r) & C(p,r) => F",
    ]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(
        stdout(&a).contains("untied.space=space { cells a b c a'"),
        "{}",
        stdout(&a)
    );
}

#[test]
fn bool_op_results_reparse() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (
        file(&dir, "a.poly", LOWER_LEFT),
        file(&dir, "b.poly", UPPER_RIGHT),
    );
    let out = dir.path().join("u.poly");
    let o = run(&["bool-op", "union", s(&a), s(&b), "--out", s(&out)]);
    let printed = PlanePolytope::parse(&stdout(&o)).unwrap();
    let written = PlanePolytope::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(printed.equals(&written));
    let c = dir.path().join("c.poly");
    run(&["bool-op", "complement", s(&out), "--out", s(&c)]);
    let o = run(&["bool-op", "meet", s(&c), s(&a)]);
    assert!(PlanePolytope::parse(&stdout(&o)).unwrap().is_empty());
    let o = run(&["bool-op", "subset", s(&a), s(&out)]);
    assert_eq!(stdout(&o), "subset=true\n");
    let l = file(&dir, "l.poly", "[0,1]");
    assert_eq!(
        run(&["bool-op", "union", s(&a), s(&l)]).status.code(),
        Some(2)
    );
}

#[test]
fn render_writes_svg() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (
        file(&dir, "a.poly", LOWER_LEFT),
        file(&dir, "b.poly", UPPER_RIGHT),
    );
    let svg = dir.path().join("r.svg");
    let o = run(&["render", s(&a), s(&b), "--svg", s(&svg), "--clip=-3,-3,3,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&svg).unwrap().contains("<polygon"));
    let l = file(&dir, "l.poly", "(-inf,0]; [1/2,3]");
    let o = run(&["render", s(&l)]);
    assert!(stdout(&o).starts_with("<svg"));
    assert_eq!(
        run(&["render", s(&a), "--clip", "1,1,1,1"]).status.code(),
        Some(2)
    );
}

#[test]
fn errors_map_to_exit_codes() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.poly", LOWER_LEFT);
    let bad = file(&dir, "bad.poly", "poly { basic { 1 0 <= ; } }");
    let missing = dir.path().join("missing.poly");
    let o = run(&["sc-check", s(&bad), s(&a)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 22"));
    assert_eq!(
        run(&["sc-check", s(&missing), s(&a)]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["countermodel", "C(p"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

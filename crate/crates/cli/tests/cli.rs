use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn c2m(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_c2m")).args(args).env_remove("C2M_FUEL").output().expect("spawn c2m")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn translate_reproduces_the_golden_file() {
    let golden = root().join("fixtures/golden");
    let o = c2m(&["translate", s(&golden.join("item4_for_break.c"))]);
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    assert_eq!(text(&o.stdout), std::fs::read_to_string(golden.join("item4_for_break.m")).unwrap());
    assert!(text(&o.stderr).contains("LOC"));
    let again = c2m(&["translate", s(&golden.join("item4_for_break.c"))]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn translate_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.m");
    let o = c2m(&["translate", s(&root().join("fixtures/golden/mtf.c")), "-o", s(&out)]);
    assert_eq!(code(&o), 0);
    assert!(std::fs::read_to_string(&out).unwrap().contains("function generateMTFValues"));
    assert!(text(&o.stdout).contains("LOM"));
}

#[test]
fn unsupported_constructs_exit_2_with_the_item() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u.c", "union U { int a; float b; };\nint main(void) { return 0; }\n");
    let o = c2m(&["translate", s(&f)]);
    assert_eq!(code(&o), 2);
    assert!(text(&o.stderr).contains("[item-2]"), "{}", text(&o.stderr));
}

#[test]
fn empty_file_has_no_main() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "e.c", "");
    let o = c2m(&["translate", s(&f)]);
    assert_eq!(code(&o), 2);
    assert!(text(&o.stderr).contains("no `main`"), "{}", text(&o.stderr));
}

#[test]
fn run_xdc_reports_the_exit_value() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "r.c", "int main(void) { return 0; }\n");
    let o = c2m(&["run", "xdc", s(&f)]);
    assert_eq!(code(&o), 0);
    assert!(text(&o.stdout).contains("terminates(0)"), "{}", text(&o.stdout));
}

#[test]
fn unit_assignment_dumps_two_states() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u.m", "int x <== 0 and x := 1");
    let dump = dir.path().join("i.jsonl");
    let o = c2m(&["run", "msvl", s(&f), "--dump-interval", s(&dump)]);
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    let lines: Vec<serde_json::Value> =
        std::fs::read_to_string(&dump).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["vars"]["x"], 0);
    assert_eq!(lines[1]["vars"]["x"], 1);
}

#[test]
fn fuel_exhaustion_exits_4() {
    let o = c2m(&["run", "xdc", s(&root().join("fixtures/golden/mtf.c")), "--fuel", "1"]);
    assert_eq!(code(&o), 4);
    let o = c2m(&["run", "xdc", s(&root().join("fixtures/golden/mtf.c")), "--fuel", "0"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn bundled_cases_are_equivalent() {
    let o = c2m(&["diff", s(&root().join("cases"))]);
    assert_eq!(code(&o), 0, "{}", text(&o.stdout));
    assert!(text(&o.stdout).contains(" 0 failed"));
}

fn copy_case(name: &str, to: &Path) -> PathBuf {
    let src = root().join("cases").join(name);
    let dst = to.join(name);
    std::fs::create_dir(&dst).unwrap();
    for f in ["input.c", "externs.json", "expected.verdict"] {
        std::fs::copy(src.join(f), dst.join(f)).unwrap();
    }
    dst
}

#[test]
fn wrong_pin_exits_3_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let case = copy_case("array_initializer_zero_fill", dir.path());
    write(&case, "expected.verdict", "equivalent\ns = 1\n");
    let junit = dir.path().join("r.xml");
    let o = c2m(&["diff", s(&case), "--junit", s(&junit)]);
    assert_eq!(code(&o), 3, "{}", text(&o.stdout));
    assert!(text(&o.stdout).contains("FAIL"));
    assert!(std::fs::read_to_string(&junit).unwrap().contains("<failure"));
}

#[test]
fn missing_externs_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let case = copy_case("array_initializer_zero_fill", dir.path());
    std::fs::remove_file(case.join("externs.json")).unwrap();
    let o = c2m(&["diff", s(&case)]);
    assert_eq!(code(&o), 2);
}

#[test]
fn stats_on_one_file_has_no_fit() {
    let o = c2m(&["stats", s(&root().join("fixtures/golden/mtf.c"))]);
    assert_eq!(code(&o), 0);
    let out = text(&o.stdout);
    assert!(out.contains("mean ratio") && out.contains("fewer than 3"), "{out}");
    let o = c2m(&["stats", "--json", s(&root().join("corpus/synthetic"))]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["files"].as_array().unwrap().len(), 8);
    assert!(j["fit"]["r2"].as_f64().is_some());
}

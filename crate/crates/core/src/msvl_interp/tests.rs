use super::*;
use crate::msvl::parse_msvl;
use crate::translate::translate;
use crate::xdc::frontend;

fn msvl(src: &str) -> MsvlRun {
    let p = parse_msvl(src).unwrap_or_else(|e| panic!("{e:?}"));
    run_program(&p, &ExternTable::default(), &Config::default())
}

fn from_c(src: &str, externs: &str) -> MsvlRun {
    let t = translate(&frontend(src).unwrap_or_else(|d| panic!("{d:?}")));
    run_program(&t.program, &ExternTable::from_json(externs).unwrap(), &Config::default())
}

fn get(r: &MsvlRun, path: &str) -> Value {
    r.snapshot.as_ref().unwrap_or_else(|| panic!("no snapshot: {}", r.verdict)).get(path).unwrap()
}

#[test]
fn empty_program_has_one_state() {
    let r = msvl("empty");
    assert_eq!(r.verdict, Verdict::Terminates(1));
    let fc = r.final_config.unwrap();
    assert!(fc.is_well_formed());
    assert_eq!(fc.index, 1);
}

#[test]
fn unit_assignment_takes_one_transition() {
    let r = msvl("int x <== 0 and x := 5");
    assert_eq!(r.verdict, Verdict::Terminates(2));
    assert_eq!(get(&r, "x"), Value::int(5));
    assert_eq!(r.coverage.count("UASS"), 1);
    assert_eq!(r.coverage.count("TR1"), 1);
    assert_eq!(r.coverage.count("TR2"), 1);
}

#[test]
fn prev_reads_an_earlier_state() {
    let r = msvl("int x <== 1 and skip; x := 2; int y <== prev(x) and skip");
    assert_eq!(get(&r, "x"), Value::int(2));
    assert_eq!(get(&r, "y"), Value::int(1));
    assert!(matches!(msvl("int z <== prev(z) and skip").verdict, Verdict::Error(_)));
}

#[test]
fn conflicting_assignments_are_infeasible() {
    let r = msvl("int x <== 0 and skip; x := 1 and x := 2");
    assert!(matches!(r.verdict, Verdict::Infeasible(_)), "{}", r.verdict);
    assert!(r.snapshot.is_none());
    let r = msvl("int x <== 0 and skip; x := 1 and x := 1");
    assert_eq!(get(&r, "x"), Value::int(1));
}

#[test]
fn empty_with_next_is_infeasible() {
    let r = msvl("empty and skip");
    assert!(matches!(r.verdict, Verdict::Infeasible(_)), "{}", r.verdict);
    assert_eq!(r.coverage.count("F1"), 1);
}

#[test]
fn unassigned_variables_are_framed() {
    let r = msvl("int x <== 3, y <== 4 and skip; x := 7; skip");
    assert_eq!(get(&r, "y"), Value::int(4));
    assert_eq!(get(&r, "x"), Value::int(7));
    assert!(r.coverage.count("MIN2") > 0);
}

#[test]
fn translated_loop() {
    let r = from_c("int i, n;\nint main(){ n = 0; for(i=0; i<10; i++){ if(i==3){ break; } n = n + i; } return n; }", "{}");
    assert!(matches!(r.verdict, Verdict::Terminates(_)), "{}", r.verdict);
    assert_eq!(get(&r, "n"), Value::int(3));
    assert_eq!(r.rval, Some(Value::int(3)));
    assert!(r.coverage.count("WHL") >= 4);
}

#[test]
fn translated_recursion_and_calls() {
    let r = from_c(
        "int fact(int n){ if(n<=1){ return 1; } return n*fact(n-1); }\nint g;\n\
         void bump(int k){ g = g + k; }\nint r;\nint main(){ g = 0; r = fact(5); bump(2); bump(3); return 0; }",
        "{}",
    );
    assert_eq!(get(&r, "r"), Value::int(120));
    assert_eq!(get(&r, "g"), Value::int(5));
    assert!(r.coverage.count("R10") >= 5);
    assert_eq!(r.coverage.count("FUN"), 2);
}

#[test]
fn callee_variables_are_released() {
    let p = parse_msvl("function f(int a){ a := a + 1 }; int x <== 1 and skip; f(x); x := 2").unwrap();
    let cfg = Config { record_interval: true, ..Config::default() };
    let r = run_program(&p, &ExternTable::default(), &cfg);
    assert!(matches!(r.verdict, Verdict::Terminates(_)), "{}", r.verdict);
    let vars = |s: &serde_json::Value| s["vars"].as_object().unwrap().clone();
    assert!(r.interval.iter().any(|s| vars(s).keys().any(|k| k.starts_with("f#"))));
    let last = vars(r.interval.last().unwrap());
    assert!(last.keys().all(|k| !k.starts_with("f#")));
    assert_eq!(r.interval.len(), r.final_config.unwrap().states);
    assert_eq!(r.interval_jsonl().lines().count(), r.interval.len());
}

#[test]
fn externs_match_the_c_trace() {
    let r = from_c(
        "extern int getv(void);\nint x;\nint main(){ x = getv() + getv(); printf(\"%d\", x); return 0; }",
        r#"{"getv": {"returns": [3, 4]}}"#,
    );
    assert_eq!(get(&r, "x"), Value::int(7));
    let names: Vec<String> = r.events.iter().map(|e| e.to_string()).collect();
    assert_eq!(names, vec!["getv([], 3)", "getv([], 4)", "printf([\"%d\", 7], 0)"]);
    assert_eq!(r.coverage.count("R11"), 2);
    assert_eq!(r.coverage.count("EXT2"), 1);
}

#[test]
fn interval_models_for_externs() {
    let p = parse_msvl("int x <== 0 and skip; ext tick(1) and skip; x := 1").unwrap();
    let t = ExternTable::from_json(r#"{"tick": {"model": {"interval": 3}, "type": "void"}}"#).unwrap();
    let r = run_program(&p, &t, &Config::default());
    assert_eq!(get(&r, "x"), Value::int(1));
    assert_eq!(r.coverage.count("EXT3"), 1);
}

#[test]
fn external_call_of_a_program_function_splices_its_last_state() {
    let r = msvl("int g <== 0 and skip; function f(int k){ g := g + k; skip }; ext f(4) and skip; int y <== g and skip");
    assert_eq!(get(&r, "g"), Value::int(4));
    assert_eq!(get(&r, "y"), Value::int(4));
    assert_eq!(r.coverage.count("EXT1"), 1);
}

#[test]
fn expression_calls_must_be_pure() {
    let r = from_c("int g;\nint f(void){ g = 1; return 0; }\nint x;\nint main(){ x = f(); return 0; }", "{}");
    assert!(matches!(r.verdict, Verdict::Error(ref m) if m.contains("changed the memory")), "{}", r.verdict);
}

#[test]
fn divergence_times_out() {
    let p = parse_msvl("int x <== 0 and skip; while(true){ x := x }").unwrap();
    let r = run_program(&p, &ExternTable::default(), &Config { fuel: 5_000, ..Config::default() });
    assert_eq!(r.verdict, Verdict::Timeout);
}

#[test]
fn instantaneous_loop_body_rewrites_forever() {
    let p = parse_msvl("int x <== 0 and skip; while(x = 0){ empty }").unwrap();
    let r = run_program(&p, &ExternTable::default(), &Config { fuel: 5_000, ..Config::default() });
    assert_eq!(r.verdict, Verdict::Timeout);
    assert_eq!(r.interval.len(), 0);
}

#[test]
fn structs_pointers_and_arrays() {
    let r = from_c(
        "struct P { int x; int y; };\nstruct P pt;\nstruct P *q;\nint a[4];\nint *p;\nint m[2][3];\n\
         int main(){ q = &pt; q->y = 9; pt.x = q->y + 1; p = &a[1]; *p = 5; p[1] = 6; m[1][2] = a[1] + a[2]; return 0; }",
        "{}",
    );
    assert_eq!(get(&r, "pt.x"), Value::int(10));
    assert_eq!(get(&r, "pt.y"), Value::int(9));
    assert_eq!(get(&r, "a[2]"), Value::int(6));
    assert_eq!(get(&r, "m[1][2]"), Value::int(11));
    let snap = r.snapshot.unwrap();
    assert_eq!(snap.get("p"), Some(Value::Ptr(crate::value::Ptr::new(snap.roots["a"].block, 4))));
}

#[test]
fn switch_translation_runs() {
    let src = "int x, k;\nint main(){ x = 0; k = 1; switch(k){ case 0: x = 10; case 1: x = x + 1; case 2: x = x + 2; break; case 3: x = 50; default: x = 70; } return x; }";
    assert_eq!(get(&from_c(src, "{}"), "x"), Value::int(3));
    assert_eq!(get(&from_c(&src.replace("k = 1;", "k = 9;"), "{}"), "x"), Value::int(70));
}

#[test]
fn deterministic() {
    let src = "int a[5]; int i;\nint main(){ for(i=0;i<5;i++){ a[i] = i*i; } return a[4]; }";
    let (x, y) = (from_c(src, "{}"), from_c(src, "{}"));
    assert_eq!(x.verdict, y.verdict);
    assert_eq!(x.snapshot, y.snapshot);
    assert_eq!(x.steps, y.steps);
}

use super::*;
use crate::value::Ptr;
use crate::xdc::frontend;

fn run_with(src: &str, externs: &str, fuel: u64) -> XdcRun {
    let c = frontend(src).unwrap_or_else(|d| panic!("{d:?}"));
    let table = ExternTable::from_json(externs).unwrap();
    run_program(&c, &table, &Config { fuel, ..Config::default() })
}

fn run(src: &str) -> XdcRun {
    run_with(src, "{}", DEFAULT_FUEL)
}

fn get(r: &XdcRun, path: &str) -> Value {
    r.snapshot.as_ref().expect("no snapshot").get(path).unwrap_or_else(|| panic!("no {path}"))
}

#[test]
fn trivial_main_terminates_with_empty_trace() {
    let r = run("int main(){ return 0; }");
    assert_eq!(r.verdict, Verdict::Terminates(0));
    assert!(r.events.is_empty());
}

#[test]
fn infinite_loop_times_out() {
    let r = run_with("int main(){ while(1){ ; } return 0; }", "{}", 10_000);
    assert_eq!(r.verdict, Verdict::Timeout);
    assert!(r.snapshot.is_none());
}

#[test]
fn recursive_factorial() {
    let r = run("int fact(int n){ if(n<=1){ return 1; } return n*fact(n-1); }\nint r;\nint main(){ r = fact(5); return 0; }");
    assert_eq!(get(&r, "r"), Value::int(120));
    assert!(r.coverage.count("T25") >= 6);
}

#[test]
fn conditional_expression() {
    let r = run("int x, y;\nint main(){ x = 1; y = (x>0)?2:3; return 0; }");
    assert_eq!(get(&r, "y"), Value::int(2));
    assert_eq!(r.coverage.count("C9"), 1);
}

#[test]
fn array_element_address() {
    // a[2] of an int array sits 2 * 4 bytes into a's block.
    let r = run("int a[4];\nint *p;\nint main(){ p = &a[2]; return 0; }");
    let snap = r.snapshot.unwrap();
    let b = snap.roots["a"].block;
    assert_eq!(snap.get("p"), Some(Value::Ptr(Ptr::new(b, 8))));
}

#[test]
fn struct_field_offset() {
    let r = run("struct S { int a; char f2; };\nstruct S s;\nchar *p;\nint main(){ p = &s.f2; return 0; }");
    let snap = r.snapshot.unwrap();
    let b = snap.roots["s"].block;
    assert_eq!(snap.get("p"), Some(Value::Ptr(Ptr::new(b, 4))));
    assert_eq!(snap.roots["s"].leaves[1].offset, 4);
}

#[test]
fn mixed_float_double_has_no_rule() {
    let r = run("float f; double d, e;\nint main(){ f = 1.0f; d = 2.0; e = f + d; return 0; }");
    assert!(matches!(r.verdict, Verdict::Error(ref m) if m.contains("no evaluation rule")), "{}", r.verdict);
}

#[test]
fn division_by_zero_is_an_error() {
    let r = run("int x, z;\nint main(){ z = 0; x = 1 / z; return 0; }");
    assert!(matches!(r.verdict, Verdict::Error(ref m) if m.contains("division by zero")), "{}", r.verdict);
}

#[test]
fn reading_undefined_is_an_error() {
    let r = run("int x, y;\nint main(){ y = x; return 0; }");
    assert!(matches!(r.verdict, Verdict::Error(ref m) if m.contains("undefined")), "{}", r.verdict);
}

#[test]
fn break_and_loops() {
    let r = run("int i, n;\nint main(){ n = 0; for(i=0; i<10; i++){ if(i==3){ break; } n = n + i; } while(0){ n = 99; } return n; }");
    assert_eq!(r.verdict, Verdict::Terminates(3));
    assert_eq!(r.coverage.count("T11"), 1);
    assert_eq!(r.coverage.count("T16"), 1);
    assert_eq!(r.coverage.count("T2"), 1);
}

#[test]
fn switch_falls_through_until_break() {
    let src = "int x, k;\nint main(){ x = 0; k = 1; switch(k){ case 0: x = 10; case 1: x = x + 1; case 2: x = x + 2; break; case 3: x = 50; default: x = 70; } return x; }";
    let r = run(src);
    assert_eq!(r.verdict, Verdict::Terminates(3));
    assert_eq!(r.coverage.count("T22"), 1);
    assert_eq!(r.coverage.count("T21"), 1);
    let r = run(&src.replace("k = 1;", "k = 9;"));
    assert_eq!(r.verdict, Verdict::Terminates(70));
    assert_eq!(r.coverage.count("T23"), 1);
}

#[test]
fn extern_calls_are_traced() {
    let r = run_with(
        "extern int getv(void);\nint x;\nint main(){ x = getv() + getv(); printf(\"%d\", x); return 0; }",
        r#"{"getv": {"returns": [3, 4]}}"#,
        DEFAULT_FUEL,
    );
    assert_eq!(get(&r, "x"), Value::int(7));
    let names: Vec<String> = r.events.iter().map(|e| e.to_string()).collect();
    assert_eq!(names, vec!["getv([], 3)", "getv([], 4)", "printf([\"%d\", 7], 0)"]);
}

#[test]
fn expression_calls_must_be_pure() {
    let r = run("int g;\nint f(void){ g = 1; return 0; }\nint x;\nint main(){ x = f(); return 0; }");
    assert!(matches!(r.verdict, Verdict::Error(ref m) if m.contains("changed the memory")), "{}", r.verdict);
    let r = run("int g;\nvoid f(void){ g = 1; }\nint main(){ f(); return g; }");
    assert_eq!(r.verdict, Verdict::Terminates(1));
}

#[test]
fn function_pointers() {
    let r = run("int twice(int a){ return 2*a; }\nint (*fp)(int);\nint x;\nint main(){ fp = twice; x = fp(4); return 0; }");
    assert_eq!(get(&r, "x"), Value::int(8));
}

#[test]
fn shadowed_main_locals_get_qualified_keys() {
    let r = run("int x;\nint main(){ int x; x = 5; return 0; }");
    let snap = r.snapshot.unwrap();
    assert_eq!(snap.get("main::x"), Some(Value::int(5)));
    assert_eq!(snap.get("x"), Some(Value::Undef));
}

#[test]
fn main_parameters_are_bound() {
    let r = run("int main(int argc, char **argv){ return argc; }");
    assert_eq!(r.verdict, Verdict::Terminates(1));
    assert_eq!(r.snapshot.unwrap().get("argv"), Some(Value::Ptr(Ptr::NULL)));
}

#[test]
fn partial_array_initializers_fill_with_zero() {
    let r = run("int a[4] = {1, 2};\nint m[2][2] = {{1}, {3, 4}};\nint main(){ return 0; }");
    assert_eq!(get(&r, "a[3]"), Value::int(0));
    assert_eq!(get(&r, "m[0][1]"), Value::int(0));
    assert_eq!(get(&r, "m[1][0]"), Value::int(3));
}

#[test]
fn two_dimensional_indexing() {
    let r = run("int m[3][4];\nint i, j;\nint main(){ for(i=0;i<3;i++){ for(j=0;j<4;j++){ m[i][j] = i*10+j; } } return m[1][2]; }");
    assert_eq!(r.verdict, Verdict::Terminates(12));
    assert_eq!(r.snapshot.unwrap().roots["m"].leaves[6].offset, 6 * 4, "row 1, column 2");
}

#[test]
fn deterministic() {
    let src = "int a[5]; int i;\nint main(){ for(i=0;i<5;i++){ a[i] = i*i; } return a[4]; }";
    let (x, y) = (run(src), run(src));
    assert_eq!(x.verdict, y.verdict);
    assert_eq!(x.snapshot, y.snapshot);
    assert_eq!(x.steps, y.steps);
}

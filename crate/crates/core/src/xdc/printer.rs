//! Xd-C source printer. Output re-parses to a structurally identical tree.

use super::ast::*;
use crate::types::{CType, FuncSig, IntTy};
use crate::value::BinOp;
use std::fmt::Write;

pub fn print_program(p: &Program) -> String {
    let mut out = String::new();
    for item in &p.items {
        match item {
            Item::Decl(d) => {
                print_decl(&mut out, d, 0);
                out.push('\n');
            }
            Item::Extern(e) => {
                let sig = FuncSig { ret: e.ret.clone(), params: e.params.clone() };
                let kw = if e.explicit { "extern " } else { "" };
                let _ = writeln!(out, "{kw}{};", CType::Func(Box::new(sig)).declare(&e.name));
            }
            Item::Func(f) => print_func(&mut out, f),
        }
    }
    out
}

fn print_func(out: &mut String, f: &FuncDef) {
    let params = if f.params.is_empty() {
        "void".to_string()
    } else {
        f.params.iter().map(|p| p.ty.declare(&p.name)).collect::<Vec<_>>().join(", ")
    };
    let _ = writeln!(out, "{} {{", f.ret.declare(&format!("{}({params})", f.name)));
    for d in &f.locals {
        indent(out, 1);
        print_decl(out, d, 1);
        out.push('\n');
    }
    print_seq(out, &f.body, 1);
    out.push_str("}\n");
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("    ");
    }
}

pub fn print_decl(out: &mut String, d: &Decl, depth: usize) {
    match d {
        Decl::Struct(def, _) => {
            let _ = writeln!(out, "struct {} {{", def.name);
            for (n, t) in &def.fields {
                indent(out, depth + 1);
                let _ = writeln!(out, "{};", t.declare(n));
            }
            indent(out, depth);
            out.push_str("};");
        }
        Decl::Vars(base, vars) => {
            let base = vars.first().map(|v| v.ty.base_type().clone()).unwrap_or_else(|| base.clone());
            let parts: Vec<String> = vars
                .iter()
                .map(|v| {
                    let mut s = v.ty.declarator(&v.name);
                    if v.open_extent {
                        if let (Some(a), Some(b)) = (s.find('['), s.find(']')) {
                            s.replace_range(a..=b, "[]");
                        }
                    }
                    if let Some(i) = &v.init {
                        s.push_str(" = ");
                        print_init(&mut s, i);
                    }
                    s
                })
                .collect();
            let _ = write!(out, "{} {};", base.declare(""), parts.join(", "));
        }
    }
}

fn print_init(out: &mut String, i: &Init) {
    match i {
        Init::Expr(e) => out.push_str(&expr(e)),
        Init::List(items, _) => {
            out.push('{');
            for (k, it) in items.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                print_init(out, it);
            }
            out.push('}');
        }
    }
}

/// Prints a statement list; a left-nested sequence becomes a block.
fn print_seq(out: &mut String, s: &Stmt, depth: usize) {
    match &s.kind {
        StmtKind::Seq(a, b) => {
            if matches!(a.kind, StmtKind::Seq(..)) {
                indent(out, depth);
                out.push_str("{\n");
                print_seq(out, a, depth + 1);
                indent(out, depth);
                out.push_str("}\n");
            } else {
                print_stmt(out, a, depth);
            }
            print_seq(out, b, depth);
        }
        StmtKind::Null => {}
        _ => print_stmt(out, s, depth),
    }
}

fn print_block(out: &mut String, s: &Stmt, depth: usize) {
    out.push_str("{\n");
    print_seq(out, s, depth + 1);
    indent(out, depth);
    out.push('}');
}

/// Expression-statement forms without the trailing `;`.
fn simple(s: &Stmt) -> String {
    match &s.kind {
        StmtKind::Null => String::new(),
        StmtKind::PostInc(e) => format!("{}++", prec_expr(e, POSTFIX)),
        StmtKind::PostDec(e) => format!("{}--", prec_expr(e, POSTFIX)),
        StmtKind::Assign(l, r) => format!("{} = {}", prec_expr(l, UNARY), prec_expr(r, ASSIGN)),
        StmtKind::Call(c, args) => call(c, args),
        StmtKind::Expr(e) => expr(e),
        StmtKind::LocalDecl(d) => {
            let mut t = String::new();
            print_decl(&mut t, d, 0);
            t.pop();
            t
        }
        _ => unreachable!("not a simple statement"),
    }
}

fn print_stmt(out: &mut String, s: &Stmt, depth: usize) {
    indent(out, depth);
    match &s.kind {
        StmtKind::Null => out.push(';'),
        StmtKind::PostInc(_) | StmtKind::PostDec(_) | StmtKind::Assign(..) | StmtKind::Call(..) | StmtKind::Expr(_) => {
            out.push_str(&simple(s));
            out.push(';');
        }
        StmtKind::LocalDecl(d) => print_decl(out, d, depth),
        StmtKind::Seq(..) => {
            print_block(out, s, depth);
        }
        StmtKind::If(c, t, e) => {
            let _ = write!(out, "if ({}) ", expr(c));
            print_block(out, t, depth);
            if e.kind != StmtKind::Null {
                out.push_str(" else ");
                print_block(out, e, depth);
            }
        }
        StmtKind::Switch(e, cases, default) => {
            let _ = writeln!(out, "switch ({}) {{", expr(e));
            for c in cases {
                indent(out, depth);
                let _ = writeln!(out, "case {}:", c.label);
                print_seq(out, &c.body, depth + 1);
            }
            indent(out, depth);
            out.push_str("default:\n");
            if default.kind == StmtKind::Null {
                indent(out, depth + 1);
                out.push_str(";\n");
            } else {
                print_seq(out, default, depth + 1);
            }
            indent(out, depth);
            out.push('}');
        }
        StmtKind::While(c, b) => {
            let _ = write!(out, "while ({}) ", expr(c));
            print_block(out, b, depth);
        }
        StmtKind::Do(b, c) => {
            out.push_str("do ");
            print_block(out, b, depth);
            let _ = write!(out, " while ({});", expr(c));
        }
        StmtKind::For(i, c, st, b) => {
            let init = format!("{};", simple(i));
            let cond = c.as_ref().map(|c| format!(" {}", expr(c))).unwrap_or_default();
            let step = simple(st);
            let step = if step.is_empty() { step } else { format!(" {step}") };
            let _ = write!(out, "for ({init}{cond};{step}) ");
            print_block(out, b, depth);
        }
        StmtKind::Continue => out.push_str("continue;"),
        StmtKind::Break => out.push_str("break;"),
        StmtKind::Return(None) => out.push_str("return;"),
        StmtKind::Return(Some(e)) => {
            let _ = write!(out, "return {};", expr(e));
        }
        StmtKind::Goto(l) => {
            let _ = write!(out, "goto {l};");
        }
        StmtKind::Labeled(l, b) => {
            let _ = writeln!(out, "{l}:");
            print_stmt(out, b, depth);
            return;
        }
        StmtKind::StrayCase(b) => {
            out.push_str("case 0:\n");
            print_stmt(out, b, depth);
            return;
        }
    }
    out.push('\n');
}

const COMMA: u8 = 1;
const ASSIGN: u8 = 2;
const COND: u8 = 3;
const UNARY: u8 = 14;
const POSTFIX: u8 = 15;
const PRIMARY: u8 = 16;

fn binop_prec(op: BinOp) -> u8 {
    use BinOp::*;
    match op {
        Or => 4,
        And => 5,
        BitOr => 6,
        BitXor => 7,
        BitAnd => 8,
        Eq | Ne => 9,
        Lt | Gt | Le | Ge => 10,
        Shl | Shr => 11,
        Add | Sub => 12,
        Mul | Div | Mod => 13,
    }
}

fn prec(e: &Expr) -> u8 {
    use ExprKind::*;
    match &e.kind {
        Comma(..) => COMMA,
        Assign(..) | CompoundAssign(..) => ASSIGN,
        Cond(..) => COND,
        Binary(op, ..) => binop_prec(*op),
        Deref(_) | AddrOf(_) | Cast(..) | Unary(..) | PreInc(_) | PreDec(_) | Sizeof(_) => UNARY,
        Index(..) | Index2(..) | Member(..) | Arrow(..) | Call(..) | PostInc(_) | PostDec(_) => POSTFIX,
        Int(..) | Float(..) | Char(_) | Str(_) | Var(_) | InitList(_) => PRIMARY,
    }
}

pub fn expr(e: &Expr) -> String {
    prec_expr(e, COMMA)
}

fn prec_expr(e: &Expr, min: u8) -> String {
    let s = raw(e);
    if prec(e) < min {
        format!("({s})")
    } else {
        s
    }
}

fn call(c: &Expr, args: &[Expr]) -> String {
    let args: Vec<String> = args.iter().map(|a| prec_expr(a, ASSIGN)).collect();
    format!("{}({})", prec_expr(c, POSTFIX), args.join(", "))
}

fn prefix(op: &str, operand: String) -> String {
    // Keep `- -x` and `+ +x` from fusing into `--`/`++`.
    if operand.starts_with(op) && matches!(op, "-" | "+" | "&") {
        format!("{op} {operand}")
    } else {
        format!("{op}{operand}")
    }
}

pub fn char_lit(c: i64) -> String {
    let c = (c & 0xff) as u8;
    match c {
        b'\n' => "'\\n'".into(),
        b'\t' => "'\\t'".into(),
        b'\r' => "'\\r'".into(),
        0 => "'\\0'".into(),
        b'\\' => "'\\\\'".into(),
        b'\'' => "'\\''".into(),
        0x20..=0x7e => format!("'{}'", c as char),
        _ => format!("'\\x{c:02x}'"),
    }
}

pub fn str_lit(s: &str) -> String {
    let mut out = String::from("\"");
    for ch in s.chars() {
        match ch {
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\{:03o}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn float_lit(x: f64, single: bool) -> String {
    let mut s = format!("{x:?}");
    if !s.contains(['.', 'e', 'E']) {
        s.push_str(".0");
    }
    if single {
        s.push('f');
    }
    s
}

fn raw(e: &Expr) -> String {
    use ExprKind::*;
    match &e.kind {
        Int(n, t) => {
            if *t == IntTy::U32 {
                format!("{n}u")
            } else {
                n.to_string()
            }
        }
        Float(x, single) => float_lit(*x, *single),
        Char(c) => char_lit(*c),
        Str(s) => str_lit(s),
        Var(v) => v.clone(),
        Index(n, i) => format!("{n}[{}]", expr(i)),
        Index2(n, i, j) => format!("{n}[{}][{}]", expr(i), expr(j)),
        Member(b, f) => format!("{}.{f}", prec_expr(b, POSTFIX)),
        Arrow(b, f) => format!("{}->{f}", prec_expr(b, POSTFIX)),
        Deref(x) => prefix("*", prec_expr(x, UNARY)),
        AddrOf(x) => prefix("&", prec_expr(x, UNARY)),
        Cast(t, x) => format!("({}){}", t.declare(""), prec_expr(x, UNARY)),
        Unary(op, x) => prefix(op.c_str(), prec_expr(x, UNARY)),
        Binary(op, a, b) => {
            let p = binop_prec(*op);
            format!("{} {} {}", prec_expr(a, p), op.c_str(), prec_expr(b, p + 1))
        }
        Cond(c, a, b) => format!("{} ? {} : {}", prec_expr(c, 4), expr(a), prec_expr(b, COND)),
        Call(c, args) => call(c, args),
        Assign(l, r) => format!("{} = {}", prec_expr(l, UNARY), prec_expr(r, ASSIGN)),
        CompoundAssign(op, l, r) => format!("{} {}= {}", prec_expr(l, UNARY), op.c_str(), prec_expr(r, ASSIGN)),
        PreInc(x) => format!("++{}", prec_expr(x, UNARY)),
        PreDec(x) => format!("--{}", prec_expr(x, UNARY)),
        PostInc(x) => format!("{}++", prec_expr(x, POSTFIX)),
        PostDec(x) => format!("{}--", prec_expr(x, POSTFIX)),
        Comma(a, b) => format!("{}, {}", prec_expr(a, COMMA), prec_expr(b, ASSIGN)),
        InitList(items) => format!("{{{}}}", items.iter().map(|i| prec_expr(i, ASSIGN)).collect::<Vec<_>>().join(", ")),
        Sizeof(t) => format!("sizeof({})", t.declare("")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xdc::parser::{parse_expr, parse_source};

    #[test]
    fn expression_parens_follow_precedence() {
        for src in ["a - (b - c)", "(a + b) * c", "-(-x)", "*p + 1", "(*s).f", "c ? a : (b ? d : e)", "(double)(a + b)"] {
            let e = parse_expr(src).unwrap();
            let printed = expr(&e);
            assert_eq!(parse_expr(&printed).unwrap(), e, "{src} -> {printed}");
        }
        assert_eq!(expr(&parse_expr("a - (b - c)").unwrap()), "a - (b - c)");
        assert_eq!(expr(&parse_expr("((a)) + b").unwrap()), "a + b");
    }

    #[test]
    fn program_round_trip() {
        let src = r#"
struct P { int x; int *y; };
int g[3] = {1, 2, 3}, h[] = {4, 5};
double m[2][2] = {{1.0, 2.0}, {3.0, 4.0}};
extern int get(int);
int f(int a, char **argv) {
    int t, *q;
    { t = a; q = &t; }
    for (t = 0; t < 3; t++) { if (t == 1) continue; else { t--; t++; } }
    switch (a % 2) { case 0: t = 1; break; case -1: ; default: ; }
    do { t = t - 1; } while (t > 0);
    return *q + get('\n');
}
int main(void) { return f(1, 0); }
"#;
        let p = parse_source(src).unwrap();
        let printed = print_program(&p);
        let q = parse_source(&printed).unwrap();
        assert_eq!(p, q, "{printed}");
        assert_eq!(print_program(&q), printed);
    }
}

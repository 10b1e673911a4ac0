//! Negative-list detection. Every diagnostic produced here names the list
//! item (1..=14) it violates, except for a few constructs that are simply
//! not C89 statements at all.

use super::ast::*;
use crate::diag::{Diagnostic, Span};
use std::collections::HashSet;

pub const ITEM_NAMES: [&str; 14] = [
    "goto statement",
    "union type",
    "prefix increment/decrement",
    "comma expression",
    "compound assignment",
    "structure assignment",
    "chained assignment",
    "storage-class specifier",
    "type qualifier",
    "local variable in a block",
    "nested case in a switch",
    "assignment inside an expression",
    "function pointer to an external function",
    "variadic function",
];

fn item(span: Span, n: u8, detail: impl Into<String>) -> Diagnostic {
    let detail = detail.into();
    let name = ITEM_NAMES[n as usize - 1];
    let msg = if detail.is_empty() { format!("{name} is not supported") } else { format!("{name} is not supported: {detail}") };
    Diagnostic::unsupported(span, n, msg)
}

/// Empty iff the program stays inside Xd-C. Sorted by position.
pub fn check_subset(p: &Program) -> Vec<Diagnostic> {
    let mut c = Checker { out: Vec::new(), externs: HashSet::new(), shadow: HashSet::new() };
    for e in p.externs() {
        if p.func(&e.name).is_none() {
            c.externs.insert(e.name.clone());
        }
    }
    for (sp, m) in &p.marks {
        c.out.push(match m {
            Mark::Union => item(*sp, 2, ""),
            Mark::StorageClass(s) => item(*sp, 8, format!("`{s}`")),
            Mark::Qualifier(q) => item(*sp, 9, format!("`{q}`")),
            Mark::Variadic => item(*sp, 14, "`...`"),
        });
    }
    for it in &p.items {
        match it {
            Item::Decl(d) => c.decl(d),
            Item::Extern(_) => {}
            Item::Func(f) => {
                c.shadow = f.params.iter().map(|p| p.name.clone()).collect();
                for d in &f.locals {
                    if let Decl::Vars(_, vs) = d {
                        c.shadow.extend(vs.iter().map(|v| v.name.clone()));
                    }
                    c.decl(d);
                }
                c.stmt(&f.body, false);
                c.shadow.clear();
            }
        }
    }
    c.out.sort_by_key(|d| (d.span.line, d.span.col));
    c.out
}

struct Checker {
    out: Vec<Diagnostic>,
    externs: HashSet<String>,
    shadow: HashSet<String>,
}

impl Checker {
    fn decl(&mut self, d: &Decl) {
        let Decl::Vars(_, vs) = d else { return };
        for v in vs {
            if let Some(init) = &v.init {
                if matches!(v.ty, crate::types::CType::Struct(_)) {
                    self.out.push(item(v.span, 6, format!("initializer for struct variable `{}`", v.name)));
                }
                for e in init.exprs() {
                    self.expr(e, Ctx::Nested);
                }
            }
        }
    }

    fn stmt(&mut self, s: &Stmt, in_switch: bool) {
        use StmtKind::*;
        match &s.kind {
            Goto(l) => self.out.push(item(s.span, 1, format!("`goto {l}`"))),
            Labeled(l, b) => {
                self.out.push(item(s.span, 1, format!("label `{l}`")));
                self.stmt(b, in_switch);
            }
            LocalDecl(d) => {
                let name = match d {
                    Decl::Vars(_, vs) => vs.first().map(|v| v.name.clone()).unwrap_or_default(),
                    Decl::Struct(def, _) => def.name.clone(),
                };
                self.out.push(item(s.span, 10, format!("declaration of `{name}` after statements or inside a block")));
                self.decl(d);
            }
            StrayCase(b) => {
                self.out.push(item(s.span, 11, "label outside the arm list of its switch"));
                self.stmt(b, in_switch);
            }
            Switch(e, cases, default) => {
                if in_switch {
                    self.out.push(item(s.span, 11, "switch inside a switch"));
                }
                self.expr(e, Ctx::Nested);
                for c in cases {
                    self.stmt(&c.body, true);
                }
                self.stmt(default, true);
            }
            Expr(e) => self.expr_stmt(e, s.span),
            Assign(l, r) => {
                self.expr(l, Ctx::Nested);
                if let super::ast::ExprKind::InitList(_) = r.kind {
                    self.out.push(item(r.span, 6, "braced list on the right of `=`"));
                } else {
                    self.expr(r, Ctx::Nested);
                }
            }
            PostInc(e) | PostDec(e) => self.expr(e, Ctx::Nested),
            Call(c, args) => {
                self.callee(c);
                args.iter().for_each(|a| self.expr(a, Ctx::Nested));
            }
            If(c, a, b) => {
                self.expr(c, Ctx::Nested);
                self.stmt(a, in_switch);
                self.stmt(b, in_switch);
            }
            While(c, b) | Do(b, c) => {
                self.expr(c, Ctx::Nested);
                self.stmt(b, in_switch);
            }
            For(i, c, st, b) => {
                self.stmt(i, in_switch);
                if let Some(c) = c {
                    self.expr(c, Ctx::Nested);
                }
                self.stmt(st, in_switch);
                self.stmt(b, in_switch);
            }
            Return(e) => {
                if let Some(e) = e {
                    self.expr(e, Ctx::Nested);
                }
            }
            Seq(a, b) => {
                self.stmt(a, in_switch);
                self.stmt(b, in_switch);
            }
            Null | Continue | Break => {}
        }
    }

    /// An expression statement that is not one of the Xd-C statement forms.
    fn expr_stmt(&mut self, e: &Expr, span: Span) {
        use super::ast::ExprKind::*;
        match &e.kind {
            Assign(_, r) if matches!(r.kind, Assign(..)) => {
                self.out.push(item(e.span, 7, "`x = y = z`"));
                let mut cur = e;
                while let Assign(l, r) = &cur.kind {
                    self.expr(l, Ctx::Nested);
                    cur = r;
                }
                self.expr(cur, Ctx::Nested);
            }
            Comma(..) | PreInc(_) | PreDec(_) | CompoundAssign(..) => self.expr(e, Ctx::Statement),
            _ => {
                self.out.push(Diagnostic::error(span, "expression statement is not an Xd-C statement form"));
                self.expr(e, Ctx::Nested);
            }
        }
    }

    fn callee(&mut self, c: &Expr) {
        if let super::ast::ExprKind::Var(_) = c.kind {
            return;
        }
        self.expr(c, Ctx::Nested);
    }

    fn expr(&mut self, e: &Expr, ctx: Ctx) {
        use super::ast::ExprKind::*;
        match &e.kind {
            Assign(l, r) => {
                if ctx == Ctx::Nested {
                    self.out.push(item(e.span, 12, "assignment used as a value"));
                }
                self.expr(l, Ctx::Nested);
                if matches!(r.kind, InitList(_)) {
                    self.out.push(item(r.span, 6, "braced list on the right of `=`"));
                } else {
                    self.expr(r, Ctx::Nested);
                }
            }
            PostInc(x) | PostDec(x) => {
                if ctx == Ctx::Nested {
                    self.out.push(item(e.span, 12, "increment used as a value"));
                }
                self.expr(x, Ctx::Nested);
            }
            PreInc(x) | PreDec(x) => {
                self.out.push(item(e.span, 3, ""));
                self.expr(x, Ctx::Nested);
            }
            CompoundAssign(op, l, r) => {
                self.out.push(item(e.span, 5, format!("`{}=`", op.c_str())));
                self.expr(l, Ctx::Nested);
                self.expr(r, Ctx::Nested);
            }
            Comma(a, b) => {
                if ctx != Ctx::InComma {
                    self.out.push(item(e.span, 4, ""));
                }
                let inner = if ctx == Ctx::Nested { Ctx::Nested } else { Ctx::InComma };
                self.expr(a, inner);
                self.expr(b, inner);
            }
            InitList(items) => {
                self.out.push(item(e.span, 6, "braced list used as a value"));
                items.iter().for_each(|x| self.expr(x, Ctx::Nested));
            }
            Sizeof(_) => self.out.push(Diagnostic::error(e.span, "`sizeof` is not part of Xd-C")),
            Var(n) => {
                if self.externs.contains(n) && !self.shadow.contains(n) {
                    self.out.push(item(e.span, 13, format!("`{n}` used as a value")));
                }
            }
            Call(c, args) => {
                self.callee(c);
                args.iter().for_each(|a| self.expr(a, Ctx::Nested));
            }
            _ => {
                let mut kids = Vec::new();
                direct_children(e, &mut kids);
                for k in kids {
                    self.expr(k, Ctx::Nested);
                }
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ctx {
    /// Top of an expression statement.
    Statement,
    /// Operand of a top-level comma.
    InComma,
    Nested,
}

fn direct_children<'a>(e: &'a Expr, out: &mut Vec<&'a Expr>) {
    use super::ast::ExprKind::*;
    match &e.kind {
        Index(_, a) | Member(a, _) | Arrow(a, _) | Deref(a) | AddrOf(a) | Cast(_, a) | Unary(_, a) => out.push(a),
        Index2(_, a, b) | Binary(_, a, b) => {
            out.push(a);
            out.push(b);
        }
        Cond(a, b, c) => {
            out.push(a);
            out.push(b);
            out.push(c);
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xdc::parser::parse_source;

    fn items_of(body: &str) -> Vec<u8> {
        let src = format!("int x, y, z;\nint f(void);\nint main(void) {{\n{body}\nreturn 0;\n}}\n");
        check_subset(&parse_source(&src).unwrap()).iter().filter_map(|d| d.item).collect()
    }

    fn items_of_program(src: &str) -> Vec<u8> {
        check_subset(&parse_source(src).unwrap()).iter().filter_map(|d| d.item).collect()
    }

    #[test]
    fn each_item_is_named() {
        assert_eq!(items_of("goto L; L: x = 1;"), vec![1, 1]);
        assert_eq!(items_of_program("union U { int a; };\nint main(void) { return 0; }"), vec![2]);
        assert_eq!(items_of("++x;"), vec![3]);
        assert_eq!(items_of("x = 1, y = 2;"), vec![4]);
        assert_eq!(items_of("x += 2;"), vec![5]);
        assert_eq!(
            items_of_program("struct A { int p; int q; };\nstruct A a;\nint main(void) { a = {1, 2}; return 0; }"),
            vec![6]
        );
        assert_eq!(items_of("x = y = z;"), vec![7]);
        assert_eq!(items_of_program("static int s;\nint main(void) { return 0; }"), vec![8]);
        assert_eq!(items_of_program("const int k = 1;\nint main(void) { return 0; }"), vec![9]);
        assert_eq!(items_of("if (x) { int t; t = 1; }"), vec![10]);
        assert_eq!(items_of("switch (x) { case 1: switch (y) { default: ; } default: ; }"), vec![11]);
        assert_eq!(items_of("if ((y = f()) == x) x = 1;"), vec![12]);
        assert_eq!(items_of_program("extern int g(int);\nint (*fp)(int) = g;\nint main(void) { return 0; }"), vec![13]);
        assert_eq!(items_of_program("int h(int n, ...);\nint main(void) { return 0; }"), vec![14]);
    }

    #[test]
    fn clean_programs_have_no_violations() {
        let src = "struct S { int a; };\nextern int get(void);\nint g(int a) { return a + 1; }\n\
                   int main(int argc, char **argv) { int i; struct S s; s.a = 1; for (i = 0; i < 3; i++) { i--; i++; } \
                   switch (i) { case 0: i = get(); break; default: ; } return g(i); }";
        assert!(check_subset(&parse_source(src).unwrap()).is_empty());
    }

    #[test]
    fn increments_inside_expressions() {
        assert_eq!(items_of("x = y++;"), vec![12]);
        assert_eq!(items_of("while (x--) y = 1;"), vec![12]);
        assert_eq!(items_of("for (x = 0, y = 0; x < 1; x++) ;"), vec![4]);
    }
}

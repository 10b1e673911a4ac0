//! One-pass translation of a checked Xd-C program into MSVL.

use crate::msvl::{MExpr, MFunc, MInit, MStmt, MVar, MsvlProgram, Unit};
use crate::types::{CType, FuncSig, StructDef};
use crate::value::BinOp;
use crate::xdc::ast::*;
use crate::xdc::{Checked, Symbols};
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// Identifiers that cannot be used verbatim on the MSVL side.
pub const RESERVED: &[&str] = &[
    "empty", "skip", "and", "or", "next", "then", "function", "ext", "prev", "true", "false", "RVal", "mfree", "more",
];

/// Translation-introduced variables, excluded from state comparison.
pub const KEY_VARS: &[&str] = &["break", "continue", "return", "switch", "RVal"];

#[derive(Clone, Debug)]
pub struct Translation {
    pub program: MsvlProgram,
    /// Snapshot key on the Xd-C side (`x`, or `main::x` for a main local
    /// shadowing a global) to top-level MSVL variable name.
    pub name_map: BTreeMap<String, String>,
    /// Identifier renames applied everywhere (variables, fields, tags).
    pub renames: BTreeMap<String, String>,
}

impl Translation {
    /// Rewrites a leaf path suffix (`.f[2]`) into MSVL field names.
    pub fn map_path(&self, suffix: &str) -> String {
        let mut out = String::new();
        let mut word = String::new();
        let flush = |w: &mut String, out: &mut String| {
            if !w.is_empty() {
                out.push_str(self.renames.get(w.as_str()).map(String::as_str).unwrap_or(w));
                w.clear();
            }
        };
        for c in suffix.chars() {
            if c.is_ascii_alphanumeric() || c == '_' {
                word.push(c);
            } else {
                flush(&mut word, &mut out);
                out.push(c);
            }
        }
        flush(&mut word, &mut out);
        out
    }
}

/// Syntactic jump flags: the jumps that can leave a statement.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Jumps {
    pub brk: bool,
    pub ret: bool,
    pub cont: bool,
}

impl Jumps {
    pub fn any(self) -> bool {
        self.brk || self.ret || self.cont
    }
}

/// Jumps escaping `s`: a `break` inside a nested loop or switch, or a
/// `continue` inside a nested loop, is absorbed there.
pub fn jumps(s: &Stmt) -> Jumps {
    use StmtKind::*;
    match &s.kind {
        Break => Jumps { brk: true, ..Jumps::default() },
        Continue => Jumps { cont: true, ..Jumps::default() },
        Return(_) => Jumps { ret: true, ..Jumps::default() },
        While(_, b) | Do(b, _) | For(_, _, _, b) => Jumps { ret: jumps(b).ret, ..Jumps::default() },
        Switch(_, cases, d) => {
            let mut j = jumps(d);
            for c in cases {
                let k = jumps(&c.body);
                j.ret |= k.ret;
                j.cont |= k.cont;
            }
            j.brk = false;
            j
        }
        _ => s.children().iter().fold(Jumps::default(), |a, c| {
            let b = jumps(c);
            Jumps { brk: a.brk || b.brk, ret: a.ret || b.ret, cont: a.cont || b.cont }
        }),
    }
}

fn key(name: &str) -> MExpr {
    MExpr::var(name)
}

fn is_zero(name: &str) -> MExpr {
    MExpr::eq(key(name), MExpr::int(0))
}

fn set(name: &str, v: i64) -> MStmt {
    MStmt::unit(key(name), MExpr::int(v))
}

/// Wraps `s` in `if(flag=0)then{..}else{empty}` for each jump kind in `j`,
/// break outermost, then return, then continue.
fn guarded(j: Jumps, s: MStmt) -> MStmt {
    let mut s = s;
    if j.cont {
        s = MStmt::guard(is_zero("continue"), s);
    }
    if j.ret {
        s = MStmt::guard(is_zero("return"), s);
    }
    if j.brk {
        s = MStmt::guard(is_zero("break"), s);
    }
    s
}

/// `break=0 and return=0 and e`, keeping only the conjuncts `j` needs.
fn loop_guard(j: Jumps, e: MExpr) -> MExpr {
    let mut parts = Vec::new();
    if j.brk {
        parts.push(is_zero("break"));
    }
    if j.ret {
        parts.push(is_zero("return"));
    }
    parts.push(e);
    let mut it = parts.into_iter().rev();
    let mut acc = it.next().unwrap();
    for p in it {
        acc = MExpr::and(p, acc);
    }
    acc
}

struct Tr<'a> {
    sym: &'a Symbols,
    renames: BTreeMap<String, String>,
    /// Variables in scope in the current function (params and locals).
    locals: HashSet<String>,
    /// Extra renames for the current function (main locals shadowing globals).
    local_renames: BTreeMap<String, String>,
}

pub fn translate(c: &Checked) -> Translation {
    let p = &c.program;
    let names = all_identifiers(p);
    let mut renames = BTreeMap::new();
    for n in &names {
        if RESERVED.contains(&n.as_str()) {
            renames.insert(n.clone(), fresh(&format!("{n}_v"), &names, &renames));
        }
    }
    let mut tr = Tr { sym: &c.symbols, renames, locals: HashSet::new(), local_renames: BTreeMap::new() };
    let mut units = Vec::new();
    let mut name_map = BTreeMap::new();
    let globals: BTreeSet<String> =
        p.decls().filter_map(|d| if let Decl::Vars(_, vs) = d { Some(vs) } else { None }).flatten().map(|v| v.name.clone()).collect();
    for g in &globals {
        name_map.insert(g.clone(), tr.id(g));
    }
    let mut main_body = None;
    for it in &p.items {
        match it {
            Item::Decl(d) => units.push(Unit::Stmt(tr.dec(d))),
            Item::Extern(_) => {}
            Item::Func(f) if f.name == "main" => {
                let mut taken: BTreeSet<String> = names.clone();
                taken.extend(tr.renames.values().cloned());
                for v in local_names(f) {
                    if globals.contains(&v) {
                        let m = fresh(&format!("main_{v}"), &taken, &BTreeMap::new());
                        taken.insert(m.clone());
                        tr.local_renames.insert(v.clone(), m.clone());
                        name_map.insert(format!("main::{v}"), m);
                    } else {
                        name_map.insert(v.clone(), tr.id(&v));
                    }
                }
                main_body = Some(tr.main(f));
                tr.local_renames.clear();
            }
            Item::Func(f) => units.push(Unit::Func(tr.func(f))),
        }
    }
    units.push(Unit::Stmt(main_body.unwrap_or(MStmt::Empty)));
    Translation { program: MsvlProgram::new(units), name_map, renames: tr.renames }
}

fn fresh(base: &str, taken: &BTreeSet<String>, renames: &BTreeMap<String, String>) -> String {
    let mut n = base.to_string();
    while taken.contains(&n) || renames.values().any(|v| *v == n) || RESERVED.contains(&n.as_str()) {
        n.push_str("_v");
    }
    n
}

fn local_names(f: &FuncDef) -> Vec<String> {
    let mut v: Vec<String> = f.params.iter().map(|p| p.name.clone()).collect();
    for d in &f.locals {
        if let Decl::Vars(_, vs) = d {
            v.extend(vs.iter().map(|x| x.name.clone()));
        }
    }
    v
}

fn all_identifiers(p: &Program) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let ty = |t: &CType, out: &mut BTreeSet<String>| collect_type_names(t, out);
    let decl = |d: &Decl, out: &mut BTreeSet<String>| match d {
        Decl::Vars(_, vs) => {
            for v in vs {
                out.insert(v.name.clone());
                ty(&v.ty, out);
            }
        }
        Decl::Struct(def, _) => {
            out.insert(def.name.clone());
            for (f, t) in &def.fields {
                out.insert(f.clone());
                collect_type_names(t, out);
            }
        }
    };
    for it in &p.items {
        match it {
            Item::Decl(d) => decl(d, &mut out),
            Item::Extern(e) => {
                out.insert(e.name.clone());
            }
            Item::Func(f) => {
                out.insert(f.name.clone());
                for prm in &f.params {
                    out.insert(prm.name.clone());
                    collect_type_names(&prm.ty, &mut out);
                }
                for d in &f.locals {
                    decl(d, &mut out);
                }
                f.body.walk(&mut |s| {
                    for e in s.exprs() {
                        e.walk(&mut |x| match &x.kind {
                            ExprKind::Var(n) | ExprKind::Index(n, _) | ExprKind::Index2(n, ..) => {
                                out.insert(n.clone());
                            }
                            ExprKind::Member(_, f) | ExprKind::Arrow(_, f) => {
                                out.insert(f.clone());
                            }
                            _ => {}
                        });
                    }
                });
            }
        }
    }
    out
}

fn collect_type_names(t: &CType, out: &mut BTreeSet<String>) {
    match t {
        CType::Struct(n) => {
            out.insert(n.clone());
        }
        CType::Pointer(t) | CType::Array(t, _) => collect_type_names(t, out),
        CType::Func(sig) => {
            collect_type_names(&sig.ret, out);
            sig.params.iter().for_each(|p| collect_type_names(p, out));
        }
        _ => {}
    }
}

impl Tr<'_> {
    fn id(&self, n: &str) -> String {
        if let Some(m) = self.local_renames.get(n) {
            return m.clone();
        }
        self.renames.get(n).cloned().unwrap_or_else(|| n.to_string())
    }

    fn field(&self, n: &str) -> String {
        self.renames.get(n).cloned().unwrap_or_else(|| n.to_string())
    }

    fn ty(&self, t: &CType) -> CType {
        match t {
            CType::Struct(n) => CType::Struct(self.field(n)),
            CType::Pointer(t) => CType::ptr(self.ty(t)),
            CType::Array(t, d) => CType::Array(Box::new(self.ty(t)), d.clone()),
            CType::Func(sig) => CType::Func(Box::new(FuncSig {
                ret: self.ty(&sig.ret),
                params: sig.params.iter().map(|p| self.ty(p)).collect(),
            })),
            t => t.clone(),
        }
    }

    // ---- declarations ----

    /// `τ VLTr(varlist) and skip`, or a struct definition.
    fn dec(&self, d: &Decl) -> MStmt {
        match d {
            Decl::Vars(_, vs) => {
                let vars = vs
                    .iter()
                    .map(|v| MVar { name: self.id(&v.name), ty: self.ty(&v.ty), init: v.init.as_ref().map(|i| self.init(i)) })
                    .collect();
                MStmt::and(MStmt::Decl(vars), MStmt::Skip)
            }
            Decl::Struct(def, _) => MStmt::StructDef(StructDef {
                name: self.field(&def.name),
                fields: def.fields.iter().map(|(n, t)| (self.field(n), self.ty(t))).collect(),
            }),
        }
    }

    fn init(&self, i: &Init) -> MInit {
        match i {
            Init::Expr(e) => MInit::Expr(self.ex(e)),
            Init::List(items, _) => MInit::List(items.iter().map(|x| self.init(x)).collect()),
        }
    }

    // ---- functions ----

    fn enter(&mut self, f: &FuncDef) {
        self.locals = local_names(f).into_iter().collect();
    }

    fn body(&self, f: &FuncDef) -> MStmt {
        let mut parts: Vec<MStmt> = f.locals.iter().map(|d| self.dec(d)).collect();
        parts.push(self.stmt(&f.body));
        MStmt::chop_all(parts)
    }

    fn func(&mut self, f: &FuncDef) -> MFunc {
        self.enter(f);
        let params = f.params.iter().map(|p| (self.id(&p.name), self.ty(&p.ty))).collect();
        let rval = (f.ret != CType::Void).then(|| self.ty(&f.ret));
        let body = self.body(f);
        self.locals.clear();
        MFunc { name: self.id(&f.name), params, rval, body }
    }

    /// Main's body becomes the top-level statement. Its parameters are
    /// declared with the values the Xd-C interpreter passes (`argc` = 1,
    /// `argv` = null).
    fn main(&mut self, f: &FuncDef) -> MStmt {
        self.enter(f);
        let mut parts = Vec::new();
        for (k, p) in f.params.iter().enumerate() {
            let init = MInit::Expr(MExpr::int(if k == 0 { 1 } else { 0 }));
            let var = MVar { name: self.id(&p.name), ty: self.ty(&p.ty), init: Some(init) };
            parts.push(MStmt::and(MStmt::Decl(vec![var]), MStmt::Skip));
        }
        parts.push(self.body(f));
        self.locals.clear();
        MStmt::chop_all(parts)
    }

    // ---- expressions ----

    fn ex(&self, e: &Expr) -> MExpr {
        use ExprKind::*;
        let b = |x: &Expr| Box::new(self.ex(x));
        match &e.kind {
            Int(n, t) => MExpr::Int(*n, *t),
            Float(x, s) => MExpr::Float(*x, *s),
            Char(c) => MExpr::Char(*c),
            Str(s) => MExpr::Str(s.clone()),
            Var(n) => MExpr::Var(self.id(n)),
            Index(n, i) => MExpr::Index(self.id(n), b(i)),
            Index2(n, i, j) => MExpr::Index2(self.id(n), b(i), b(j)),
            Member(s, f) => MExpr::Member(b(s), self.field(f)),
            Arrow(p, f) => MExpr::Arrow(b(p), self.field(f)),
            Deref(p) => MExpr::Deref(b(p)),
            AddrOf(x) => MExpr::AddrOf(b(x)),
            Cast(t, x) => MExpr::Cast(self.ty(t), b(x)),
            Unary(op, x) => MExpr::Unary(*op, b(x)),
            Binary(op, x, y) => MExpr::Binary(*op, b(x), b(y)),
            Cond(c, x, y) => MExpr::IfThenElse(b(c), b(x), b(y)),
            Call(c, args) => {
                let (callee, kind) = self.callee(c);
                let args = args.iter().map(|a| self.ex(a)).collect();
                MExpr::ExtCall(Box::new(callee), args, kind == Callee::UserValue)
            }
            Assign(..) | CompoundAssign(..) | PreInc(_) | PreDec(_) | PostInc(_) | PostDec(_) | Comma(..)
            | InitList(_) | Sizeof(_) => unreachable!("rejected by the subset checker"),
        }
    }

    fn callee(&self, c: &Expr) -> (MExpr, Callee) {
        let ret_void = |t: &CType| match t {
            CType::Func(sig) => sig.ret == CType::Void,
            CType::Pointer(t) => matches!(&**t, CType::Func(sig) if sig.ret == CType::Void),
            _ => false,
        };
        if let ExprKind::Var(n) = &c.kind {
            if !self.locals.contains(n) && self.sym.global(n).is_none() {
                let info = &self.sym.funcs[n];
                let kind = if !self.sym.is_user_func(n) {
                    Callee::Extern
                } else if info.sig.ret == CType::Void {
                    Callee::UserVoid
                } else {
                    Callee::UserValue
                };
                return (MExpr::Var(self.id(n)), kind);
            }
        }
        // Calls through pointers always reach user-defined functions.
        let kind = if ret_void(c.ty()) { Callee::UserVoid } else { Callee::UserValue };
        (self.ex(c), kind)
    }

    // ---- statements ----

    fn stmt(&self, s: &Stmt) -> MStmt {
        use StmtKind::*;
        match &s.kind {
            Null => MStmt::Empty,
            PostInc(le) => {
                let l = self.ex(le);
                MStmt::unit(l.clone(), MExpr::bin(BinOp::Add, l, MExpr::int(1)))
            }
            PostDec(le) => {
                let l = self.ex(le);
                MStmt::unit(l.clone(), MExpr::bin(BinOp::Sub, l, MExpr::int(1)))
            }
            Assign(l, r) => MStmt::unit(self.ex(l), self.ex(r)),
            Seq(a, b) => MStmt::chop(self.stmt(a), guarded(jumps(a), self.stmt(b))),
            If(c, a, b) => MStmt::If(self.ex(c), Box::new(self.stmt(a)), Box::new(self.stmt(b))),
            Switch(e, cases, default) => self.switch(s, e, cases, default),
            While(e, body) => self.while_loop(self.ex(e), body, None),
            Do(body, e) => {
                let j = jumps(body);
                let first = self.loop_body(body, j, None);
                MStmt::chop(first, self.while_loop(self.ex(e), body, None))
            }
            For(init, cond, step, body) => {
                let c = cond.as_ref().map(|c| self.ex(c)).unwrap_or(MExpr::True);
                MStmt::chop(self.stmt(init), self.while_loop(c, body, Some(step)))
            }
            Continue => set("continue", 1),
            Break => set("break", 1),
            Return(None) => set("return", 1),
            Return(Some(e)) => MStmt::and(set("return", 1), MStmt::unit(key("RVal"), self.ex(e))),
            Call(c, args) => {
                let (callee, kind) = self.callee(c);
                let args = args.iter().map(|a| self.ex(a)).collect();
                match kind {
                    Callee::Extern => MStmt::and(MStmt::ExtCall(callee, args), MStmt::Skip),
                    Callee::UserVoid => MStmt::Call(callee, args, false),
                    Callee::UserValue => MStmt::Call(callee, args, true),
                }
            }
            Goto(_) | Labeled(..) | Expr(_) | LocalDecl(_) | StrayCase(_) => {
                unreachable!("rejected by the subset checker")
            }
        }
    }

    /// `cs [; guard(step)] [; continue:=0]`
    fn loop_body(&self, body: &Stmt, j: Jumps, step: Option<&Stmt>) -> MStmt {
        let mut s = self.stmt(body);
        if let Some(step) = step {
            let stop = Jumps { cont: false, ..j };
            s = MStmt::chop(s, guarded(stop, self.stmt(step)));
        }
        if j.cont {
            s = MStmt::chop(s, set("continue", 0));
        }
        s
    }

    fn while_loop(&self, e: MExpr, body: &Stmt, step: Option<&Stmt>) -> MStmt {
        let j = jumps(body);
        let w = MStmt::While(loop_guard(j, e), Box::new(self.loop_body(body, j, step)));
        if j.brk {
            MStmt::chop(w, set("break", 0))
        } else {
            w
        }
    }

    /// `break:=0; switch:=0; arm; ...; default; break:=0`
    fn switch(&self, s: &Stmt, e: &Expr, cases: &[Case], default: &Stmt) -> MStmt {
        let cont = jumps(s).cont;
        let live = |head: MExpr| {
            let mut g = MExpr::and(MExpr::and(head, is_zero("break")), is_zero("return"));
            if cont {
                g = MExpr::and(g, is_zero("continue"));
            }
            g
        };
        let on = MExpr::eq(key("switch"), MExpr::int(1));
        let mut parts = vec![set("break", 0), set("switch", 0)];
        let scrutinee = self.ex(e);
        for c in cases {
            let hit = MExpr::bin(BinOp::Or, MExpr::eq(scrutinee.clone(), MExpr::int(c.label)), on.clone());
            let arm = MStmt::chop(set("switch", 1), self.stmt(&c.body));
            parts.push(MStmt::guard(live(hit), arm));
        }
        // A non-empty default must also run when no case matched.
        let d = if matches!(default.kind, StmtKind::Null) {
            MStmt::guard(live(on), MStmt::Empty)
        } else {
            let mut g = MExpr::and(is_zero("break"), is_zero("return"));
            if cont {
                g = MExpr::and(g, is_zero("continue"));
            }
            MStmt::guard(g, self.stmt(default))
        };
        parts.push(d);
        parts.push(set("break", 0));
        MStmt::chop_all(parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Callee {
    Extern,
    UserVoid,
    UserValue,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msvl::{emit_stmt, Style};
    use crate::xdc::frontend;

    fn tr(src: &str) -> Translation {
        translate(&frontend(src).unwrap())
    }

    fn main_text(body: &str) -> String {
        let t = tr(&format!("int x, y, i, last, a[4];\nint main(void) {{\n{body}\nreturn 0;\n}}\n"));
        let MsvlProgram { units } = &t.program;
        let Some(Unit::Stmt(s)) = units.last() else { panic!() };
        let text = emit_stmt(s, Style::Compact);
        text.strip_prefix("int x, y, i, last, a[4] and skip; ").unwrap().to_string()
    }

    #[test]
    fn escaping_jumps() {
        let s = crate::xdc::parser::parse_stmts("while (x) { break; } if (y) continue; switch (x) { default: break; }").unwrap();
        assert_eq!(jumps(&s), Jumps { brk: false, ret: false, cont: true });
        let s = crate::xdc::parser::parse_stmts("for (;;) { return 1; }").unwrap();
        assert_eq!(jumps(&s), Jumps { brk: false, ret: true, cont: false });
    }

    #[test]
    fn break_guards_the_rest() {
        let t = main_text("while (x < 3) { break; x = 1; }");
        assert!(t.starts_with("while(break=0 and x<3){break:=1; if(break=0)then{x:=1}else{empty}}; break:=0"), "{t}");
    }

    #[test]
    fn for_loop_shape() {
        let t = main_text("for (i = 0; i <= last; i++) { if (a[i] == 0) break; }");
        assert!(
            t.starts_with("i:=0; while(break=0 and i<=last){if(a[i]=0)then{break:=1}else{empty}; if(break=0)then{i:=i+1}else{empty}}; break:=0"),
            "{t}"
        );
    }

    #[test]
    fn do_loop_unrolls_once() {
        let t = main_text("do { x = x + 1; } while (x < 3);");
        assert!(t.starts_with("x:=x+1; while(x<3){x:=x+1}"), "{t}");
    }

    #[test]
    fn continue_resets_at_body_end() {
        let t = main_text("while (x < 3) { x++; if (x == 2) continue; y = x; }");
        assert!(
            t.starts_with("while(x<3){x:=x+1; if(x=2)then{continue:=1}else{empty}; if(continue=0)then{y:=x}else{empty}; continue:=0}"),
            "{t}"
        );
    }

    #[test]
    fn calls() {
        let t = tr("extern int get(void);\nint f(int a) { return a; }\nvoid g(void) { }\nint x;\n\
                    int main(void) { x = f(1); f(2); g(); x = get(); printf(\"%d\", x); return 0; }");
        let Some(Unit::Stmt(s)) = t.program.units.last() else { panic!() };
        let text = emit_stmt(s, Style::Compact);
        assert!(text.contains("x:=ext f(1, RVal); f(2, RVal); g(); x:=ext get(); ext printf(\"%d\", x) and skip"), "{text}");
        let f = t.program.func("f").unwrap();
        assert_eq!(emit_stmt(&f.body, Style::Compact), "return:=1 and RVal:=a");
        assert_eq!(f.rval, Some(CType::INT));
    }

    #[test]
    fn reserved_names_and_shadowing() {
        let t = tr("int next, x;\nint main(void) { int x; x = 1; next = x; return 0; }");
        assert_eq!(t.name_map["next"], "next_v");
        assert_eq!(t.name_map["main::x"], "main_x");
        let Some(Unit::Stmt(s)) = t.program.units.last() else { panic!() };
        assert!(emit_stmt(s, Style::Compact).contains("main_x:=1; next_v:=main_x"));
    }

    #[test]
    fn declarations() {
        let t = tr("int a[] = {1, 2};\nstruct S { int x; int y; };\nint main(void) { return 0; }");
        let text = crate::msvl::emit(&t.program);
        assert!(text.starts_with("int a[2] <== {1, 2} and skip;\nstruct S {int x and int y};\n"), "{text}");
    }
}

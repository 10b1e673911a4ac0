//! Static typing for Xd-C: annotates every expression with its type and
//! collects the symbol tables the translator and interpreters need.

use super::ast::*;
use crate::diag::{Diagnostic, Span};
use crate::types::{CType, FuncSig, IntKind, IntTy, StructTable};
use crate::value::{BinOp, UnOp};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug)]
pub struct FuncInfo {
    pub sig: FuncSig,
    /// Has a body in this program (otherwise it is an extern).
    pub defined: bool,
    /// An undeclared output built-in; any arguments are accepted.
    pub builtin: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Symbols {
    pub structs: StructTable,
    /// Globals in declaration order.
    pub globals: Vec<(String, CType)>,
    pub funcs: BTreeMap<String, FuncInfo>,
}

impl Symbols {
    pub fn global(&self, name: &str) -> Option<&CType> {
        self.globals.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn is_user_func(&self, name: &str) -> bool {
        self.funcs.get(name).is_some_and(|f| f.defined)
    }

    pub fn is_extern(&self, name: &str) -> bool {
        self.funcs.get(name).is_some_and(|f| !f.defined)
    }

    pub fn sizeof(&self, t: &CType) -> u32 {
        self.structs.sizeof(t).unwrap_or(0)
    }
}

/// Array-to-pointer and function-to-pointer decay.
pub fn decay(t: &CType) -> CType {
    match t {
        CType::Array(e, dims) if dims.len() == 2 => CType::ptr(CType::Array(e.clone(), vec![dims[1]])),
        CType::Array(e, _) => CType::ptr((**e).clone()),
        CType::Func(_) => CType::Pointer(Box::new(t.clone())),
        t => t.clone(),
    }
}

fn promote(t: &CType) -> CType {
    match t {
        CType::Int(k) if k.ty().bits < 32 => CType::INT,
        CType::Int(IntKind::ULong) => CType::Int(IntKind::UInt),
        CType::Int(IntKind::Long) => CType::INT,
        t => t.clone(),
    }
}

/// Result type of an arithmetic operator. Int/float mixes get the float
/// type here; evaluation rejects them at run time.
fn arith_result(a: &CType, b: &CType) -> CType {
    if a.is_float() || b.is_float() {
        if matches!(a, CType::Float) && matches!(b, CType::Float) {
            return CType::Float;
        }
        return if a.is_float() && !matches!(a, CType::Float) { CType::Double } else if b.is_float() { b.clone() } else { a.clone() };
    }
    let (a, b) = (promote(a), promote(b));
    if a == CType::Int(IntKind::UInt) || b == CType::Int(IntKind::UInt) {
        CType::Int(IntKind::UInt)
    } else {
        CType::INT
    }
}

fn lit_type(t: IntTy) -> CType {
    if t.signed {
        CType::INT
    } else {
        CType::Int(IntKind::UInt)
    }
}

fn err(span: Span, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(span, msg)
}

fn is_null_const(e: &Expr) -> bool {
    matches!(e.kind, ExprKind::Int(0, _))
}

struct Tc<'s> {
    sym: &'s mut Symbols,
    locals: HashMap<String, CType>,
    ret: CType,
    loops: u32,
    switches: u32,
}

pub fn typecheck(p: &mut Program) -> Result<Symbols, Vec<Diagnostic>> {
    let mut sym = Symbols::default();
    let mut errors = Vec::new();

    // Function signatures first so calls may precede definitions.
    for it in &p.items {
        let (name, sig, defined, span) = match it {
            Item::Func(f) => (
                &f.name,
                FuncSig { ret: f.ret.clone(), params: f.params.iter().map(|p| p.ty.clone()).collect() },
                true,
                f.span,
            ),
            Item::Extern(e) => (&e.name, FuncSig { ret: e.ret.clone(), params: e.params.clone() }, false, e.span),
            Item::Decl(_) => continue,
        };
        if let Some(prev) = sym.funcs.get(name) {
            if prev.sig != sig {
                errors.push(err(span, format!("conflicting declarations of `{name}`")));
                continue;
            }
            if prev.defined && defined {
                errors.push(err(span, format!("redefinition of `{name}`")));
                continue;
            }
        }
        let defined = defined || sym.funcs.get(name).is_some_and(|f| f.defined);
        sym.funcs.insert(name.clone(), FuncInfo { sig, defined, builtin: false });
    }
    for f in p.funcs() {
        let mut callees = Vec::new();
        f.body.walk(&mut |s| {
            if let StmtKind::Call(c, _) = &s.kind {
                callees.push(c);
            }
            for e in s.exprs() {
                e.walk(&mut |x| {
                    if let ExprKind::Call(c, _) = &x.kind {
                        callees.push(c);
                    }
                });
            }
        });
        for c in callees {
            if let ExprKind::Var(n) = &c.kind {
                if crate::externs::is_builtin(n) && !sym.funcs.contains_key(n.as_str()) {
                    let sig = FuncSig { ret: CType::INT, params: vec![] };
                    sym.funcs.insert(n.clone(), FuncInfo { sig, defined: false, builtin: true });
                }
            }
        }
    }

    match sym.funcs.get("main") {
        None => errors.push(err(Span::new(1, 1), "no `main` function")),
        Some(m) => {
            let argv = CType::ptr(CType::ptr(CType::Int(IntKind::Char)));
            let ok_params = m.sig.params.is_empty() || m.sig.params == vec![CType::INT, argv];
            let span = p.func("main").map(|f| f.span).unwrap_or_default();
            if !m.defined {
                errors.push(err(span, "`main` is declared but never defined"));
            } else if m.sig.ret != CType::INT || !ok_params {
                errors.push(err(span, "`main` must be `int main(void)` or `int main(int argc, char **argv)`"));
            }
        }
    }

    for it in p.items.iter_mut() {
        let mut tc = Tc { sym: &mut sym, locals: HashMap::new(), ret: CType::Void, loops: 0, switches: 0 };
        let r = match it {
            Item::Decl(d) => tc.global_decl(d),
            Item::Extern(e) => tc.check_sig(&e.ret, &e.params, e.span),
            Item::Func(f) => tc.func(f),
        };
        if let Err(e) = r {
            errors.push(e);
        }
    }
    if errors.is_empty() {
        Ok(sym)
    } else {
        errors.sort_by_key(|d| (d.span.line, d.span.col));
        Err(errors)
    }
}

impl Tc<'_> {
    fn check_sig(&self, ret: &CType, params: &[CType], span: Span) -> Result<(), Diagnostic> {
        if !matches!(ret, CType::Void) {
            self.complete(ret, span)?;
            if matches!(ret, CType::Array(..) | CType::Func(_)) {
                return Err(err(span, "functions cannot return arrays or functions"));
            }
        }
        if matches!(ret, CType::Struct(_)) || params.iter().any(|p| matches!(p, CType::Struct(_))) {
            return Err(err(span, "structs are passed and returned through pointers only"));
        }
        for p in params {
            self.complete(p, span)?;
        }
        Ok(())
    }

    /// The type must have a known size (struct definitions already seen).
    fn complete(&self, t: &CType, span: Span) -> Result<(), Diagnostic> {
        match t {
            CType::Void => Err(err(span, "variable of type void")),
            CType::Struct(n) if self.sym.structs.get(n).is_none() => {
                Err(err(span, format!("`struct {n}` is used before its definition")))
            }
            CType::Array(e, _) => self.complete(e, span),
            // Pointers may name structs defined later.
            CType::Pointer(_) => Ok(()),
            CType::Func(_) => Err(err(span, "object of function type")),
            _ => Ok(()),
        }
    }

    fn global_decl(&mut self, d: &mut Decl) -> Result<(), Diagnostic> {
        match d {
            Decl::Struct(def, span) => {
                if self.sym.structs.get(&def.name).is_some() {
                    return Err(err(*span, format!("redefinition of `struct {}`", def.name)));
                }
                for (f, t) in &def.fields {
                    if *t == CType::Struct(def.name.clone()) {
                        return Err(err(*span, format!("field `{f}` has the type of its own struct")));
                    }
                    self.complete(t, *span)?;
                }
                self.sym.structs.insert(def.clone());
                Ok(())
            }
            Decl::Vars(_, vars) => {
                for v in vars.iter_mut() {
                    if self.sym.global(&v.name).is_some() || self.sym.funcs.contains_key(&v.name) {
                        return Err(err(v.span, format!("redefinition of `{}`", v.name)));
                    }
                    self.complete(&v.ty, v.span)?;
                    if let Some(init) = &mut v.init {
                        self.init(&v.ty, init, true)?;
                    }
                    self.sym.globals.push((v.name.clone(), v.ty.clone()));
                }
                Ok(())
            }
        }
    }

    fn local_decl(&mut self, d: &mut Decl) -> Result<(), Diagnostic> {
        match d {
            Decl::Struct(_, span) => Err(err(*span, "struct definitions must be at file scope")),
            Decl::Vars(_, vars) => {
                for v in vars.iter_mut() {
                    if self.locals.contains_key(&v.name) {
                        return Err(err(v.span, format!("redefinition of `{}`", v.name)));
                    }
                    self.complete(&v.ty, v.span)?;
                    if let Some(init) = &mut v.init {
                        self.init(&v.ty, init, false)?;
                    }
                    self.locals.insert(v.name.clone(), v.ty.clone());
                }
                Ok(())
            }
        }
    }

    fn init(&mut self, ty: &CType, init: &mut Init, global: bool) -> Result<(), Diagnostic> {
        match (ty, init) {
            (CType::Array(elem, dims), Init::List(items, lsp)) => {
                if items.len() > dims[0] as usize {
                    return Err(err(*lsp, format!("too many initializers ({} for {})", items.len(), dims[0])));
                }
                let nested = items.iter().any(|i| matches!(i, Init::List(..)));
                if dims.len() == 2 && nested {
                    let row = CType::Array(elem.clone(), vec![dims[1]]);
                    for it in items.iter_mut() {
                        if !matches!(it, Init::List(..)) {
                            return Err(err(*lsp, "mixed braced and plain initializers"));
                        }
                        self.init(&row, it, global)?;
                    }
                    Ok(())
                } else {
                    let total: u32 = dims.iter().product();
                    if items.len() as u32 > total {
                        return Err(err(*lsp, "too many initializers"));
                    }
                    for it in items.iter_mut() {
                        match it {
                            Init::Expr(e) => self.init_expr(elem, e, global)?,
                            Init::List(_, s) => return Err(err(*s, "unexpected nested initializer list")),
                        }
                    }
                    Ok(())
                }
            }
            (CType::Array(..), Init::Expr(e)) => Err(err(e.span, "array initializer must be a braced list")),
            (_, Init::List(_, s)) => Err(err(*s, "braced initializer for a non-array variable")),
            (t, Init::Expr(e)) => self.init_expr(t, e, global),
        }
    }

    fn init_expr(&mut self, t: &CType, e: &mut Expr, global: bool) -> Result<(), Diagnostic> {
        if global {
            let mut has_call = None;
            e.walk(&mut |x| {
                if matches!(x.kind, ExprKind::Call(..)) {
                    has_call = Some(x.span);
                }
            });
            if let Some(sp) = has_call {
                return Err(err(sp, "function call in a global initializer"));
            }
        }
        let et = self.expr(e)?;
        self.assignable(t, &et, e)
    }

    fn func(&mut self, f: &mut FuncDef) -> Result<(), Diagnostic> {
        self.check_sig(&f.ret, &f.params.iter().map(|p| p.ty.clone()).collect::<Vec<_>>(), f.span)?;
        self.ret = f.ret.clone();
        for p in &f.params {
            if self.locals.insert(p.name.clone(), p.ty.clone()).is_some() {
                return Err(err(p.span, format!("duplicate parameter `{}`", p.name)));
            }
        }
        for d in f.locals.iter_mut() {
            self.local_decl(d)?;
        }
        self.stmt(&mut f.body)
    }

    fn stmt(&mut self, s: &mut Stmt) -> Result<(), Diagnostic> {
        let span = s.span;
        match &mut s.kind {
            StmtKind::Null => Ok(()),
            StmtKind::PostInc(e) | StmtKind::PostDec(e) => {
                let t = self.lvalue(e)?;
                if !t.is_scalar() {
                    return Err(err(e.span, format!("cannot increment a value of type `{t}`")));
                }
                Ok(())
            }
            StmtKind::Assign(l, r) => {
                let lt = self.lvalue(l)?;
                if let CType::Struct(_) = lt {
                    return Err(Diagnostic::unsupported(
                        span,
                        6,
                        "structure assignment is not supported: assign the fields one by one",
                    ));
                }
                if let CType::Array(..) = lt {
                    return Err(err(l.span, "cannot assign to an array"));
                }
                let rt = self.expr(r)?;
                self.assignable(&lt, &rt, r)
            }
            StmtKind::If(c, a, b) => {
                self.cond(c)?;
                self.stmt(a)?;
                self.stmt(b)
            }
            StmtKind::Switch(e, cases, d) => {
                let t = self.expr(e)?;
                if !t.is_integer() {
                    return Err(err(e.span, "switch on a non-integer value"));
                }
                self.switches += 1;
                for c in cases.iter_mut() {
                    self.stmt(&mut c.body)?;
                }
                self.stmt(d)?;
                self.switches -= 1;
                Ok(())
            }
            StmtKind::While(c, b) | StmtKind::Do(b, c) => {
                self.cond(c)?;
                self.loops += 1;
                let r = self.stmt(b);
                self.loops -= 1;
                r
            }
            StmtKind::For(i, c, st, b) => {
                self.stmt(i)?;
                if let Some(c) = c {
                    self.cond(c)?;
                }
                self.stmt(st)?;
                self.loops += 1;
                let r = self.stmt(b);
                self.loops -= 1;
                r
            }
            StmtKind::Continue => {
                if self.loops == 0 {
                    return Err(err(span, "`continue` outside a loop"));
                }
                Ok(())
            }
            StmtKind::Break => {
                if self.loops == 0 && self.switches == 0 {
                    return Err(err(span, "`break` outside a loop or switch"));
                }
                Ok(())
            }
            StmtKind::Return(e) => match (e, &self.ret) {
                (None, CType::Void) => Ok(()),
                (None, _) => Err(err(span, "`return` without a value in a non-void function")),
                (Some(e), CType::Void) => Err(err(e.span, "`return` with a value in a void function")),
                (Some(e), rt) => {
                    let rt = rt.clone();
                    let t = self.expr(e)?;
                    self.assignable(&rt, &t, e)
                }
            },
            StmtKind::Seq(a, b) => {
                self.stmt(a)?;
                self.stmt(b)
            }
            StmtKind::Call(c, args) => {
                self.call(c, args, span)?;
                Ok(())
            }
            StmtKind::LocalDecl(d) => self.local_decl(d),
            StmtKind::Goto(_) | StmtKind::Labeled(..) | StmtKind::Expr(_) | StmtKind::StrayCase(_) => {
                Err(err(span, "statement outside Xd-C"))
            }
        }
    }

    fn cond(&mut self, c: &mut Expr) -> Result<(), Diagnostic> {
        let t = self.expr(c)?;
        if !decay(&t).is_scalar() {
            return Err(err(c.span, format!("condition of type `{t}` is not scalar")));
        }
        Ok(())
    }

    fn assignable(&self, to: &CType, from: &CType, e: &Expr) -> Result<(), Diagnostic> {
        let from = decay(from);
        let ok = match to {
            t if t.is_arith() => from.is_arith(),
            CType::Pointer(_) => {
                from.is_pointer() || (is_null_const(e)) || matches!(e.kind, ExprKind::Str(_))
            }
            CType::Struct(_) => false,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(err(e.span, format!("cannot convert `{from}` to `{to}`")))
        }
    }

    fn lvalue(&mut self, e: &mut Expr) -> Result<CType, Diagnostic> {
        if !e.is_lvalue() {
            return Err(err(e.span, "expression is not assignable"));
        }
        self.expr(e)
    }

    fn lookup(&self, name: &str) -> Option<CType> {
        if let Some(t) = self.locals.get(name) {
            return Some(t.clone());
        }
        if let Some(t) = self.sym.global(name) {
            return Some(t.clone());
        }
        self.sym.funcs.get(name).map(|f| CType::Func(Box::new(f.sig.clone())))
    }

    fn call(&mut self, c: &mut Expr, args: &mut [Expr], span: Span) -> Result<CType, Diagnostic> {
        let ct = self.expr(c)?;
        let sig = match decay(&ct) {
            CType::Pointer(t) => match *t {
                CType::Func(sig) => *sig,
                _ => return Err(err(c.span, format!("called object of type `{ct}` is not a function"))),
            },
            _ => return Err(err(c.span, format!("called object of type `{ct}` is not a function"))),
        };
        let builtin = matches!(&c.kind, ExprKind::Var(n)
            if !self.locals.contains_key(n.as_str()) && self.sym.funcs.get(n.as_str()).is_some_and(|f| f.builtin));
        if !builtin && sig.params.len() != args.len() {
            return Err(err(span, format!("expected {} arguments, found {}", sig.params.len(), args.len())));
        }
        for (k, a) in args.iter_mut().enumerate() {
            let at = self.expr(a)?;
            if let Some(pt) = sig.params.get(k) {
                if !builtin {
                    self.assignable(pt, &at, a)?;
                }
            }
        }
        Ok(sig.ret)
    }

    fn expr(&mut self, e: &mut Expr) -> Result<CType, Diagnostic> {
        let t = self.expr_inner(e)?;
        e.ty = Some(t.clone());
        Ok(t)
    }

    fn expr_inner(&mut self, e: &mut Expr) -> Result<CType, Diagnostic> {
        let span = e.span;
        Ok(match &mut e.kind {
            ExprKind::Int(_, t) => lit_type(*t),
            ExprKind::Float(_, single) => {
                if *single {
                    CType::Float
                } else {
                    CType::Double
                }
            }
            ExprKind::Char(_) => CType::INT,
            ExprKind::Str(_) => CType::ptr(CType::Int(IntKind::Char)),
            ExprKind::Var(n) => match self.lookup(n) {
                Some(t) => t,
                None => return Err(err(span, format!("undeclared identifier `{n}`"))),
            },
            ExprKind::Index(n, i) => {
                let at = self.lookup(n).ok_or_else(|| err(span, format!("undeclared identifier `{n}`")))?;
                self.index(i)?;
                match at {
                    CType::Array(el, dims) if dims.len() == 2 => CType::Array(el, vec![dims[1]]),
                    CType::Array(el, _) => *el,
                    CType::Pointer(t) if !matches!(*t, CType::Void | CType::Func(_)) => *t,
                    t => return Err(err(span, format!("`{n}` of type `{t}` cannot be subscripted"))),
                }
            }
            ExprKind::Index2(n, i, j) => {
                let at = self.lookup(n).ok_or_else(|| err(span, format!("undeclared identifier `{n}`")))?;
                self.index(i)?;
                self.index(j)?;
                let row = match at {
                    CType::Array(el, dims) if dims.len() == 2 => return Ok(*el),
                    CType::Array(el, _) => *el,
                    CType::Pointer(t) => *t,
                    t => return Err(err(span, format!("`{n}` of type `{t}` cannot be subscripted twice"))),
                };
                match row {
                    CType::Array(el, dims) if dims.len() == 1 => *el,
                    CType::Pointer(t) if !matches!(*t, CType::Void | CType::Func(_)) => *t,
                    t => return Err(err(span, format!("element of type `{t}` cannot be subscripted"))),
                }
            }
            ExprKind::Member(b, f) => {
                let bt = self.expr(b)?;
                if !b.is_lvalue() && !matches!(b.kind, ExprKind::Call(..)) {
                    return Err(err(b.span, "member access on a non-lvalue"));
                }
                self.field(&bt, f, span)?
            }
            ExprKind::Arrow(b, f) => {
                let bt = decay(&self.expr(b)?);
                match bt {
                    CType::Pointer(s) => self.field(&s, f, span)?,
                    t => return Err(err(span, format!("`->` applied to non-pointer type `{t}`"))),
                }
            }
            ExprKind::Deref(x) => {
                let xt = decay(&self.expr(x)?);
                match xt {
                    CType::Pointer(t) if *t == CType::Void => {
                        return Err(err(span, "dereference of `void *`"));
                    }
                    CType::Pointer(t) => *t,
                    t => return Err(err(span, format!("dereference of non-pointer type `{t}`"))),
                }
            }
            ExprKind::AddrOf(x) => {
                let is_func = matches!(&x.kind, ExprKind::Var(n) if self.sym.funcs.contains_key(n.as_str()) && !self.locals.contains_key(n.as_str()) && self.sym.global(n).is_none());
                if !x.is_lvalue() {
                    return Err(err(span, "cannot take the address of a non-lvalue"));
                }
                let t = self.expr(x)?;
                if is_func {
                    CType::Pointer(Box::new(t))
                } else {
                    CType::ptr(t)
                }
            }
            ExprKind::Cast(t, x) => {
                let t = t.clone();
                let xt = decay(&self.expr(x)?);
                if xt.is_pointer() {
                    return Err(err(span, format!("cast from pointer type `{xt}`: cast operands must have non-pointer type")));
                }
                if !xt.is_arith() {
                    return Err(err(span, format!("cast from non-scalar type `{xt}`")));
                }
                if !(t.is_scalar() || t == CType::Void) {
                    return Err(err(span, format!("cast to non-scalar type `{t}`")));
                }
                t
            }
            ExprKind::Unary(op, x) => {
                let op = *op;
                let xt = decay(&self.expr(x)?);
                match op {
                    UnOp::Not if xt.is_scalar() => CType::INT,
                    UnOp::BitNot if xt.is_integer() => promote(&xt),
                    UnOp::Plus | UnOp::Neg if xt.is_arith() => promote(&xt),
                    _ => return Err(err(span, format!("invalid operand of type `{xt}` to unary `{}`", op.c_str()))),
                }
            }
            ExprKind::Binary(op, a, b) => {
                let op = *op;
                let at = decay(&self.expr(a)?);
                let bt = decay(&self.expr(b)?);
                self.binary(op, &at, &bt, a, b, span)?
            }
            ExprKind::Cond(c, a, b) => {
                self.cond(c)?;
                let at = decay(&self.expr(a)?);
                let bt = decay(&self.expr(b)?);
                if at.is_arith() && bt.is_arith() {
                    arith_result(&at, &bt)
                } else if at.is_pointer() && (bt == at || is_null_const(b)) {
                    at
                } else if bt.is_pointer() && is_null_const(a) {
                    bt
                } else if at == bt {
                    at
                } else {
                    return Err(err(span, format!("conditional branches have types `{at}` and `{bt}`")));
                }
            }
            ExprKind::Call(c, args) => {
                let ret = self.call(c, args, span)?;
                if ret == CType::Void {
                    return Err(err(span, "value of a void function call used in an expression"));
                }
                ret
            }
            _ => return Err(err(span, "expression outside Xd-C")),
        })
    }

    fn index(&mut self, i: &mut Expr) -> Result<(), Diagnostic> {
        let t = self.expr(i)?;
        if !t.is_integer() {
            return Err(err(i.span, format!("array index of type `{t}`")));
        }
        Ok(())
    }

    fn field(&self, st: &CType, f: &str, span: Span) -> Result<CType, Diagnostic> {
        match st {
            CType::Struct(s) => self
                .sym
                .structs
                .field(s, f)
                .map(|(_, t)| t)
                .ok_or_else(|| err(span, format!("no field `{f}` in `struct {s}` (field_offset = ∅)"))),
            t => Err(err(span, format!("member `{f}` of non-struct type `{t}`"))),
        }
    }

    fn binary(&self, op: BinOp, at: &CType, bt: &CType, a: &Expr, b: &Expr, span: Span) -> Result<CType, Diagnostic> {
        use BinOp::*;
        let bad = || err(span, format!("invalid operands `{at}` and `{bt}` to `{}`", op.c_str()));
        Ok(match op {
            And | Or => {
                if !(at.is_scalar() && bt.is_scalar()) {
                    return Err(bad());
                }
                CType::INT
            }
            Lt | Gt | Le | Ge => {
                if at.is_pointer() || bt.is_pointer() {
                    return Err(err(span, format!("relational `{}` on pointer operands: both operands must have non-pointer type", op.c_str())));
                }
                if !(at.is_arith() && bt.is_arith()) {
                    return Err(bad());
                }
                CType::INT
            }
            Eq | Ne => {
                let ok = (at.is_arith() && bt.is_arith())
                    || (at.is_pointer() && bt.is_pointer())
                    || (at.is_pointer() && is_null_const(b))
                    || (bt.is_pointer() && is_null_const(a));
                if !ok {
                    return Err(bad());
                }
                CType::INT
            }
            Add => match (at, bt) {
                (CType::Pointer(_), t) if t.is_integer() => self.obj_ptr(at, span)?,
                (t, CType::Pointer(_)) if t.is_integer() => self.obj_ptr(bt, span)?,
                _ if at.is_arith() && bt.is_arith() => arith_result(at, bt),
                _ => return Err(bad()),
            },
            Sub => match (at, bt) {
                (CType::Pointer(_), t) if t.is_integer() => self.obj_ptr(at, span)?,
                (CType::Pointer(p), CType::Pointer(q)) if p == q => {
                    self.obj_ptr(at, span)?;
                    CType::INT
                }
                _ if at.is_arith() && bt.is_arith() => arith_result(at, bt),
                _ => return Err(bad()),
            },
            Mul | Div => {
                if !(at.is_arith() && bt.is_arith()) {
                    return Err(bad());
                }
                arith_result(at, bt)
            }
            Mod | BitAnd | BitOr | BitXor => {
                if !(at.is_integer() && bt.is_integer()) {
                    return Err(bad());
                }
                arith_result(at, bt)
            }
            Shl | Shr => {
                if !(at.is_integer() && bt.is_integer()) {
                    return Err(bad());
                }
                promote(at)
            }
        })
    }

    /// Pointer arithmetic needs a sized pointee.
    fn obj_ptr(&self, t: &CType, span: Span) -> Result<CType, Diagnostic> {
        match t.pointee() {
            Some(p) if self.sym.structs.sizeof(p).is_some_and(|s| s > 0) => Ok(t.clone()),
            _ => Err(err(span, format!("arithmetic on pointer of type `{t}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xdc::parser::parse_source;

    fn check(src: &str) -> Result<(Program, Symbols), Vec<Diagnostic>> {
        let mut p = parse_source(src).unwrap();
        let s = typecheck(&mut p)?;
        Ok((p, s))
    }

    fn check_main(body: &str) -> Result<(Program, Symbols), Vec<Diagnostic>> {
        check(&format!(
            "struct S {{ int a; char f2; double d; }};\nint *p, *q, x, a[4], m[3][4];\ndouble dd;\nstruct S s, *ps;\n\
             int main(void) {{\n{body}\nreturn 0;\n}}\n"
        ))
    }

    fn first_error(body: &str) -> String {
        check_main(body).expect_err("expected a type error")[0].message.clone()
    }

    #[test]
    fn pointer_in_relational_is_rejected() {
        assert!(first_error("if (p < q) x = 1;").contains("non-pointer"));
        assert!(check_main("if (p == q) x = 1;").is_ok());
    }

    #[test]
    fn cast_of_double_to_int() {
        let (p, _) = check_main("x = (int)dd;").unwrap();
        let main = p.func("main").unwrap();
        let StmtKind::Seq(first, _) = &main.body.kind else { panic!() };
        let StmtKind::Assign(_, r) = &first.kind else { panic!() };
        assert_eq!(r.ty(), &CType::INT);
        assert!(first_error("x = (int)p;").contains("non-pointer"));
    }

    #[test]
    fn unknown_field() {
        assert!(first_error("x = s.zz;").contains("field_offset"));
        assert!(check_main("x = s.a + ps->a; dd = s.d;").is_ok());
    }

    #[test]
    fn arity_mismatch() {
        let e = check("int f(int a) { return a; }\nint main(void) { return f(1, 2); }").unwrap_err();
        assert!(e[0].message.contains("expected 1 arguments"));
    }

    #[test]
    fn struct_assignment_is_item_6() {
        let e = check_main("s = s;").unwrap_err();
        assert_eq!(e[0].item, Some(6));
    }

    #[test]
    fn every_expression_gets_a_type() {
        let (p, _) = check_main("x = a[1] + m[1][2] * (x > 0 ? 2 : 3); p = &a[0] + 1; x = *p - !x;").unwrap();
        let mut untyped = 0;
        p.func("main").unwrap().body.walk(&mut |s| {
            for e in s.exprs() {
                e.walk(&mut |x| untyped += x.ty.is_none() as usize);
            }
        });
        assert_eq!(untyped, 0);
    }

    #[test]
    fn jumps_need_enclosing_construct() {
        assert!(first_error("break;").contains("outside"));
        assert!(first_error("continue;").contains("outside"));
        assert!(check_main("while (x) { if (x) break; else continue; }").is_ok());
    }

    #[test]
    fn main_is_required() {
        let e = check("int x;").unwrap_err();
        assert!(e[0].message.contains("no `main`"));
    }
}

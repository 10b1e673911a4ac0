use super::memory::Memory;
use super::{Config, RuntimeError, Stop, StoreEvent, Verdict, XdcRun};
use crate::coverage::Coverage;
use crate::diag::Span;
use crate::externs::{ExternRuntime, ExternTable};
use crate::snapshot::{LeafSnap, RootSnap, Snapshot};
use crate::types::{Access, CType};
use crate::value::{self, BinOp, Ptr, Value};
use crate::xdc::ast::*;
use crate::xdc::typeck::decay;
use crate::xdc::{Checked, Symbols};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Normal,
    Break,
    Continue,
    /// `Return` carries `None`, `Return(v)` carries the value.
    Return(Option<Value>),
}

type Env = HashMap<String, (u32, CType)>;
type R<T> = Result<T, Stop>;

fn fail<T>(span: Span, msg: impl Into<String>) -> R<T> {
    Err(Stop::Error(RuntimeError { msg: msg.into(), span }))
}

trait At<T> {
    fn at(self, span: Span) -> R<T>;
}

impl<T, E: std::fmt::Display> At<T> for Result<T, E> {
    fn at(self, span: Span) -> R<T> {
        self.or_else(|e| fail(span, e.to_string()))
    }
}

pub(super) struct Interp<'p> {
    prog: &'p Program,
    sym: &'p Symbols,
    cfg: &'p Config,
    mem: Memory,
    globals: Env,
    funcs: BTreeMap<String, u32>,
    by_block: HashMap<u32, String>,
    ext: ExternRuntime,
    cov: Coverage,
    steps: u64,
    depth: u32,
    stores: Vec<StoreEvent>,
    snapshot: Option<Snapshot>,
}

impl<'p> Interp<'p> {
    pub(super) fn new(c: &'p Checked, externs: &ExternTable, cfg: &'p Config) -> Self {
        Interp {
            prog: &c.program,
            sym: &c.symbols,
            cfg,
            mem: Memory::default(),
            globals: Env::new(),
            funcs: BTreeMap::new(),
            by_block: HashMap::new(),
            ext: ExternRuntime::new(externs.clone()),
            cov: Coverage::default(),
            steps: 0,
            depth: 0,
            stores: Vec::new(),
            snapshot: None,
        }
    }

    pub(super) fn run(mut self) -> XdcRun {
        let verdict = match self.start() {
            Ok(n) => Verdict::Terminates(n),
            Err(Stop::Timeout) => Verdict::Timeout,
            Err(Stop::Error(e)) => Verdict::Error(e.to_string()),
        };
        if !matches!(verdict, Verdict::Terminates(_)) {
            self.snapshot = None;
        }
        XdcRun {
            verdict,
            snapshot: self.snapshot,
            events: self.ext.events,
            stores: self.stores,
            coverage: self.cov,
            steps: self.steps,
        }
    }

    /// globalenv + initmem, then the call of main.
    fn start(&mut self) -> R<i64> {
        for f in self.prog.funcs() {
            let b = self.mem.alloc(1);
            self.funcs.insert(f.name.clone(), b);
            self.by_block.insert(b, f.name.clone());
        }
        let empty = Env::new();
        for d in self.prog.decls() {
            if let Decl::Vars(_, vs) = d {
                for v in vs {
                    let b = self.mem.alloc(self.sym.sizeof(&v.ty));
                    self.globals.insert(v.name.clone(), (b, v.ty.clone()));
                    if let Some(init) = &v.init {
                        self.init(Ptr::new(b, 0), &v.ty, init, &empty, v.span)?;
                    }
                }
            }
        }
        let Some(main) = self.prog.func("main") else { return fail(Span::default(), "no main function") };
        let args: Vec<Value> =
            (0..main.params.len()).map(|k| if k == 0 { Value::int(1) } else { Value::Ptr(Ptr::NULL) }).collect();
        match self.invoke(main, args, main.span)? {
            Some(v) => v.as_int().ok_or(()).or_else(|_| fail(main.span, "main returned a non-integer")),
            None => Ok(0),
        }
    }

    fn tick(&mut self) -> R<()> {
        if self.steps >= self.cfg.fuel {
            return Err(Stop::Timeout);
        }
        self.steps += 1;
        Ok(())
    }

    // ---- memory access ----

    fn load(&self, p: Ptr, t: &CType, span: Span) -> R<Value> {
        match t.access() {
            Access::ByValue(chunk) => {
                let v = self.mem.load(chunk, p).at(span)?;
                match (v, t.int_ty()) {
                    (Value::Undef, _) => fail(span, "read of an undefined value"),
                    (Value::Int(n, _), Some(it)) => Ok(Value::Int(it.normalize(n), it)),
                    (v, _) => Ok(v),
                }
            }
            Access::ByReference => Ok(Value::Ptr(p)),
            Access::ByNothing if matches!(t, CType::Func(_)) => Ok(Value::Ptr(p)),
            Access::ByNothing => fail(span, format!("value of type `{t}` cannot be loaded")),
        }
    }

    fn store(&mut self, p: Ptr, t: &CType, v: &Value, span: Span) -> R<()> {
        let v = value::convert(v, t).at(span)?;
        match t.access() {
            Access::ByValue(chunk) => {
                self.mem.store(chunk, p, &v).at(span)?;
                if self.cfg.trace_stores {
                    self.stores.push(StoreEvent { at: p, value: v });
                }
                Ok(())
            }
            _ => fail(span, format!("value of type `{t}` cannot be stored")),
        }
    }

    fn init(&mut self, p: Ptr, t: &CType, init: &Init, env: &Env, span: Span) -> R<()> {
        match (t, init) {
            (_, Init::Expr(e)) => {
                let v = self.rvalue(e, env)?;
                self.store(p, t, &v, e.span)
            }
            (CType::Array(elem, dims), Init::List(items, _)) => {
                if dims.len() == 2 && items.iter().any(|i| matches!(i, Init::List(..))) {
                    let row = CType::Array(elem.clone(), vec![dims[1]]);
                    let rsz = self.sym.sizeof(&row) as i64;
                    for k in 0..dims[0] as usize {
                        let at = Ptr::new(p.block, p.off + k as i64 * rsz);
                        let item = items.get(k).cloned().unwrap_or(Init::List(vec![], span));
                        self.init(at, &row, &item, env, span)?;
                    }
                    return Ok(());
                }
                // Elements without an initializer are zero, as in C.
                let esz = self.sym.sizeof(elem) as i64;
                let total: u32 = dims.iter().product();
                for k in 0..total as usize {
                    let at = Ptr::new(p.block, p.off + k as i64 * esz);
                    match items.get(k) {
                        Some(i) => self.init(at, elem, i, env, span)?,
                        None => self.store(at, elem, &Value::int(0), span)?,
                    }
                }
                Ok(())
            }
            _ => fail(span, "braced initializer for a scalar"),
        }
    }

    fn elem_size(&self, t: &CType) -> Option<u32> {
        decay(t).pointee().and_then(|p| self.sym.structs.sizeof(p))
    }

    fn as_ptr(&self, v: Value, span: Span) -> R<Ptr> {
        match v {
            Value::Ptr(p) => Ok(p),
            Value::Str(_) => fail(span, "string literals are not addressable"),
            v => fail(span, format!("dereference of non-pointer value {v}")),
        }
    }

    fn lookup(&self, n: &str, env: &Env) -> Option<(u32, CType)> {
        env.get(n).or_else(|| self.globals.get(n)).cloned()
    }

    // ---- expressions ----

    /// C1-C3, C13-C15.
    fn lvalue(&mut self, e: &Expr, env: &Env) -> R<(Ptr, CType)> {
        let span = e.span;
        match &e.kind {
            ExprKind::Var(n) => {
                self.cov.hit("C1");
                if let Some((b, t)) = self.lookup(n, env) {
                    return Ok((Ptr::new(b, 0), t));
                }
                match self.funcs.get(n) {
                    Some(b) => Ok((Ptr::new(*b, 0), e.ty().clone())),
                    None => fail(span, format!("unbound identifier `{n}`")),
                }
            }
            ExprKind::Deref(x) => {
                self.cov.hit("C2");
                let v = self.rvalue(x, env)?;
                Ok((self.as_ptr(v, span)?, e.ty().clone()))
            }
            ExprKind::Member(b, f) => {
                self.cov.hit("C3");
                let (p, t) = self.lvalue(b, env)?;
                self.field(p, &t, f, span)
            }
            ExprKind::Arrow(x, f) => {
                self.cov.hit("C15");
                let v = self.rvalue(x, env)?;
                let p = self.as_ptr(v, span)?;
                let st = decay(x.ty()).pointee().cloned().unwrap_or(CType::Void);
                self.field(p, &st, f, span)
            }
            ExprKind::Index(n, i) => {
                self.cov.hit("C13");
                let base = self.var_value(n, env, span)?;
                let p = self.offset(base, e.ty(), i, env)?;
                Ok((p, e.ty().clone()))
            }
            ExprKind::Index2(n, i, j) => {
                self.cov.hit("C14");
                let (_, vt) = self.lookup(n, env).ok_or(()).or_else(|_| fail(span, format!("unbound identifier `{n}`")))?;
                let row = decay(&vt).pointee().cloned().unwrap_or(CType::Void);
                let base = self.var_value(n, env, span)?;
                let p = self.offset(base, &row, i, env)?;
                let rowp = match row {
                    CType::Array(..) => p,
                    ref t => {
                        let v = self.load(p, t, span)?;
                        self.as_ptr(v, span)?
                    }
                };
                let p = self.offset(Value::Ptr(rowp), e.ty(), j, env)?;
                Ok((p, e.ty().clone()))
            }
            _ => fail(span, "expression is not a left value"),
        }
    }

    fn field(&self, p: Ptr, st: &CType, f: &str, span: Span) -> R<(Ptr, CType)> {
        let CType::Struct(s) = st else { return fail(span, format!("member `{f}` of non-struct type `{st}`")) };
        match self.sym.structs.field(s, f) {
            Some((off, t)) => Ok((Ptr::new(p.block, p.off + off as i64), t)),
            None => fail(span, format!("no field `{f}` in `struct {s}`")),
        }
    }

    /// `base + i * sizeof(elem)` via the pointer row of `+`.
    fn offset(&mut self, base: Value, elem: &CType, i: &Expr, env: &Env) -> R<Ptr> {
        let idx = self.rvalue(i, env)?;
        let sz = self.sym.structs.sizeof(elem);
        let v = value::binop(BinOp::Add, &base, sz, &idx, None).at(i.span)?;
        self.as_ptr(v, i.span)
    }

    /// The value of a named variable (arrays decay to their address).
    fn var_value(&mut self, n: &str, env: &Env, span: Span) -> R<Value> {
        match self.lookup(n, env) {
            Some((b, t)) => self.load(Ptr::new(b, 0), &t, span),
            None => fail(span, format!("unbound identifier `{n}`")),
        }
    }

    /// C4-C12.
    fn rvalue(&mut self, e: &Expr, env: &Env) -> R<Value> {
        let span = e.span;
        match &e.kind {
            ExprKind::Int(n, t) => {
                self.cov.hit("C4");
                Ok(Value::Int(t.normalize(*n), *t))
            }
            ExprKind::Float(x, single) => {
                self.cov.hit("C4");
                Ok(if *single { Value::F32(*x as f32) } else { Value::F64(*x) })
            }
            ExprKind::Char(c) => {
                self.cov.hit("C4");
                Ok(Value::int(*c))
            }
            ExprKind::Str(s) => {
                self.cov.hit("C4");
                Ok(Value::Str(s.clone()))
            }
            _ if e.is_lvalue() => {
                let (p, t) = self.lvalue(e, env)?;
                self.cov.hit("C5");
                self.load(p, &t, span)
            }
            ExprKind::AddrOf(x) => {
                self.cov.hit("C6");
                let (p, _) = self.lvalue(x, env)?;
                Ok(Value::Ptr(p))
            }
            ExprKind::Unary(op, x) => {
                self.cov.hit("C7");
                let v = self.rvalue(x, env)?;
                value::unop(*op, &v).at(span)
            }
            ExprKind::Binary(op, a, b) => {
                self.cov.hit("C8");
                // Both operands are always evaluated.
                let va = self.rvalue(a, env)?;
                let vb = self.rvalue(b, env)?;
                value::binop(*op, &va, self.elem_size(a.ty()), &vb, self.elem_size(b.ty())).at(span)
            }
            ExprKind::Cond(c, a, b) => {
                let v = self.rvalue(c, env)?;
                if v.truth().at(c.span)? {
                    self.cov.hit("C9");
                    self.rvalue(a, env)
                } else {
                    self.cov.hit("C10");
                    self.rvalue(b, env)
                }
            }
            ExprKind::Cast(t, x) => {
                self.cov.hit("C11");
                let v = self.rvalue(x, env)?;
                value::convert(&v, t).at(span)
            }
            ExprKind::Call(c, args) => {
                self.cov.hit("C12");
                let before = self.mem.clone();
                let n = before.block_count();
                let v = self.call(c, args, env, span)?;
                if !self.mem.same_prefix(&before, n) {
                    return fail(span, "function call in an expression changed the memory state");
                }
                v.ok_or(()).or_else(|_| fail(span, "void call used as a value"))
            }
            _ => fail(span, "expression outside Xd-C"),
        }
    }

    fn truth(&mut self, e: &Expr, env: &Env) -> R<bool> {
        let v = self.rvalue(e, env)?;
        v.truth().at(e.span)
    }

    // ---- calls ----

    /// T24, then T25 or T26.
    fn call(&mut self, c: &Expr, args: &[Expr], env: &Env, span: Span) -> R<Option<Value>> {
        self.cov.hit("T24");
        let name = match &c.kind {
            ExprKind::Var(n) if self.lookup(n, env).is_none() && self.sym.funcs.contains_key(n) => n.clone(),
            _ => {
                let v = self.rvalue(c, env)?;
                match v {
                    Value::Ptr(p) if p.off == 0 && self.by_block.contains_key(&p.block) => self.by_block[&p.block].clone(),
                    v => return fail(span, format!("called value {v} does not designate a function")),
                }
            }
        };
        let mut vals = Vec::with_capacity(args.len());
        for a in args {
            vals.push(self.rvalue(a, env)?);
        }
        if let Some(f) = self.prog.func(&name) {
            return self.invoke(f, vals, span);
        }
        self.cov.hit("T26");
        let (res, _) = self.ext.call(&name, vals).at(span)?;
        let ret = self.sym.funcs.get(&name).map(|f| f.sig.ret.clone()).unwrap_or(CType::INT);
        match res {
            Some(v) if ret != CType::Void => value::convert(&v, &ret).at(span).map(Some),
            _ => Ok(None),
        }
    }

    /// T25: allocate params and locals, bind, run, check the outcome, free.
    fn invoke(&mut self, f: &FuncDef, args: Vec<Value>, span: Span) -> R<Option<Value>> {
        self.cov.hit("T25");
        if self.depth >= self.cfg.max_depth {
            return fail(span, format!("call depth exceeds {}", self.cfg.max_depth));
        }
        if args.len() != f.params.len() {
            return fail(span, format!("`{}` expects {} arguments, got {}", f.name, f.params.len(), args.len()));
        }
        self.depth += 1;
        let mut env = Env::new();
        let mut blocks = Vec::new();
        for (p, v) in f.params.iter().zip(&args) {
            let b = self.mem.alloc(self.sym.sizeof(&p.ty));
            blocks.push(b);
            env.insert(p.name.clone(), (b, p.ty.clone()));
            self.store(Ptr::new(b, 0), &p.ty, v, p.span)?;
        }
        let mut order = Vec::new();
        for d in &f.locals {
            if let Decl::Vars(_, vs) = d {
                for v in vs {
                    let b = self.mem.alloc(self.sym.sizeof(&v.ty));
                    blocks.push(b);
                    env.insert(v.name.clone(), (b, v.ty.clone()));
                    order.push(v);
                }
            }
        }
        for v in order {
            if let Some(init) = &v.init {
                let (b, _) = env[&v.name];
                self.init(Ptr::new(b, 0), &v.ty, init, &env, v.span)?;
            }
        }
        let out = self.exec(&f.body, &env)?;
        if f.name == "main" && self.depth == 1 {
            self.snapshot = Some(self.take_snapshot(f, &env));
        }
        for b in blocks {
            self.mem.free(b);
        }
        self.depth -= 1;
        match (out, &f.ret) {
            (Outcome::Normal | Outcome::Return(None), CType::Void) => Ok(None),
            (Outcome::Return(Some(_)), CType::Void) => Ok(None),
            (Outcome::Return(Some(v)), t) => value::convert(&v, t).at(span).map(Some),
            (_, _) => fail(f.span, format!("`{}` finished without returning a value", f.name)),
        }
    }

    fn take_snapshot(&self, main: &FuncDef, env: &Env) -> Snapshot {
        let mut snap = Snapshot { functions: self.funcs.clone(), ..Default::default() };
        for (name, _) in &self.sym.globals {
            let (b, t) = &self.globals[name];
            snap.roots.insert(name.clone(), self.root(*b, t));
        }
        let mut names: Vec<&str> = main.params.iter().map(|p| p.name.as_str()).collect();
        for d in &main.locals {
            if let Decl::Vars(_, vs) = d {
                names.extend(vs.iter().map(|v| v.name.as_str()));
            }
        }
        for n in names {
            let (b, t) = &env[n];
            let key = if self.globals.contains_key(n) { format!("main::{n}") } else { n.to_string() };
            snap.roots.insert(key, self.root(*b, t));
        }
        snap
    }

    fn root(&self, b: u32, t: &CType) -> RootSnap {
        let leaves = self
            .sym
            .structs
            .leaves(t)
            .into_iter()
            .map(|l| {
                let p = Ptr::new(b, l.offset as i64);
                let value = match l.ty.access() {
                    Access::ByValue(chunk) => match (self.mem.load(chunk, p), l.ty.int_ty()) {
                        (Ok(Value::Int(n, _)), Some(it)) => Value::Int(it.normalize(n), it),
                        (Ok(v), _) => v,
                        (Err(_), _) => Value::Undef,
                    },
                    _ => Value::Undef,
                };
                LeafSnap { path: l.path, offset: l.offset, value }
            })
            .collect();
        RootSnap { block: b, leaves }
    }

    // ---- statements ----

    fn exec(&mut self, s: &Stmt, env: &Env) -> R<Outcome> {
        self.tick()?;
        let span = s.span;
        match &s.kind {
            StmtKind::Null => {
                self.cov.hit("T1");
                Ok(Outcome::Normal)
            }
            StmtKind::Break => {
                self.cov.hit("T2");
                Ok(Outcome::Break)
            }
            StmtKind::Continue => {
                self.cov.hit("T3");
                Ok(Outcome::Continue)
            }
            StmtKind::Return(None) => {
                self.cov.hit("T4");
                Ok(Outcome::Return(None))
            }
            StmtKind::Return(Some(e)) => {
                self.cov.hit("T5");
                Ok(Outcome::Return(Some(self.rvalue(e, env)?)))
            }
            StmtKind::Assign(l, r) => {
                self.cov.hit("T6");
                let (p, t) = self.lvalue(l, env)?;
                let v = self.rvalue(r, env)?;
                self.store(p, &t, &v, span)?;
                Ok(Outcome::Normal)
            }
            StmtKind::PostInc(l) | StmtKind::PostDec(l) => {
                // `le++` is `le = le + 1`.
                self.cov.hit("T6");
                let op = if matches!(s.kind, StmtKind::PostInc(_)) { BinOp::Add } else { BinOp::Sub };
                let (p, t) = self.lvalue(l, env)?;
                let v = self.load(p, &t, span)?;
                let nv = value::binop(op, &v, self.elem_size(&t), &Value::int(1), None).at(span)?;
                self.store(p, &t, &nv, span)?;
                Ok(Outcome::Normal)
            }
            StmtKind::Seq(a, b) => {
                let o = self.exec(a, env)?;
                if o != Outcome::Normal {
                    self.cov.hit("T8");
                    return Ok(o);
                }
                self.cov.hit("T7");
                self.exec(b, env)
            }
            StmtKind::If(c, a, b) => {
                if self.truth(c, env)? {
                    self.cov.hit("T9");
                    self.exec(a, env)
                } else {
                    self.cov.hit("T10");
                    self.exec(b, env)
                }
            }
            StmtKind::While(c, body) => self.while_loop(c, body, env),
            StmtKind::Do(body, c) => match self.exec(body, env)? {
                Outcome::Break => Ok(Outcome::Normal),
                o @ Outcome::Return(_) => Ok(o),
                _ => self.while_loop(c, body, env),
            },
            StmtKind::For(init, cond, step, body) => {
                if !matches!(init.kind, StmtKind::Null) {
                    self.cov.hit("T14");
                    self.exec(init, env)?;
                }
                loop {
                    let go = match cond {
                        Some(c) => self.truth(c, env)?,
                        None => true,
                    };
                    if !go {
                        self.cov.hit("T15");
                        return Ok(Outcome::Normal);
                    }
                    match self.exec(body, env)? {
                        Outcome::Break => {
                            self.cov.hit("T16");
                            return Ok(Outcome::Normal);
                        }
                        o @ Outcome::Return(_) => {
                            self.cov.hit("T16");
                            return Ok(o);
                        }
                        _ => {
                            self.cov.hit("T17");
                            self.exec(step, env)?;
                            self.tick()?;
                        }
                    }
                }
            }
            StmtKind::Switch(e, cases, default) => {
                let v = self.rvalue(e, env)?;
                let mut start = cases.len();
                for (k, c) in cases.iter().enumerate() {
                    if value::values_equal(&v, &Value::int(c.label)).at(e.span)? {
                        start = k;
                        break;
                    }
                }
                self.cov.hit(if start < cases.len() { "T22" } else { "T23" });
                let mut out = None;
                for c in &cases[start..] {
                    self.cov.hit("T19");
                    let o = self.exec(&c.body, env)?;
                    if o != Outcome::Normal {
                        self.cov.hit("T21");
                        out = Some(o);
                        break;
                    }
                    self.cov.hit("T20");
                }
                let out = match out {
                    Some(o) => o,
                    None => {
                        self.cov.hit("T18");
                        self.exec(default, env)?
                    }
                };
                Ok(if out == Outcome::Break { Outcome::Normal } else { out })
            }
            StmtKind::Call(c, args) => {
                self.call(c, args, env, span)?;
                Ok(Outcome::Normal)
            }
            _ => fail(span, "statement outside Xd-C"),
        }
    }

    /// T11-T13, iterated.
    fn while_loop(&mut self, c: &Expr, body: &Stmt, env: &Env) -> R<Outcome> {
        loop {
            if !self.truth(c, env)? {
                self.cov.hit("T11");
                return Ok(Outcome::Normal);
            }
            match self.exec(body, env)? {
                Outcome::Break => {
                    self.cov.hit("T12");
                    return Ok(Outcome::Normal);
                }
                o @ Outcome::Return(_) => {
                    self.cov.hit("T12");
                    return Ok(o);
                }
                _ => {
                    self.cov.hit("T13");
                    self.tick()?;
                }
            }
        }
    }
}

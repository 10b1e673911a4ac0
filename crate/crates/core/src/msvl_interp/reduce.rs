use super::state::{leaf_table, BlockInfo, Frame, Loc, Tape};
use super::{Config, FinalConfig, MsvlRun, Stop, Verdict};
use crate::coverage::Coverage;
use crate::externs::{ExternRuntime, ExternTable, Model};
use crate::msvl::{MExpr, MInit, MStmt, MVar, MsvlProgram};
use crate::snapshot::{LeafSnap, RootSnap, Snapshot};
use crate::types::{CType, FuncSig, StructDef, StructTable};
use crate::value::{self, Ptr, Value};
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

pub(super) type R<T> = Result<T, Stop>;

pub(super) fn fail<T>(msg: impl Into<String>) -> R<T> {
    Err(Stop::Error(msg.into()))
}

/// Flags every activation declares for itself.
const FLAGS: [&str; 4] = ["break", "continue", "return", "switch"];

/// Statements with shared children, so unrolling a loop does not copy it.
pub(super) type S = Rc<St>;

pub(super) enum St {
    Empty,
    Skip,
    Assign(MExpr, MExpr),
    Unit(MExpr, MExpr),
    And(S, S),
    Next(S),
    Chop(S, S),
    If(MExpr, S, S),
    While(MExpr, S),
    Call(MExpr, Vec<MExpr>),
    Ext(MExpr, Vec<MExpr>),
    Decl(Vec<MVar>),
    Struct(StructDef),
}

fn lower(s: &MStmt) -> S {
    Rc::new(match s {
        MStmt::Empty => St::Empty,
        MStmt::Skip => St::Skip,
        MStmt::Assign(a, b) => St::Assign(a.clone(), b.clone()),
        MStmt::UnitAssign(a, b) => St::Unit(a.clone(), b.clone()),
        MStmt::And(a, b) => St::And(lower(a), lower(b)),
        MStmt::Next(a) => St::Next(lower(a)),
        MStmt::Chop(a, b) => St::Chop(lower(a), lower(b)),
        MStmt::If(c, a, b) => St::If(c.clone(), lower(a), lower(b)),
        MStmt::While(c, b) => St::While(c.clone(), lower(b)),
        MStmt::Call(c, args, _) => St::Call(c.clone(), args.clone()),
        MStmt::ExtCall(c, args) => St::Ext(c.clone(), args.clone()),
        MStmt::Decl(vs) => St::Decl(vs.clone()),
        MStmt::StructDef(d) => St::Struct(d.clone()),
    })
}

pub(super) struct Fun {
    pub params: Vec<(String, CType)>,
    pub rval: Option<CType>,
    pub body: S,
}

/// The remaining program of a configuration.
enum P {
    Run(S, u32),
    And(Box<P>, Box<P>),
    Chop(Box<P>, Box<P>),
    Next(Box<P>),
    True,
    Empty,
    /// `ext mfree(...)` for an activation.
    Free(u32),
}

/// Normal form of the program at the current state.
enum Nf {
    Empty,
    /// Only state formulas remain; the length is unconstrained.
    True,
    Next(P),
}

pub(super) enum Callee {
    User(String),
    Extern(String),
}

pub(super) struct Machine<'p> {
    prog: &'p MsvlProgram,
    cfg: &'p Config,
    pub(super) funs: HashMap<String, Rc<Fun>>,
    pub(super) fblocks: BTreeMap<String, u32>,
    pub(super) by_block: HashMap<u32, String>,
    pub(super) blocks: Vec<BlockInfo>,
    pub(super) frames: HashMap<u32, Frame>,
    next_frame: u32,
    pub(super) structs: StructTable,
    pub(super) tape: Tape,
    pub(super) ext: ExternRuntime,
    pub(super) cov: Coverage,
    steps: u64,
}

const NO_FRAME: u32 = u32::MAX;

impl<'p> Machine<'p> {
    pub(super) fn new(prog: &'p MsvlProgram, externs: &ExternTable, cfg: &'p Config) -> Self {
        let null = BlockInfo { name: String::new(), frame: NO_FRAME, ty: CType::Void, live: false, leaves: BTreeMap::new() };
        Machine {
            prog,
            cfg,
            funs: HashMap::new(),
            fblocks: BTreeMap::new(),
            by_block: HashMap::new(),
            blocks: vec![null],
            frames: HashMap::new(),
            next_frame: 1,
            structs: StructTable::default(),
            tape: Tape { record: cfg.record_interval, ..Tape::default() },
            ext: ExternRuntime::new(externs.clone()),
            cov: Coverage::default(),
            steps: 0,
        }
    }

    pub(super) fn run(mut self) -> MsvlRun {
        let res = self.start();
        let verdict = match &res {
            Ok(()) => Verdict::Terminates(self.tape.index + 1),
            Err(Stop::Timeout) => Verdict::Timeout,
            Err(Stop::Infeasible(m)) => Verdict::Infeasible(m.clone()),
            Err(Stop::Error(m)) => Verdict::Error(m.clone()),
        };
        let done = res.is_ok();
        MsvlRun {
            snapshot: done.then(|| self.snapshot()),
            final_config: done.then(|| FinalConfig { states: self.tape.index + 1, index: self.tape.index + 1 }),
            rval: if done { self.top_rval() } else { None },
            verdict,
            events: std::mem::take(&mut self.ext.events),
            interval: std::mem::take(&mut self.tape.states),
            coverage: self.cov,
            steps: self.steps,
        }
    }

    fn start(&mut self) -> R<()> {
        for f in self.prog.funcs() {
            let sig = FuncSig {
                ret: f.rval.clone().unwrap_or(CType::Void),
                params: f.params.iter().map(|(_, t)| t.clone()).collect(),
            };
            let b = self.blocks.len() as u32;
            self.blocks.push(BlockInfo {
                name: f.name.clone(),
                frame: NO_FRAME,
                ty: CType::Func(Box::new(sig)),
                live: true,
                leaves: BTreeMap::new(),
            });
            self.fblocks.insert(f.name.clone(), b);
            self.by_block.insert(b, f.name.clone());
            let fun = Fun { params: f.params.clone(), rval: f.rval.clone(), body: lower(&f.body) };
            self.funs.insert(f.name.clone(), Rc::new(fun));
        }
        self.frames.insert(0, Frame { func: "main".into(), ..Frame::default() });
        self.declare_flags(0)?;
        self.declare(0, "RVal", &CType::INT)?;
        let main = lower(&self.prog.main_chain());
        self.drive(P::Run(main, 0))
    }

    fn tick(&mut self) -> R<()> {
        if self.steps >= self.cfg.fuel {
            return Err(Stop::Timeout);
        }
        self.steps += 1;
        Ok(())
    }

    // ---- states ----

    /// Reduces states until the program is `empty` (TR2).
    fn drive(&mut self, mut p: P) -> R<()> {
        loop {
            self.begin_state()?;
            let nf = self.reduce(p)?;
            if self.tape.index > 0 {
                let framed = self.tape.cur.len().saturating_sub(self.tape.assigned.len());
                self.cov.add("MIN2", framed as u64);
            }
            if self.tape.record {
                let s = self.state_json();
                self.tape.states.push(s);
            }
            match nf {
                Nf::Next(q) => {
                    self.cov.hit("TR1");
                    self.tick()?;
                    self.tape.advance();
                    p = q;
                }
                Nf::Empty | Nf::True => {
                    self.cov.hit("TR2");
                    return Ok(());
                }
            }
        }
    }

    /// Framing (MIN2) is implicit: the new state starts from the old values.
    /// Spliced values and due unit assignments are then discharged (MIN1).
    fn begin_state(&mut self) -> R<()> {
        if let Some(vals) = self.tape.splice.take() {
            let gone: Vec<Loc> = self.tape.cur.keys().filter(|l| !vals.contains_key(l)).copied().collect();
            for l in gone {
                self.tape.remove(l);
            }
            for (l, v) in vals {
                if self.tape.cur.get(&l) != Some(&v) {
                    self.tape.write(l, v);
                }
            }
        }
        for (l, v) in std::mem::take(&mut self.tape.pending) {
            if !self.blocks[l.0 as usize].live {
                return fail(format!("assignment to released variable `{}`", self.loc_name(l)));
            }
            self.min1(l, v)?;
        }
        Ok(())
    }

    /// MIN1: a present assignment fixes the value of a location in the
    /// current state; a second, different value makes the state infeasible.
    pub(super) fn min1(&mut self, l: Loc, v: Value) -> R<()> {
        self.cov.hit("MIN1");
        if let Some(w) = self.tape.assigned.get(&l) {
            if *w != v {
                return Err(Stop::Infeasible(format!("`{}` is assigned both {w} and {v}", self.loc_name(l))));
            }
            return Ok(());
        }
        self.tape.assigned.insert(l, v.clone());
        self.tape.write(l, v);
        Ok(())
    }

    pub(super) fn loc_name(&self, l: Loc) -> String {
        let b = &self.blocks[l.0 as usize];
        let path = b.leaves.get(&l.1).map(|(_, p)| p.as_str()).unwrap_or("");
        format!("{}{}", b.name, path)
    }

    // ---- declarations ----

    pub(super) fn declare(&mut self, fr: u32, name: &str, ty: &CType) -> R<u32> {
        if self.structs.sizeof(ty).is_none() {
            return fail(format!("variable `{name}` has incomplete type `{ty}`"));
        }
        let b = self.blocks.len() as u32;
        let leaves = leaf_table(&self.structs, ty);
        for off in leaves.keys() {
            self.tape.write((b, *off), Value::Undef);
        }
        self.blocks.push(BlockInfo { name: name.to_string(), frame: fr, ty: ty.clone(), live: true, leaves });
        let f = self.frames.get_mut(&fr).expect("frame");
        if f.vars.insert(name.to_string(), b).is_none() {
            f.order.push(name.to_string());
        }
        Ok(b)
    }

    fn declare_flags(&mut self, fr: u32) -> R<()> {
        for k in FLAGS {
            let b = self.declare(fr, k, &CType::INT)?;
            self.min1((b, 0), Value::int(0))?;
        }
        Ok(())
    }

    /// `la <== v` at the current state.
    pub(super) fn assign_now(&mut self, p: Ptr, t: &CType, v: &Value) -> R<()> {
        let l = self.leaf(p, t)?;
        let v = value::convert(v, t).or_else(|e| fail(e.to_string()))?;
        self.min1(l, v)
    }

    fn init(&mut self, p: Ptr, t: &CType, init: &MInit, fr: u32) -> R<()> {
        match (t, init) {
            (_, MInit::Expr(e)) => {
                let v = self.rvalue(e, fr)?;
                self.assign_now(p, t, &v)
            }
            (CType::Array(elem, dims), MInit::List(items)) => {
                if dims.len() == 2 && items.iter().any(|i| matches!(i, MInit::List(_))) {
                    let row = CType::Array(elem.clone(), vec![dims[1]]);
                    let rsz = self.structs.sizeof(&row).unwrap_or(0) as i64;
                    for k in 0..dims[0] as usize {
                        let at = Ptr::new(p.block, p.off + k as i64 * rsz);
                        let item = items.get(k).cloned().unwrap_or(MInit::List(vec![]));
                        self.init(at, &row, &item, fr)?;
                    }
                    return Ok(());
                }
                let esz = self.structs.sizeof(elem).unwrap_or(0) as i64;
                let total: u32 = dims.iter().product();
                for k in 0..total as usize {
                    let at = Ptr::new(p.block, p.off + k as i64 * esz);
                    match items.get(k) {
                        Some(i) => self.init(at, elem, i, fr)?,
                        None => self.assign_now(at, elem, &Value::int(0))?,
                    }
                }
                Ok(())
            }
            _ => fail("braced initializer for a scalar"),
        }
    }

    /// Releases an activation's variables (`mfree`).
    fn release(&mut self, fr: u32) {
        let Some(f) = self.frames.remove(&fr) else { return };
        for b in f.vars.values() {
            let info = &mut self.blocks[*b as usize];
            info.live = false;
            let locs: Vec<Loc> = info.leaves.keys().map(|o| (*b, *o)).collect();
            for l in locs {
                self.tape.remove(l);
            }
        }
    }

    // ---- calls ----

    pub(super) fn callee(&mut self, c: &MExpr, fr: u32) -> R<Callee> {
        if let MExpr::Var(n) = c {
            if self.lookup(n, fr).is_none() {
                return Ok(if self.funs.contains_key(n) { Callee::User(n.clone()) } else { Callee::Extern(n.clone()) });
            }
        }
        match self.rvalue(c, fr)? {
            Value::Ptr(p) if p.off == 0 && self.by_block.contains_key(&p.block) => {
                Ok(Callee::User(self.by_block[&p.block].clone()))
            }
            v => fail(format!("called value {v} does not designate a function")),
        }
    }

    pub(super) fn args(&mut self, args: &[MExpr], fr: u32) -> R<Vec<Value>> {
        args.iter().map(|a| self.rvalue(a, fr)).collect()
    }

    /// Opens an activation: flags, `RVal`, and `params <== args`.
    fn enter(&mut self, name: &str, f: &Fun, vals: Vec<Value>) -> R<u32> {
        if self.frames.len() as u32 > self.cfg.max_depth {
            return fail(format!("call depth exceeds {}", self.cfg.max_depth));
        }
        if vals.len() != f.params.len() {
            return fail(format!("`{name}` expects {} arguments, got {}", f.params.len(), vals.len()));
        }
        let fr = self.next_frame;
        self.next_frame += 1;
        self.frames.insert(fr, Frame { func: name.to_string(), ..Frame::default() });
        self.declare_flags(fr)?;
        if let Some(t) = &f.rval {
            self.declare(fr, "RVal", t)?;
        }
        for ((pn, pt), v) in f.params.iter().zip(vals) {
            let b = self.declare(fr, pn, pt)?;
            self.assign_now(Ptr::new(b, 0), pt, &v)?;
        }
        Ok(fr)
    }

    /// Runs `name` on a separate interval starting from the current state.
    /// Returns the values of the pre-existing locations at its last state
    /// and the callee's `RVal`.
    pub(super) fn side_run(&mut self, name: &str, vals: Vec<Value>) -> R<(HashMap<Loc, Value>, Option<Value>)> {
        let f = self.funs[name].clone();
        let known = self.blocks.len() as u32;
        let fresh = Tape::from_values(self.tape.cur.clone());
        let saved = std::mem::replace(&mut self.tape, fresh);
        let res = self.side_body(name, &f, vals);
        let side = std::mem::replace(&mut self.tape, saved);
        let fr = res?;
        let rval = self.frames[&fr].vars.get("RVal").and_then(|b| side.cur.get(&(*b, 0))).cloned();
        self.release(fr);
        let fin = side.cur.into_iter().filter(|((b, _), _)| *b < known).collect();
        Ok((fin, rval))
    }

    fn side_body(&mut self, name: &str, f: &Fun, vals: Vec<Value>) -> R<u32> {
        let fr = self.enter(name, f, vals)?;
        self.drive(P::Run(f.body.clone(), fr))?;
        Ok(fr)
    }

    // ---- reduction ----

    fn reduce(&mut self, p: P) -> R<Nf> {
        self.tick()?;
        match p {
            P::True => Ok(Nf::True),
            P::Empty => Ok(Nf::Empty),
            P::Next(q) => Ok(Nf::Next(*q)),
            P::Free(fr) => {
                self.release(fr);
                Ok(Nf::Empty)
            }
            P::And(a, b) => {
                let x = self.reduce(*a)?;
                let y = self.reduce(*b)?;
                self.conj(x, y)
            }
            P::Chop(a, b) => match self.reduce(*a)? {
                Nf::Empty => {
                    self.cov.hit("CHOP3");
                    self.reduce(*b)
                }
                Nf::True => {
                    // A bare state formula on the left is read as its minimal
                    // (one-state) model.
                    self.cov.hit("CHOP1");
                    self.cov.hit("CHOP3");
                    self.reduce(*b)
                }
                Nf::Next(r) => {
                    self.cov.hit("CHOP2");
                    Ok(Nf::Next(P::Chop(Box::new(r), b)))
                }
            },
            P::Run(s, fr) => self.step(&s, fr),
        }
    }

    fn conj(&mut self, x: Nf, y: Nf) -> R<Nf> {
        match (x, y) {
            (Nf::True, n) | (n, Nf::True) => {
                self.cov.hit("T1");
                Ok(n)
            }
            (Nf::Empty, Nf::Empty) => Ok(Nf::Empty),
            (Nf::Next(a), Nf::Next(b)) => Ok(Nf::Next(P::And(Box::new(a), Box::new(b)))),
            _ => {
                self.cov.hit("F1");
                Err(Stop::Infeasible("`empty` conjoined with a formula that needs a next state".into()))
            }
        }
    }

    fn boxed(s: &S, fr: u32) -> Box<P> {
        Box::new(P::Run(s.clone(), fr))
    }

    fn step(&mut self, s: &S, fr: u32) -> R<Nf> {
        match &**s {
            St::Empty => Ok(Nf::Empty),
            St::Skip => {
                self.cov.hit("SKIP");
                Ok(Nf::Next(P::Empty))
            }
            St::Unit(la, ra) => {
                // x := e is next(x <== n and empty), with n computed now.
                self.cov.hit("UASS");
                let (p, t) = self.lvalue(la, fr)?;
                let v = self.rvalue(ra, fr)?;
                let l = self.leaf(p, &t)?;
                let v = value::convert(&v, &t).or_else(|e| fail(e.to_string()))?;
                self.tape.pending.push((l, v));
                Ok(Nf::Next(P::Empty))
            }
            St::Assign(la, ra) => {
                let (p, t) = self.lvalue(la, fr)?;
                let v = self.rvalue(ra, fr)?;
                self.assign_now(p, &t, &v)?;
                Ok(Nf::True)
            }
            St::And(a, b) => {
                self.cov.hit("AND");
                self.reduce(P::And(Self::boxed(a, fr), Self::boxed(b, fr)))
            }
            St::Next(a) => {
                self.cov.hit("NEXT");
                Ok(Nf::Next(P::Run(a.clone(), fr)))
            }
            St::Chop(a, b) => self.reduce(P::Chop(Self::boxed(a, fr), Self::boxed(b, fr))),
            St::If(c, a, b) => {
                self.cov.hit("IF");
                let taken = if self.truth(c, fr)? { a } else { b };
                // `(b and p) or (!b and q)` collapses to the taken branch by
                // `false and q = false`, `false or p = p` and `true and p = p`.
                self.cov.hit("F1");
                self.cov.hit("F2");
                self.cov.hit("T1");
                self.reduce(P::Run(taken.clone(), fr))
            }
            St::While(c, body) => loop {
                self.cov.hit("WHL");
                if !self.truth(c, fr)? {
                    return Ok(Nf::Empty);
                }
                // (body and more); while. A body that finishes without
                // reaching a next state is rewritten again in the same state,
                // so `while(1){empty}` diverges instead of having no model.
                match self.reduce(P::Run(body.clone(), fr))? {
                    Nf::Next(b) => {
                        self.cov.hit("CHOP2");
                        let iter = P::And(Box::new(b), Box::new(P::True));
                        return Ok(Nf::Next(P::Chop(Box::new(iter), Self::boxed(s, fr))));
                    }
                    Nf::Empty | Nf::True => {
                        self.cov.hit("CHOP3");
                        self.tick()?;
                    }
                }
            },
            St::Call(c, args) => {
                self.cov.hit("FUN");
                let name = match self.callee(c, fr)? {
                    Callee::User(n) => n,
                    Callee::Extern(n) => return fail(format!("`{n}` is not defined in the program; call it with ext")),
                };
                let vals = self.args(args, fr)?;
                let f = self.funs[&name].clone();
                let callee = self.enter(&name, &f, vals)?;
                let free = Box::new(P::Next(Box::new(P::Free(callee))));
                self.reduce(P::Chop(Self::boxed(&f.body, callee), free))
            }
            St::Ext(c, args) => {
                match self.callee(c, fr)? {
                    Callee::User(n) => {
                        self.cov.hit("EXT1");
                        let vals = self.args(args, fr)?;
                        let (fin, _) = self.side_run(&n, vals)?;
                        self.tape.splice = Some(fin);
                    }
                    Callee::Extern(n) => {
                        let vals = self.args(args, fr)?;
                        let (_, model) = self.ext.call(&n, vals).or_else(|e| fail(e.to_string()))?;
                        self.cov.hit(match model {
                            Model::Single => "EXT2",
                            Model::Interval(_) => "EXT3",
                        });
                    }
                }
                Ok(Nf::True)
            }
            St::Decl(vs) => {
                for v in vs {
                    let b = self.declare(fr, &v.name, &v.ty)?;
                    if let Some(init) = &v.init {
                        self.init(Ptr::new(b, 0), &v.ty, init, fr)?;
                    }
                }
                Ok(Nf::True)
            }
            St::Struct(d) => {
                self.structs.insert(d.clone());
                Ok(Nf::True)
            }
        }
    }

    // ---- observation ----

    fn leaf_values(&self, b: u32) -> Vec<LeafSnap> {
        self.blocks[b as usize]
            .leaves
            .iter()
            .map(|(off, (_, path))| LeafSnap {
                path: path.clone(),
                offset: *off,
                value: self.tape.cur.get(&(b, *off)).cloned().unwrap_or(Value::Undef),
            })
            .collect()
    }

    fn snapshot(&self) -> Snapshot {
        let mut snap = Snapshot { functions: self.fblocks.clone(), ..Snapshot::default() };
        let top = &self.frames[&0];
        for n in &top.order {
            let b = top.vars[n];
            snap.roots.insert(n.clone(), RootSnap { block: b, leaves: self.leaf_values(b) });
        }
        snap
    }

    fn top_rval(&self) -> Option<Value> {
        let b = *self.frames.get(&0)?.vars.get("RVal")?;
        self.tape.cur.get(&(b, 0)).filter(|v| !v.is_undef()).cloned()
    }

    /// Display name of a live variable's block: plain at the top level,
    /// `f#k::x` inside activation `k` of `f`.
    fn root_key(&self, b: u32) -> Option<String> {
        let info = &self.blocks[b as usize];
        if !info.live || info.frame == NO_FRAME {
            return None;
        }
        match self.frames.get(&info.frame) {
            Some(_) if info.frame == 0 => Some(info.name.clone()),
            Some(f) => Some(format!("{}#{}::{}", f.func, info.frame, info.name)),
            None => None,
        }
    }

    fn state_json(&self) -> serde_json::Value {
        let mut vars = serde_json::Map::new();
        for b in 0..self.blocks.len() as u32 {
            let Some(root) = self.root_key(b) else { continue };
            for l in self.leaf_values(b) {
                vars.insert(format!("{root}{}", l.path), l.value.to_json());
            }
        }
        let mut assigned: Vec<String> = self
            .tape
            .assigned
            .keys()
            .filter_map(|(b, off)| {
                let path = &self.blocks[*b as usize].leaves.get(off)?.1;
                Some(format!("{}{path}", self.root_key(*b)?))
            })
            .collect();
        assigned.sort();
        serde_json::json!({"vars": vars, "assigned": assigned})
    }
}

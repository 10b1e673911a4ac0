//! Left values (L1-L6), right values (R1-R11) and boolean expressions
//! (B1-B6) at the current state.

use super::reduce::{fail, Callee, Machine, R};
use super::state::Loc;
use crate::msvl::MExpr;
use crate::types::{Access, CType, IntKind};
use crate::value::{self, BinOp, Ptr, UnOp, Value};
use crate::xdc::typeck::decay;

fn at<T, E: std::fmt::Display>(r: Result<T, E>) -> R<T> {
    r.or_else(|e| fail(e.to_string()))
}

/// C type named by an extern fixture's result type.
fn fixture_type(name: &str) -> CType {
    match name {
        "char" => CType::Int(IntKind::Char),
        "short" => CType::Int(IntKind::Short),
        "unsigned int" => CType::Int(IntKind::UInt),
        "long" => CType::Int(IntKind::Long),
        "double" => CType::Double,
        "float" => CType::Float,
        "void" => CType::Void,
        _ => CType::INT,
    }
}

impl Machine<'_> {
    pub(super) fn lookup(&self, n: &str, fr: u32) -> Option<u32> {
        self.frames.get(&fr).and_then(|f| f.vars.get(n)).or_else(|| self.frames.get(&0)?.vars.get(n)).copied()
    }

    fn var_type(&self, n: &str, fr: u32) -> R<CType> {
        if let Some(b) = self.lookup(n, fr) {
            return Ok(self.blocks[b as usize].ty.clone());
        }
        match self.fblocks.get(n) {
            Some(b) => Ok(self.blocks[*b as usize].ty.clone()),
            None => fail(format!("unbound identifier `{n}`")),
        }
    }

    /// Static type of an expression, used for pointer arithmetic and member
    /// access.
    pub(super) fn ty(&self, e: &MExpr, fr: u32) -> R<CType> {
        let pointee = |t: CType| match decay(&t).pointee() {
            Some(p) => Ok(p.clone()),
            None => fail(format!("`{t}` is not a pointer type")),
        };
        Ok(match e {
            MExpr::Int(_, t) => match (t.bits, t.signed) {
                (32, false) => CType::Int(IntKind::UInt),
                _ => CType::INT,
            },
            MExpr::Float(_, single) => {
                if *single {
                    CType::Float
                } else {
                    CType::Double
                }
            }
            MExpr::Char(_) | MExpr::True | MExpr::False => CType::INT,
            MExpr::Str(_) => CType::ptr(CType::Int(IntKind::Char)),
            MExpr::Var(n) => self.var_type(n, fr)?,
            MExpr::Index(n, _) => pointee(self.var_type(n, fr)?)?,
            MExpr::Index2(n, _, _) => pointee(pointee(self.var_type(n, fr)?)?)?,
            MExpr::Member(s, f) => self.field_type(&self.ty(s, fr)?, f)?,
            MExpr::Arrow(p, f) => self.field_type(&pointee(self.ty(p, fr)?)?, f)?,
            MExpr::Deref(p) => pointee(self.ty(p, fr)?)?,
            MExpr::AddrOf(x) => CType::ptr(self.ty(x, fr)?),
            MExpr::Cast(t, _) => t.clone(),
            MExpr::Unary(UnOp::Not, _) => CType::INT,
            MExpr::Unary(_, x) | MExpr::Prev(_, x) => self.ty(x, fr)?,
            MExpr::Binary(op, a, b) => {
                if op.is_relational() || op.is_equality() || op.is_logical() {
                    CType::INT
                } else {
                    let ta = decay(&self.ty(a, fr)?);
                    let tb = decay(&self.ty(b, fr)?);
                    match (ta.is_pointer(), tb.is_pointer()) {
                        (true, true) => CType::INT,
                        (false, true) => tb,
                        _ => ta,
                    }
                }
            }
            MExpr::IfThenElse(_, a, _) => decay(&self.ty(a, fr)?),
            MExpr::ExtCall(c, _, _) => match c.as_ref() {
                MExpr::Var(n) if self.lookup(n, fr).is_none() => match self.funs.get(n) {
                    Some(f) => f.rval.clone().unwrap_or(CType::Void),
                    None => fixture_type(&self.ext.result_type(n).unwrap_or_default()),
                },
                c => match pointee(self.ty(c, fr)?)? {
                    CType::Func(sig) => sig.ret.clone(),
                    t => return fail(format!("call of non-function type `{t}`")),
                },
            },
        })
    }

    fn field_type(&self, st: &CType, f: &str) -> R<CType> {
        let CType::Struct(s) = st else { return fail(format!("member `{f}` of non-struct type `{st}`")) };
        match self.structs.field(s, f) {
            Some((_, t)) => Ok(t),
            None => fail(format!("no field `{f}` in `struct {s}`")),
        }
    }

    fn field(&self, p: Ptr, st: &CType, f: &str) -> R<(Ptr, CType)> {
        let CType::Struct(s) = st else { return fail(format!("member `{f}` of non-struct type `{st}`")) };
        match self.structs.field(s, f) {
            Some((off, t)) => Ok((Ptr::new(p.block, p.off + off as i64), t)),
            None => fail(format!("no field `{f}` in `struct {s}`")),
        }
    }

    fn elem_size(&self, e: &MExpr, fr: u32) -> R<Option<u32>> {
        let t = decay(&self.ty(e, fr)?);
        Ok(t.pointee().and_then(|p| self.structs.sizeof(p)))
    }

    /// The leaf at `p`, which must hold an object accessed like `t`.
    pub(super) fn leaf(&self, p: Ptr, t: &CType) -> R<Loc> {
        if p.is_null() {
            return fail("access through a null pointer");
        }
        let Some(b) = self.blocks.get(p.block as usize) else {
            return fail(format!("access to unallocated block {}", p.block));
        };
        if !b.live {
            return fail(format!("access to freed block {}", p.block));
        }
        let off = u32::try_from(p.off).ok();
        match off.and_then(|o| b.leaves.get(&o)) {
            Some((lt, _)) if lt.access() == t.access() => Ok((p.block, p.off as u32)),
            Some((lt, _)) => fail(format!("access as `{t}` of `{}` of type `{lt}`", b.name)),
            None => fail(format!("no `{t}` object at offset {} of `{}`", p.off, b.name)),
        }
    }

    pub(super) fn load(&self, p: Ptr, t: &CType) -> R<Value> {
        match t.access() {
            Access::ByValue(_) => {
                let l = self.leaf(p, t)?;
                match (self.tape.cur.get(&l), t.int_ty()) {
                    (None | Some(Value::Undef), _) => fail("read of an undefined value"),
                    (Some(Value::Int(n, _)), Some(it)) => Ok(Value::Int(it.normalize(*n), it)),
                    (Some(v), _) => Ok(v.clone()),
                }
            }
            Access::ByReference => Ok(Value::Ptr(p)),
            Access::ByNothing if matches!(t, CType::Func(_)) => Ok(Value::Ptr(p)),
            Access::ByNothing => fail(format!("value of type `{t}` cannot be loaded")),
        }
    }

    fn as_ptr(v: Value) -> R<Ptr> {
        match v {
            Value::Ptr(p) => Ok(p),
            Value::Str(_) => fail("string literals are not addressable"),
            v => fail(format!("dereference of non-pointer value {v}")),
        }
    }

    fn var_value(&mut self, n: &str, fr: u32) -> R<Value> {
        let (p, t) = self.lvalue(&MExpr::Var(n.to_string()), fr)?;
        self.load(p, &t)
    }

    fn offset(&mut self, base: Value, elem: &CType, i: &MExpr, fr: u32) -> R<Ptr> {
        let idx = self.rvalue(i, fr)?;
        let v = at(value::binop(BinOp::Add, &base, self.structs.sizeof(elem), &idx, None))?;
        Self::as_ptr(v)
    }

    pub(super) fn lvalue(&mut self, e: &MExpr, fr: u32) -> R<(Ptr, CType)> {
        match e {
            MExpr::Var(n) => {
                self.cov.hit("L1");
                if let Some(b) = self.lookup(n, fr) {
                    return Ok((Ptr::new(b, 0), self.blocks[b as usize].ty.clone()));
                }
                match self.fblocks.get(n) {
                    Some(b) => Ok((Ptr::new(*b, 0), self.blocks[*b as usize].ty.clone())),
                    None => fail(format!("unbound identifier `{n}`")),
                }
            }
            MExpr::Index(n, i) => {
                self.cov.hit("L2");
                let elem = self.ty(e, fr)?;
                let base = self.var_value(n, fr)?;
                Ok((self.offset(base, &elem, i, fr)?, elem))
            }
            MExpr::Index2(n, i, j) => {
                self.cov.hit("L3");
                let vt = self.var_type(n, fr)?;
                let row = decay(&vt).pointee().cloned().unwrap_or(CType::Void);
                let elem = self.ty(e, fr)?;
                let base = self.var_value(n, fr)?;
                let p = self.offset(base, &row, i, fr)?;
                let rowp = match row {
                    CType::Array(..) => p,
                    ref t => Self::as_ptr(self.load(p, t)?)?,
                };
                Ok((self.offset(Value::Ptr(rowp), &elem, j, fr)?, elem))
            }
            MExpr::Member(s, f) => {
                self.cov.hit("L4");
                let (p, t) = self.lvalue(s, fr)?;
                self.field(p, &t, f)
            }
            MExpr::Arrow(x, f) => {
                self.cov.hit("L5");
                let st = decay(&self.ty(x, fr)?).pointee().cloned().unwrap_or(CType::Void);
                let p = Self::as_ptr(self.rvalue(x, fr)?)?;
                self.field(p, &st, f)
            }
            MExpr::Deref(x) => {
                self.cov.hit("L6");
                let t = self.ty(e, fr)?;
                let p = Self::as_ptr(self.rvalue(x, fr)?)?;
                Ok((p, t))
            }
            _ => fail("expression is not a left value"),
        }
    }

    pub(super) fn rvalue(&mut self, e: &MExpr, fr: u32) -> R<Value> {
        match e {
            MExpr::Int(n, t) => {
                self.cov.hit("R1");
                Ok(Value::Int(t.normalize(*n), *t))
            }
            MExpr::Float(x, single) => {
                self.cov.hit("R1");
                Ok(if *single { Value::F32(*x as f32) } else { Value::F64(*x) })
            }
            MExpr::Char(c) => {
                self.cov.hit("R1");
                Ok(Value::int(*c))
            }
            MExpr::Str(s) => {
                self.cov.hit("R1");
                Ok(Value::Str(s.clone()))
            }
            MExpr::True => {
                self.cov.hit("B1");
                Ok(Value::int(1))
            }
            MExpr::False => {
                self.cov.hit("B2");
                Ok(Value::int(0))
            }
            MExpr::Var(_) | MExpr::Index(..) | MExpr::Index2(..) | MExpr::Member(..) | MExpr::Arrow(..) | MExpr::Deref(_) => {
                let (p, t) = self.lvalue(e, fr)?;
                self.cov.hit("R2");
                self.load(p, &t)
            }
            MExpr::AddrOf(x) => {
                self.cov.hit("R3");
                Ok(Value::Ptr(self.lvalue(x, fr)?.0))
            }
            MExpr::Cast(t, x) => {
                self.cov.hit("R4");
                let v = self.rvalue(x, fr)?;
                at(value::convert(&v, t))
            }
            MExpr::Unary(op, x) => {
                self.cov.hit(if *op == UnOp::Not { "B4" } else { "R5" });
                let v = self.rvalue(x, fr)?;
                at(value::unop(*op, &v))
            }
            MExpr::Binary(op, a, b) => {
                self.cov.hit(match op {
                    BinOp::And => "B5",
                    BinOp::Or => "B6",
                    o if o.is_relational() || o.is_equality() => "B3",
                    _ => "R6",
                });
                let va = self.rvalue(a, fr)?;
                let vb = self.rvalue(b, fr)?;
                let arith = matches!(op, BinOp::Add | BinOp::Sub);
                let (ea, eb) = if arith && (matches!(va, Value::Ptr(_)) || matches!(vb, Value::Ptr(_))) {
                    (self.elem_size(a, fr)?, self.elem_size(b, fr)?)
                } else {
                    (None, None)
                };
                at(value::binop(*op, &va, ea, &vb, eb))
            }
            MExpr::IfThenElse(c, a, b) => {
                if self.truth(c, fr)? {
                    self.cov.hit("R7");
                    self.rvalue(a, fr)
                } else {
                    self.cov.hit("R8");
                    self.rvalue(b, fr)
                }
            }
            MExpr::Prev(m, x) => {
                self.cov.hit("R9");
                let Some(mut old) = self.tape.earlier(*m as usize) else {
                    return fail(format!("prev({m}) before the first state"));
                };
                std::mem::swap(&mut self.tape.cur, &mut old);
                let v = self.rvalue(x, fr);
                std::mem::swap(&mut self.tape.cur, &mut old);
                v
            }
            MExpr::ExtCall(c, args, _) => self.call_value(c, args, fr),
        }
    }

    /// R10 (program function on a side interval) or R11 (external).
    fn call_value(&mut self, c: &MExpr, args: &[MExpr], fr: u32) -> R<Value> {
        let callee = self.callee(c, fr)?;
        let vals = self.args(args, fr)?;
        match callee {
            Callee::User(n) => {
                self.cov.hit("R10");
                let (fin, rv) = self.side_run(&n, vals)?;
                if fin != self.tape.cur {
                    return fail("function call in an expression changed the memory state");
                }
                match rv {
                    Some(v) if !v.is_undef() => Ok(v),
                    _ => fail("void call used as a value"),
                }
            }
            Callee::Extern(n) => {
                self.cov.hit("R11");
                let ret = fixture_type(&self.ext.result_type(&n).unwrap_or_default());
                let (res, _) = at(self.ext.call(&n, vals))?;
                match res {
                    Some(v) => at(value::convert(&v, &ret)),
                    None => fail("void call used as a value"),
                }
            }
        }
    }

    pub(super) fn truth(&mut self, e: &MExpr, fr: u32) -> R<bool> {
        let v = self.rvalue(e, fr)?;
        at(v.truth())
    }
}

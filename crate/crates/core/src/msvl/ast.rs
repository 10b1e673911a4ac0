//! Abstract syntax of the MSVL subset targeted by the translator.

use crate::types::{CType, IntTy, StructDef};
use crate::value::{BinOp, UnOp};

#[derive(Clone, Debug, PartialEq)]
pub enum MExpr {
    Int(i64, IntTy),
    /// Value and whether it is single precision.
    Float(f64, bool),
    Char(i64),
    Str(String),
    True,
    False,
    Var(String),
    Index(String, Box<MExpr>),
    Index2(String, Box<MExpr>, Box<MExpr>),
    Member(Box<MExpr>, String),
    Arrow(Box<MExpr>, String),
    Deref(Box<MExpr>),
    AddrOf(Box<MExpr>),
    Cast(CType, Box<MExpr>),
    /// `+ - ~ !`
    Unary(UnOp, Box<MExpr>),
    /// `And`/`Or` print as `and`/`or`, `Eq` as `=`.
    Binary(BinOp, Box<MExpr>, Box<MExpr>),
    IfThenElse(Box<MExpr>, Box<MExpr>, Box<MExpr>),
    /// Value `m` states back (m >= 1).
    Prev(u32, Box<MExpr>),
    /// `ext f(args)`, with `RVal` appended when the flag is set.
    ExtCall(Box<MExpr>, Vec<MExpr>, bool),
}

impl MExpr {
    pub fn var(n: &str) -> MExpr {
        MExpr::Var(n.to_string())
    }

    pub fn int(n: i64) -> MExpr {
        MExpr::Int(n, IntTy::I32)
    }

    pub fn bin(op: BinOp, a: MExpr, b: MExpr) -> MExpr {
        MExpr::Binary(op, Box::new(a), Box::new(b))
    }

    /// `x = n`
    pub fn eq(a: MExpr, b: MExpr) -> MExpr {
        MExpr::bin(BinOp::Eq, a, b)
    }

    pub fn and(a: MExpr, b: MExpr) -> MExpr {
        MExpr::bin(BinOp::And, a, b)
    }

    pub fn is_lvalue(&self) -> bool {
        matches!(
            self,
            MExpr::Var(_) | MExpr::Index(..) | MExpr::Index2(..) | MExpr::Member(..) | MExpr::Arrow(..) | MExpr::Deref(_)
        )
    }

    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a MExpr)) {
        f(self);
        for c in self.children() {
            c.walk(f);
        }
    }

    pub fn children(&self) -> Vec<&MExpr> {
        use MExpr::*;
        match self {
            Int(..) | Float(..) | Char(_) | Str(_) | True | False | Var(_) => vec![],
            Index(_, a) | Member(a, _) | Arrow(a, _) | Deref(a) | AddrOf(a) | Cast(_, a) | Unary(_, a) | Prev(_, a) => {
                vec![a]
            }
            Index2(_, a, b) | Binary(_, a, b) => vec![a, b],
            IfThenElse(a, b, c) => vec![a, b, c],
            ExtCall(c, args, _) => std::iter::once(&**c).chain(args.iter()).collect(),
        }
    }

    pub fn count_nodes(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |_| n += 1);
        n
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum MInit {
    Expr(MExpr),
    List(Vec<MInit>),
}

impl MInit {
    fn count_nodes(&self) -> usize {
        match self {
            MInit::Expr(e) => e.count_nodes(),
            MInit::List(items) => 1 + items.iter().map(MInit::count_nodes).sum::<usize>(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MVar {
    pub name: String,
    pub ty: CType,
    pub init: Option<MInit>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MStmt {
    Empty,
    Skip,
    /// `la <== ra`
    Assign(MExpr, MExpr),
    /// `la := ra`
    UnitAssign(MExpr, MExpr),
    And(Box<MStmt>, Box<MStmt>),
    Next(Box<MStmt>),
    Chop(Box<MStmt>, Box<MStmt>),
    If(MExpr, Box<MStmt>, Box<MStmt>),
    While(MExpr, Box<MStmt>),
    /// Internal call `f(args)`; `RVal` is appended when the flag is set.
    Call(MExpr, Vec<MExpr>, bool),
    /// External call statement `ext f(args)`.
    ExtCall(MExpr, Vec<MExpr>),
    /// A declaration group sharing one base type.
    Decl(Vec<MVar>),
    StructDef(StructDef),
}

impl MStmt {
    /// Sequential composition, kept right-nested (chop is associative).
    pub fn chop(a: MStmt, b: MStmt) -> MStmt {
        match a {
            MStmt::Chop(x, y) => MStmt::Chop(x, Box::new(MStmt::chop(*y, b))),
            a => MStmt::Chop(Box::new(a), Box::new(b)),
        }
    }

    /// Right-nested chop of a non-empty list.
    pub fn chop_all(mut v: Vec<MStmt>) -> MStmt {
        let mut acc = v.pop().unwrap_or(MStmt::Empty);
        while let Some(s) = v.pop() {
            acc = MStmt::chop(s, acc);
        }
        acc
    }

    pub fn and(a: MStmt, b: MStmt) -> MStmt {
        MStmt::And(Box::new(a), Box::new(b))
    }

    /// `if(c)then{a}else{empty}`
    pub fn guard(c: MExpr, a: MStmt) -> MStmt {
        MStmt::If(c, Box::new(a), Box::new(MStmt::Empty))
    }

    pub fn unit(l: MExpr, r: MExpr) -> MStmt {
        MStmt::UnitAssign(l, r)
    }

    pub fn children(&self) -> Vec<&MStmt> {
        use MStmt::*;
        match self {
            And(a, b) | Chop(a, b) | If(_, a, b) => vec![a, b],
            Next(a) | While(_, a) => vec![a],
            _ => vec![],
        }
    }

    pub fn exprs(&self) -> Vec<&MExpr> {
        use MStmt::*;
        match self {
            Assign(a, b) | UnitAssign(a, b) => vec![a, b],
            If(c, ..) | While(c, _) => vec![c],
            Call(c, args, _) | ExtCall(c, args) => std::iter::once(c).chain(args.iter()).collect(),
            _ => vec![],
        }
    }

    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a MStmt)) {
        f(self);
        for c in self.children() {
            c.walk(f);
        }
    }

    pub fn count_nodes(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |s| {
            n += 1;
            n += s.exprs().iter().map(|e| e.count_nodes()).sum::<usize>();
            if let MStmt::Decl(vs) = s {
                n += vs.iter().filter_map(|v| v.init.as_ref()).map(MInit::count_nodes).sum::<usize>();
            }
        });
        n
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MFunc {
    pub name: String,
    pub params: Vec<(String, CType)>,
    /// Type of the trailing `RVal` parameter for non-void functions.
    pub rval: Option<CType>,
    pub body: MStmt,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Unit {
    Stmt(MStmt),
    Func(MFunc),
}

/// A program as a `;`-separated list of declarations, function definitions
/// and statements. Adjacent statements are always merged into one chop
/// chain, so the representation of a given text is unique.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MsvlProgram {
    pub units: Vec<Unit>,
}

impl MsvlProgram {
    pub fn new(units: Vec<Unit>) -> Self {
        let mut out: Vec<Unit> = Vec::new();
        for u in units {
            match (out.last_mut(), u) {
                (Some(Unit::Stmt(prev)), Unit::Stmt(s)) => {
                    let p = std::mem::replace(prev, MStmt::Empty);
                    *prev = MStmt::chop(p, s);
                }
                (_, u) => out.push(u),
            }
        }
        MsvlProgram { units: out }
    }

    pub fn funcs(&self) -> impl Iterator<Item = &MFunc> {
        self.units.iter().filter_map(|u| match u {
            Unit::Func(f) => Some(f),
            _ => None,
        })
    }

    pub fn func(&self, name: &str) -> Option<&MFunc> {
        self.funcs().find(|f| f.name == name)
    }

    /// The statements to execute, in order, as one chop chain.
    pub fn main_chain(&self) -> MStmt {
        let stmts: Vec<MStmt> = self
            .units
            .iter()
            .filter_map(|u| match u {
                Unit::Stmt(s) => Some(s.clone()),
                _ => None,
            })
            .collect();
        if stmts.is_empty() {
            MStmt::Empty
        } else {
            MStmt::chop_all(stmts)
        }
    }

    pub fn count_nodes(&self) -> usize {
        self.units
            .iter()
            .map(|u| match u {
                Unit::Stmt(s) => s.count_nodes(),
                Unit::Func(f) => 1 + f.body.count_nodes(),
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_counts() {
        assert_eq!(MStmt::Empty.count_nodes(), 1);
        assert_eq!(MStmt::chop(MStmt::Empty, MStmt::Empty).count_nodes(), 3);
        assert_eq!(MStmt::unit(MExpr::var("x"), MExpr::int(1)).count_nodes(), 3);
    }

    #[test]
    fn chop_stays_right_nested() {
        let a = MStmt::chop(MStmt::Skip, MStmt::Empty);
        let c = MStmt::chop(a, MStmt::Skip);
        let MStmt::Chop(l, r) = c else { panic!() };
        assert_eq!(*l, MStmt::Skip);
        assert!(matches!(*r, MStmt::Chop(..)));
    }

    #[test]
    fn adjacent_statements_merge() {
        let p = MsvlProgram::new(vec![Unit::Stmt(MStmt::Skip), Unit::Stmt(MStmt::Empty)]);
        assert_eq!(p.units.len(), 1);
        assert_eq!(p.main_chain(), MStmt::chop(MStmt::Skip, MStmt::Empty));
    }
}

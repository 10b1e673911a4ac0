//! Xd-C abstract syntax.
//!
//! The parser is deliberately more permissive than the subset: constructs on
//! the negative list get their own variants (or entries in
//! [`Program::marks`]) so that [`super::subset::check_subset`] can name them.

use crate::diag::Span;
use crate::types::{CType, IntTy, StructDef};
use crate::value::{BinOp, UnOp};

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
    /// Filled in by the type checker.
    pub ty: Option<CType>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Int(i64, IntTy),
    /// Value and whether it is a `float` (suffixed) literal.
    Float(f64, bool),
    Char(i64),
    Str(String),
    Var(String),
    Index(String, Box<Expr>),
    Index2(String, Box<Expr>, Box<Expr>),
    Member(Box<Expr>, String),
    Arrow(Box<Expr>, String),
    Deref(Box<Expr>),
    AddrOf(Box<Expr>),
    Cast(CType, Box<Expr>),
    Unary(UnOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Cond(Box<Expr>, Box<Expr>, Box<Expr>),
    Call(Box<Expr>, Vec<Expr>),

    // Outside the subset.
    Assign(Box<Expr>, Box<Expr>),
    CompoundAssign(BinOp, Box<Expr>, Box<Expr>),
    PreInc(Box<Expr>),
    PreDec(Box<Expr>),
    PostInc(Box<Expr>),
    PostDec(Box<Expr>),
    Comma(Box<Expr>, Box<Expr>),
    InitList(Vec<Expr>),
    Sizeof(CType),
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span, ty: None }
    }

    /// True for the left-value forms `id`, `id[e]`, `id[e][e]`, `le.x`, `le->x`, `*e`.
    pub fn is_lvalue(&self) -> bool {
        matches!(
            self.kind,
            ExprKind::Var(_)
                | ExprKind::Index(..)
                | ExprKind::Index2(..)
                | ExprKind::Member(..)
                | ExprKind::Arrow(..)
                | ExprKind::Deref(_)
        )
    }

    pub fn ty(&self) -> &CType {
        self.ty.as_ref().expect("expression not type-checked")
    }

    /// Pre-order visit of this expression and all subexpressions.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a Expr)) {
        f(self);
        use ExprKind::*;
        match &self.kind {
            Int(..) | Float(..) | Char(_) | Str(_) | Var(_) | Sizeof(_) => {}
            Index(_, e) | Member(e, _) | Arrow(e, _) | Deref(e) | AddrOf(e) | Cast(_, e) | Unary(_, e) | PreInc(e)
            | PreDec(e) | PostInc(e) | PostDec(e) => e.walk(f),
            Index2(_, a, b) | Binary(_, a, b) | Assign(a, b) | CompoundAssign(_, a, b) | Comma(a, b) => {
                a.walk(f);
                b.walk(f);
            }
            Cond(a, b, c) => {
                a.walk(f);
                b.walk(f);
                c.walk(f);
            }
            Call(c, args) => {
                c.walk(f);
                args.iter().for_each(|a| a.walk(f));
            }
            InitList(es) => es.iter().for_each(|a| a.walk(f)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stmt {
    pub kind: StmtKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Case {
    pub label: i64,
    pub body: Stmt,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StmtKind {
    Null,
    PostInc(Expr),
    PostDec(Expr),
    Assign(Expr, Expr),
    If(Expr, Box<Stmt>, Box<Stmt>),
    Switch(Expr, Vec<Case>, Box<Stmt>),
    While(Expr, Box<Stmt>),
    Do(Box<Stmt>, Expr),
    /// Init, optional condition, step, body. Init and step are `Null`,
    /// an assignment, an increment/decrement or a call.
    For(Box<Stmt>, Option<Expr>, Box<Stmt>, Box<Stmt>),
    Continue,
    Break,
    Return(Option<Expr>),
    Seq(Box<Stmt>, Box<Stmt>),
    Call(Expr, Vec<Expr>),

    // Outside the subset.
    Goto(String),
    Labeled(String, Box<Stmt>),
    /// An expression statement of any other shape.
    Expr(Expr),
    /// A declaration inside a nested block or after statements.
    LocalDecl(Decl),
    /// A `case`/`default` label outside the arm list of a switch.
    StrayCase(Box<Stmt>),
}

impl Stmt {
    pub fn new(kind: StmtKind, span: Span) -> Self {
        Stmt { kind, span }
    }

    pub fn null(span: Span) -> Self {
        Stmt::new(StmtKind::Null, span)
    }

    /// Right-nested sequence of `stmts`; `Null` when empty.
    pub fn seq(mut stmts: Vec<Stmt>, span: Span) -> Stmt {
        let Some(mut acc) = stmts.pop() else { return Stmt::null(span) };
        while let Some(s) = stmts.pop() {
            let sp = s.span;
            acc = Stmt::new(StmtKind::Seq(Box::new(s), Box::new(acc)), sp);
        }
        acc
    }

    /// Direct substatements.
    pub fn children(&self) -> Vec<&Stmt> {
        use StmtKind::*;
        match &self.kind {
            If(_, a, b) | Seq(a, b) => vec![a, b],
            Switch(_, cases, d) => cases.iter().map(|c| &c.body).chain(std::iter::once(&**d)).collect(),
            While(_, b) | Do(b, _) | Labeled(_, b) | StrayCase(b) => vec![b],
            For(i, _, s, b) => vec![i, s, b],
            _ => vec![],
        }
    }

    /// Expressions appearing directly in this statement (not in substatements).
    pub fn exprs(&self) -> Vec<&Expr> {
        use StmtKind::*;
        match &self.kind {
            PostInc(e) | PostDec(e) | If(e, ..) | Switch(e, ..) | While(e, _) | Do(_, e) | Expr(e) => vec![e],
            Assign(a, b) => vec![a, b],
            For(_, c, ..) => c.iter().collect(),
            Return(e) => e.iter().collect(),
            Call(c, args) => std::iter::once(c).chain(args.iter()).collect(),
            LocalDecl(d) => d.init_exprs(),
            _ => vec![],
        }
    }

    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a Stmt)) {
        f(self);
        for c in self.children() {
            c.walk(f);
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Init {
    Expr(Expr),
    List(Vec<Init>, Span),
}

impl Init {
    pub fn exprs(&self) -> Vec<&Expr> {
        match self {
            Init::Expr(e) => vec![e],
            Init::List(items, _) => items.iter().flat_map(|i| i.exprs()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VarDecl {
    pub name: String,
    pub ty: CType,
    pub init: Option<Init>,
    /// Written `id[] = {...}`; the extent in `ty` comes from the initializer.
    pub open_extent: bool,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decl {
    /// One declaration statement: shared base type, one or more declarators.
    Vars(CType, Vec<VarDecl>),
    Struct(StructDef, Span),
}

impl Decl {
    pub fn init_exprs(&self) -> Vec<&Expr> {
        match self {
            Decl::Vars(_, vs) => vs.iter().filter_map(|v| v.init.as_ref()).flat_map(|i| i.exprs()).collect(),
            Decl::Struct(..) => vec![],
        }
    }

    pub fn span(&self) -> Span {
        match self {
            Decl::Vars(_, vs) => vs.first().map(|v| v.span).unwrap_or_default(),
            Decl::Struct(_, s) => *s,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Param {
    pub name: String,
    pub ty: CType,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuncDef {
    pub name: String,
    pub ret: CType,
    pub params: Vec<Param>,
    pub locals: Vec<Decl>,
    pub body: Stmt,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExternDecl {
    pub name: String,
    pub ret: CType,
    pub params: Vec<CType>,
    /// Written with the `extern` keyword (otherwise a bare prototype).
    pub explicit: bool,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Decl(Decl),
    Func(FuncDef),
    Extern(ExternDecl),
}

/// Negative-list constructs that have no node of their own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    Union,
    StorageClass(&'static str),
    Qualifier(&'static str),
    Variadic,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Program {
    pub items: Vec<Item>,
    pub marks: Vec<(Span, Mark)>,
}

impl Program {
    pub fn funcs(&self) -> impl Iterator<Item = &FuncDef> {
        self.items.iter().filter_map(|i| match i {
            Item::Func(f) => Some(f),
            _ => None,
        })
    }

    pub fn func(&self, name: &str) -> Option<&FuncDef> {
        self.funcs().find(|f| f.name == name)
    }

    pub fn externs(&self) -> impl Iterator<Item = &ExternDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Extern(e) => Some(e),
            _ => None,
        })
    }

    pub fn decls(&self) -> impl Iterator<Item = &Decl> {
        self.items.iter().filter_map(|i| match i {
            Item::Decl(d) => Some(d),
            _ => None,
        })
    }

    /// Extern declarations that are not later given a body.
    pub fn is_extern(&self, name: &str) -> bool {
        self.func(name).is_none() && self.externs().any(|e| e.name == name)
    }
}
